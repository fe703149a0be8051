"""Real-coded genetic algorithms with confidence-interval crossover."""

from ._core import (
    Benchmark,
    CollinearityError,
    ParseError,
    accuracy,
    bem_weights,
    cixl2_gene,
    combine,
    confidence_interval,
    crossover_names,
    function_names,
    ga_weights,
    gem_weights,
    gem_weights_from_correlation,
    nonuniform_delta,
    run_command,
    run_ga,
    run_umdac,
    sbx_spread,
    t_cdf,
    t_quantile,
    win_draw_loss,
)

__all__ = [
    "Benchmark",
    "CollinearityError",
    "ParseError",
    "accuracy",
    "bem_weights",
    "cixl2_gene",
    "combine",
    "confidence_interval",
    "crossover_names",
    "function_names",
    "ga_weights",
    "gem_weights",
    "gem_weights_from_correlation",
    "nonuniform_delta",
    "run_command",
    "run_ga",
    "run_umdac",
    "sbx_spread",
    "t_cdf",
    "t_quantile",
    "win_draw_loss",
]
