# dpk/corr/__init__.py
from .correlation import CorrelationBlock, CorrelationRequest, correlation_matrix, multitime_correlation
from .expansion import ExpansionCheck, heine_check, two_time_expansion_check
from .fredholm import QuadratureGrid, StepFunction, fredholm_generating, gap_probability, step_functions

__all__ = [
    "CorrelationBlock",
    "CorrelationRequest",
    "ExpansionCheck",
    "QuadratureGrid",
    "StepFunction",
    "correlation_matrix",
    "fredholm_generating",
    "gap_probability",
    "heine_check",
    "multitime_correlation",
    "step_functions",
    "two_time_expansion_check",
]
