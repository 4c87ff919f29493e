from .dispatch import build_parser, dispatch, normalize_argv
from .output import RunConfig, Table, emit, load_run_config, render
from .tables import limits_table
from .verify import run_suite

__all__ = [
    "RunConfig",
    "Table",
    "build_parser",
    "dispatch",
    "emit",
    "limits_table",
    "load_run_config",
    "normalize_argv",
    "render",
    "run_suite",
]
