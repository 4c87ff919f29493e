# dpk/mcsim/__init__.py
from .estimators import empirical_correlation, gap_frequency
from .export import atomic_write, ensemble_binary, ensemble_csv, export_binary, export_csv, read_binary
from .models import Bessel3Summary, CorrelationEstimate, PathEnsemble, SimulationConfig, SurvivalEstimate
from .samplers import bessel3_demo, dyson_sde, gue_sample, gue_samples, matrix_bm_eigen, simulate, survival_mc
from .streams import block_generator, run_blocks

__all__ = [
    "Bessel3Summary",
    "CorrelationEstimate",
    "PathEnsemble",
    "SimulationConfig",
    "SurvivalEstimate",
    "atomic_write",
    "bessel3_demo",
    "block_generator",
    "dyson_sde",
    "empirical_correlation",
    "ensemble_binary",
    "ensemble_csv",
    "export_binary",
    "export_csv",
    "gap_frequency",
    "gue_sample",
    "gue_samples",
    "matrix_bm_eigen",
    "read_binary",
    "run_blocks",
    "simulate",
    "survival_mc",
]
