# dpk/config.py
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class AiryConfig:
    """Branch layout for Ai/Ai': Maclaurin series inside, asymptotics outside."""

    switch_pos: float = 5.0
    switch_neg: float = 7.0
    asymptotic_terms: int = 30
    series_terms: int = 120


def _env_flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Settings:
    def __init__(self) -> None:
        # Parallelism
        self.THREADS = max(1, int(os.getenv("DPK_THREADS", str(os.cpu_count() or 1))))
        self.BLOCK_PATHS = int(os.getenv("DPK_BLOCK_PATHS", "4096"))
        self.PROGRESS = _env_flag("DPK_PROGRESS")

        # Logging
        self.LOG_LEVEL = os.getenv("DPK_LOG_LEVEL", "WARNING").upper()

        # Quadrature / summation tolerances
        self.QUAD_TOL = float(os.getenv("DPK_QUAD_TOL", "1e-10"))
        self.KERNEL_TOL = float(os.getenv("DPK_KERNEL_TOL", "1e-9"))
        self.HERMITE_TAIL_TOL = float(os.getenv("DPK_HERMITE_TAIL_TOL", "1e-10"))
        self.HERMITE_TAIL_MAX_TERMS = int(os.getenv("DPK_HERMITE_TAIL_MAX_TERMS", "200000"))
        self.GRID_NODES = int(os.getenv("DPK_GRID_NODES", "64"))

        # Airy branches
        self.AIRY = AiryConfig(
            switch_pos=float(os.getenv("DPK_AIRY_SWITCH_POS", "5.0")),
            switch_neg=float(os.getenv("DPK_AIRY_SWITCH_NEG", "7.0")),
            asymptotic_terms=int(os.getenv("DPK_AIRY_ASYMPTOTIC_TERMS", "30")),
        )

    def tolerances(self) -> dict:
        return {
            "quad_tol": self.QUAD_TOL,
            "kernel_tol": self.KERNEL_TOL,
            "hermite_tail_tol": self.HERMITE_TAIL_TOL,
            "grid_nodes": self.GRID_NODES,
        }


@lru_cache
def get_settings() -> Settings:
    return Settings()


def configure_logging(level: Optional[str] = None) -> None:
    """Install a single stderr handler on the package logger."""
    root = logging.getLogger("dpk")
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
    root.setLevel((level or get_settings().LOG_LEVEL).upper())
