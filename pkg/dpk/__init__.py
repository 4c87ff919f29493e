# dpk/__init__.py
"""Noncolliding Brownian motion as a determinantal process: kernels, correlations, simulators."""

__version__ = "0.1.0"
