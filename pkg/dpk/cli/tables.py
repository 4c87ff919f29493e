# dpk/cli/tables.py
import logging
from typing import Sequence, Tuple

from ..errors import ArgumentError
from ..kernels import Airy, Sine, SpaceTimePoint, bulk_scaled_kernel, edge_scaled_kernel, kernel_eval
from .output import Table

logger = logging.getLogger(__name__)

Probe = Tuple[float, float, float, float]

_SCALINGS = {
    "bulk": (bulk_scaled_kernel, Sine()),
    "edge": (edge_scaled_kernel, Airy()),
}


def limits_table(which: str, n_list: Sequence[int], probes: Sequence[Probe]) -> Table:
    """Scaled Hermite kernel against its limit for each N and probe; flags non-decreasing errors."""
    if which not in _SCALINGS:
        raise ArgumentError(f"--which must be bulk or edge, got {which!r}")
    if not n_list:
        raise ArgumentError("n_list must not be empty")
    scaled, limit_kind = _SCALINGS[which]
    table = Table(["probe", "N", "scaled", "limit", "error", "monotone"], title=f"{which} scaling limit")
    for index, (sa, xa, sb, xb) in enumerate(probes):
        limit = kernel_eval(limit_kind, SpaceTimePoint(sa, xa), SpaceTimePoint(sb, xb))
        previous = None
        for N in n_list:
            value = scaled(int(N), sa, xa, sb, xb)
            error = abs(value - limit)
            monotone = previous is None or error <= previous
            if not monotone:
                note = f"probe {index}: error grew at N={N} ({previous:.3e} -> {error:.3e})"
                table.notes.append(note)
                logger.warning(note)
            table.add(index, int(N), value, limit, error, monotone)
            previous = error
    return table
