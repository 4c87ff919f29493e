# dpk/mcsim/export.py
"""
PathEnsemble files.

CSV: columns path,time,particle,position.
DPKE binary, little-endian: magic "DPKE", u16 version, u32 N, u32 times,
u64 paths, u64 collision events, u64 seed, f64 times, then f64 positions in
path-major order.
"""

import io
import os
import struct
import tempfile
from pathlib import Path
from typing import Union

import numpy as np

from ..errors import ArgumentError
from .models import PathEnsemble, SimulationConfig

MAGIC = b"DPKE"
VERSION = 1
_HEADER = struct.Struct("<4sHIIQQQ")

PathLike = Union[str, Path]


def atomic_write(path: PathLike, data: Union[str, bytes]) -> None:
    """Write to a sibling temp file, then rename over the target."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    payload = data.encode("utf-8") if isinstance(data, str) else data
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def ensemble_csv(ensemble: PathEnsemble) -> str:
    P, T, N = ensemble.positions.shape
    path_idx, time_idx, particle = np.meshgrid(np.arange(P), np.arange(T), np.arange(N), indexing="ij")
    table = np.column_stack([
        path_idx.ravel(),
        ensemble.times[time_idx.ravel()],
        particle.ravel(),
        ensemble.positions.ravel(),
    ])
    buf = io.StringIO()
    buf.write("path,time,particle,position\n")
    np.savetxt(buf, table, fmt=["%d", "%.17g", "%d", "%.17g"], delimiter=",")
    return buf.getvalue()


def ensemble_binary(ensemble: PathEnsemble) -> bytes:
    P, T, N = ensemble.positions.shape
    header = _HEADER.pack(MAGIC, VERSION, N, T, P, ensemble.collision_events, ensemble.config.seed)
    return (
        header
        + ensemble.times.astype("<f8").tobytes()
        + np.ascontiguousarray(ensemble.positions).astype("<f8").tobytes()
    )


def export_csv(ensemble: PathEnsemble, path: PathLike) -> None:
    atomic_write(path, ensemble_csv(ensemble))


def export_binary(ensemble: PathEnsemble, path: PathLike) -> None:
    atomic_write(path, ensemble_binary(ensemble))


def read_binary(path: PathLike) -> PathEnsemble:
    """Load a DPKE file; dt and scheme are not stored and come back as defaults."""
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise ArgumentError(f"{path}: too short for a DPKE header")
    magic, version, N, T, P, collisions, seed = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ArgumentError(f"{path}: not a DPKE file")
    if version != VERSION:
        raise ArgumentError(f"{path}: unsupported DPKE version {version}")
    offset = _HEADER.size
    expected = offset + 8 * (T + P * T * N)
    if len(raw) != expected:
        raise ArgumentError(f"{path}: expected {expected} bytes, found {len(raw)}")
    times = np.frombuffer(raw, dtype="<f8", count=T, offset=offset)
    positions = np.frombuffer(raw, dtype="<f8", count=P * T * N, offset=offset + 8 * T).reshape(P, T, N)
    config = SimulationConfig(N=N, times=times.tolist(), paths=P, seed=seed)
    return PathEnsemble(config, positions.astype(float), collision_events=collisions)
