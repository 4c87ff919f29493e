# dpk/kernels/kinds.py
from dataclasses import dataclass
from typing import Optional, Union

from ..errors import ArgumentError, DomainError


@dataclass(frozen=True)
class HermiteFinite:
    """Extended Hermite kernel of N noncolliding BMs with GUE entrance law."""

    N: int

    def __post_init__(self) -> None:
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"HermiteFinite needs an integer N >= 1, got {self.N}")


@dataclass(frozen=True)
class Sine:
    """Bulk scaling limit."""


@dataclass(frozen=True)
class Airy:
    """Soft-edge scaling limit."""


@dataclass(frozen=True)
class Bessel:
    """Hard-edge limit of order nu."""

    nu: float

    def __post_init__(self) -> None:
        if self.nu <= -1.0:
            raise DomainError(f"Bessel kernel needs nu > -1, got {self.nu}")


KernelKind = Union[HermiteFinite, Sine, Airy, Bessel]
LimitKind = Union[Sine, Airy, Bessel]


@dataclass(frozen=True)
class SpaceTimePoint:
    time: float
    position: float


def is_limit(kind: KernelKind) -> bool:
    return isinstance(kind, (Sine, Airy, Bessel))


def kind_name(kind: KernelKind) -> str:
    if isinstance(kind, HermiteFinite):
        return f"hermite(N={kind.N})"
    if isinstance(kind, Bessel):
        return f"bessel(nu={kind.nu:g})"
    return type(kind).__name__.lower()


def parse_kind(name: str, n: Optional[int] = None, nu: Optional[float] = None) -> KernelKind:
    key = name.strip().lower()
    if key in ("hermite", "hermitefinite", "finite"):
        if n is None:
            raise ArgumentError("kind 'hermite' needs --n")
        return HermiteFinite(int(n))
    if key == "sine":
        return Sine()
    if key == "airy":
        return Airy()
    if key == "bessel":
        if nu is None:
            raise ArgumentError("kind 'bessel' needs --nu")
        return Bessel(float(nu))
    raise ArgumentError(f"unknown kernel kind {name!r}")
