"""Lobachevsky function, the constant v3, and volume bounds for 2-bridge knots.

``lobachevsky(theta) = 1/2 * sum_{m>=1} sin(2 m theta) / m**2``.  The Fourier
series converges too slowly to use directly, so it is evaluated through the
equivalent Clausen expansion

    Cl2(x) = x - x log|x| + sum_{k>=1} |B_2k| x**(2k+1) / (2 (2k)! k (2k+1)),

valid for ``|x| < 2 pi``, at ``x = 2 theta`` reduced to ``(-pi, pi]`` where
the terms shrink at least like ``4**-k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexity import pants_distance_02
from .twobridge import TwoBridgeKnot, is_hyperbolic, twist_number

__all__ = [
    "VolumeBounds",
    "NotHyperbolicError",
    "lobachevsky",
    "v3",
    "bounds_from_twist",
    "bounds_from_pants",
    "bounds_for_knot",
]

_TAIL_TOL = 1e-17
_MAX_TERMS = 60


@lru_cache(maxsize=1)
def _clausen_coefficients() -> tuple[float, ...]:
    """``|B_2k| / (2 (2k)! k (2k+1))`` for ``k = 1 .. _MAX_TERMS``."""
    n_max = 2 * _MAX_TERMS
    # Akiyama-Tanigawa
    row = [Fraction(0)] * (n_max + 1)
    bernoulli = []
    for m in range(n_max + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        bernoulli.append(row[0])
    return tuple(
        float(abs(bernoulli[2 * k]) / (2 * math.factorial(2 * k) * k * (2 * k + 1)))
        for k in range(1, _MAX_TERMS + 1)
    )


def _clausen2(x: float) -> float:
    if x == 0.0:
        return 0.0
    total = x - x * math.log(abs(x))
    x2 = x * x
    power = x
    ratio = (x / (2 * math.pi)) ** 2
    envelope = 4 * math.pi
    for coeff in _clausen_coefficients():
        power *= x2
        total += coeff * power
        envelope *= ratio
        # remaining terms are bounded by a geometric series in `ratio`
        if envelope / (1 - ratio) < _TAIL_TOL:
            break
    return total


def lobachevsky(theta: float) -> float:
    """Lobachevsky function; odd and pi-periodic."""
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    reduced = math.remainder(theta, math.pi)
    return 0.5 * _clausen2(2.0 * reduced)


@lru_cache(maxsize=1)
def v3() -> float:
    """Volume of the regular ideal hyperbolic tetrahedron, ``3 L(pi/3)``."""
    return 3.0 * lobachevsky(math.pi / 3.0)


@dataclass(frozen=True)
class VolumeBounds:
    lower: float
    upper: float
    source: str

    def __post_init__(self) -> None:
        if not (0.0 <= self.lower < self.upper):
            raise ValueError(f"need 0 <= lower < upper, got [{self.lower}, {self.upper})")

    def contains(self, volume: float) -> bool:
        """``lower <= volume < upper``."""
        return self.lower <= volume < self.upper

    def as_list(self) -> list[float]:
        return [self.lower, self.upper]


class NotHyperbolicError(ValueError):
    pass


def bounds_from_twist(tw: int) -> VolumeBounds:
    """``v3 (tw - 2) <= vol < 10 v3 (tw - 1)`` for a twist-reduced alternating diagram."""
    if tw < 2:
        raise ValueError(f"twist number {tw} gives no hyperbolic bound (torus knot diagram)")
    return VolumeBounds(max(0.0, v3() * (tw - 2)), 10.0 * v3() * (tw - 1), "twist")


def bounds_from_pants(dp: int) -> VolumeBounds:
    """``v3 (D^P - 3) <= vol < 10 v3 (2 D^P - 3)`` from the (0,2) pants distance."""
    if dp < 2:
        raise ValueError(f"pants distance {dp} is impossible for a hyperbolic 2-bridge knot")
    return VolumeBounds(max(0.0, v3() * (dp - 3)), 10.0 * v3() * (2 * dp - 3), "pants")


def bounds_for_knot(k: TwoBridgeKnot, via: str = "twist") -> VolumeBounds:
    if via not in ("twist", "pants"):
        raise ValueError(f"via must be 'twist' or 'pants', got {via!r}")
    if not is_hyperbolic(k):
        raise NotHyperbolicError(f"{k} is not hyperbolic; volume bounds do not apply")
    if via == "twist":
        return bounds_from_twist(twist_number(k))
    return bounds_from_pants(pants_distance_02(k))
