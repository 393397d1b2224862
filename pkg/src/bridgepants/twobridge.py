"""Two-bridge knots ``K_{p/q}`` in Schubert normal form.

A :class:`TwoBridgeKnot` names one specific knot, chirality included: the
pair ``(p, q)`` with ``0 < p <= q/2`` is the normal form, and ``mirrored``
says the knot is the mirror image of ``K_{p/q}``, i.e. ``K_{-p/q}``.

Schubert: ``K_{p/q}`` and ``K_{p'/q}`` are isotopic iff ``p' = p`` or
``p p' = 1`` modulo ``q``; negating ``p`` gives the mirror.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .farey import ContinuedFraction, Slope, cf_expand

__all__ = [
    "TwoBridgeLinkError",
    "TwoBridgeKnot",
    "LensSpace",
    "TangleDiagram",
    "UNKNOT",
    "normalize",
    "canonical_form",
    "from_slope",
    "parse_knot",
    "is_equivalent",
    "mirror",
    "is_amphichiral",
    "continued_fraction",
    "tangle_diagram",
    "twist_number",
    "double_branched_cover",
    "is_torus_two_bridge",
    "is_hyperbolic",
]


class TwoBridgeLinkError(ValueError):
    """Raised for even ``q``: ``p/q`` then describes a two-component link."""


@dataclass(frozen=True)
class TwoBridgeKnot:
    p: int
    q: int
    mirrored: bool = False

    @property
    def is_unknot(self) -> bool:
        return self.q == 1

    @property
    def slope(self) -> Slope:
        return Slope(self.p, self.q)

    def signed_p(self) -> int:
        """Numerator of a slope describing this exact knot."""
        return -self.p if self.mirrored else self.p

    def __str__(self) -> str:
        if self.is_unknot:
            return "unknot"
        name = f"K({self.p}/{self.q})"
        return f"mirror {name}" if self.mirrored else name


UNKNOT = TwoBridgeKnot(0, 1, False)


@dataclass(frozen=True)
class LensSpace:
    """``L(q, p)``; ``L(1, 0)`` is the 3-sphere."""

    q: int
    p: int

    def __str__(self) -> str:
        return f"L({self.q},{self.p})"


@dataclass(frozen=True)
class TangleDiagram:
    """Alternating rational tangle diagram (denominator closure).

    ``twist_regions[i]`` is the number of crossings in the ``i``-th twist
    region, alternately horizontal and vertical.
    """

    twist_regions: tuple[int, ...]

    @property
    def crossing_count(self) -> int:
        return sum(self.twist_regions)


def normalize(p: int, q: int) -> TwoBridgeKnot:
    """Schubert normal form of the knot ``K_{p/q}``.

    Among ``p^{+-1} mod q`` the least value in ``(0, q/2]`` is taken when one
    exists; otherwise the knot is recorded as the mirror of the least value of
    ``-p^{+-1} mod q`` in that range.  Exactly one of the two cases occurs
    because ``q`` is odd.
    """
    if q < 0:
        p, q = -p, -q
    if q % 2 == 0:
        raise TwoBridgeLinkError(f"{p}/{q}: q is even, so this is a two-bridge link, not a knot")
    if math.gcd(p, q) != 1:
        raise ValueError(f"{p}/{q}: p and q must be coprime")
    if q == 1:
        return UNKNOT
    r = p % q
    inv = pow(r, -1, q)
    same = [x for x in (r, inv) if 2 * x < q]
    if same:
        return TwoBridgeKnot(min(same), q, False)
    return TwoBridgeKnot(min(q - r, q - inv), q, True)


def from_slope(s: Slope) -> TwoBridgeKnot:
    return normalize(s.numerator, s.denominator)


def parse_knot(text: str) -> TwoBridgeKnot:
    """Parse ``"unknot"`` or a slope ``"p/q"`` with optional leading minus.

    The fraction is reduced before the parity of ``q`` is checked.
    """
    if text.strip().lower() == "unknot":
        return UNKNOT
    return from_slope(Slope.parse(text))


def canonical_form(k: TwoBridgeKnot) -> TwoBridgeKnot:
    """Renormalize a possibly hand-built knot."""
    return normalize(k.signed_p(), k.q)


def is_equivalent(k1: TwoBridgeKnot, k2: TwoBridgeKnot, chiral: bool = True) -> bool:
    """Isotopy of unoriented knots.

    With ``chiral=False`` a knot is also considered equivalent to its mirror.
    """
    a, b = canonical_form(k1), canonical_form(k2)
    if chiral:
        return a == b
    return (a.p, a.q) == (b.p, b.q)


def mirror(k: TwoBridgeKnot) -> TwoBridgeKnot:
    return normalize(-k.signed_p(), k.q)


def is_amphichiral(k: TwoBridgeKnot) -> bool:
    return is_equivalent(k, mirror(k))


def _require_nontrivial(k: TwoBridgeKnot, what: str) -> TwoBridgeKnot:
    k = canonical_form(k)
    if k.is_unknot:
        raise ValueError(f"{what} is not defined for the unknot")
    return k


def continued_fraction(k: TwoBridgeKnot) -> ContinuedFraction:
    k = _require_nontrivial(k, "the continued fraction")
    return cf_expand(k.slope)


def tangle_diagram(k: TwoBridgeKnot) -> TangleDiagram:
    return TangleDiagram(continued_fraction(k).coefficients)


def twist_number(k: TwoBridgeKnot) -> int:
    """Number of twist regions of the canonical alternating diagram."""
    return len(continued_fraction(k))


def double_branched_cover(k: TwoBridgeKnot) -> LensSpace:
    k = canonical_form(k)
    if k.is_unknot:
        return LensSpace(1, 0)
    return LensSpace(k.q, k.p)


def is_torus_two_bridge(k: TwoBridgeKnot) -> bool:
    """True for the torus knots ``K_{2,q}``, whose normal form is ``1/q``."""
    k = canonical_form(k)
    return not k.is_unknot and k.p == 1


def is_hyperbolic(k: TwoBridgeKnot) -> bool:
    # A two-bridge knot is the unknot, a (2, q) torus knot, or hyperbolic.
    k = canonical_form(k)
    return not k.is_unknot and k.p != 1
