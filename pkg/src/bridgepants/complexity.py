"""Distances and complexities of bridge splittings.

For a ``(g, b)``-bridge splitting ``Sigma`` the bridge complexity is
``B(Sigma) = D(Sigma) - g - b + 1`` where ``D`` is the distance in the dual
curve complex; the pants complexity uses the pants distance instead.  For the
``(0, 2)``-splitting of a two-bridge knot both distances are computable:
the dual curve complex of the four-punctured sphere is complete, and its
pants complex is the Farey graph with the two sides defined by ``1/0`` and
``p/q``.

Knot-level values (the stabilized limits ``B(K)``, ``B^P(K)``) are never
extrapolated here; :func:`known_complexity` only reports closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .farey import farey_distance
from .twobridge import TwoBridgeKnot, canonical_form, is_torus_two_bridge

__all__ = [
    "SplittingSignature",
    "TorusKnot",
    "ComplexityReport",
    "UnsupportedKnotError",
    "OPEN",
    "TWO_BRIDGE",
    "distance_lower_bound",
    "complexity_from_distance",
    "pants_distance_02",
    "dual_distance_02",
    "splitting_report",
    "known_complexity",
]

OPEN = "open"

# provenance tags
UNKNOT_CLOSED_FORM = "closed form: unknot"
DUAL_COMPLETE = "closed form: dual curve complex of S_{0,4} is complete"
TORUS_2N = "closed form: torus knot K(2,n)"
TORUS_GENERAL = "closed form: torus knot K(p,q), p > 2"
FAREY_SEARCH = "computed: Farey graph geodesic"
UNKNOT_PANTS_MOVE = "closed form: unknot defining curves meet twice"
ARITHMETIC = "computed: D - g - b + 1"

TWO_BRIDGE = (0, 2)


@dataclass(frozen=True)
class SplittingSignature:
    """Genus ``g`` and bridge number ``b`` of a bridge splitting."""

    genus: int
    bridges: int

    def __post_init__(self) -> None:
        if self.genus < 0 or self.bridges < 1:
            raise ValueError(f"invalid signature (g={self.genus}, b={self.bridges})")
        if self.curves_per_decomposition < 1:
            raise ValueError(
                f"(g={self.genus}, b={self.bridges}) punctured surface has no pants decomposition"
            )

    @property
    def curves_per_decomposition(self) -> int:
        return 3 * self.genus + 2 * self.bridges - 3


@dataclass(frozen=True)
class TorusKnot:
    """The ``(p, q)`` torus knot, ``2 <= p < q`` coprime."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (2 <= self.p < self.q) or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"torus knot needs 2 <= p < q coprime, got ({self.p}, {self.q})")


KnotDescription = Union[TwoBridgeKnot, TorusKnot]


class UnsupportedKnotError(TypeError):
    pass


@dataclass(frozen=True)
class ComplexityReport:
    """Distances and complexities, each ``None`` when unknown.

    ``level`` is ``"splitting"`` for values of one particular splitting and
    ``"knot"`` for knot invariants.  ``B_pants_upper`` is an upper bound on
    the knot-level pants complexity, never a value.
    """

    level: str
    D: int | None = None
    D_pants: int | None = None
    B: int | None = None
    B_pants: int | None = None
    B_pants_upper: int | None = None
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.D is not None and self.D_pants is not None and self.D > self.D_pants:
            raise ValueError("dual distance cannot exceed pants distance")


def distance_lower_bound(sig: SplittingSignature) -> int:
    return sig.genus + sig.bridges - 1


def complexity_from_distance(distance: int, sig: SplittingSignature) -> int:
    """``D - g - b + 1``; rejects distances below ``g + b - 1``."""
    floor = distance_lower_bound(sig)
    if distance < floor:
        raise ValueError(
            f"distance {distance} is below the lower bound g + b - 1 = {floor}"
            f" for (g={sig.genus}, b={sig.bridges})"
        )
    return distance - floor


def pants_distance_02(k: TwoBridgeKnot) -> int:
    """Pants distance of the (0,2)-splitting: Farey distance from 1/0 to p/q."""
    k = canonical_form(k)
    if k.is_unknot:
        return 1
    return farey_distance(k.slope)


def dual_distance_02(k: TwoBridgeKnot) -> int:
    # distinct single-curve decompositions of S_{0,4} are always adjacent
    canonical_form(k)
    return 1


def splitting_report(k: TwoBridgeKnot) -> ComplexityReport:
    """Values for the (0,2)-bridge splitting of ``k``."""
    sig = SplittingSignature(*TWO_BRIDGE)
    k = canonical_form(k)
    d = dual_distance_02(k)
    dp = pants_distance_02(k)
    return ComplexityReport(
        level="splitting",
        D=d,
        D_pants=dp,
        B=complexity_from_distance(d, sig),
        B_pants=complexity_from_distance(dp, sig),
        B_pants_upper=complexity_from_distance(dp, sig),
        provenance={
            "D": DUAL_COMPLETE,
            "D_pants": UNKNOT_PANTS_MOVE if k.is_unknot else FAREY_SEARCH,
            "B": ARITHMETIC,
            "B_pants": ARITHMETIC,
        },
    )


def known_complexity(k: KnotDescription) -> ComplexityReport:
    """Knot-level ``B`` and ``B^P`` wherever a closed form is known.

    * unknot: ``B = B^P = 0``
    * every two-bridge knot: ``B = 0``
    * ``K(2, n)``: ``B^P = 1``
    * torus ``K(p, q)`` with ``p > 2``: ``B = 2``

    Anything else is left ``None`` with provenance ``"open"``.  For a
    hyperbolic two-bridge knot the (0,2)-splitting still gives the upper
    bound ``B^P(K) <= D^P(Sigma) - 1``.
    """
    if isinstance(k, TorusKnot):
        if k.p == 2:
            return known_complexity(TwoBridgeKnot(1, k.q))
        return ComplexityReport(
            level="knot", B=2, provenance={"B": TORUS_GENERAL, "B_pants": OPEN}
        )
    if not isinstance(k, TwoBridgeKnot):
        raise UnsupportedKnotError(f"no closed-form complexity for {k!r}")
    k = canonical_form(k)
    if k.is_unknot:
        return ComplexityReport(
            level="knot",
            B=0,
            B_pants=0,
            B_pants_upper=0,
            provenance={"B": UNKNOT_CLOSED_FORM, "B_pants": UNKNOT_CLOSED_FORM},
        )
    upper = complexity_from_distance(pants_distance_02(k), SplittingSignature(*TWO_BRIDGE))
    if is_torus_two_bridge(k):
        return ComplexityReport(
            level="knot",
            B=0,
            B_pants=1,
            B_pants_upper=upper,
            provenance={"B": DUAL_COMPLETE, "B_pants": TORUS_2N},
        )
    return ComplexityReport(
        level="knot",
        B=0,
        B_pants_upper=upper,
        provenance={"B": DUAL_COMPLETE, "B_pants": OPEN},
    )
