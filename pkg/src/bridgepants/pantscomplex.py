"""Pants and dual curve complexes of S_{0,4} and S_{1,1}.

On both surfaces a pants decomposition is a single essential curve, named by
its slope.  Curves of slopes ``a/b`` and ``c/d`` meet ``|ad - bc|`` times on
the once-punctured torus and twice that on the four-punctured sphere (the
pillowcase).  A pants move needs the minimal nonzero intersection, so both
pants complexes are the Farey graph; the dual curve complex is complete.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .farey import Slope, bounded_slopes, determinant, farey_neighbors

__all__ = [
    "SurfaceKind",
    "Complex",
    "MetricGraphView",
    "intersection_number",
    "is_pants_edge",
    "is_dual_curve_edge",
    "bounded_view",
]


class SurfaceKind(enum.Enum):
    FOUR_PUNCTURED_SPHERE = "s04"
    ONCE_PUNCTURED_TORUS = "s11"

    @property
    def minimal_intersection(self) -> int:
        return 2 if self is SurfaceKind.FOUR_PUNCTURED_SPHERE else 1


class Complex(enum.Enum):
    PANTS = "pants"
    DUAL_CURVE = "dual"


def intersection_number(surface: SurfaceKind, u: Slope, v: Slope) -> int:
    return surface.minimal_intersection * determinant(u, v)


def is_pants_edge(surface: SurfaceKind, u: Slope, v: Slope) -> bool:
    return intersection_number(surface, u, v) == surface.minimal_intersection


def is_dual_curve_edge(surface: SurfaceKind, u: Slope, v: Slope) -> bool:
    # single-curve decompositions always differ by exactly that curve
    return u != v


@dataclass(frozen=True)
class MetricGraphView:
    """Finite window onto a complex: slopes with ``|p|, q <= bound`` plus 1/0.

    Vertices are ordered 1/0 first, then by increasing value.  Edges are
    index pairs ``(i, j)`` with ``i < j`` in lexicographic order.
    """

    surface: SurfaceKind
    complex: Complex
    bound: int
    vertices: tuple[Slope, ...]

    def index(self) -> dict[Slope, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def edges(self) -> Iterator[tuple[int, int]]:
        n = len(self.vertices)
        if self.complex is Complex.DUAL_CURVE:
            for i in range(n):
                for j in range(i + 1, n):
                    yield (i, j)
            return
        index = self.index()
        for i, u in enumerate(self.vertices):
            higher = sorted(j for j in (index[v] for v in farey_neighbors(u, self.bound)) if j > i)
            for j in higher:
                yield (i, j)

    def is_edge(self, u: Slope, v: Slope) -> bool:
        if self.complex is Complex.DUAL_CURVE:
            return is_dual_curve_edge(self.surface, u, v)
        return is_pants_edge(self.surface, u, v)


def bounded_view(surface: SurfaceKind, complex: Complex, denominator_bound: int) -> MetricGraphView:
    return MetricGraphView(
        surface=surface,
        complex=complex,
        bound=denominator_bound,
        vertices=tuple(bounded_slopes(denominator_bound)),
    )
