"""Exact model of the Farey graph.

Vertices are extended rationals ``p/q`` (with ``1/0`` standing for infinity);
two slopes ``a/b`` and ``c/d`` are adjacent when ``|ad - bc| = 1``.  The graph
is the pants complex of the four-punctured sphere, and of the once-punctured
torus.

Geodesic distance from ``1/0`` is computed exactly by breadth-first search on
the *ladder* of the target: the vertices of the Farey triangles crossed by
the hyperbolic geodesic from infinity to the target.  Every edge of the ladder
separates its two sides, so no shortest path ever leaves it.  The
independent check is :func:`bfs_distance_oracle`, a vectorized search over a
bounded box of slopes that knows nothing about continued fractions.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "Slope",
    "ContinuedFraction",
    "FareyPath",
    "INFINITY",
    "ZERO",
    "reduce",
    "is_farey_edge",
    "determinant",
    "cf_expand",
    "cf_value",
    "truncation_path",
    "ladder",
    "farey_distance",
    "geodesic",
    "farey_neighbors",
    "bounded_slopes",
    "bfs_distance_map",
    "bfs_distance_oracle",
]

_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


@dataclass(frozen=True)
class Slope:
    """A reduced extended rational ``numerator/denominator``.

    The denominator is never negative and ``1/0`` is the only slope with
    denominator zero.  Build arbitrary pairs through :func:`reduce`.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        n, d = self.numerator, self.denominator
        if d < 0:
            raise ValueError(f"denominator must be non-negative, got {n}/{d}")
        if d == 0 and n != 1:
            raise ValueError(f"infinity is represented only as 1/0, got {n}/{d}")
        if math.gcd(n, d) != 1:
            raise ValueError(f"slope {n}/{d} is not reduced")

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse ``"p/q"`` (optional sign) into a reduced slope."""
        m = _SLOPE_RE.match(text)
        if m is None:
            raise ValueError(f"cannot parse slope {text!r}; expected 'p/q'")
        return reduce(int(m.group(1)), int(m.group(2)))

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Slope":
        return cls(value.numerator, value.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("1/0 has no finite rational value")
        return Fraction(self.numerator, self.denominator)

    def tiebreak_key(self) -> tuple[int, int]:
        """Ordering used to break ties between equally short paths."""
        return (self.denominator, self.numerator)

    def value_key(self) -> tuple[int, Fraction]:
        """Infinity first, then increasing rational value."""
        if self.is_infinite:
            return (0, Fraction(0))
        return (1, self.as_fraction())

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


def reduce(numerator: int, denominator: int) -> Slope:
    """Return the canonical slope of ``numerator/denominator``.

    >>> str(reduce(4, 10)), str(reduce(-3, 0)), str(reduce(3, -11))
    ('2/5', '1/0', '-3/11')
    """
    if numerator == 0 and denominator == 0:
        raise ValueError("0/0 is not a slope")
    if denominator == 0:
        return INFINITY
    g = math.gcd(numerator, denominator)
    if denominator < 0:
        g = -g
    return Slope(numerator // g, denominator // g)


def determinant(u: Slope, v: Slope) -> int:
    """``|ad - bc|`` for ``u = a/b`` and ``v = c/d``."""
    return abs(u.numerator * v.denominator - u.denominator * v.numerator)


def is_farey_edge(u: Slope, v: Slope) -> bool:
    return determinant(u, v) == 1


@dataclass(frozen=True)
class ContinuedFraction:
    """Positive continued fraction ``[a1, ..., an] = 1/(a1 + 1/(a2 + ...))``."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise ValueError("continued fraction needs at least one coefficient")
        if any(a < 1 for a in coeffs):
            raise ValueError(f"coefficients must be positive, got {list(coeffs)}")

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    @property
    def is_canonical(self) -> bool:
        return len(self.coefficients) == 1 or self.coefficients[-1] >= 2

    def canonical(self) -> "ContinuedFraction":
        """Rewrite a trailing ``[..., a, 1]`` as ``[..., a + 1]``."""
        if self.is_canonical:
            return self
        *head, last_but_one, _ = self.coefficients
        return ContinuedFraction((*head, last_but_one + 1))

    def convergents(self) -> list[Slope]:
        """Values of the successive truncations ``[a1], [a1, a2], ...``."""
        h_prev, k_prev, h, k = 1, 0, 0, 1
        out = []
        for a in self.coefficients:
            h_prev, k_prev, h, k = h, k, a * h + h_prev, a * k + k_prev
            out.append(Slope(h, k))
        return out

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.coefficients)) + "]"


@dataclass(frozen=True)
class FareyPath:
    """Vertex sequence whose consecutive slopes are Farey neighbours."""

    vertices: tuple[Slope, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError("path vertices must be distinct")
        for u, v in zip(verts, verts[1:]):
            if not is_farey_edge(u, v):
                raise ValueError(f"{u} and {v} are not joined by a Farey edge")

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Slope]:
        return iter(self.vertices)

    def labels(self) -> list[str]:
        return [str(v) for v in self.vertices]


def _in_normal_range(s: Slope) -> bool:
    # 0 < p/q <= 1/2
    return s.denominator > 0 and 0 < 2 * s.numerator <= s.denominator


def cf_expand(s: Slope) -> ContinuedFraction:
    """Canonical continued fraction of a slope in ``(0, 1/2]``."""
    if not _in_normal_range(s):
        raise ValueError(f"cf_expand needs a slope in (0, 1/2], got {s}")
    coeffs = []
    num, den = s.denominator, s.numerator
    while den:
        a, r = divmod(num, den)
        coeffs.append(a)
        num, den = den, r
    return ContinuedFraction(tuple(coeffs)).canonical()


def cf_value(cf: ContinuedFraction | Sequence[int]) -> Slope:
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    return cf.convergents()[-1]


def truncation_path(cf: ContinuedFraction | Sequence[int]) -> FareyPath:
    """The path ``1/0, 0/1, [a1], [a1, a2], ..., [a1, ..., an]``."""
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    return FareyPath((INFINITY, ZERO, *cf.convergents()))


def ladder(cf: ContinuedFraction | Sequence[int]) -> list[Slope]:
    """Vertices of the Farey triangles crossed on the way from 1/0 to ``cf``.

    These are ``1/0``, ``0/1`` and every intermediate fraction
    ``(h[i-2] + t*h[i-1]) / (k[i-2] + t*k[i-1])`` for ``1 <= t <= a_i``.
    """
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    verts = [INFINITY, ZERO]
    h_prev, k_prev, h, k = 1, 0, 0, 1
    for a in cf.coefficients:
        for t in range(1, a + 1):
            verts.append(Slope(h_prev + t * h, k_prev + t * k))
        h_prev, k_prev, h, k = h, k, a * h + h_prev, a * k + k_prev
    return verts


def _check_distance_domain(target: Slope) -> None:
    if target in (INFINITY, ZERO) or _in_normal_range(target):
        return
    raise ValueError(f"distance is defined here for 1/0, 0/1 and slopes in (0, 1/2]; got {target}")


@lru_cache(maxsize=4096)
def _ladder_search(target: Slope) -> tuple[Slope, ...]:
    """Lexicographically least geodesic from 1/0 to ``target``."""
    if target == INFINITY:
        return (INFINITY,)
    if target == ZERO:
        return (INFINITY, ZERO)
    verts = ladder(cf_expand(target))
    adjacency: dict[Slope, list[Slope]] = {v: [] for v in verts}
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if is_farey_edge(u, v):
                adjacency[u].append(v)
                adjacency[v].append(u)

    to_target = {target: 0}
    queue = deque([target])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in to_target:
                to_target[v] = to_target[u] + 1
                queue.append(v)

    path = [INFINITY]
    while path[-1] != target:
        remaining = to_target[path[-1]]
        step = min(
            (v for v in adjacency[path[-1]] if to_target[v] == remaining - 1),
            key=Slope.tiebreak_key,
        )
        path.append(step)
    return tuple(path)


def farey_distance(target: Slope, certify: bool = False) -> int:
    """Geodesic distance from ``1/0`` to ``target`` in the Farey graph.

    With ``certify=True`` the value is re-derived by :func:`bfs_distance_oracle`
    on the boxes of bound ``2q`` and ``4q``; a disagreement raises
    ``RuntimeError``.
    """
    _check_distance_domain(target)
    dist = len(_ladder_search(target)) - 1
    if certify:
        bound = max(2 * target.denominator, 1)
        checks = [bfs_distance_oracle(INFINITY, target, b) for b in (bound, 2 * bound)]
        if any(c != dist for c in checks):
            raise RuntimeError(f"oracle disagrees for {target}: ladder {dist}, box search {checks}")
    return dist


def geodesic(target: Slope) -> FareyPath:
    """Shortest path from ``1/0`` to ``target``.

    Among all shortest paths the one returned is lexicographically least when
    vertices are compared by ``(denominator, numerator)``.
    """
    _check_distance_domain(target)
    return FareyPath(_ladder_search(target))


def farey_neighbors(s: Slope, bound: int) -> Iterator[Slope]:
    """Farey neighbours ``c/d`` of ``s`` with ``|c| <= bound`` and ``d <= bound``."""
    if s.is_infinite:
        for c in range(-bound, bound + 1):
            yield Slope(c, 1)
        return
    a, b = s.numerator, s.denominator
    d0 = pow(a, -1, b) if b > 1 else 0
    c0 = (a * d0 - 1) // b
    seen_infinity = False
    # a*d - b*c = +1 along (c0 + k*a, d0 + k*b); -1 along the negation
    for c_base, d_base in ((c0, d0), (-c0, -d0)):
        k_lo = -(d_base // b)
        k_hi = (bound - d_base) // b
        for k in range(k_lo, k_hi + 1):
            c, d = c_base + k * a, d_base + k * b
            if d == 0:
                if not seen_infinity:
                    seen_infinity = True
                    yield INFINITY
            elif abs(c) <= bound:
                yield Slope(c, d)


def bounded_slopes(bound: int) -> list[Slope]:
    """Reduced slopes with ``|p| <= bound`` and ``1 <= q <= bound``, plus 1/0.

    Ordered by :meth:`Slope.value_key`.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    out = [INFINITY]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(p, q) == 1:
                out.append(Slope(p, q))
    out.sort(key=Slope.value_key)
    return out


_ORACLE_CHUNK = 4096


@lru_cache(maxsize=128)
def bfs_distance_map(src: Slope, bound: int) -> np.ndarray:
    """Breadth-first distances from ``src`` across the box of slopes.

    Returns an int array ``dist`` of shape ``(2*bound + 1, bound + 1)`` where
    ``dist[p + bound, q]`` is the distance to ``p/q`` (``-1`` for unreached or
    unreduced entries; infinity sits at ``[1 + bound, 0]``).

    Adjacency is found by brute force: for every frontier slope ``a/b`` and
    every denominator ``d`` in the box, the numerators ``c`` solving
    ``b*c = a*d -+ 1`` are kept when the division is exact.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if abs(src.numerator) > bound or src.denominator > bound:
        raise ValueError(f"{src} lies outside the box of bound {bound}")
    B = bound
    dist = np.full((2 * B + 1, B + 1), -1, dtype=np.int32)
    dist[src.numerator + B, src.denominator] = 0
    frontier = np.array([[src.numerator, src.denominator]], dtype=np.int64)
    ds = np.arange(B + 1, dtype=np.int64)
    level = 0
    while len(frontier):
        level += 1
        found = []
        at_infinity = frontier[:, 1] == 0
        if at_infinity.any():
            cs = np.arange(-B, B + 1, dtype=np.int64)
            found.append(np.stack([cs, np.ones_like(cs)], axis=1))
        finite = frontier[~at_infinity]
        for start in range(0, len(finite), _ORACLE_CHUNK):
            chunk = finite[start : start + _ORACLE_CHUNK]
            a = chunk[:, :1]
            b = chunk[:, 1:]
            ad = a * ds
            for sign in (1, -1):
                rhs = ad - sign
                ok = rhs % b == 0
                c = rhs // b
                ok &= np.abs(c) <= B
                rows, cols = np.nonzero(ok)
                cc = c[rows, cols]
                dd = ds[cols]
                cc = np.where(dd == 0, 1, cc)
                found.append(np.stack([cc, dd], axis=1))
        cand = np.unique(np.concatenate(found), axis=0) if found else np.empty((0, 2), np.int64)
        fresh = dist[cand[:, 0] + B, cand[:, 1]] == -1
        cand = cand[fresh]
        dist[cand[:, 0] + B, cand[:, 1]] = level
        frontier = cand
    dist.setflags(write=False)
    return dist


def bfs_distance_oracle(src: Slope, dst: Slope, denominator_bound: int) -> int:
    """Breadth-first distance between two slopes inside the bounded box.

    The box holds every reduced ``a/b`` with ``|a| <= bound`` and
    ``b <= bound`` together with 1/0.
    """
    B = denominator_bound
    if abs(dst.numerator) > B or dst.denominator > B:
        raise ValueError(f"{dst} lies outside the box of bound {B}")
    value = int(bfs_distance_map(src, B)[dst.numerator + B, dst.denominator])
    if value < 0:
        raise ValueError(f"{dst} is not reachable from {src} inside bound {B}")
    return value
