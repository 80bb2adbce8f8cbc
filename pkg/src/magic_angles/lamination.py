"""Leaves of invariant laminations and combinatorial Hubbard trees.

Combinatorial segments are never built as sets. Everything goes through the
membership test :func:`segment_contains`, which only needs the circular order
of finitely many endpoints.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .angles import CircularInterval, angle, double, dyadic_complexity, iterate, pseudocenter
from .errors import CrossingLeavesError, IncidentLeavesError, TreeDidNotCloseError

DEFAULT_MAX_ITER = 4096


@dataclass(frozen=True, order=True, init=False)
class Leaf:
    """Chord of the disk joining ``a`` and ``b`` (stored with ``a <= b``)."""

    a: Fraction
    b: Fraction

    def __init__(self, a, b=None):
        a = angle(a)
        b = a if b is None else angle(b)
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degenerate(self) -> bool:
        return self.a == self.b

    @property
    def endpoints(self) -> tuple:
        return (self.a,) if self.degenerate else (self.a, self.b)

    def image(self) -> Leaf:
        return Leaf(double(self.a), double(self.b))

    def interval(self) -> CircularInterval:
        """The arc ``(a, b)`` that does not run across 0."""
        return CircularInterval(self.a, self.b)

    def __str__(self):
        if self.degenerate:
            return f"{{{self.a}}}"
        return f"({self.a}, {self.b})"


BETA = Leaf(0)


def _side(chord: Leaf, other: Leaf, allow_incident: bool) -> bool | None:
    """Which side of ``chord`` the leaf ``other`` lies on.

    ``True`` means inside the arc ``(chord.a, chord.b)``. Returns ``None`` when
    every endpoint of ``other`` is an endpoint of ``chord``.
    """
    arc = chord.interval()
    free = [x for x in other.endpoints if x not in (chord.a, chord.b)]
    if len(free) < len(other.endpoints) and not allow_incident:
        raise IncidentLeavesError(f"incident leaves: {chord} and {other}")
    if not free:
        return None
    sides = {arc.contains(x) for x in free}
    if len(sides) > 1:
        raise CrossingLeavesError(f"crossing leaves: {chord} and {other}")
    return sides.pop()


def separates(chord: Leaf, p: Leaf, q: Leaf, *, allow_incident: bool = False) -> bool:
    """True iff ``chord`` puts the leaves ``p`` and ``q`` in different components.

    By default a shared endpoint raises :class:`IncidentLeavesError`. With
    ``allow_incident=True`` a leaf touching ``chord`` is placed on the side of
    its free endpoint, and a leaf with no free endpoint is on neither side.
    A degenerate chord separates nothing.
    """
    if chord.degenerate:
        return False
    sp = _side(chord, p, allow_incident)
    sq = _side(chord, q, allow_incident)
    if sp is None or sq is None:
        return False
    return sp != sq


def segment_contains(l1: Leaf, l2: Leaf, leaf: Leaf) -> bool:
    """Membership of ``leaf`` in the closed combinatorial segment ``[l1, l2]``."""
    if leaf == l1 or leaf == l2:
        return True
    return separates(leaf, l1, l2, allow_incident=True)


class LeafOrbit(NamedTuple):
    """Orbit of a minor leaf and the end count of its Hubbard tree.

    ``iterates`` holds ``f^i(m)`` for ``i <= closure_index``, where
    ``closure_index`` is the least ``N`` with ``f^(N+1)(m)`` in ``H_N``.
    ``extended_ends`` is ``N + 2``; ``ends`` counts the ends of the tree
    spanned by the postcritical set.
    """

    minor: Leaf
    iterates: tuple
    closure_index: int
    ends: int

    @property
    def extended_ends(self) -> int:
        return self.closure_index + 2


def _closure_index(minor: Leaf, max_iter: int) -> list[Leaf]:
    iterates = [minor]
    nxt = minor.image()
    for _ in range(max_iter):
        if any(segment_contains(BETA, leaf, nxt) for leaf in iterates):
            return iterates
        iterates.append(nxt)
        nxt = nxt.image()
    raise TreeDidNotCloseError(f"tree did not close within {max_iter} iterations for {minor}")


def _arc_index(vertices: list, x: Fraction) -> int:
    """Index of the complementary arc of the sorted ``vertices`` containing ``x``."""
    if len(vertices) == 1:
        return 0
    i = bisect.bisect_left(vertices, x)
    return i % len(vertices)


def _postcritical(minor: Leaf, max_iter: int) -> tuple[list[tuple[Fraction, Fraction]], bool]:
    x, y = minor.a, minor.b
    seen = set()
    orbit = []
    while (x, y) not in seen:
        if len(orbit) > max_iter:
            raise TreeDidNotCloseError(f"orbit of {minor} longer than {max_iter}")
        seen.add((x, y))
        orbit.append((x, y))
        x, y = double(x), double(y)
    return orbit, (x, y) == (minor.a, minor.b) and not minor.degenerate


def _regular_ends(minor: Leaf, max_iter: int) -> int:
    orbit, periodic = _postcritical(minor, max_iter)
    if periodic:
        # one Fatou component per orbit step, lying over the arc from x to y
        objects = [(sorted({x, y}), CircularInterval(x, y)) for x, y in orbit]
    else:
        # landing points: leaves with a common endpoint land together
        groups: list[set] = []
        for x, y in orbit:
            g = {x, y}
            for h in [h for h in groups if h & g]:
                groups.remove(h)
                g |= h
            groups.append(g)
        objects = [(sorted(g), None) for g in groups]

    count = 0
    for k, (poly, side) in enumerate(objects):
        places = set()
        for j, (other, _) in enumerate(objects):
            if j == k:
                continue
            if other == poly:
                # a different component across the same leaf
                own = _arc_index(poly, side.start + side.length / 2)
                places.add(1 - own)
                continue
            free = {_arc_index(poly, v) for v in other if v not in poly}
            if len(free) != 1:
                raise CrossingLeavesError(f"postcritical leaves of {minor} cross")
            places |= free
        if len(places) <= 1:
            count += 1
    return count


def hubbard_tree(minor: Leaf, max_iter: int = DEFAULT_MAX_ITER) -> LeafOrbit:
    """Combinatorial Hubbard tree of a minor leaf (periodic, preperiodic or a point)."""
    iterates = _closure_index(minor, max_iter)
    return LeafOrbit(minor, tuple(iterates), len(iterates) - 1, _regular_ends(minor, max_iter))


def ends(minor: Leaf, max_iter: int = DEFAULT_MAX_ITER) -> int:
    return _regular_ends(minor, max_iter)


def ends_dyadic(theta0: Fraction) -> int:
    """End count of the tree of a dyadic angle: its complexity plus one."""
    q = dyadic_complexity(theta0)
    if q == 0:
        raise ValueError("ends_dyadic needs a nonzero dyadic angle")
    return q + 1


def iterated_arcs(pair: Leaf, count: int) -> list[CircularInterval]:
    """The arcs ``(D^k(a), D^k(b))`` for ``k < count``."""
    return [CircularInterval(iterate(pair.a, k), iterate(pair.b, k)) for k in range(count)]


def arcs_disjoint(pair: Leaf, q: int | None = None) -> bool:
    if q is None:
        q = dyadic_complexity(pseudocenter(pair.interval()))
    arcs = iterated_arcs(pair, q)
    return not any(
        arcs[i].intersects(arcs[j]) for i in range(len(arcs)) for j in range(i + 1, len(arcs))
    )
