"""Hyperbolic components, rotation sets, ray pairs, tuning and veins."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .angles import (
    HALF,
    Expansion,
    angle,
    double,
    dyadic_complexity,
    expansion,
    iterate,
    pseudocenter,
    word_value,
)
from .errors import MagicAnglesError, NotDyadicError
from .lamination import Leaf, ends, ends_dyadic

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


def exact_period(theta: Fraction) -> int:
    """Period of ``theta`` under doubling, or 0 if it is strictly preperiodic."""
    x, k = double(theta), 1
    seen = {theta}
    while x != theta:
        if x in seen:
            return 0
        seen.add(x)
        x, k = double(x), k + 1
    return k


def periodic_angles(period: int) -> list[Fraction]:
    """All angles of exact period ``period``, sorted."""
    den = 2**period - 1
    out = []
    for k in range(1, den):
        x = Fraction(k, den)
        if exact_period(x) == period:
            out.append(x)
    return out


class RotationSet(NamedTuple):
    p: int
    q: int
    points: tuple

    @property
    def root_pair(self) -> tuple[Fraction, Fraction]:
        """Endpoints of the smallest gap: the parameter angles of the p/q-limb root."""
        pts = self.points
        if self.q == 1:
            return (pts[0], pts[0])
        gaps = [((pts[(i + 1) % self.q] - pts[i]) % 1, i) for i in range(self.q)]
        _, i = min(gaps)
        return (pts[i], pts[(i + 1) % self.q])


def rotation_number(orbit: list[Fraction]) -> tuple[int, int] | None:
    """Combinatorial rotation number of a periodic orbit, if doubling acts as one."""
    pts = sorted(orbit)
    q = len(pts)
    index = {x: i for i, x in enumerate(pts)}
    shift = (index[double(pts[0])] - 0) % q
    for i, x in enumerate(pts):
        if index.get(double(x)) != (i + shift) % q:
            return None
    if q > 1 and gcd(shift, q) != 1:
        return None
    return shift, q


def _orbit(theta: Fraction) -> list[Fraction]:
    out = [theta]
    x = double(theta)
    while x != theta:
        out.append(x)
        x = double(x)
    return out


@lru_cache(maxsize=None)
def rotation_set(p: int, q: int) -> RotationSet:
    """The unique period-``q`` orbit on which doubling rotates by ``p/q``."""
    if q == 1:
        return RotationSet(0, 1, (Fraction(0),))
    if not (0 < p < q and gcd(p, q) == 1):
        raise ValueError(f"need 0 < p < q coprime, got {p}/{q}")
    for x in periodic_angles(q):
        orbit = _orbit(x)
        if rotation_number(orbit) == (p, q):
            return RotationSet(p, q, tuple(sorted(orbit)))
    raise AssertionError(f"no rotation set for {p}/{q}")


def cardioid_angles(max_q: int) -> list[Fraction]:
    """Rational angles of rays landing on the main cardioid, roots up to period ``max_q``."""
    out = {Fraction(0)}
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                out.update(rotation_set(p, q).root_pair)
    return sorted(out)


def is_cardioid_angle(theta: Fraction) -> bool:
    """Exact membership of a rational angle in the set of cardioid angles."""
    theta = angle(theta)
    if theta == 0:
        return True
    if theta.denominator % 2 == 0:
        return False
    orbit = _orbit(theta)
    rot = rotation_number(orbit)
    if rot is None:
        return False
    return theta in RotationSet(rot[0], rot[1], tuple(sorted(orbit))).root_pair


class RayPair(NamedTuple):
    a: Fraction
    b: Fraction
    period: int

    @property
    def leaf(self) -> Leaf:
        return Leaf(self.a, self.b)


@lru_cache(maxsize=None)
def _lavaurs(max_period: int) -> tuple[RayPair, ...]:
    partner: dict[Fraction, Fraction] = {}
    endpoints: list[Fraction] = []
    pairs = []
    for period in range(2, max_period + 1):
        fresh = periodic_angles(period)
        unpaired = set(fresh)
        merged = sorted(endpoints + fresh)
        for a in fresh:
            if a not in unpaired:
                continue
            unpaired.discard(a)
            start = bisect.bisect_right(merged, a)
            open_chords = 0
            for x in merged[start:]:
                if x in unpaired:
                    if open_chords == 0:
                        b = x
                        break
                    continue
                # x is an endpoint of an existing chord
                if a < partner[x] < x:
                    open_chords -= 1
                else:
                    open_chords += 1
            else:
                raise AssertionError(f"no partner for {a}")
            unpaired.discard(b)
            partner[a], partner[b] = b, a
            pairs.append(RayPair(a, b, period))
        endpoints = merged
    return tuple(sorted(pairs, key=lambda r: (r.period, r.a)))


def enumerate_ray_pairs(max_period: int) -> tuple[RayPair, ...]:
    """Periodic ray pairs of period at most ``max_period``, by Lavaurs' pairing rule.

    Sorted by (period, smaller angle).
    """
    return _lavaurs(max_period)


@lru_cache(maxsize=None)
def _partner_table(max_period: int) -> dict:
    table = {}
    for r in _lavaurs(max_period):
        table[r.a] = r
        table[r.b] = r
    return table


def ray_pair_of(theta: Fraction) -> RayPair:
    theta = angle(theta)
    period = exact_period(theta)
    if period < 2:
        raise MagicAnglesError(f"{theta} is not a periodic angle of period >= 2")
    return _partner_table(period)[theta]


@dataclass(frozen=True)
class HyperbolicComponent:
    """Component given by the periodic words of its two root angles (``word_a < word_b``)."""

    word_a: str
    word_b: str
    trusted: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.word_a) != len(self.word_b) or not self.word_a:
            raise ValueError("root words must be nonempty and of equal length")
        if set(self.word_a + self.word_b) - {"0", "1"}:
            raise ValueError("root words must be binary")
        if self.root_a >= self.root_b:
            raise ValueError(f"need A < B, got {self.word_a}:{self.word_b}")
        if self.trusted or self.is_cardioid:
            return
        try:
            pair = ray_pair_of(self.root_a)
        except (MagicAnglesError, KeyError):
            raise MagicAnglesError(f"{self.word_a}:{self.word_b} is not a ray pair") from None
        if (pair.a, pair.b) != (self.root_a, self.root_b) or pair.period != self.period:
            raise MagicAnglesError(f"{self.word_a}:{self.word_b} is not a ray pair")

    @classmethod
    def main_cardioid(cls) -> HyperbolicComponent:
        return cls("0", "1")

    @classmethod
    def from_pair(cls, pair: RayPair) -> HyperbolicComponent:
        return cls(expansion(pair.a).period, expansion(pair.b).period, trusted=True)

    @classmethod
    def from_root(cls, theta: Fraction) -> HyperbolicComponent:
        pair = ray_pair_of(theta)
        return cls.from_pair(pair)

    @property
    def period(self) -> int:
        return len(self.word_a)

    @property
    def root_a(self) -> Fraction:
        return word_value("", self.word_a)

    @property
    def root_b(self) -> Fraction:
        """May equal 1 for the main cardioid."""
        return word_value("", self.word_b)

    @property
    def is_cardioid(self) -> bool:
        return self.word_a == "0" and self.word_b == "1"

    @property
    def root_leaf(self) -> Leaf:
        return Leaf(self.root_a, self.root_b)

    @property
    def a_prime(self) -> Fraction:
        return word_value("", self.word_a + self.word_b)

    @property
    def b_prime(self) -> Fraction:
        return word_value("", self.word_b + self.word_a)

    def __str__(self):
        return f"{self.word_a}:{self.word_b}"


def tune(component: HyperbolicComponent, theta: Fraction) -> Fraction:
    """Replace each binary digit of ``theta`` by the component's root word."""
    return tune_expansion(component, expansion(theta)) % 1


def tune_expansion(component: HyperbolicComponent, exp: Expansion) -> Fraction:
    sub = {"0": component.word_a, "1": component.word_b}
    pre = "".join(sub[c] for c in exp.preperiod)
    per = "".join(sub[c] for c in exp.period)
    return word_value(pre, per)


def tune_word(component: HyperbolicComponent, word: str) -> str:
    sub = {"0": component.word_a, "1": component.word_b}
    return "".join(sub[c] for c in word)


class Classification(NamedTuple):
    half: str
    in_half_limb: bool


def classify(component: HyperbolicComponent) -> Classification:
    a, b = component.word_a, component.word_b
    if component.is_cardioid:
        half = "on-real-axis"
    elif a[0] == b[0] == "0":
        half = "upper-half"
    elif a[0] == b[0] == "1":
        half = "lower-half"
    else:
        half = "on-real-axis"
    in_limb = THIRD <= component.root_a <= TWO_THIRDS and THIRD <= component.root_b <= TWO_THIRDS
    return Classification(half, in_limb)


@dataclass(frozen=True)
class Vein:
    center: Fraction
    complexity: int


def vein_of(theta0: Fraction) -> Vein:
    theta0 = angle(theta0)
    q = dyadic_complexity(theta0)
    if q == 0:
        raise NotDyadicError("vein center must be a nonzero dyadic angle")
    delta = q - 1
    assert iterate(theta0, delta) == HALF
    assert all(iterate(theta0, k) != HALF for k in range(delta))
    return Vein(theta0, delta)


def vein_contains(vein: Vein, pair: Leaf) -> bool:
    """Pseudocenter matches and the Hubbard tree has as many ends as the center's."""
    if pseudocenter(pair.interval()) != vein.center:
        return False
    return ends(pair) == ends_dyadic(vein.center)


def vein_for(pair: Leaf) -> Vein:
    """The vein named by the pair's pseudocenter (membership not checked)."""
    return vein_of(pseudocenter(pair.interval()))
