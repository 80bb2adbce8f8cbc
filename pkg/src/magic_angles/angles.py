"""Exact arithmetic on angles of the circle R/Z.

Angles are plain :class:`fractions.Fraction` values normalized into [0, 1).
Binary expansions are derived views computed on demand.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import AngleParseError, DegenerateIntervalError, NotDyadicError

Angle = Fraction
AngleLike = Union[Fraction, int, str]

HALF = Fraction(1, 2)
DEFAULT_MAX_DENOM = 2**24


def angle(x: AngleLike) -> Fraction:
    """Coerce ``x`` to a reduced fraction in [0, 1)."""
    if isinstance(x, str):
        return parse_angle(x)
    return Fraction(x) % 1


def double(theta: Fraction) -> Fraction:
    return (2 * theta) % 1


def iterate(theta: Fraction, k: int) -> Fraction:
    """Apply the doubling map ``k`` times."""
    return (theta * 2**k) % 1


def is_dyadic(theta: Fraction) -> bool:
    d = Fraction(theta).denominator
    return d & (d - 1) == 0


def dyadic_complexity(theta: Fraction) -> int:
    """Number of doublings needed to reach 0, i.e. ``q`` for ``p / 2**q`` with p odd."""
    theta = angle(theta)
    if not is_dyadic(theta):
        raise NotDyadicError(f"not dyadic: {theta}")
    return theta.denominator.bit_length() - 1


def _mult_order_of_two(q: int) -> int:
    if q == 1:
        return 1
    k, r = 1, 2 % q
    while r != 1:
        r = (2 * r) % q
        k += 1
    return k


class Expansion(NamedTuple):
    """Eventually periodic binary expansion ``.preperiod(period)^inf``.

    Dyadic angles use the terminating form, with period ``"0"``.
    """

    preperiod: str
    period: str

    @property
    def value(self) -> Fraction:
        """Exact value; may equal 1 when the period is all ones."""
        return word_value(self.preperiod, self.period)

    def digits(self, n: int) -> str:
        out = self.preperiod[:n]
        while len(out) < n:
            out += self.period
        return out[:n]

    def __str__(self) -> str:
        return f".{self.preperiod}~{self.period}"


def word_value(preperiod: str, period: str = "0") -> Fraction:
    """Value of ``.preperiod(period)^inf`` without reduction mod 1."""
    n = len(preperiod)
    pre = int(preperiod, 2) if preperiod else 0
    if not period:
        return Fraction(pre, 2**n)
    per = Fraction(int(period, 2), 2 ** len(period) - 1)
    return (pre + per) / 2**n


def expansion(theta: AngleLike) -> Expansion:
    """Canonical expansion: primitive period, minimal preperiod."""
    theta = angle(theta)
    p, q = theta.numerator, theta.denominator
    s = (q & -q).bit_length() - 1
    odd = q >> s
    k = 0 if odd == 1 else _mult_order_of_two(odd)
    digits = []
    r = p
    for _ in range(s + max(k, 1)):
        r *= 2
        digits.append("1" if r >= q else "0")
        r %= q
    word = "".join(digits)
    if odd == 1:
        return Expansion(word[:s], "0")
    return Expansion(word[:s], word[s:])


def canonical(preperiod: str, period: str) -> Expansion:
    """Reduce a word pair to canonical form without going through its value.

    Unlike :func:`expansion`, an all-ones period stays as ``"1"``, so block
    sequences such as ``.(1)^inf`` keep their identity.
    """
    if not period:
        raise ValueError("period must be nonempty")
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            period = period[:d]
            break
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1] + period[:-1]
    return Expansion(preperiod, period)


def concat(word: str, theta: AngleLike) -> Fraction:
    """The angle ``word . theta = sum s_k 2^-k + 2^-n theta``."""
    theta = angle(theta)
    n = len(word)
    if n == 0:
        return theta
    return (Fraction(int(word, 2), 2**n) + theta / 2**n) % 1


@dataclass(frozen=True)
class CircularInterval:
    """Open arc traversed counterclockwise from ``start`` to ``end``."""

    start: Fraction
    end: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", angle(self.start))
        object.__setattr__(self, "end", angle(self.end))

    @property
    def length(self) -> Fraction:
        return (self.end - self.start) % 1

    def contains(self, x: Fraction) -> bool:
        if self.start == self.end:
            return False
        return 0 < (angle(x) - self.start) % 1 < self.length

    def intersects(self, other: CircularInterval) -> bool:
        """True iff the two open arcs share a point."""
        if self.length == 0 or other.length == 0:
            return False
        return (
            self.contains(other.start)
            or other.contains(self.start)
            or self.start == other.start
        )

    def doubled(self) -> CircularInterval:
        return CircularInterval(double(self.start), double(self.end))


def pseudocenter(interval: CircularInterval) -> Fraction:
    """Dyadic angle of lowest complexity strictly inside the arc."""
    length = interval.length
    if length == 0:
        raise DegenerateIntervalError("degenerate interval")
    lo = interval.start
    hi = lo + length
    if hi > 1:
        # the arc runs across 0
        return Fraction(0)
    m = 1
    while True:
        scale = 2**m
        k = math.floor(lo * scale) + 1
        x = Fraction(k, scale)
        if x < hi:
            assert Fraction(k + 1, scale) >= hi, "pseudocenter not unique"
            return x % 1
        m += 1


_BIN = re.compile(r"\.([01]*)(?:~([01]+))?$")
_FRAC = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def max_denominator() -> int:
    raw = os.environ.get("MAGIC_ANGLES_MAX_DENOM")
    return int(raw) if raw else DEFAULT_MAX_DENOM


def _first_bad_binary(s: str) -> int:
    seen_tilde = False
    for i, c in enumerate(s[1:], start=1):
        if c == "~" and not seen_tilde:
            seen_tilde = True
        elif c not in "01":
            return i
    return len(s)


def parse_angle(text: str) -> Fraction:
    """Parse ``"p/q"`` or a binary literal ``".pre~period"``."""
    s = text.strip()
    if s.startswith("."):
        m = _BIN.match(s)
        if not m:
            raise AngleParseError(text, _first_bad_binary(s), "bad binary literal")
        value = word_value(m.group(1), m.group(2) or "")
    else:
        m = _FRAC.match(s)
        if not m:
            pos = next((i for i, c in enumerate(s) if not (c.isdigit() or c in "/- ")), len(s))
            raise AngleParseError(text, pos, "expected p/q or binary literal")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise AngleParseError(text, s.index("/") + 1, "zero denominator")
        value = Fraction(num, den)
    value %= 1
    if value.denominator > max_denominator():
        raise AngleParseError(text, 0, f"denominator exceeds cap {max_denominator()}")
    return value


def format_angle(theta: Fraction) -> str:
    return f"{theta.numerator}/{theta.denominator}"
