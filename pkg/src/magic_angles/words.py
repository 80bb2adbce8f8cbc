"""Symbol streams, Sturmian words, maximal diversity and block decompositions."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable, NamedTuple, Optional, Sequence

from .angles import Expansion, canonical
from .components import HyperbolicComponent, enumerate_ray_pairs
from .errors import RefineAlphaError


class SturmianParams:
    """Slope ``alpha = [0; a1, a2, ...]`` and intercept ``beta`` in [0, 1).

    ``coefficients`` is a finite prefix of the continued fraction of an
    irrational slope. ``tail``, when given, supplies ``a_k`` for any index
    ``k`` so the prefix can be extended whenever a floor is undetermined.
    """

    def __init__(self, coefficients: Sequence[int], beta=0, tail: Optional[Callable[[int], int]] = None):
        coefficients = list(coefficients)
        if len(coefficients) < 2 or coefficients[0] != 0 or any(a < 1 for a in coefficients[1:]):
            raise ValueError("alpha must be [0; a1, a2, ...] with positive a_k")
        beta = Fraction(beta)
        if not 0 <= beta < 1:
            raise ValueError("beta must lie in [0, 1)")
        self.coefficients = coefficients
        self.beta = beta
        self.tail = tail
        self._bounds = None

    @classmethod
    def golden(cls, beta=0, prefix: int = 20) -> SturmianParams:
        return cls([0] + [1] * prefix, beta, tail=lambda k: 1)

    def __repr__(self):
        return f"SturmianParams({self.coefficients!r}, beta={self.beta})"

    def alpha_bounds(self) -> tuple[Fraction, Fraction]:
        """Open interval known to contain alpha."""
        if self._bounds is None:
            p0, q0, p1, q1 = 1, 0, 0, 1  # convergents p_{-1}/q_{-1}, p_0/q_0
            for a in self.coefficients[1:]:
                p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
            ends = Fraction(p1, q1), Fraction(p1 + p0, q1 + q0)
            self._bounds = (min(ends), max(ends))
        return self._bounds

    def refine(self) -> bool:
        if self.tail is None:
            return False
        n = len(self.coefficients)
        self.coefficients.extend(self.tail(k) for k in range(n, 2 * n))
        self._bounds = None
        return True

    def floor_at(self, n: int) -> int:
        """Exact ``floor(n * alpha + beta)``."""
        if n == 0:
            return math.floor(self.beta)
        while True:
            lo, hi = self.alpha_bounds()
            u, v = n * lo + self.beta, n * hi + self.beta
            f = math.floor(u)
            if f + 1 >= v:
                return f
            if not self.refine():
                raise RefineAlphaError(f"refine alpha: floor({n} alpha + beta) is undetermined")

    def symbol(self, n: int) -> int:
        return self.floor_at(n + 1) - self.floor_at(n)


def sturmian_prefix(params: SturmianParams, n: int) -> str:
    """First ``n`` symbols of the mechanical word of slope alpha and intercept beta."""
    floors = [params.floor_at(k) for k in range(n + 1)]
    return "".join(str(floors[k + 1] - floors[k]) for k in range(n))


class SymbolStream:
    """A binary sequence known through its symbols by index."""

    def __init__(self, symbol: Callable[[int], int], description: str, length: Optional[int] = None):
        self._symbol = symbol
        self.description = description
        self.length = length

    @classmethod
    def from_word(cls, word: str) -> SymbolStream:
        return cls(lambda n: int(word[n]), f"word {word}", len(word))

    @classmethod
    def from_expansion(cls, exp: Expansion) -> SymbolStream:
        pre, per = exp.preperiod, exp.period

        def symbol(n):
            if n < len(pre):
                return int(pre[n])
            return int(per[(n - len(pre)) % len(per)])

        return cls(symbol, f"expansion {exp}")

    @classmethod
    def sturmian(cls, params: SturmianParams) -> SymbolStream:
        return cls(params.symbol, f"sturmian {params!r}")

    def symbol(self, n: int) -> int:
        if self.length is not None and n >= self.length:
            raise IndexError(f"{self.description} has only {self.length} symbols")
        return self._symbol(n)

    def prefix(self, n: int) -> str:
        return "".join(str(self.symbol(k)) for k in range(n))

    def shift(self, k: int = 1) -> SymbolStream:
        length = None if self.length is None else max(self.length - k, 0)
        return SymbolStream(lambda n: self._symbol(n + k), f"shift^{k} {self.description}", length)

    def subsequence(self, i: int, p: int) -> SymbolStream:
        length = None if self.length is None else max(0, -(-(self.length - i) // p))
        return SymbolStream(lambda n: self._symbol(i + n * p), f"({i} + {p}n) of {self.description}", length)


class DiversityResult(NamedTuple):
    """``passed`` only means no collision was seen up to ``(p_max, horizon)``."""

    passed: bool
    witness: Optional[tuple[int, int, int, int]]
    p_max: int
    horizon: int

    def __bool__(self):
        return self.passed


def max_diverse_check(stream: SymbolStream, p_max: int, horizon: int) -> DiversityResult:
    """Look for two progressions ``(s_{i+np})`` and ``(s_{j+nq})`` that agree up to ``horizon``."""
    if horizon < p_max * p_max:
        raise ValueError("horizon must be at least p_max**2")
    word = stream.prefix(horizon)
    keys = [(i, p) for p in range(1, p_max + 1) for i in range(p)]
    subs = {key: word[key[0]:: key[1]] for key in keys}
    for (i, p), (j, q) in combinations(keys, 2):
        a, b = subs[i, p], subs[j, q]
        m = min(len(a), len(b))
        if a[:m] == b[:m]:
            return DiversityResult(False, (i, p, j, q), p_max, horizon)
    return DiversityResult(True, None, p_max, horizon)


def _split(word: str, z0: str, z1: str) -> Optional[str]:
    q = len(z0)
    out = []
    for k in range(0, len(word), q):
        block = word[k:k + q]
        if block == z0:
            out.append("0")
        elif block == z1:
            out.append("1")
        else:
            return None
    return "".join(out)


def tuned_decomposition(sigma, z0: str, z1: str, horizon: Optional[int] = None):
    """Split ``sigma`` from its first digit into blocks ``z0`` / ``z1``.

    For an :class:`Expansion` the answer is exact and returned as the
    expansion of the block-index sequence. For a :class:`SymbolStream` only
    the first ``horizon`` digits (rounded down to whole blocks) are checked and
    the block indices are returned as a string. ``None`` if no split exists.
    """
    q = len(z0)
    if q == 0 or len(z1) != q:
        raise ValueError("block words must be nonempty and of equal length")
    if z0 == z1:
        raise ValueError("block words must differ")
    if isinstance(sigma, SymbolStream):
        if horizon is None:
            raise ValueError("a horizon is required for symbol streams")
        return _split(sigma.prefix(horizon - horizon % q), z0, z1)
    head = -(-len(sigma.preperiod) // q) * q
    cycle = lcm(q, len(sigma.period))
    blocks = _split(sigma.digits(head + cycle), z0, z1)
    if blocks is None:
        return None
    return canonical(blocks[: head // q], blocks[head // q:])


class Renormalization(NamedTuple):
    renormalizable: bool
    witness: object = None
    blocks: Optional[Expansion] = None

    def __bool__(self):
        return self.renormalizable


def is_renormalizable(sigma: Expansion, max_q: int, pairs=None, *, complement_only: bool = False) -> Renormalization:
    """Try every ray-pair word pair of period ``2 <= q <= max_q`` as block words.

    With ``complement_only`` only pairs whose words are bitwise complements
    are tried.
    """
    if pairs is None:
        pairs = enumerate_ray_pairs(max_q)
    for pair in pairs:
        if not 2 <= pair.period <= max_q:
            continue
        h = HyperbolicComponent.from_pair(pair)
        if complement_only and any(x == y for x, y in zip(h.word_a, h.word_b)):
            continue
        blocks = tuned_decomposition(sigma, h.word_a, h.word_b)
        if blocks is not None:
            return Renormalization(True, h, blocks)
    return Renormalization(False)
