"""Reference implementations that share no code with the package.

They are deliberately naive: integer long division, exhaustive dyadic scans,
floating chord geometry at high precision, and mpmath floors.
"""

from fractions import Fraction

import mpmath


def long_division_expansion(p: int, q: int) -> tuple[str, str]:
    """Binary digits of p/q in [0, 1) by remainder tracking."""
    p %= q
    seen = {}
    digits = []
    r = p
    while r not in seen:
        seen[r] = len(digits)
        r *= 2
        digits.append("1" if r >= q else "0")
        r %= q
    start = seen[r]
    pre, per = "".join(digits[:start]), "".join(digits[start:])
    return pre, per


def two_adic_valuation(k: int) -> int:
    v = 0
    while k % 2 == 0:
        k //= 2
        v += 1
    return v


def grid_complexity(k: int, bits: int) -> int:
    """Complexity of k / 2**bits (0 for k = 0)."""
    if k % (2**bits) == 0:
        return 0
    return bits - two_adic_valuation(k)


def brute_pseudocenter(lo: Fraction, hi: Fraction, max_bits: int = 14) -> Fraction:
    """Scan every dyadic k/2^m, m <= max_bits, inside the open arc from lo to hi."""
    def inside(x):
        if lo < hi:
            return lo < x < hi
        return x > lo or x < hi

    for m in range(max_bits + 1):
        hits = [Fraction(k, 2**m) for k in range(2**m) if inside(Fraction(k, 2**m))]
        if hits:
            assert len(hits) == 1, f"tie in ({lo}, {hi}): {hits}"
            return hits[0]
    return None


def grid_pseudocenters(n_bits: int):
    """Yield ((i, j), center) for every arc (i/2^n, j/2^n), 0 <= i < j <= 2^n.

    The answer is found by a running minimum of complexity over the finer
    grid of step 2^-(n+2), which contains every candidate.
    """
    fine = n_bits + 2
    size = 2**n_bits
    for i in range(size):
        best = None
        tie = False
        for j in range(i + 1, size + 1):
            for k in range(max(4 * i + 1, 4 * (j - 1)), 4 * j):
                c = grid_complexity(k, fine)
                if best is None or c < best[0]:
                    best, tie = (c, k), False
                elif c == best[0]:
                    tie = True
            assert not tie
            yield (i, j), Fraction(best[1], 2**fine)


def orbit_closest_to_half(p: int, q: int) -> tuple[int, int]:
    """(twice-distance numerator over q, index) of the orbit point of p/q nearest 1/2."""
    r = p % q
    seen = set()
    best = None
    i = 0
    while r not in seen:
        seen.add(r)
        d = abs(2 * r - q)
        if best is None or d < best[0]:
            best = (d, i)
        r = (2 * r) % q
        i += 1
    return best


def real_by_integers(theta: Fraction) -> bool:
    d0 = abs(2 * theta.numerator - theta.denominator)
    return orbit_closest_to_half(theta.numerator, theta.denominator)[0] == d0


mpmath.mp.dps = 60


def _point(x: Fraction):
    t = 2 * mpmath.pi * mpmath.mpf(x.numerator) / x.denominator
    return mpmath.cos(t), mpmath.sin(t)


def _rep(leaf):
    """A point of the closed disk standing for a leaf: its chord midpoint, nudged inward."""
    pts = [_point(x) for x in leaf]
    x = sum(p[0] for p in pts) / len(pts)
    y = sum(p[1] for p in pts) / len(pts)
    return x * (1 - mpmath.mpf(10) ** -9), y * (1 - mpmath.mpf(10) ** -9)


def geometric_separates(chord, p, q) -> bool:
    """Whether the chord's line puts the representatives of p and q on opposite sides."""
    (ax, ay), (bx, by) = _point(chord[0]), _point(chord[1])

    def side(pt):
        return (bx - ax) * (pt[1] - ay) - (by - ay) * (pt[0] - ax)

    return side(_rep(p)) * side(_rep(q)) < 0


def mp_floor_sequence(alpha, beta: Fraction, n: int) -> str:
    mpmath.mp.dps = 80
    b = mpmath.mpf(beta.numerator) / beta.denominator
    floors = [int(mpmath.floor(k * alpha + b)) for k in range(n + 1)]
    return "".join(str(floors[k + 1] - floors[k]) for k in range(n))


def mp_continued_fraction(coeffs) -> mpmath.mpf:
    mpmath.mp.dps = 80
    x = mpmath.mpf(0)
    for a in reversed(coeffs[1:]):
        x = 1 / (a + x)
    return x


# hyperbolic components of exact period n, cardioid excluded from n = 1
COMPONENT_COUNTS = {1: 1, 2: 1, 3: 3, 4: 6, 5: 15, 6: 27, 7: 63, 8: 120, 9: 252, 10: 495}
