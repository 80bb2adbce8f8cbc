"""Magic formulas sending angles of a hyperbolic component to real angles."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .angles import HALF, angle, concat, double, expansion, iterate
from .components import (
    HyperbolicComponent,
    Vein,
    classify,
    is_cardioid_angle,
    vein_contains,
)
from .errors import (
    AngleNotOnUpperPartError,
    HalfLimbError,
    LowerHalfPlaneError,
    MagicAnglesError,
    NotInSectorsError,
    NotTunedAngleError,
    PeriodTooSmallError,
    WrongVeinError,
)
from .words import tuned_decomposition


class OrbitReport(NamedTuple):
    angle: Fraction
    orbit: tuple
    min_distance: Fraction
    argmin_index: int

    @property
    def closest(self) -> Fraction:
        return self.orbit[self.argmin_index]


def orbit_report(theta: Fraction) -> OrbitReport:
    """Forward orbit until it repeats, with its closest approach to 1/2."""
    theta = angle(theta)
    orbit = []
    seen = set()
    x = theta
    while x not in seen:
        seen.add(x)
        orbit.append(x)
        x = double(x)
    dists = [abs(y - HALF) for y in orbit]
    best = min(dists)
    return OrbitReport(theta, tuple(orbit), best, dists.index(best))


def is_real_angle(theta: Fraction) -> bool:
    """No forward iterate comes closer to 1/2 than the angle itself."""
    theta = angle(theta)
    d0 = abs(theta - HALF)
    x = double(theta)
    seen = {theta}
    while x not in seen:
        if abs(x - HALF) < d0:
            return False
        seen.add(x)
        x = double(x)
    return True


def psi(x: Fraction) -> Fraction:
    return (HALF + orbit_report(x).min_distance) % 1


def douady_T(theta: Fraction) -> Fraction:
    theta = angle(theta)
    if theta == HALF:
        raise MagicAnglesError("douady_T is undefined at 1/2")
    if theta < HALF:
        return HALF + theta / 4
    return (Fraction(1, 4) + theta / 4) % 1


def _upper_branch(component: HyperbolicComponent) -> tuple[Fraction, Fraction, bool]:
    """Closed-open bounds ``(lo, hi, hi_closed)`` of the sector where ``B A . theta`` applies."""
    if component.is_cardioid:
        return Fraction(0), HALF, False
    return component.root_a, component.a_prime, True


def _lower_branch(component: HyperbolicComponent) -> tuple[Fraction, Fraction, bool]:
    if component.is_cardioid:
        return HALF, Fraction(1), True
    return component.b_prime, component.root_b, True


def _in(lo: Fraction, hi: Fraction, hi_closed: bool, theta: Fraction, lo_closed: bool = True) -> bool:
    above = theta > lo or (lo_closed and theta == lo)
    below = theta < hi or (hi_closed and theta == hi)
    return above and below


def in_upper_part(component: HyperbolicComponent, theta: Fraction) -> bool:
    lo, hi, closed = _upper_branch(component)
    return _in(lo, hi, closed, angle(theta))


def in_tuned_cardioid(component: HyperbolicComponent, theta: Fraction) -> bool:
    """Whether a rational ``theta`` is the tuning of a cardioid angle by ``component``."""
    blocks = tuned_decomposition(expansion(theta), component.word_a, component.word_b)
    if blocks is None:
        return False
    return is_cardioid_angle(blocks.value % 1)


def ble_cabrera_TH(component: HyperbolicComponent, theta: Fraction) -> Fraction:
    """Conjugate of Douady's map by tuning, as a two-branch concatenation."""
    theta = angle(theta)
    a, b = component.word_a, component.word_b
    if _in(*_upper_branch(component), theta):
        return concat(b + a, theta)
    lo, hi, closed = _lower_branch(component)
    if _in(lo, hi, closed, theta, lo_closed=not component.is_cardioid):
        return concat(a + b, theta)
    raise NotInSectorsError(f"{theta} is not in the Xi_H sectors of {component}")


def check_hypotheses(component: HyperbolicComponent, vein: Vein) -> None:
    """Raise a :class:`HypothesisError` unless the main formula applies to ``component`` on ``vein``."""
    if component.is_cardioid:
        if vein.complexity != 0:
            raise WrongVeinError("the main cardioid lies on the real vein")
        return
    half, in_limb = classify(component)
    if in_limb or half == "on-real-axis":
        raise HalfLimbError(f"{component} lies in the 1/2-limb")
    if half == "lower-half":
        raise LowerHalfPlaneError(f"{component} lies in the lower half plane")
    if not vein_contains(vein, component.root_leaf):
        raise WrongVeinError(f"{component} does not lie on the vein of {vein.center}")


def phi_H(
    component: HyperbolicComponent,
    vein: Vein,
    theta: Fraction,
    *,
    check_angle: bool = True,
) -> Fraction:
    """``D^delta_V (B_H A_H . theta)`` for theta on the upper part of the component.

    With ``check_angle`` the input must also be a tuned cardioid angle; without
    it only the sector bound is enforced.
    """
    theta = angle(theta)
    check_hypotheses(component, vein)
    if not in_upper_part(component, theta):
        raise AngleNotOnUpperPartError(f"{theta} is not on the upper part of {component}")
    if check_angle and not in_tuned_cardioid(component, theta):
        raise AngleNotOnUpperPartError(f"{theta} does not land on the boundary of {component}")
    return iterate(concat(component.word_b + component.word_a, theta), vein.complexity)


def alternate_phi(component: HyperbolicComponent, theta: Fraction, *, check_angle: bool = True) -> Fraction:
    """Vein-free variant: prefix ``0 1^(2p-1)`` to the expansion of theta."""
    p = component.period
    if p < 2:
        raise PeriodTooSmallError("alternate formula requires p > 1")
    theta = angle(theta)
    if check_angle and tuned_decomposition(expansion(theta), component.word_a, component.word_b) is None:
        raise NotTunedAngleError(f"{theta} is not in the small copy of {component}")
    return concat("0" + "1" * (2 * p - 1), theta)


def window_radius(period: int) -> Fraction:
    """Half width of the window ``U_p`` around 1/2 avoided by the small copy."""
    return Fraction(1, 2 ** (2 * period))


def in_window(theta: Fraction, period: int) -> bool:
    return abs(angle(theta) - HALF) < window_radius(period)
