"""Batch verification sweeps.

Angle sources are fixed so reports are reproducible: for every component, its
lower root angle plus the tunings of all cardioid angles with rotation
denominator up to ``max_rotation_q``. Components come from the ray-pair
enumeration in (period, angle) order, preceded by the main cardioid.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .angles import HALF, concat, expansion, format_angle, iterate, pseudocenter
from .components import (
    THIRD,
    HyperbolicComponent,
    Vein,
    cardioid_angles,
    enumerate_ray_pairs,
    tune,
    vein_contains,
    vein_of,
)
from .errors import DomainError, HypothesisError
from .magic import (
    alternate_phi,
    douady_T,
    in_window,
    is_real_angle,
    orbit_report,
    phi_H,
    window_radius,
)
from .words import is_renormalizable

DEFAULT_RENORM_Q = 8


@dataclass
class SweepReport:
    parameters: dict
    components_tested: int = 0
    angles_tested: int = 0
    passes: int = 0
    hypothesis_violations: int = 0
    failures: int = 0
    failure_list: list = field(default_factory=list)
    by_check: dict = field(default_factory=dict)

    def record(self, check: str, outcome: str, **provenance):
        self.angles_tested += 1
        tally = self.by_check.setdefault(check, {"pass": 0, "hypothesis": 0, "fail": 0})
        tally[outcome] += 1
        if outcome == "pass":
            self.passes += 1
        elif outcome == "hypothesis":
            self.hypothesis_violations += 1
        else:
            self.failures += 1
            self.failure_list.append({"check": check, **provenance})

    def reconciles(self) -> bool:
        return (
            self.passes + self.failures + self.hypothesis_violations == self.angles_tested
            and len(self.failure_list) == self.failures
        )

    def to_dict(self) -> dict:
        return asdict(self)


def default_vein(component: HyperbolicComponent) -> Vein:
    if component.is_cardioid:
        return vein_of(HALF)
    return vein_of(pseudocenter(component.root_leaf.interval()))


def _fmt(x) -> str | None:
    return None if x is None else format_angle(x)


def sweep_douady(report: SweepReport, max_q: int) -> None:
    for theta in cardioid_angles(max_q):
        out = douady_T(theta)
        ok = is_real_angle(out)
        report.record(
            "douady", "pass" if ok else "fail",
            component="0:1", vein="1/2", input=_fmt(theta), output=_fmt(out), predicate="is_real_angle",
        )


def sweep_main(report: SweepReport, components, max_q: int, renorm_q: int) -> None:
    etas = cardioid_angles(max_q)
    for h in components:
        vein = default_vein(h)
        thetas = sorted({h.root_a % 1} | {tune(h, eta) for eta in etas})
        for theta in thetas:
            prov = dict(component=str(h), vein=_fmt(vein.center), input=_fmt(theta))
            try:
                out = phi_H(h, vein, theta)
            except (HypothesisError, DomainError):
                report.record("main", "hypothesis", **prov)
                continue
            if not is_real_angle(out):
                report.record("main", "fail", output=_fmt(out), predicate="is_real_angle", **prov)
            elif not h.is_cardioid and is_renormalizable(expansion(out), renorm_q):
                report.record("main", "fail", output=_fmt(out), predicate="not_renormalizable", **prov)
            else:
                report.record("main", "pass", **prov)


def alternate_angles(h: HyperbolicComponent, max_j: int = 4) -> list[Fraction]:
    return sorted({tune(h, Fraction(k, 2**j - 1)) for j in range(1, max_j + 1) for k in range(2**j - 1)})


def sweep_alternate(report: SweepReport, components, max_j: int = 4) -> None:
    for h in components:
        if h.period < 2:
            continue
        for theta in alternate_angles(h, max_j):
            prov = dict(component=str(h), vein=None, input=_fmt(theta))
            if orbit_report(theta).min_distance < window_radius(h.period):
                report.record("alternate", "fail", output=None, predicate="orbit_distance", **prov)
                continue
            out = alternate_phi(h, theta)
            ok = is_real_angle(out) and in_window(out, h.period)
            report.record(
                "alternate", "pass" if ok else "fail", output=_fmt(out), predicate="is_real_angle", **prov
            )


def sweep_index(report: SweepReport, max_period: int) -> None:
    """Real-angle claim for ``D^delta_V`` of the upper angle, and the side inequality."""
    for pair in enumerate_ray_pairs(max_period):
        leaf = pair.leaf
        center = pseudocenter(leaf.interval())
        if center == 0 or center >= THIRD:
            continue
        prov = dict(component=f"{_fmt(pair.a)},{_fmt(pair.b)}", vein=_fmt(center), input=_fmt(pair.b))
        side_ok = pair.b - center < center - pair.a
        report.record("side", "pass" if side_ok else "fail", output=None, predicate="side_inequality", **prov)
        vein = vein_of(center)
        if not vein_contains(vein, leaf):
            report.record("index", "hypothesis", **prov)
            continue
        out = iterate(pair.b, vein.complexity)
        ok = is_real_angle(out)
        report.record("index", "pass" if ok else "fail", output=_fmt(out), predicate="is_real_angle", **prov)


def run_verify(max_period: int, max_rotation_q: int, renorm_q: int = DEFAULT_RENORM_Q) -> SweepReport:
    report = SweepReport(
        parameters={"max_period": max_period, "max_rotation_q": max_rotation_q, "renorm_q": renorm_q}
    )
    components = [HyperbolicComponent.main_cardioid()]
    components += [HyperbolicComponent.from_pair(p) for p in enumerate_ray_pairs(max_period)]
    report.components_tested = len(components)
    sweep_douady(report, max_rotation_q)
    sweep_main(report, components, max_rotation_q, renorm_q)
    sweep_alternate(report, components)
    sweep_index(report, max_period)
    return report


def phi_trail(h: HyperbolicComponent, theta: Fraction, vein: Vein | None = None, *, check_angle: bool = True,
              renorm_q: int = DEFAULT_RENORM_Q) -> dict:
    """Every intermediate value of the main formula, for display."""
    vein = vein or default_vein(h)
    out = phi_H(h, vein, theta, check_angle=check_angle)
    renorm = None if h.is_cardioid else is_renormalizable(expansion(out), renorm_q)
    return {
        "component": str(h),
        "vein_center": _fmt(vein.center),
        "delta_V": vein.complexity,
        "input": _fmt(theta),
        "concatenated": _fmt(concat(h.word_b + h.word_a, theta)),
        "output": _fmt(out),
        "real": is_real_angle(out),
        "renormalizable": None if renorm is None else bool(renorm),
        "renormalization_witness": None if not renorm else str(renorm.witness),
    }
