"""Exact combinatorics of external angles under the doubling map.

All angles are :class:`fractions.Fraction` values reduced mod 1.
"""

from .angles import (
    CircularInterval,
    Expansion,
    angle,
    canonical,
    concat,
    double,
    dyadic_complexity,
    expansion,
    format_angle,
    is_dyadic,
    iterate,
    parse_angle,
    pseudocenter,
    word_value,
)
from .components import (
    HyperbolicComponent,
    RayPair,
    Vein,
    cardioid_angles,
    classify,
    enumerate_ray_pairs,
    is_cardioid_angle,
    ray_pair_of,
    rotation_set,
    tune,
    vein_contains,
    vein_for,
    vein_of,
)
from .errors import DomainError, HypothesisError, MagicAnglesError
from .harness import SweepReport, run_verify
from .lamination import Leaf, arcs_disjoint, ends, ends_dyadic, hubbard_tree, segment_contains, separates
from .magic import (
    alternate_phi,
    ble_cabrera_TH,
    douady_T,
    is_real_angle,
    orbit_report,
    phi_H,
    psi,
    window_radius,
)
from .words import (
    SturmianParams,
    SymbolStream,
    is_renormalizable,
    max_diverse_check,
    sturmian_prefix,
    tuned_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
