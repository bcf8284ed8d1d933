"""capax: exact-arithmetic toolkit for capacity classes on finite ground sets.

Cores, Bondareva-style balancedness tests, exactness, lower envelopes of
credal sets, the capacity monad, and a seeded counterexample search, all over
arbitrary-precision rationals.
"""

from .capacity import (
    BalancedFamily,
    Capacity,
    Measure,
    dirac,
    measure_pushforward,
    mix,
    new_capacity,
    pushforward,
    random_convex_mixture,
    random_monotone,
    unanimity,
)
from .classify import (
    ClassReport,
    bondareva_value,
    classify_full,
    is_balanced,
    is_convex,
    is_exact,
    is_totally_balanced,
    min_core_value,
    verify_report,
)
from .credal import (
    CredalSet,
    check_naturality,
    check_retraction,
    core_polytope,
    credal_pushforward,
    lower_envelope,
)
from .ground import GroundSet, PointMap, Rat
from .monad import SecondOrderCapacity, lift_unit, monad_mul, unit_second
from .search import SearchConfig, problem1_search

__version__ = "0.1.0"

__all__ = [
    "BalancedFamily",
    "Capacity",
    "ClassReport",
    "CredalSet",
    "GroundSet",
    "Measure",
    "PointMap",
    "Rat",
    "SearchConfig",
    "SecondOrderCapacity",
    "bondareva_value",
    "check_naturality",
    "check_retraction",
    "classify_full",
    "core_polytope",
    "credal_pushforward",
    "dirac",
    "is_balanced",
    "is_convex",
    "is_exact",
    "is_totally_balanced",
    "lift_unit",
    "lower_envelope",
    "measure_pushforward",
    "min_core_value",
    "mix",
    "monad_mul",
    "new_capacity",
    "problem1_search",
    "pushforward",
    "random_convex_mixture",
    "random_monotone",
    "unanimity",
    "unit_second",
    "verify_report",
]
