"""Capacities (normed monotone set functions), probability measures and
balanced families on finite ground sets, with constructors, mixtures and
functorial pushforwards.

A capacity is stored as a dense table of 2^n exact rationals indexed by
subset code.  All values are immutable after construction and every
constructor validates the full invariant set (0 at the empty set, 1 at the
full set, monotone, range [0, 1]); nothing downstream ever has to re-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    BadNormalization,
    EmptyCarrier,
    GroundMismatch,
    MissingSubset,
    NotMonotone,
    OutOfRange,
)
from .ground import ONE, ZERO, GroundSet, PointMap
from .rng import SplitMix64


class Capacity:
    """Dense exact capacity on a finite ground set."""

    __slots__ = ("ground", "values")

    def __init__(self, ground: GroundSet, values: Sequence[Fraction]):
        values = tuple(values)
        if len(values) != ground.table_size:
            raise ValueError(f"need {ground.table_size} values, got {len(values)}")
        _validate_table(ground, values)
        self.ground = ground
        self.values = values

    def __getitem__(self, mask: int) -> Fraction:
        return self.values[mask]

    def value(self, mask: int) -> Fraction:
        return self.values[mask]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Capacity):
            return NotImplemented
        return self.ground == other.ground and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.ground, self.values))

    def __repr__(self) -> str:
        body = ", ".join(f"{mask}:{v}" for mask, v in enumerate(self.values))
        return f"Capacity(n={self.ground.n}, {{{body}}})"


def _validate_table(ground: GroundSet, values: tuple[Fraction, ...]):
    full = ground.full
    if values[0] != ZERO or values[full] != ONE:
        raise BadNormalization(
            f"capacity must have value 0 at {{}} and 1 at the full set, "
            f"got {values[0]} and {values[full]}"
        )
    for mask, v in enumerate(values):
        if not ZERO <= v <= ONE:
            raise OutOfRange(mask)
    # monotonicity along single-point extensions implies the full partial order
    for mask in range(full + 1):
        v = values[mask]
        for i in range(ground.n):
            bit = 1 << i
            if not mask & bit and v > values[mask | bit]:
                raise NotMonotone(mask, mask | bit)


def new_capacity(ground: GroundSet, assignments: Mapping[int, Fraction],
                 strict: bool = True) -> Capacity:
    """Build a capacity from per-subset values.

    Strict mode requires a value for every nonempty proper subset (typo
    protection for hand-written tables).  Lenient mode fills unspecified
    subsets by monotone closure of the given values:  v(A) = max of given
    values over subsets of A (0 when none).  Values given for the empty or
    full set must equal 0 / 1.
    """
    full = ground.full
    table: list[Fraction | None] = [None] * ground.table_size
    for mask, value in assignments.items():
        if not ground.contains_subset(mask):
            raise GroundMismatch(f"subset code {mask:#b} not valid over {ground.n} points")
        table[mask] = Fraction(value)
    if table[0] is not None and table[0] != ZERO:
        raise BadNormalization(f"value at {{}} must be 0, got {table[0]}")
    if table[full] is not None and table[full] != ONE:
        raise BadNormalization(f"value at the full set must be 1, got {table[full]}")
    table[0] = ZERO
    table[full] = ONE
    if strict:
        for mask in ground.proper_nonempty_subsets():
            if table[mask] is None:
                raise MissingSubset(f"no value for subset {mask:#b} in strict mode")
    else:
        closure: list[Fraction] = [ZERO] * ground.table_size
        for mask in ground.nonempty_subsets():
            best = table[mask] if table[mask] is not None else ZERO
            for i in range(ground.n):
                bit = 1 << i
                if mask & bit:
                    prev = closure[mask & ~bit]
                    if prev > best:
                        best = prev
            closure[mask] = best
        for mask in ground.proper_nonempty_subsets():
            if table[mask] is None:
                table[mask] = closure[mask]
    return Capacity(ground, table)  # full validation happens here


def dirac(x: int, ground: GroundSet) -> Capacity:
    """Unit mass at a single point: v(F) = 1 iff x is in F."""
    if not 0 <= x < ground.n:
        raise ValueError(f"point {x} outside ground set of size {ground.n}")
    bit = 1 << x
    return Capacity(ground, [ONE if mask & bit else ZERO for mask in ground.subsets()])


def unanimity(carrier: int, ground: GroundSet) -> Capacity:
    """v(A) = 1 iff the carrier is contained in A.  A convex workhorse fixture."""
    if carrier == 0:
        raise EmptyCarrier("unanimity capacity needs a nonempty carrier")
    if not ground.contains_subset(carrier):
        raise GroundMismatch(f"carrier {carrier:#b} not valid over {ground.n} points")
    return Capacity(
        ground,
        [ONE if mask & carrier == carrier else ZERO for mask in ground.subsets()],
    )


def mix(nu1: Capacity, nu2: Capacity, t: Fraction) -> Capacity:
    """Pointwise convex combination t*nu1 + (1-t)*nu2."""
    if nu1.ground != nu2.ground:
        raise GroundMismatch("cannot mix capacities on different ground sets")
    t = Fraction(t)
    if not ZERO <= t <= ONE:
        raise ValueError(f"mixing weight must lie in [0, 1], got {t}")
    s = ONE - t
    return Capacity(nu1.ground, [t * a + s * b for a, b in zip(nu1.values, nu2.values)])


def pushforward(f: PointMap, nu: Capacity) -> Capacity:
    """Transport along a point map: result(B) = nu(preimage of B)."""
    if nu.ground != f.domain:
        raise GroundMismatch("capacity is not on the domain of the map")
    values = [nu.values[f.preimage(mask)] for mask in f.codomain.subsets()]
    return Capacity(f.codomain, values)


class Measure:
    """Probability measure: nonnegative point weights summing to 1."""

    __slots__ = ("ground", "weights")

    def __init__(self, ground: GroundSet, weights: Sequence[Fraction]):
        weights = tuple(Fraction(w) for w in weights)
        if len(weights) != ground.n:
            raise ValueError(f"need {ground.n} weights, got {len(weights)}")
        for w in weights:
            if w < 0:
                raise OutOfRange(0, f"negative weight {w}")
        if sum(weights) != ONE:
            raise BadNormalization(f"weights sum to {sum(weights)}, not 1")
        self.ground = ground
        self.weights = weights

    def mass(self, mask: int) -> Fraction:
        total = ZERO
        for i, w in enumerate(self.weights):
            if mask >> i & 1:
                total += w
        return total

    def as_capacity(self) -> Capacity:
        return Capacity(self.ground, [self.mass(mask) for mask in self.ground.subsets()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.ground == other.ground and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.ground, self.weights))

    def __repr__(self) -> str:
        return f"Measure({', '.join(str(w) for w in self.weights)})"


def point_mass(x: int, ground: GroundSet) -> Measure:
    if not 0 <= x < ground.n:
        raise ValueError(f"point {x} outside ground set of size {ground.n}")
    return Measure(ground, [ONE if i == x else ZERO for i in ground.points()])


def measure_pushforward(f: PointMap, mu: Measure) -> Measure:
    """Weight of y is the total weight of its preimage points."""
    if mu.ground != f.domain:
        raise GroundMismatch("measure is not on the domain of the map")
    weights = [ZERO] * f.codomain.n
    for x, w in enumerate(mu.weights):
        weights[f.image[x]] += w
    return Measure(f.codomain, weights)


@dataclass(frozen=True)
class BalancedFamily:
    """Weighted family of subsets with nonnegative weights.

    The family is *admissible within B* when the weighted characteristic
    vectors stay below the characteristic vector of B pointwise; it violates
    balancedness of `nu` relative to B when its weighted capacity total
    exceeds nu(B).  Verification is plain arithmetic, no LP involved.
    """

    sets: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.sets) != len(self.weights):
            raise ValueError("sets and weights must have equal length")
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    def is_admissible_within(self, bound_mask: int, ground: GroundSet) -> bool:
        for a, w in zip(self.sets, self.weights):
            if w < 0:
                return False
            if a & ~bound_mask:
                return False  # member set sticks out of B
        for i in ground.points():
            load = sum((w for a, w in zip(self.sets, self.weights) if a >> i & 1), ZERO)
            cap = ONE if bound_mask >> i & 1 else ZERO
            if load > cap:
                return False
        return True

    def weighted_total(self, nu: Capacity) -> Fraction:
        return sum((w * nu.values[a] for a, w in zip(self.sets, self.weights)), ZERO)

    def violates(self, nu: Capacity, bound_mask: int) -> bool:
        """True when admissible within B yet the weighted total exceeds nu(B)."""
        return (
            self.is_admissible_within(bound_mask, nu.ground)
            and self.weighted_total(nu) > nu.values[bound_mask]
        )


# --- seeded generators --------------------------------------------------------


def random_monotone(ground: GroundSet, seed: int, grid: int) -> Capacity:
    """Deterministic random capacity.

    Draws one raw value from {0, 1/grid, ..., 1} per nonempty proper subset in
    ascending subset-code order (the full set is pinned to 1 and consumes no
    draw), then takes the monotone closure v(A) = max of raw values over
    subsets of A.  Same (seed, n, grid) always yields the same table.
    """
    if grid < 1:
        raise ValueError("grid must be >= 1")
    rng = SplitMix64(seed)
    raw = [ZERO] * ground.table_size
    for mask in ground.proper_nonempty_subsets():
        raw[mask] = rng.next_grid_fraction(grid)
    raw[ground.full] = ONE
    values = [ZERO] * ground.table_size
    for mask in ground.nonempty_subsets():
        best = raw[mask]
        for i in range(ground.n):
            bit = 1 << i
            if mask & bit and values[mask & ~bit] > best:
                best = values[mask & ~bit]
        values[mask] = best
    return Capacity(ground, values)


def random_convex_mixture(ground: GroundSet, seed: int, grid: int) -> Capacity:
    """Random convex combination of unanimity capacities (always convex).

    Draws one integer weight from 0..grid per nonempty carrier in ascending
    subset-code order and normalizes; all-zero draws fall back to full weight
    on the full-set carrier.
    """
    if grid < 1:
        raise ValueError("grid must be >= 1")
    rng = SplitMix64(seed)
    raw = [rng.next_below(grid + 1) for _ in ground.nonempty_subsets()]
    total = sum(raw)
    if total == 0:
        raw[-1] = 1
        total = 1
    values = []
    for mask in ground.subsets():
        acc = 0
        for k, carrier in enumerate(ground.nonempty_subsets()):
            if mask & carrier == carrier:
                acc += raw[k]
        values.append(Fraction(acc, total))
    return Capacity(ground, values)


def random_measure(ground: GroundSet, rng: SplitMix64, grid: int) -> Measure:
    """Random rational point of the probability simplex (all-zero draws retried)."""
    while True:
        raw = [rng.next_below(grid + 1) for _ in ground.points()]
        total = sum(raw)
        if total:
            return Measure(ground, [Fraction(r, total) for r in raw])
