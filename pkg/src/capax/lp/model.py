"""Exact LP instances, outcomes with certificates, and certificate checking.

Conventions, fixed once and used everywhere:

* Variables are `nonneg` or `free`; bounds beyond sign live in explicit rows.
* Dual vector `y` has one entry per row.  For a maximization: y >= 0 on `<=`
  rows, y <= 0 on `>=` rows, free on `=` rows, and sum_i y_i a_ij >= c_j for
  nonneg variables (equality for free ones).  For a minimization all three
  sign rules flip.  Optimality certificate = primal feasibility + dual
  feasibility + exact value equality c.x = value = y.b.
* Farkas certificate for infeasibility: one multiplier per row, required
  nonnegative on inequality rows, free on equalities.  Multipliers combine
  rows *oriented as >=* (a `<=` row enters negated), so the combination
  sum_i lam_i sigma_i a_i must be <= 0 on nonneg variables (= 0 on free
  ones) while sum_i lam_i sigma_i b_i > 0: the system derives
  "nonpositive >= positive".
* Unbounded certificate: a feasible point plus an improving ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ShapeMismatch
from ..ground import ZERO

MAX_SENSE = "max"
MIN_SENSE = "min"
LE, EQ, GE = "<=", "=", ">="

NONNEG = "nonneg"
FREE = "free"


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if self.rel not in (LE, EQ, GE):
            raise ValueError(f"relation must be one of <=, =, >=; got {self.rel!r}")


@dataclass(frozen=True)
class LinearProgram:
    sense: str
    objective: tuple[Fraction, ...]
    rows: tuple[Row, ...]
    var_kinds: tuple[str, ...]

    def __post_init__(self):
        if self.sense not in (MAX_SENSE, MIN_SENSE):
            raise ValueError(f"sense must be 'max' or 'min', got {self.sense!r}")
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "var_kinds", tuple(self.var_kinds))
        n = len(self.objective)
        if len(self.var_kinds) != n:
            raise ShapeMismatch("one bound kind per variable required")
        for kind in self.var_kinds:
            if kind not in (NONNEG, FREE):
                raise ValueError(f"variable kind must be 'nonneg' or 'free', got {kind!r}")
        for row in self.rows:
            if len(row.coeffs) != n:
                raise ShapeMismatch("row length differs from variable count")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.rows)


def linear_program(sense, objective, rows, var_kinds=None) -> LinearProgram:
    """Convenience builder: rows as (coeffs, rel, rhs) triples; nonneg default."""
    objective = tuple(Fraction(c) for c in objective)
    if var_kinds is None:
        var_kinds = (NONNEG,) * len(objective)
    built = tuple(Row(tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs))
                  for coeffs, rel, rhs in rows)
    return LinearProgram(sense, objective, built, tuple(var_kinds))


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    primal: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None
    ray_point: tuple[Fraction, ...] | None = None
    ray_direction: tuple[Fraction, ...] | None = None

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


def _point_feasible(lp: LinearProgram, x) -> bool:
    for kind, v in zip(lp.var_kinds, x):
        if kind == NONNEG and v < 0:
            return False
    for row in lp.rows:
        lhs = _dot(row.coeffs, x)
        if row.rel == LE and lhs > row.rhs:
            return False
        if row.rel == GE and lhs < row.rhs:
            return False
        if row.rel == EQ and lhs != row.rhs:
            return False
    return True


def verify_outcome(lp: LinearProgram, outcome: LpOutcome) -> bool:
    """Exact arithmetic check of the outcome's certificate.  Never solves."""
    n, m = lp.num_vars, lp.num_rows
    if outcome.status == OPTIMAL:
        x, y = outcome.primal, outcome.dual
        if x is None or y is None or outcome.value is None:
            raise ShapeMismatch("optimal outcome needs value, primal and dual")
        if len(x) != n or len(y) != m:
            raise ShapeMismatch("primal/dual length mismatch")
        if not _point_feasible(lp, x):
            return False
        if _dot(lp.objective, x) != outcome.value:
            return False
        maximizing = lp.sense == MAX_SENSE
        for yi, row in zip(y, lp.rows):
            if row.rel == LE and (yi < 0 if maximizing else yi > 0):
                return False
            if row.rel == GE and (yi > 0 if maximizing else yi < 0):
                return False
        for j, (kind, cj) in enumerate(zip(lp.var_kinds, lp.objective)):
            s = sum((yi * row.coeffs[j] for yi, row in zip(y, lp.rows)), ZERO)
            if kind == FREE:
                if s != cj:
                    return False
            elif maximizing:
                if s < cj:
                    return False
            else:
                if s > cj:
                    return False
        if sum((yi * row.rhs for yi, row in zip(y, lp.rows)), ZERO) != outcome.value:
            return False
        return True

    if outcome.status == INFEASIBLE:
        lam = outcome.farkas
        if lam is None:
            raise ShapeMismatch("infeasible outcome needs a Farkas certificate")
        if len(lam) != m:
            raise ShapeMismatch("Farkas length mismatch")
        for li, row in zip(lam, lp.rows):
            if row.rel != EQ and li < 0:
                return False
        combo_rhs = ZERO
        for j in range(n):
            g = ZERO
            for li, row in zip(lam, lp.rows):
                g += li * row.coeffs[j] * (-1 if row.rel == LE else 1)
            if lp.var_kinds[j] == FREE:
                if g != 0:
                    return False
            elif g > 0:
                return False
        for li, row in zip(lam, lp.rows):
            combo_rhs += li * row.rhs * (-1 if row.rel == LE else 1)
        return combo_rhs > 0

    if outcome.status == UNBOUNDED:
        x0, d = outcome.ray_point, outcome.ray_direction
        if x0 is None or d is None:
            raise ShapeMismatch("unbounded outcome needs a feasible point and a ray")
        if len(x0) != n or len(d) != n:
            raise ShapeMismatch("ray length mismatch")
        if not _point_feasible(lp, x0):
            return False
        for kind, dj in zip(lp.var_kinds, d):
            if kind == NONNEG and dj < 0:
                return False
        for row in lp.rows:
            move = _dot(row.coeffs, d)
            if row.rel == LE and move > 0:
                return False
            if row.rel == GE and move < 0:
                return False
            if row.rel == EQ and move != 0:
                return False
        gain = _dot(lp.objective, d)
        return gain > 0 if lp.sense == MAX_SENSE else gain < 0

    raise ValueError(f"unknown outcome status {outcome.status!r}")


def canonical_relations(lp: LinearProgram) -> tuple[LinearProgram, tuple[int, ...]]:
    """Flip rows so a max instance has only <=/= rows and a min one only >=/=.

    Returns the rewritten program and per-row flip signs (+1 unchanged, -1
    negated).  Primal solutions are unchanged; the dual of row i of the
    original is flip_i times the dual of row i of the rewrite.
    """
    unwanted = GE if lp.sense == MAX_SENSE else LE
    wanted = LE if lp.sense == MAX_SENSE else GE
    rows = []
    flips = []
    for row in lp.rows:
        if row.rel == unwanted:
            rows.append(Row(tuple(-c for c in row.coeffs), wanted, -row.rhs))
            flips.append(-1)
        else:
            rows.append(row)
            flips.append(1)
    return (
        LinearProgram(lp.sense, lp.objective, tuple(rows), lp.var_kinds),
        tuple(flips),
    )


def dual_of(lp: LinearProgram) -> LinearProgram:
    """Dual program, after canonicalizing relations.

    Dual variable i corresponds to constraint i; dual constraint j to
    variable j.  Both optima agree exactly when either side is optimal.
    """
    canon, _ = canonical_relations(lp)
    n, m = canon.num_vars, canon.num_rows
    dual_sense = MIN_SENSE if canon.sense == MAX_SENSE else MAX_SENSE
    dual_obj = tuple(row.rhs for row in canon.rows)
    dual_kinds = tuple(NONNEG if row.rel != EQ else FREE for row in canon.rows)
    # for max: A^T y >= c on nonneg vars; for min: A^T y <= c
    ineq = GE if canon.sense == MAX_SENSE else LE
    dual_rows = []
    for j in range(n):
        coeffs = tuple(row.coeffs[j] for row in canon.rows)
        rel = ineq if canon.var_kinds[j] == NONNEG else EQ
        dual_rows.append(Row(coeffs, rel, canon.objective[j]))
    return LinearProgram(dual_sense, dual_obj, tuple(dual_rows), dual_kinds)
