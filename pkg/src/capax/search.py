"""Seeded search for counterexamples to the submonad question: does the monad
multiplication keep exact (or totally balanced) second-order capacities inside
the exact (totally balanced) class?

Scope: the search explores *finitely supported* second-order capacities only.
A verified counterexample found here is a genuine counterexample; finding
none proves nothing, and reports always say "inconclusive" in that case.

Per seed, deterministically: draw support capacities of the target class
(exact ones as lower envelopes of random vertex credal sets, totally balanced
ones by rejection-filtering random monotone capacities), draw a weight game
of the same class on the index set, multiply, classify the result, and fully
re-verify any class failure from its serialized record before listing it.
Seeds are independent, so the worker pool splits by seed; the report is
assembled in seed order, which makes the machine report byte-identical for
any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .capacity import Capacity, random_monotone
from .classify import (
    ClassReport,
    classify_full,
    is_exact,
    is_totally_balanced,
    verify_report,
)
from .credal import lower_envelope, random_credal
from .errors import ConfigOutOfRange, InternalInconsistency
from .gamefiles import emit_second, parse_second
from .ground import GroundSet, format_rat, format_subset, parse_rat
from .monad import SecondOrderCapacity, monad_mul
from .rng import SplitMix64

EXACT = "exact"
TOTALLY_BALANCED = "totally_balanced"
CLASSES = (EXACT, TOTALLY_BALANCED)

MAX_POINTS = 6
MAX_SUPPORT = 6
_REJECTION_CAP = 100_000

REPORT_HEADER = "capax-report v1"


@dataclass(frozen=True)
class SearchConfig:
    n: int
    support_size: int
    target_class: str
    seed_start: int
    seed_end: int  # inclusive; an empty range is start > end
    grid: int = 16
    jobs: int = 1

    def __post_init__(self):
        if not 1 <= self.n <= MAX_POINTS:
            raise ConfigOutOfRange(f"ground size must be 1..{MAX_POINTS}, got {self.n}")
        if not 1 <= self.support_size <= MAX_SUPPORT:
            raise ConfigOutOfRange(
                f"support size must be 1..{MAX_SUPPORT}, got {self.support_size}"
            )
        if self.target_class not in CLASSES:
            raise ConfigOutOfRange(f"class must be one of {CLASSES}, got {self.target_class!r}")
        if self.grid < 1:
            raise ConfigOutOfRange("grid must be >= 1")
        if self.jobs < 1:
            raise ConfigOutOfRange("jobs must be >= 1")
        if self.seed_start < 0 or self.seed_end < -1:
            raise ConfigOutOfRange("seed range must be nonnegative")

    @property
    def seeds(self) -> range:
        return range(self.seed_start, self.seed_end + 1)


@dataclass(frozen=True)
class SeedOutcome:
    seed: int
    second_order: SecondOrderCapacity
    multiplied: Capacity
    report: ClassReport
    class_holds: bool
    verified_counterexample: bool


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    outcomes: tuple[SeedOutcome, ...]
    elapsed_seconds: float

    @property
    def counterexamples(self) -> tuple[SeedOutcome, ...]:
        return tuple(o for o in self.outcomes if not o.class_holds)


def _class_predicate(name: str):
    return is_exact if name == EXACT else is_totally_balanced


def _generate_member(ground: GroundSet, target_class: str, attempt_rng: SplitMix64,
                     grid: int) -> Capacity:
    if target_class == EXACT:
        return lower_envelope(random_credal(ground, attempt_rng, ground.n + 1, grid))
    for _ in range(_REJECTION_CAP):
        candidate = random_monotone(ground, attempt_rng.next_u64(), grid)
        if is_totally_balanced(candidate)[0]:
            return candidate
    raise InternalInconsistency(
        "rejection sampling failed to find a totally balanced capacity"
    )


def build_second_order(config: SearchConfig, seed: int) -> SecondOrderCapacity:
    """Deterministic second-order capacity of the target class for one seed.

    Substream discipline: the seed's base stream emits one child seed per
    generation attempt; duplicate support draws are discarded and the next
    substream is used, so the construction does not depend on worker layout.
    """
    ground = GroundSet(config.n)
    base = SplitMix64(seed)
    support: list[Capacity] = []
    while len(support) < config.support_size:
        candidate = _generate_member(
            ground, config.target_class, SplitMix64(base.next_u64()), config.grid
        )
        if candidate not in support:
            support.append(candidate)
    game = _generate_member(
        GroundSet(config.support_size), config.target_class,
        SplitMix64(base.next_u64()), config.grid,
    )
    return SecondOrderCapacity(ground, tuple(support), game)


def run_seed(config: SearchConfig, seed: int) -> SeedOutcome:
    c2 = build_second_order(config, seed)
    mul = monad_mul(c2)
    report = classify_full(mul)
    holds = report.exact if config.target_class == EXACT else report.totally_balanced
    verified = False
    if not holds:
        verified = verify_counterexample(config, seed, emit_second(c2))
        if not verified:
            raise InternalInconsistency(
                f"seed {seed}: counterexample candidate failed re-verification"
            )
    return SeedOutcome(seed, c2, mul, report, holds, verified)


def verify_counterexample(config: SearchConfig, seed: int, second_text: str) -> bool:
    """Re-verify a counterexample candidate from its serialized record.

    Rebuilds the second-order capacity from text, checks it matches the
    deterministic regeneration for the seed, confirms every support entry and
    the weight game belong to the target class, recomputes the multiplication
    and reruns the classification, and re-verifies all witnesses by
    arithmetic.
    """
    c2 = parse_second(second_text)
    if c2 != build_second_order(config, seed):
        return False
    predicate = _class_predicate(config.target_class)
    for member in c2.support:
        if not predicate(member)[0]:
            return False
    if not predicate(c2.game)[0]:
        return False
    mul = monad_mul(c2)
    report = classify_full(mul)
    holds = report.exact if config.target_class == EXACT else report.totally_balanced
    if holds:
        return False
    return verify_report(mul, report)


def _worker(args) -> SeedOutcome:
    config, seed = args
    return run_seed(config, seed)


def problem1_search(config: SearchConfig) -> SearchReport:
    """Run the whole seed range; deterministic for any job count."""
    started = time.perf_counter()
    seeds = list(config.seeds)
    if not seeds:
        return SearchReport(config, (), time.perf_counter() - started)
    if config.jobs == 1 or len(seeds) == 1:
        outcomes = [run_seed(config, s) for s in seeds]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_worker, [(config, s) for s in seeds],
                                     chunksize=max(1, len(seeds) // (config.jobs * 4))))
    outcomes.sort(key=lambda o: o.seed)  # pool.map preserves order; sort is belt and braces
    return SearchReport(config, tuple(outcomes), time.perf_counter() - started)


# --- report serialization ---------------------------------------------------------


def _table_text(nu: Capacity) -> str:
    return ",".join(format_rat(v) for v in nu.values)


def _parse_table(ground: GroundSet, text: str) -> Capacity:
    return Capacity(ground, [parse_rat(tok) for tok in text.split(",")])


def machine_report(report: SearchReport) -> str:
    """Line-delimited machine format; excludes wall-clock so identical flags
    give byte-identical output regardless of --jobs."""
    cfg = report.config
    out = [REPORT_HEADER,
           f"config command=search class={cfg.target_class} n={cfg.n} k={cfg.support_size} "
           f"seeds={cfg.seed_start}..{cfg.seed_end} grid={cfg.grid}"]
    yn = lambda b: "yes" if b else "no"
    for o in report.outcomes:
        r = o.report
        out.append(
            f"result seed={o.seed} convex={yn(r.convex)} exact={yn(r.exact)} "
            f"totally-balanced={yn(r.totally_balanced)} balanced={yn(r.balanced)} "
            f"holds={yn(o.class_holds)}"
        )
    for o in report.counterexamples:
        out.append(f"counterexample seed={o.seed} verified={yn(o.verified_counterexample)} "
                   f"witness={_witness_text(o.report, report.config.target_class)}")
        for i, nu in enumerate(o.second_order.support):
            out.append(f"cx-support seed={o.seed} index={i} table={_table_text(nu)}")
        out.append(f"cx-game seed={o.seed} table={_table_text(o.second_order.game)}")
        out.append(f"cx-mul seed={o.seed} table={_table_text(o.multiplied)}")
    cx = len(report.counterexamples)
    verdict = "counterexample-found" if cx else "inconclusive"
    out.append(f"summary seeds={len(report.outcomes)} counterexamples={cx} verdict={verdict}")
    if not cx:
        out.append("note finitely-supported-search-only absence-of-counterexamples-proves-nothing")
    return "\n".join(out) + "\n"


def _witness_text(report: ClassReport, target_class: str) -> str:
    if target_class == EXACT:
        w = report.exact_witness
    else:
        w = report.tb_witness
    if w is None:
        return "none"
    if hasattr(w, "subset"):
        return f"failing-subset={format_subset(w.subset)}"
    return "core-empty"


def text_log(report: SearchReport) -> str:
    """Human-readable log; includes wall-clock, so not byte-stable."""
    cfg = report.config
    out = [f"search class={cfg.target_class} n={cfg.n} k={cfg.support_size} "
           f"seeds={cfg.seed_start}..{cfg.seed_end} grid={cfg.grid} jobs={cfg.jobs}"]
    for o in report.outcomes:
        status = "holds" if o.class_holds else "COUNTEREXAMPLE"
        out.append(f"seed {o.seed}: {o.report.summary()} -> {status}")
    cx = len(report.counterexamples)
    if cx:
        out.append(f"{cx} verified counterexample(s); see the machine report for full tables")
    else:
        out.append("no counterexamples among these seeds; the finitely supported search is "
                   "inconclusive and proves nothing about the general question")
    out.append(f"elapsed {report.elapsed_seconds:.2f}s")
    return "\n".join(out) + "\n"


def parse_machine_report(text: str):
    """Parse the machine format back into dictionaries (for re-verification)."""
    lines = text.splitlines()
    if not lines or lines[0] != REPORT_HEADER:
        raise ValueError(f"not a {REPORT_HEADER!r} file")
    records = []
    for line in lines[1:]:
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        fields = {}
        for token in rest.split():
            key, _, value = token.partition("=")
            fields[key] = value
        records.append((kind, fields))
    return records


def reverify_report_text(text: str) -> bool:
    """Re-verify every counterexample in a machine report from scratch."""
    records = parse_machine_report(text)
    config = None
    tables: dict[int, dict] = {}
    flagged: list[int] = []
    for kind, fields in records:
        if kind == "config":
            config = SearchConfig(
                n=int(fields["n"]),
                support_size=int(fields["k"]),
                target_class=fields["class"],
                seed_start=int(fields["seeds"].split("..")[0]),
                seed_end=int(fields["seeds"].split("..")[1]),
                grid=int(fields["grid"]),
            )
        elif kind == "counterexample":
            flagged.append(int(fields["seed"]))
        elif kind in ("cx-support", "cx-game"):
            entry = tables.setdefault(int(fields["seed"]), {"support": {}})
            if kind == "cx-game":
                entry["game"] = fields["table"]
            else:
                entry["support"][int(fields["index"])] = fields["table"]
    if config is None:
        raise ValueError("report has no config record")
    for seed in flagged:
        entry = tables.get(seed)
        if entry is None or "game" not in entry:
            return False
        ground = GroundSet(config.n)
        support = tuple(_parse_table(ground, entry["support"][i])
                        for i in range(config.support_size))
        game = _parse_table(GroundSet(config.support_size), entry["game"])
        c2 = SecondOrderCapacity(ground, support, game)
        if not verify_counterexample(config, seed, emit_second(c2)):
            return False
    return True
