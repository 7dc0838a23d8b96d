"""Finite-model verification of the lexicographic characterization.

The search space is every weak order (ordered set partition) on a grid's
points, not just linear orders: indifference between distinct points must
be allowed a priori or part of the conclusion would be assumed. Candidates
are filtered by the requested axioms and the survivors compared pointwise
against the priority-order comparator.

With strong-monotonicity pruning the search walks only the candidates
whose block structure already respects single-coordinate dominance, by
placing blocks best-first and allowing a point into a block only once
every point that must beat it has been placed. The candidates a rejected
branch would have contained are counted exactly with Fubini-number
arithmetic, so the reported total provably covers the whole space:
emitted plus skipped must equal the n-th Fubini number or the run aborts.

The candidate stream is deterministic (depth-first, blocks by decreasing
bitmask) and the pruned stream is a subsequence of the plain one, so
pruned and unpruned runs, and runs with any worker count, produce
identical reports apart from elapsed time.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

from .core import (
    GridSpec,
    PriorityContext,
    Raf,
    RafprefError,
    first_difference,
    grid_points,
)
from .relations import (
    ComparisonOutcome,
    RankedRelation,
    TableRelation,
    lex_compare,
    at_least_as_good,
)
from .axioms import (
    AxiomId,
    CheckConfig,
    check_iwa,
    check_non_compensation,
    check_strong_dominance,
    check_strong_monotonicity,
    check_weak_dominance,
    check_weak_iwa,
)

__all__ = [
    "EqualInputsError",
    "TooManyPointsError",
    "DEFAULT_MAX_POINTS",
    "SURVIVOR_LISTING_CAP",
    "VERIFY_AXIOMS",
    "fubini",
    "construct_proof_witness",
    "ProofStep",
    "ProofTrace",
    "proof_trace_check",
    "enumerate_weak_orders",
    "lex_ranking",
    "CharacterizationReport",
    "verify_characterization",
]


class EqualInputsError(RafprefError):
    """Witness construction needs two distinct profiles."""


class TooManyPointsError(RafprefError):
    """Point set exceeds the enumeration bound."""


DEFAULT_MAX_POINTS = 9
SURVIVOR_LISTING_CAP = 10

# Canonical filter order: cheap pairwise constraints first, quadruple
# constraints last, so pruning and short-circuiting pay off.
VERIFY_AXIOMS = (
    AxiomId.STRONG_MONOTONICITY,
    AxiomId.WEAK_DOMINANCE,
    AxiomId.STRONG_DOMINANCE,
    AxiomId.NON_COMPENSATION,
    AxiomId.IWA,
    AxiomId.WEAK_IWA,
)

_CHECKER_FOR = {
    AxiomId.STRONG_MONOTONICITY: check_strong_monotonicity,
    AxiomId.WEAK_DOMINANCE: check_weak_dominance,
    AxiomId.STRONG_DOMINANCE: check_strong_dominance,
    AxiomId.NON_COMPENSATION: check_non_compensation,
    AxiomId.IWA: check_iwa,
    AxiomId.WEAK_IWA: check_weak_iwa,
}


@lru_cache(maxsize=None)
def fubini(n: int) -> int:
    """Count of weak orders on n labeled points, by the binomial recurrence."""
    if n < 0:
        raise RafprefError("fubini is defined for nonnegative n")
    if n == 0:
        return 1
    return sum(comb(n, k) * fubini(n - k) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# Proof witness and trace
# ---------------------------------------------------------------------------


def construct_proof_witness(a: Raf, b: Raf) -> Raf:
    """Hybrid profile: b's values through the first differing coordinate k,
    a's values after it.

    The result agrees with a everywhere except exactly at k, which is what
    lets a single-coordinate monotonicity step and an independence step
    pin down the verdict on (a, b).
    """
    k = first_difference(a, b)
    if k is None:
        raise EqualInputsError("profiles are identical")
    return Raf(a.context, b.values[:k] + a.values[k:])


@dataclass(frozen=True)
class ProofStep:
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class ProofTrace:
    """Per-step audit of the characterization argument on one profile pair."""

    first: Raf
    second: Raf
    witness: Raf
    index: int
    steps: tuple[ProofStep, ...]

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)


def proof_trace_check(rel, a: Raf, b: Raf) -> ProofTrace:
    """Replay the characterization argument against a relation's verdicts.

    Builds the hybrid witness c and checks: (i) the single-coordinate
    monotonicity step on (c, a); (ii) the independence step, that the weak
    verdicts on (a, b) and (a, c) agree in both orientations (the sign
    condition holds by construction since c and b agree at k); (iii) that
    the relation's verdict on (a, b) matches the priority-order comparator.
    A relation satisfying strong monotonicity and weak independence of
    worse alternatives on a domain containing c passes every step.
    """
    k = first_difference(a, b)
    if k is None:
        raise EqualInputsError("profiles are identical")
    c = construct_proof_witness(a, b)
    i = k - 1
    steps = []

    expected = (
        ComparisonOutcome.SECOND_PREFERRED
        if a.values[i] > c.values[i]
        else ComparisonOutcome.FIRST_PREFERRED
    )
    got = rel.compare(c, a)
    steps.append(
        ProofStep(
            "monotonicity step",
            got is expected,
            f"compare(c, a) = {expected}",
            f"compare(c, a) = {got}",
        )
    )

    g_ab = at_least_as_good(rel.compare(a, b))
    g_ac = at_least_as_good(rel.compare(a, c))
    g_ba = at_least_as_good(rel.compare(b, a))
    g_ca = at_least_as_good(rel.compare(c, a))
    steps.append(
        ProofStep(
            "independence step",
            g_ab == g_ac and g_ba == g_ca,
            "weak verdicts on (a, b) and (a, c) agree in both orientations",
            f"a>=b:{g_ab} a>=c:{g_ac} b>=a:{g_ba} c>=a:{g_ca}",
        )
    )

    lex = lex_compare(a, b)
    got = rel.compare(a, b)
    steps.append(
        ProofStep(
            "conclusion",
            got is lex,
            f"compare(a, b) = {lex}",
            f"compare(a, b) = {got}",
        )
    )
    return ProofTrace(a, b, c, k, tuple(steps))


# ---------------------------------------------------------------------------
# Weak order enumeration
# ---------------------------------------------------------------------------


def _bit_lists(n: int) -> list[list[int]]:
    """bits[mask] = indices of the set bits, lowest first."""
    bits: list[list[int]] = [[] for _ in range(1 << n)]
    for mask in range(1, 1 << n):
        low = mask & -mask
        bits[mask] = bits[mask ^ low] + [low.bit_length() - 1]
    return bits


def _rank_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """Rank tuple of every ordered set partition of range(n), exactly once.

    Canonical order: depth-first over blocks (best block first), candidate
    blocks visited by decreasing bitmask value. The pruned search emits a
    subsequence of this stream.
    """
    bits = _bit_lists(n)
    ranks = [0] * n

    def rec(remaining: int, depth: int) -> Iterator[tuple[int, ...]]:
        sub = remaining
        while sub:
            for b in bits[sub]:
                ranks[b] = depth
            rest = remaining ^ sub
            if rest:
                yield from rec(rest, depth + 1)
            else:
                yield tuple(ranks)
            sub = (sub - 1) & remaining

    if n:
        yield from rec((1 << n) - 1, 0)


def enumerate_weak_orders(
    points: Sequence[Raf], max_points: int = DEFAULT_MAX_POINTS
) -> Iterator[RankedRelation]:
    """Yield every total preorder on the points exactly once.

    The stream is deterministic and its length is the n-th Fubini number.
    """
    pts = tuple(points)
    n = len(pts)
    if n < 1:
        raise RafprefError("need at least one point")
    if n > max_points:
        raise TooManyPointsError(
            f"{n} points exceeds the enumeration bound of {max_points}"
        )
    if len(set(pts)) != n:
        raise RafprefError("points must be pairwise distinct")
    for rv in _rank_vectors(n):
        yield RankedRelation(pts, rv)


def lex_ranking(points: Sequence[Raf]) -> RankedRelation:
    """Rank table of the priority-order comparator restricted to the points."""
    pts = tuple(points)
    order = sorted(range(len(pts)), key=lambda i: pts[i].values, reverse=True)
    ranks = [0] * len(pts)
    for r, i in enumerate(order):
        ranks[i] = r
    return RankedRelation(pts, tuple(ranks))


# ---------------------------------------------------------------------------
# Constraint compilation (fast candidate filters over rank vectors)
# ---------------------------------------------------------------------------
#
# Each axiom compiles to plain data:
#   ("forced", [(i, j), ...])   every pair needs rank[i] < rank[j]
#   ("groups", [[(i, j), ...], ...])  rank[i] <= rank[j] constant per group
#
# The forced form captures the dominance axioms. The group form captures
# the biconditional axioms: the hypothesis of each depends only on the
# points, so pairs sharing a hypothesis signature must share their weak
# verdict. Equivalence with the literal checkers is asserted by the test
# suite and re-audited on every listed survivor.


def _pair_stats(values: list[tuple], arity: int):
    n = len(values)
    stats = {}
    for i in range(n):
        for j in range(n):
            up = down = 0
            fd = -1
            vi, vj = values[i], values[j]
            for c in range(arity):
                x, y = vi[c], vj[c]
                if x > y:
                    up |= 1 << c
                elif x < y:
                    down |= 1 << c
                if x != y and fd < 0:
                    fd = c
            stats[i, j] = (up, down, fd)
    return stats


def _compile_constraint(axiom: AxiomId, values: list[tuple], arity: int):
    n = len(values)
    stats = _pair_stats(values, arity)
    if axiom in (
        AxiomId.STRONG_MONOTONICITY,
        AxiomId.WEAK_DOMINANCE,
        AxiomId.STRONG_DOMINANCE,
    ):
        forced = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                up, down, _ = stats[i, j]
                if axiom is AxiomId.STRONG_MONOTONICITY:
                    hit = down == 0 and up and up & (up - 1) == 0
                elif axiom is AxiomId.WEAK_DOMINANCE:
                    hit = down == 0 and up == (1 << arity) - 1
                else:
                    hit = down == 0 and up != 0
                if hit:
                    forced.append((i, j))
        return ("forced", forced)

    groups: dict = {}
    for i in range(n):
        for j in range(n):
            up, down, fd = stats[i, j]
            if axiom is AxiomId.NON_COMPENSATION:
                groups.setdefault((up, down), []).append((i, j))
            elif axiom is AxiomId.WEAK_IWA:
                if fd >= 0:
                    rising = (up >> fd) & 1
                    groups.setdefault((fd, rising), []).append((i, j))
            elif axiom is AxiomId.IWA:
                diff = up | down
                for k in range(arity):
                    if (diff >> k) & 1:
                        mask = (2 << k) - 1
                        groups.setdefault(
                            (k, up & mask, down & mask), []
                        ).append((i, j))
            else:
                raise RafprefError(f"axiom {axiom} is not verifiable here")
    # singleton groups constrain nothing; drop them to keep the hot loop lean
    return ("groups", [g for g in groups.values() if len(g) > 1])


def _passes(rv, kind: str, data) -> bool:
    if kind == "forced":
        for i, j in data:
            if rv[i] >= rv[j]:
                return False
        return True
    for grp in data:
        i0, j0 = grp[0]
        b0 = rv[i0] <= rv[j0]
        for i, j in grp[1:]:
            if (rv[i] <= rv[j]) != b0:
                return False
    return True


# ---------------------------------------------------------------------------
# Filtered search
# ---------------------------------------------------------------------------


def _sm_dominator_masks(values: list[tuple], arity: int) -> list[int]:
    """dom[j] = mask of points that strong monotonicity forces above j."""
    n = len(values)
    dom = [0] * n
    _, forced = _compile_constraint(AxiomId.STRONG_MONOTONICITY, values, arity)
    for i, j in forced:
        dom[j] |= 1 << i
    return dom


class _Tally:
    """Mutable accumulation of one search slice."""

    __slots__ = ("checked", "skipped", "pass_counts", "survivor_count", "survivors")

    def __init__(self, n_constraints: int) -> None:
        self.checked = 0
        self.skipped = 0
        self.pass_counts = [0] * n_constraints
        self.survivor_count = 0
        self.survivors: list[tuple[int, ...]] = []

    def absorb(self, other: "_Tally") -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        for i, c in enumerate(other.pass_counts):
            self.pass_counts[i] += c
        for rv in other.survivors:
            if len(self.survivors) < SURVIVOR_LISTING_CAP:
                self.survivors.append(rv)
        self.survivor_count += other.survivor_count


def _leaf(rv: tuple[int, ...], constraints, tally: _Tally) -> None:
    tally.checked += 1
    for idx, (kind, data) in enumerate(constraints):
        if not _passes(rv, kind, data):
            return
        tally.pass_counts[idx] += 1
    tally.survivor_count += 1
    if len(tally.survivors) < SURVIVOR_LISTING_CAP:
        tally.survivors.append(rv)


def _scan(
    remaining: int,
    depth: int,
    ranks: list[int],
    dom: Optional[list[int]],
    bits: list[list[int]],
    fub: list[int],
    constraints,
    tally: _Tally,
) -> None:
    """Depth-first completion of a partial ordered partition.

    With dom set, the next block may only contain points whose forced
    dominators are all placed; everything else is skipped and the skipped
    completions are counted exactly from the Fubini table.
    """
    if dom is None:
        eligible = remaining
    else:
        eligible = 0
        m = remaining
        while m:
            low = m & -m
            if not dom[low.bit_length() - 1] & remaining:
                eligible |= low
            m ^= low
        r = len(bits[remaining])
        e = len(bits[eligible])
        if e < r:
            # nonempty subsets of remaining that are not subsets of eligible;
            # each such first-block choice S skips fubini(r - |S|) completions
            skipped = 0
            for s in range(1, r + 1):
                count = comb(r, s) - (comb(e, s) if s <= e else 0)
                if count:
                    skipped += count * fub[r - s]
            tally.skipped += skipped
    sub = eligible
    while sub:
        for b in bits[sub]:
            ranks[b] = depth
        rest = remaining ^ sub
        if rest:
            _scan(rest, depth + 1, ranks, dom, bits, fub, constraints, tally)
        else:
            _leaf(tuple(ranks), constraints, tally)
        sub = (sub - 1) & eligible


def _run_task(args) -> tuple[int, int, list[int], int, list[tuple[int, ...]]]:
    """Worker entry: complete the search below one frozen block prefix."""
    n, prefix, remaining, depth, use_dom, dom, constraints = args
    bits = _bit_lists(n)
    fub = [fubini(i) for i in range(n + 1)]
    ranks = [0] * n
    for mask, d in prefix:
        for b in bits[mask]:
            ranks[b] = d
    tally = _Tally(len(constraints))
    if remaining == 0:
        # the prefix is already a complete partition
        _leaf(tuple(ranks), constraints, tally)
    else:
        _scan(remaining, depth, ranks, dom if use_dom else None, bits, fub, constraints, tally)
    return (tally.checked, tally.skipped, tally.pass_counts, tally.survivor_count, tally.survivors)


@dataclass(frozen=True)
class CharacterizationReport:
    """Outcome of one verification run.

    enumerated always equals checked + pruned_away and is verified against
    the Fubini recurrence; pass_counts are sequential (each axiom sees only
    the candidates that survived the previous filters, with pruning playing
    the role of the strong-monotonicity filter when active).
    """

    grid: GridSpec
    points: tuple[Raf, ...]
    axiom_order: tuple[AxiomId, ...]
    pruned: bool
    workers: int
    enumerated: int
    checked: int
    pruned_away: int
    oracle_verified: bool
    pass_counts: tuple[tuple[AxiomId, int], ...]
    survivor_count: int
    survivors: tuple[RankedRelation, ...]
    survivors_truncated: bool
    survivor_lex_agreement: tuple[bool, ...]
    matches_lex: bool
    elapsed_ms: float


def _agrees_with_lex(ranking: RankedRelation) -> bool:
    """Pointwise agreement with the priority-order comparator on all pairs."""
    pts = ranking.domain
    ranks = ranking.ranks
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            if ranks[i] < ranks[j]:
                got = ComparisonOutcome.FIRST_PREFERRED
            elif ranks[i] > ranks[j]:
                got = ComparisonOutcome.SECOND_PREFERRED
            else:
                got = ComparisonOutcome.INDIFFERENT
            if got is not lex_compare(a, b):
                return False
    return True


def _audit_survivor(
    ranking: RankedRelation, axiom_set: Iterable[AxiomId]
) -> None:
    """Re-check a survivor through the literal checkers; disagreement with
    the compiled filters is an internal error, never a report."""
    rel = TableRelation(ranking)
    sample = list(ranking.domain)
    config = CheckConfig(exhaustive_cap=len(sample))
    for axiom in axiom_set:
        report = _CHECKER_FOR[axiom](rel, sample, config)
        if not report.passed:
            raise RafprefError(
                f"internal error: compiled filter and checker disagree on {axiom}"
            )


def verify_characterization(
    grid: GridSpec,
    axiom_set: Iterable[AxiomId],
    prune: bool = True,
    ctx: Optional[PriorityContext] = None,
    max_points: int = DEFAULT_MAX_POINTS,
    workers: int = 1,
) -> CharacterizationReport:
    """Enumerate all weak orders on the grid, filter by the axioms, and
    compare the survivors against the priority-order comparator.

    Pruning applies only when strong monotonicity is in the axiom set; it
    is then exactly equivalent to the strong-monotonicity filter and the
    skipped candidates are counted, not lost. Worker counts beyond 1 split
    the search by canonical prefix and merge in stream order, so reports
    are identical for any worker count.
    """
    started = time.perf_counter()
    requested = list(dict.fromkeys(axiom_set))
    if not requested:
        raise RafprefError("axiom_set must not be empty")
    bad = [a for a in requested if a not in VERIFY_AXIOMS]
    if bad:
        raise RafprefError(
            f"axiom {bad[0]} cannot drive the verification; "
            f"choose from {[str(a) for a in VERIFY_AXIOMS]}"
        )
    points = grid_points(grid, ctx)
    n = len(points)
    if n > max_points:
        raise TooManyPointsError(
            f"grid has {n} points, above the enumeration bound of {max_points}"
        )
    order = tuple(a for a in VERIFY_AXIOMS if a in requested)
    values = [p.values for p in points]
    arity = grid.arity

    use_dom = prune and AxiomId.STRONG_MONOTONICITY in order
    dom = _sm_dominator_masks(values, arity) if use_dom else None
    # with pruning active the strong-monotonicity filter is the prune itself
    filter_axioms = tuple(
        a for a in order if not (use_dom and a is AxiomId.STRONG_MONOTONICITY)
    )
    constraints = [_compile_constraint(a, values, arity) for a in filter_axioms]

    tally = _Tally(len(constraints))
    tasks = _plan_tasks(n, dom, constraints, tally, workers)
    if workers <= 1 or len(tasks) <= 1:
        for args in tasks:
            sub = _Tally(len(constraints))
            (sub.checked, sub.skipped, sub.pass_counts, sub.survivor_count, sub.survivors) = _run_task(args)
            tally.absorb(sub)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_run_task, tasks):
                sub = _Tally(len(constraints))
                (sub.checked, sub.skipped, sub.pass_counts, sub.survivor_count, sub.survivors) = result
                tally.absorb(sub)

    enumerated = tally.checked + tally.skipped
    if enumerated != fubini(n):
        raise RafprefError(
            f"internal error: enumeration covered {enumerated} candidates "
            f"but the Fubini recurrence demands {fubini(n)}"
        )

    pass_counts: list[tuple[AxiomId, int]] = []
    counts_iter = iter(tally.pass_counts)
    for a in order:
        if use_dom and a is AxiomId.STRONG_MONOTONICITY:
            pass_counts.append((a, tally.checked))
        else:
            pass_counts.append((a, next(counts_iter)))

    pts = tuple(points)
    survivors = tuple(RankedRelation(pts, rv) for rv in tally.survivors)
    for ranking in survivors:
        _audit_survivor(ranking, order)
    agreement = tuple(_agrees_with_lex(s) for s in survivors)
    matches_lex = tally.survivor_count == 1 and bool(agreement and agreement[0])
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return CharacterizationReport(
        grid=grid,
        points=pts,
        axiom_order=order,
        pruned=use_dom,
        workers=max(1, workers),
        enumerated=enumerated,
        checked=tally.checked,
        pruned_away=tally.skipped,
        oracle_verified=True,
        pass_counts=tuple(pass_counts),
        survivor_count=tally.survivor_count,
        survivors=survivors,
        survivors_truncated=tally.survivor_count > len(survivors),
        survivor_lex_agreement=agreement,
        matches_lex=matches_lex,
        elapsed_ms=elapsed_ms,
    )


def _plan_tasks(
    n: int,
    dom: Optional[list[int]],
    constraints,
    tally: _Tally,
    workers: int,
) -> list[tuple]:
    """Split the search into canonical-prefix tasks.

    Expands the search tree breadth-first (keeping canonical block order)
    until there are enough subtrees to feed the workers. Skip counts at
    expanded interior nodes accrue to the main tally; every frontier entry,
    including prefixes that already form complete partitions, becomes a
    task, so merging task results in frontier order reproduces the
    canonical stream exactly.
    """
    bits = _bit_lists(n)
    fub = [fubini(i) for i in range(n + 1)]
    full = (1 << n) - 1
    use_dom = dom is not None

    # frontier entries: (prefix blocks, remaining mask, next depth)
    frontier: list[tuple[tuple[tuple[int, int], ...], int, int]] = [((), full, 0)]
    target = 1 if workers <= 1 else workers * 8
    while len(frontier) < target:
        expanded: list[tuple[tuple[tuple[int, int], ...], int, int]] = []
        grew = False
        for prefix, remaining, depth in frontier:
            if remaining == 0:
                expanded.append((prefix, remaining, depth))
                continue
            if use_dom:
                eligible = 0
                m = remaining
                while m:
                    low = m & -m
                    if not dom[low.bit_length() - 1] & remaining:
                        eligible |= low
                    m ^= low
                r = len(bits[remaining])
                e = len(bits[eligible])
                if e < r:
                    skipped = 0
                    for s in range(1, r + 1):
                        count = comb(r, s) - (comb(e, s) if s <= e else 0)
                        if count:
                            skipped += count * fub[r - s]
                    tally.skipped += skipped
            else:
                eligible = remaining
            grew = True
            sub = eligible
            while sub:
                expanded.append((prefix + ((sub, depth),), remaining ^ sub, depth + 1))
                sub = (sub - 1) & eligible
        frontier = expanded
        if not grew:
            break

    # every frontier entry becomes a task, completed prefixes included, so
    # merging task results in frontier order reproduces the canonical stream
    return [
        (n, prefix, remaining, depth, use_dom, dom, constraints)
        for prefix, remaining, depth in frontier
    ]
