"""Executable audits of the order, dominance, and independence axioms.

Every checker takes an arbitrary comparator and a finite sample of
profiles sharing one context, scans the relevant tuple space in a fixed
canonical order (row-major over sample indices), and reports either a
clean pass or concrete counterexample witnesses that replay
deterministically.

Point, pair, and triple scans are always exhaustive. Quadruple scans are
exhaustive up to a configurable sample-size cap and switch to seeded
uniform draws beyond it, so large samples still get a reproducible smoke
audit. Scans always run to completion so the reported tuple counts are
exact; the witness policy only controls how many violations are recorded.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .core import (
    ContextMismatchError,
    Raf,
    RafprefError,
    first_difference,
    pointwise_geq,
    require_same_context,
    strictly_dominates,
)
from .relations import ComparisonOutcome, PreferenceRelation, at_least_as_good

__all__ = [
    "AxiomId",
    "ORDER_AXIOMS",
    "PAIR_AXIOMS",
    "QUAD_AXIOMS",
    "ALL_AXIOMS",
    "CheckConfig",
    "DEFAULT_CONFIG",
    "AxiomViolation",
    "AxiomResult",
    "AxiomReport",
    "check_order_axioms",
    "check_weak_dominance",
    "check_strong_monotonicity",
    "check_strong_dominance",
    "check_non_compensation",
    "check_axiom2_ms",
    "check_iwa",
    "check_weak_iwa",
    "run_checks",
    "replay_violation",
    "single_coordinate_increase",
    "qualifies_strong_dominance",
    "qualifies_non_compensation",
    "qualifies_axiom2",
    "qualifies_iwa_at",
    "iwa_indices",
    "qualifies_weak_iwa",
]


class AxiomId(str, enum.Enum):
    """Stable axiom names used in reports, the CLI, and JSON output."""

    REFLEXIVE = "Reflexive"
    MIRROR_CONSISTENT = "MirrorConsistent"
    CONNECTED = "Connected"
    TRANSITIVE = "Transitive"
    WEAK_DOMINANCE = "WeakDominance"
    STRONG_MONOTONICITY = "StrongMonotonicity"
    STRONG_DOMINANCE = "StrongDominance"
    NON_COMPENSATION = "NonCompensation"
    AXIOM2_MS = "Axiom2MS"
    IWA = "IWA"
    WEAK_IWA = "WeakIWA"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "AxiomId":
        key = name.strip().lower()
        try:
            return _AXIOM_ALIASES[key]
        except KeyError:
            raise RafprefError(f"unknown axiom {name!r}") from None


_AXIOM_ALIASES: dict[str, AxiomId] = {m.value.lower(): m for m in AxiomId}
_AXIOM_ALIASES["sm"] = AxiomId.STRONG_MONOTONICITY

ORDER_AXIOMS = (
    AxiomId.REFLEXIVE,
    AxiomId.MIRROR_CONSISTENT,
    AxiomId.CONNECTED,
    AxiomId.TRANSITIVE,
)
PAIR_AXIOMS = (
    AxiomId.WEAK_DOMINANCE,
    AxiomId.STRONG_MONOTONICITY,
    AxiomId.STRONG_DOMINANCE,
)
QUAD_AXIOMS = (
    AxiomId.NON_COMPENSATION,
    AxiomId.AXIOM2_MS,
    AxiomId.IWA,
    AxiomId.WEAK_IWA,
)
ALL_AXIOMS = ORDER_AXIOMS + PAIR_AXIOMS + QUAD_AXIOMS


@dataclass(frozen=True)
class CheckConfig:
    """Checker tuning; the defaults keep desk-scale runs fully exhaustive.

    Quadruple scans cost n^4: samples larger than exhaustive_cap points
    fall back to `samples` seeded uniform quadruple draws.
    """

    all_violations: bool = False
    exhaustive_cap: int = 12
    samples: int = 1000
    seed: int = 0


DEFAULT_CONFIG = CheckConfig()


@dataclass(frozen=True)
class AxiomViolation:
    """One concrete counterexample: the witness tuple and what was observed."""

    axiom: AxiomId
    witness: tuple[Raf, ...]
    observed: tuple[ComparisonOutcome, ...]
    index: Optional[int] = None  # 1-based coordinate k (or y) where applicable
    detail: str = ""


@dataclass(frozen=True)
class AxiomResult:
    """Outcome of one axiom scan."""

    axiom: AxiomId
    passed: bool
    tuples_examined: int
    qualifying: int
    violation_count: int
    violations: tuple[AxiomViolation, ...]
    mode: str  # "exhaustive" or "sampled"

    @property
    def vacuous(self) -> bool:
        """Passed without a single tuple meeting the axiom's hypothesis."""
        return self.passed and self.qualifying == 0


@dataclass(frozen=True)
class AxiomReport:
    """Results of one or more axiom scans over a single sample."""

    results: tuple[AxiomResult, ...]
    sample_size: int

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result_for(self, axiom: AxiomId) -> AxiomResult:
        for r in self.results:
            if r.axiom is axiom:
                return r
        raise RafprefError(f"no result for axiom {axiom}")


# ---------------------------------------------------------------------------
# Hypothesis predicates. These are the single source of truth for what
# qualifies a tuple; the scan loops precompute equivalent mask data for
# speed and replay_violation goes back through these.
# ---------------------------------------------------------------------------


def single_coordinate_increase(a: Raf, b: Raf) -> Optional[int]:
    """1-based coordinate where a exceeds b, if that is their only difference."""
    require_same_context(a, b)
    found: Optional[int] = None
    for i, (x, y) in enumerate(zip(a.values, b.values)):
        if x != y:
            if found is not None or x < y:
                return None
            found = i + 1
    return found


def qualifies_strong_dominance(a: Raf, b: Raf) -> bool:
    """a != b and a is coordinatewise at least b."""
    return a.values != b.values and pointwise_geq(a, b)


def _updown(a: Raf, b: Raf) -> tuple[int, int]:
    """Bit i of up/down set when a is strictly above/below b at coordinate i+1."""
    up = down = 0
    for i, (x, y) in enumerate(zip(a.values, b.values)):
        if x > y:
            up |= 1 << i
        elif x < y:
            down |= 1 << i
    return up, down


def qualifies_non_compensation(a: Raf, b: Raf, c: Raf, d: Raf) -> bool:
    """The two pairs have identical up-sets and identical down-sets."""
    require_same_context(a, b)
    require_same_context(a, c)
    require_same_context(a, d)
    return _updown(a, b) == _updown(c, d)


def qualifies_axiom2(a: Raf, b: Raf, c: Raf, d: Raf) -> Optional[int]:
    """Single-coordinate hypothesis: both pairs differ only at one shared
    coordinate y with matching values there; returns the 1-based y."""
    require_same_context(a, b)
    require_same_context(a, c)
    require_same_context(a, d)
    y = None
    for i, (x, z) in enumerate(zip(a.values, b.values)):
        if x != z:
            if y is not None:
                return None
            y = i
    if y is None:
        return None
    for i, (x, z) in enumerate(zip(c.values, d.values)):
        if x != z and i != y:
            return None
    if c.values[y] != a.values[y] or d.values[y] != b.values[y]:
        return None
    return y + 1


def qualifies_iwa_at(a: Raf, b: Raf, c: Raf, d: Raf, k: int) -> bool:
    """Restricted-signature hypothesis at 1-based k: the first pair differs
    at k and both pairs show the same up/down pattern on coordinates <= k."""
    require_same_context(a, b)
    require_same_context(a, c)
    require_same_context(a, d)
    if a.values[k - 1] == b.values[k - 1]:
        return False
    mask = (1 << k) - 1
    up1, down1 = _updown(a, b)
    up2, down2 = _updown(c, d)
    return (up1 & mask, down1 & mask) == (up2 & mask, down2 & mask)


def iwa_indices(a: Raf, b: Raf, c: Raf, d: Raf) -> tuple[int, ...]:
    """All 1-based k at which the quadruple meets the restricted hypothesis."""
    arity = a.context.arity
    return tuple(k for k in range(1, arity + 1) if qualifies_iwa_at(a, b, c, d, k))


def qualifies_weak_iwa(a: Raf, b: Raf, c: Raf, d: Raf) -> Optional[int]:
    """Shared first-difference hypothesis: both pairs first differ at the
    same 1-based k with the same strict direction there; returns k."""
    ka = first_difference(a, b)
    kc = first_difference(c, d)
    if ka is None or ka != kc:
        return None
    sign_ab = a.values[ka - 1] > b.values[ka - 1]
    sign_cd = c.values[ka - 1] > d.values[ka - 1]
    return ka if sign_ab == sign_cd else None


# ---------------------------------------------------------------------------
# Scan machinery
# ---------------------------------------------------------------------------


class _Audit:
    """Validated sample plus a memo of relation verdicts by index pair."""

    def __init__(self, rel: PreferenceRelation, sample: Sequence[Raf]) -> None:
        if not sample:
            raise RafprefError("sample must be nonempty")
        ctx = sample[0].context
        for raf in sample:
            if raf.context != ctx:
                raise ContextMismatchError("sample mixes profiles from different contexts")
        self.rel = rel
        self.sample = list(sample)
        self.n = len(sample)
        self._memo: dict[tuple[int, int], ComparisonOutcome] = {}

    def outcome(self, i: int, j: int) -> ComparisonOutcome:
        key = (i, j)
        out = self._memo.get(key)
        if out is None:
            out = self.rel.compare(self.sample[i], self.sample[j])
            if not isinstance(out, ComparisonOutcome):
                raise RafprefError(
                    f"relation {self.rel.name!r} returned {out!r}, not a ComparisonOutcome"
                )
            self._memo[key] = out
        return out

    def geq(self, i: int, j: int) -> bool:
        return at_least_as_good(self.outcome(i, j))


def _result(
    axiom: AxiomId,
    examined: int,
    qualifying: int,
    violations: list[AxiomViolation],
    config: CheckConfig,
    mode: str = "exhaustive",
) -> AxiomResult:
    recorded = tuple(violations if config.all_violations else violations[:1])
    return AxiomResult(
        axiom=axiom,
        passed=not violations,
        tuples_examined=examined,
        qualifying=qualifying,
        violation_count=len(violations),
        violations=recorded,
        mode=mode,
    )


def _order_results(audit: _Audit, config: CheckConfig) -> list[AxiomResult]:
    n = audit.n
    sample = audit.sample
    INDIFF = ComparisonOutcome.INDIFFERENT

    reflexive: list[AxiomViolation] = []
    for i in range(n):
        out = audit.outcome(i, i)
        if out is not INDIFF:
            reflexive.append(
                AxiomViolation(
                    AxiomId.REFLEXIVE,
                    (sample[i],),
                    (out,),
                    detail="comparing a profile with itself must be Indifferent",
                )
            )

    mirror: list[AxiomViolation] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            fwd = audit.outcome(i, j)
            back = audit.outcome(j, i)
            if back is not fwd.mirrored():
                mirror.append(
                    AxiomViolation(
                        AxiomId.MIRROR_CONSISTENT,
                        (sample[i], sample[j]),
                        (fwd, back),
                        detail="swapped arguments must mirror the verdict",
                    )
                )

    # Connectedness is structural: the outcome type has no "incomparable"
    # value, so this scan certifies that every ordered pair produced a
    # defined verdict (a comparator that cannot is rejected at memo time).
    for i in range(n):
        for j in range(n):
            if i != j:
                audit.outcome(i, j)
    connected: list[AxiomViolation] = []

    transitive: list[AxiomViolation] = []
    qualifying_triples = 0
    for i in range(n):
        for j in range(n):
            g_ij = audit.geq(i, j)
            for k in range(n):
                if g_ij and audit.geq(j, k):
                    qualifying_triples += 1
                    if not audit.geq(i, k):
                        transitive.append(
                            AxiomViolation(
                                AxiomId.TRANSITIVE,
                                (sample[i], sample[j], sample[k]),
                                (
                                    audit.outcome(i, j),
                                    audit.outcome(j, k),
                                    audit.outcome(i, k),
                                ),
                                detail="weak preference must chain through the middle profile",
                            )
                        )

    pairs = n * (n - 1)
    return [
        _result(AxiomId.REFLEXIVE, n, n, reflexive, config),
        _result(AxiomId.MIRROR_CONSISTENT, pairs, pairs, mirror, config),
        _result(AxiomId.CONNECTED, pairs, pairs, connected, config),
        _result(AxiomId.TRANSITIVE, n ** 3, qualifying_triples, transitive, config),
    ]


def _pair_result(
    axiom: AxiomId,
    audit: _Audit,
    config: CheckConfig,
    hypothesis: Callable[[Raf, Raf], object],
    requirement: str,
) -> AxiomResult:
    n = audit.n
    sample = audit.sample
    FIRST = ComparisonOutcome.FIRST_PREFERRED
    qualifying = 0
    violations: list[AxiomViolation] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            q = hypothesis(sample[i], sample[j])
            if not q:
                continue
            qualifying += 1
            out = audit.outcome(i, j)
            if out is not FIRST:
                violations.append(
                    AxiomViolation(
                        axiom,
                        (sample[i], sample[j]),
                        (out,),
                        index=q if isinstance(q, int) else None,
                        detail=f"{requirement}; observed {out}",
                    )
                )
    return _result(axiom, n * (n - 1), qualifying, violations, config)


class _PairMeta:
    """Per-ordered-pair mask data shared by the quadruple scans."""

    __slots__ = ("up", "down", "diff", "fd", "rising", "single", "ksig")

    def __init__(self, p: tuple, q: tuple, arity: int) -> None:
        up = down = 0
        fd = -1
        for i in range(arity):
            x, y = p[i], q[i]
            if x > y:
                up |= 1 << i
            elif x < y:
                down |= 1 << i
            if x != y and fd < 0:
                fd = i
        self.up = up
        self.down = down
        self.diff = up | down
        self.fd = fd  # 0-based first difference, -1 when equal
        self.rising = fd >= 0 and (up >> fd) & 1 == 1
        # single differing coordinate: (y, value of p there, value of q there)
        self.single = None
        if self.diff and self.diff & (self.diff - 1) == 0:
            y = self.diff.bit_length() - 1
            self.single = (y, p[y], q[y])
        # restricted (up, down) signature per 1-based k, for coordinates <= k
        self.ksig = tuple(
            (up & ((2 << k) - 1), down & ((2 << k) - 1)) for k in range(arity)
        )


def _quad_space(
    n: int, config: CheckConfig
) -> tuple[Iterator[tuple[int, int, int, int]], int, str]:
    """Quadruple index stream: exhaustive row-major or seeded uniform draws."""
    if n <= config.exhaustive_cap:
        def exhaustive() -> Iterator[tuple[int, int, int, int]]:
            r = range(n)
            for i in r:
                for j in r:
                    for k in r:
                        for l in r:
                            yield (i, j, k, l)

        return exhaustive(), n ** 4, "exhaustive"

    rng = random.Random(config.seed)

    def sampled() -> Iterator[tuple[int, int, int, int]]:
        for _ in range(config.samples):
            yield (
                rng.randrange(n),
                rng.randrange(n),
                rng.randrange(n),
                rng.randrange(n),
            )

    return sampled(), config.samples, "sampled"


def _quad_result(
    axiom: AxiomId,
    audit: _Audit,
    config: CheckConfig,
    qualifier: Callable[[_PairMeta, _PairMeta], Optional[int]],
) -> AxiomResult:
    """Shared quadruple scan: qualifier returns a 1-based index, 0 for
    index-free qualification, or None when the hypothesis fails."""
    n = audit.n
    sample = audit.sample
    arity = sample[0].context.arity
    values = [raf.values for raf in sample]
    meta = [
        [_PairMeta(values[i], values[j], arity) for j in range(n)] for i in range(n)
    ]
    stream, examined, mode = _quad_space(n, config)
    qualifying = 0
    violations: list[AxiomViolation] = []
    for i, j, k, l in stream:
        q = qualifier(meta[i][j], meta[k][l])
        if q is None:
            continue
        qualifying += 1
        if audit.geq(i, j) != audit.geq(k, l):
            violations.append(
                AxiomViolation(
                    axiom,
                    (sample[i], sample[j], sample[k], sample[l]),
                    (audit.outcome(i, j), audit.outcome(k, l)),
                    index=q or None,
                    detail="matching hypothesis but opposite weak verdicts",
                )
            )
    return _result(axiom, examined, qualifying, violations, config, mode)


def _qualify_non_compensation(m1: _PairMeta, m2: _PairMeta) -> Optional[int]:
    return 0 if m1.up == m2.up and m1.down == m2.down else None


def _qualify_axiom2(m1: _PairMeta, m2: _PairMeta) -> Optional[int]:
    if m1.single is None or m1.single != m2.single:
        return None
    return m1.single[0] + 1


def _qualify_iwa(m1: _PairMeta, m2: _PairMeta) -> Optional[int]:
    diff1 = m1.diff
    if not diff1:
        return None
    sig1 = m1.ksig
    sig2 = m2.ksig
    for k in range(len(sig1)):
        if (diff1 >> k) & 1 and sig1[k] == sig2[k]:
            return k + 1
    return None


def _qualify_weak_iwa(m1: _PairMeta, m2: _PairMeta) -> Optional[int]:
    fd = m1.fd
    if fd < 0 or fd != m2.fd or m1.rising != m2.rising:
        return None
    return fd + 1


# ---------------------------------------------------------------------------
# Public checkers
# ---------------------------------------------------------------------------


def check_order_axioms(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Reflexivity, mirror consistency, connectedness, and transitivity.

    Transitivity scans all n^3 ordered triples of the weak verdict; the
    others scan points and ordered pairs.
    """
    audit = _Audit(rel, sample)
    return AxiomReport(tuple(_order_results(audit, config)), audit.n)


def check_weak_dominance(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Strict coordinatewise dominance must be strictly preferred."""
    audit = _Audit(rel, sample)
    result = _pair_result(
        AxiomId.WEAK_DOMINANCE,
        audit,
        config,
        strictly_dominates,
        "strict dominance requires FirstPreferred",
    )
    return AxiomReport((result,), audit.n)


def check_strong_monotonicity(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Raising availability at one coordinate, all else equal, must win."""
    audit = _Audit(rel, sample)
    result = _pair_result(
        AxiomId.STRONG_MONOTONICITY,
        audit,
        config,
        single_coordinate_increase,
        "a single-coordinate increase requires FirstPreferred",
    )
    return AxiomReport((result,), audit.n)


def check_strong_dominance(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Coordinatewise at-least with any strict gap must be strictly preferred."""
    audit = _Audit(rel, sample)
    result = _pair_result(
        AxiomId.STRONG_DOMINANCE,
        audit,
        config,
        qualifies_strong_dominance,
        "coordinatewise dominance requires FirstPreferred",
    )
    return AxiomReport((result,), audit.n)


def check_non_compensation(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Only the sign pattern of coordinatewise differences may matter.

    Quadruples whose two pairs share the same up-set and down-set must
    receive the same weak verdict.
    """
    audit = _Audit(rel, sample)
    result = _quad_result(
        AxiomId.NON_COMPENSATION, audit, config, _qualify_non_compensation
    )
    return AxiomReport((result,), audit.n)


def check_axiom2_ms(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Single-coordinate substitution consistency.

    Quadruples where both pairs differ only at one shared coordinate with
    identical values there must receive the same weak verdict.
    """
    audit = _Audit(rel, sample)
    result = _quad_result(AxiomId.AXIOM2_MS, audit, config, _qualify_axiom2)
    return AxiomReport((result,), audit.n)


def check_iwa(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Independence of worse alternatives.

    If the first pair differs at coordinate k and both pairs show the same
    up/down pattern on coordinates up to k, everything below k is noise:
    the weak verdicts must agree.
    """
    audit = _Audit(rel, sample)
    result = _quad_result(AxiomId.IWA, audit, config, _qualify_iwa)
    return AxiomReport((result,), audit.n)


def check_weak_iwa(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Weak independence of worse alternatives.

    Restricted to quadruples whose pairs first differ at the same k with
    the same strict direction there; the weak verdicts must agree.
    """
    audit = _Audit(rel, sample)
    result = _quad_result(AxiomId.WEAK_IWA, audit, config, _qualify_weak_iwa)
    return AxiomReport((result,), audit.n)


_CHECKERS: dict[AxiomId, Callable[..., AxiomReport]] = {
    AxiomId.WEAK_DOMINANCE: check_weak_dominance,
    AxiomId.STRONG_MONOTONICITY: check_strong_monotonicity,
    AxiomId.STRONG_DOMINANCE: check_strong_dominance,
    AxiomId.NON_COMPENSATION: check_non_compensation,
    AxiomId.AXIOM2_MS: check_axiom2_ms,
    AxiomId.IWA: check_iwa,
    AxiomId.WEAK_IWA: check_weak_iwa,
}


def run_checks(
    rel: PreferenceRelation,
    sample: Sequence[Raf],
    axioms: Iterable[AxiomId] = ALL_AXIOMS,
    config: CheckConfig = DEFAULT_CONFIG,
) -> AxiomReport:
    """Run the requested axioms in canonical order, merged into one report."""
    requested = set(axioms)
    unknown = requested - set(ALL_AXIOMS)
    if unknown:
        raise RafprefError(f"unknown axioms: {sorted(str(a) for a in unknown)}")
    audit = _Audit(rel, sample)
    results: list[AxiomResult] = []
    if requested & set(ORDER_AXIOMS):
        results.extend(
            r for r in _order_results(audit, config) if r.axiom in requested
        )
    for axiom in PAIR_AXIOMS + QUAD_AXIOMS:
        if axiom in requested:
            report = _CHECKERS[axiom](rel, sample, config)
            results.extend(report.results)
    return AxiomReport(tuple(results), audit.n)


def replay_violation(rel: PreferenceRelation, violation: AxiomViolation) -> bool:
    """Re-evaluate a witness from scratch; True if it still violates.

    Goes through the raf-level hypothesis predicates rather than the scan
    loops, so it also cross-checks the mask-based fast paths.
    """
    w = violation.witness
    axiom = violation.axiom
    compare = rel.compare
    geq = rel.at_least_as_good
    if axiom is AxiomId.REFLEXIVE:
        return compare(w[0], w[0]) is not ComparisonOutcome.INDIFFERENT
    if axiom is AxiomId.MIRROR_CONSISTENT:
        return compare(w[1], w[0]) is not compare(w[0], w[1]).mirrored()
    if axiom is AxiomId.CONNECTED:
        return False
    if axiom is AxiomId.TRANSITIVE:
        a, b, c = w
        return geq(a, b) and geq(b, c) and not geq(a, c)
    if axiom is AxiomId.WEAK_DOMINANCE:
        a, b = w
        return strictly_dominates(a, b) and compare(a, b) is not ComparisonOutcome.FIRST_PREFERRED
    if axiom is AxiomId.STRONG_MONOTONICITY:
        a, b = w
        return (
            single_coordinate_increase(a, b) is not None
            and compare(a, b) is not ComparisonOutcome.FIRST_PREFERRED
        )
    if axiom is AxiomId.STRONG_DOMINANCE:
        a, b = w
        return (
            qualifies_strong_dominance(a, b)
            and compare(a, b) is not ComparisonOutcome.FIRST_PREFERRED
        )
    a, b, c, d = w
    mismatch = geq(a, b) != geq(c, d)
    if axiom is AxiomId.NON_COMPENSATION:
        return qualifies_non_compensation(a, b, c, d) and mismatch
    if axiom is AxiomId.AXIOM2_MS:
        return qualifies_axiom2(a, b, c, d) is not None and mismatch
    if axiom is AxiomId.IWA:
        return bool(iwa_indices(a, b, c, d)) and mismatch
    if axiom is AxiomId.WEAK_IWA:
        return qualifies_weak_iwa(a, b, c, d) is not None and mismatch
    raise RafprefError(f"cannot replay axiom {axiom}")
