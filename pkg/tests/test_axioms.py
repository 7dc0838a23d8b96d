import random
from dataclasses import dataclass
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rafpref import (
    AxiomId,
    CheckConfig,
    ComparisonOutcome,
    ContextMismatchError,
    GridSpec,
    LexicographicRelation,
    MaxExpectedPayoffRelation,
    PreferenceRelation,
    PriorityContext,
    Raf,
    RafprefError,
    RankedRelation,
    WeightedLogProductRelation,
    WeightVector,
    check_axiom2_ms,
    check_iwa,
    check_non_compensation,
    check_order_axioms,
    check_strong_dominance,
    check_strong_monotonicity,
    check_weak_dominance,
    check_weak_iwa,
    default_context,
    grid_points,
    lex_compare,
    make_raf,
    mep_utility,
    replay_violation,
    run_checks,
    table_relation,
)
from rafpref.axioms import (
    iwa_indices,
    qualifies_axiom2,
    qualifies_non_compensation,
    qualifies_weak_iwa,
    single_coordinate_increase,
)

FIRST = ComparisonOutcome.FIRST_PREFERRED
SECOND = ComparisonOutcome.SECOND_PREFERRED
INDIFF = ComparisonOutcome.INDIFFERENT

LEX = LexicographicRelation()


@dataclass(frozen=True)
class ReversedLex(PreferenceRelation):
    """Lex with the priority order read backwards; a designed IWA breaker."""

    name: str = "reversed-lex"

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        for x, y in zip(reversed(a.values), reversed(b.values)):
            if x > y:
                return FIRST
            if x < y:
                return SECOND
        return INDIFF


class CyclicRelation(PreferenceRelation):
    """Three profiles in a strict cycle; everything else by lex."""

    name = "cyclic"

    def __init__(self, a: Raf, b: Raf, c: Raf) -> None:
        self.wins = {(a, b), (b, c), (c, a)}

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        if (a, b) in self.wins:
            return FIRST
        if (b, a) in self.wins:
            return SECOND
        return lex_compare(a, b)


def total_indifference(points):
    return table_relation(RankedRelation.from_rank_map({p: 0 for p in points}))


def mep_40_10_grid(levels):
    ctx = PriorityContext.of(("x1", "x2"), {"x1": 40, "x2": 10})
    return MaxExpectedPayoffRelation(), grid_points(GridSpec.of(levels, 2), ctx)


class TestAxiomId:
    def test_parse_aliases(self):
        assert AxiomId.parse("SM") is AxiomId.STRONG_MONOTONICITY
        assert AxiomId.parse("WeakIWA") is AxiomId.WEAK_IWA
        assert AxiomId.parse("iwa") is AxiomId.IWA
        assert AxiomId.parse("NonCompensation") is AxiomId.NON_COMPENSATION

    def test_parse_unknown(self):
        with pytest.raises(RafprefError):
            AxiomId.parse("nosuch")

    def test_stable_strings(self):
        assert str(AxiomId.AXIOM2_MS) == "Axiom2MS"
        assert str(AxiomId.MIRROR_CONSISTENT) == "MirrorConsistent"


class TestOrderAxioms:
    def test_lex_passes_nine_grid(self, nine_grid):
        report = check_order_axioms(LEX, nine_grid)
        assert report.passed
        assert report.result_for(AxiomId.TRANSITIVE).tuples_examined == 729
        assert report.result_for(AxiomId.REFLEXIVE).tuples_examined == 9
        assert report.result_for(AxiomId.MIRROR_CONSISTENT).tuples_examined == 72

    @settings(max_examples=25)
    @given(st.lists(st.tuples(st.fractions(0, 1, max_denominator=6),
                              st.fractions(0, 1, max_denominator=6)),
                    min_size=1, max_size=6))
    def test_utility_relations_always_pass(self, values):
        ctx = PriorityContext.of(("a", "b"), {"a": 7, "b": 3})
        sample = [Raf(ctx, v) for v in values]
        relations = [
            MaxExpectedPayoffRelation(),
            WeightedLogProductRelation(WeightVector(ctx, (2, 1))),
        ]
        for rel in relations:
            assert check_order_axioms(rel, sample).passed

    def test_cycle_breaks_transitivity(self, unit_square):
        p00, p01, p10, p11 = unit_square
        rel = CyclicRelation(p00, p01, p10)
        report = check_order_axioms(rel, unit_square)
        result = report.result_for(AxiomId.TRANSITIVE)
        assert not result.passed
        violation = result.violations[0]
        assert len(violation.witness) == 3
        assert replay_violation(rel, violation)

    def test_context_mixing_rejected(self, unit_square, raf_a):
        with pytest.raises(ContextMismatchError):
            check_order_axioms(LEX, unit_square + [raf_a])


class TestWeakDominance:
    def test_lex_passes(self, nine_grid):
        assert check_weak_dominance(LEX, nine_grid).passed

    def test_mep_passes(self):
        rel, points = mep_40_10_grid(["0", "1/2", "1"])
        assert check_weak_dominance(rel, points).passed

    def test_total_indifference_fails_at_corners(self, unit_square):
        rel = total_indifference(unit_square)
        report = check_weak_dominance(rel, unit_square)
        result = report.results[0]
        assert not result.passed
        witness = result.violations[0].witness
        assert [str(w) for w in witness] == ["(1, 1)", "(0, 0)"]
        assert replay_violation(rel, result.violations[0])

    def test_single_point_vacuous(self, unit_square):
        report = check_weak_dominance(LEX, unit_square[:1])
        assert report.passed
        assert report.results[0].vacuous


class TestStrongMonotonicity:
    def test_lex_passes(self, nine_grid):
        assert check_strong_monotonicity(LEX, nine_grid).passed

    def test_mep_tie_violation(self):
        rel, points = mep_40_10_grid(["1/5", "1/2", "3/5"])
        report = check_strong_monotonicity(
            rel, points, CheckConfig(all_violations=True)
        )
        result = report.results[0]
        assert not result.passed
        # the known tie pair, both utilities exactly 8, must be among them
        ctx = points[0].context
        a = make_raf(("1/5", "3/5"), ctx)
        b = make_raf(("1/5", "1/2"), ctx)
        assert mep_utility(a) == mep_utility(b) == Fraction(8)
        witnesses = [v.witness for v in result.violations]
        assert (a, b) in witnesses
        assert all(replay_violation(rel, v) for v in result.violations)

    def test_wlog_zero_boundary_violation(self, unit_square):
        ctx = unit_square[0].context
        rel = WeightedLogProductRelation(WeightVector(ctx, (1, 1)))
        report = check_strong_monotonicity(rel, unit_square)
        result = report.results[0]
        assert not result.passed
        assert replay_violation(rel, result.violations[0])

    def test_hypothesis_predicate(self, money_ctx):
        a = make_raf(("1/5", "3/5"), money_ctx)
        b = make_raf(("1/5", "1/2"), money_ctx)
        assert single_coordinate_increase(a, b) == 2
        assert single_coordinate_increase(b, a) is None
        assert single_coordinate_increase(a, a) is None


class TestStrongDominance:
    def test_lex_passes(self, nine_grid):
        assert check_strong_dominance(LEX, nine_grid).passed

    def test_mep_fails_with_tie(self):
        rel, points = mep_40_10_grid(["1/5", "1/2", "3/5"])
        report = check_strong_dominance(rel, points)
        assert not report.passed
        assert replay_violation(rel, report.results[0].violations[0])

    def test_one_point_vacuous(self, nine_grid):
        report = check_strong_dominance(LEX, nine_grid[:1])
        assert report.passed and report.results[0].vacuous


class TestNonCompensation:
    def test_lex_passes_unit_square(self, unit_square):
        report = check_non_compensation(LEX, unit_square)
        assert report.passed
        assert report.results[0].tuples_examined == 256

    def test_mep_violation_found_by_scan(self):
        rel, points = mep_40_10_grid(["1/10", "1/5", "9/10"])
        report = check_non_compensation(rel, points)
        result = report.results[0]
        assert not result.passed
        assert replay_violation(rel, result.violations[0])

    def test_equal_pairs_qualify_trivially(self, unit_square):
        a, b = unit_square[0], unit_square[3]
        assert qualifies_non_compensation(a, a, b, b)
        assert total_indifference(unit_square).compare(a, a) is INDIFF

    def test_total_indifference_passes(self, unit_square):
        assert check_non_compensation(total_indifference(unit_square), unit_square).passed


class TestAxiom2:
    def test_lex_passes(self, nine_grid):
        assert check_axiom2_ms(LEX, nine_grid).passed

    def test_mep_violation_on_unit_square(self, unit_square):
        ctx = PriorityContext.of(("x1", "x2"), {"x1": 40, "x2": 10})
        rel = MaxExpectedPayoffRelation()
        points = grid_points(GridSpec.of(["0", "1"], 2), ctx)
        report = check_axiom2_ms(rel, points)
        result = report.results[0]
        assert not result.passed
        assert replay_violation(rel, result.violations[0])

    def test_vacuous_when_no_single_coordinate_pairs(self, money_ctx):
        sample = [make_raf((0, 0), money_ctx), make_raf((1, 1), money_ctx)]
        report = check_axiom2_ms(LEX, sample)
        assert report.passed and report.results[0].vacuous

    def test_hypothesis_predicate(self, money_ctx):
        a = make_raf(("1/5", "3/5"), money_ctx)
        b = make_raf(("1/5", "1/2"), money_ctx)
        c = make_raf(("1", "3/5"), money_ctx)
        d = make_raf(("1", "1/2"), money_ctx)
        assert qualifies_axiom2(a, b, c, d) == 2
        assert qualifies_axiom2(a, b, d, c) is None


class TestIwa:
    def test_lex_passes_unit_square(self, unit_square):
        report = check_iwa(LEX, unit_square)
        assert report.passed
        assert report.results[0].tuples_examined == 256

    def test_total_indifference_passes(self, unit_square):
        assert check_iwa(total_indifference(unit_square), unit_square).passed

    def test_reversed_lex_fails(self, unit_square):
        rel = ReversedLex()
        report = check_iwa(rel, unit_square)
        result = report.results[0]
        assert not result.passed
        assert replay_violation(rel, result.violations[0])


class TestWeakIwa:
    def test_lex_passes_nine_grid(self, nine_grid):
        report = check_weak_iwa(LEX, nine_grid)
        assert report.passed
        assert report.results[0].tuples_examined == 6561

    def test_total_indifference_passes(self, unit_square):
        assert check_weak_iwa(total_indifference(unit_square), unit_square).passed

    def test_reversed_lex_specific_quadruple(self, unit_square):
        ctx = unit_square[0].context
        a = make_raf((1, 0), ctx)
        b = make_raf((0, 0), ctx)
        c = make_raf((1, 0), ctx)
        d = make_raf((0, 1), ctx)
        assert qualifies_weak_iwa(a, b, c, d) == 1
        rel = ReversedLex()
        # verdicts computed directly: (1,0) beats (0,0) at the reversed top,
        # while (0,1) beats (1,0); signs at x1 agree, verdicts do not
        assert rel.compare(a, b) is FIRST
        assert rel.compare(c, d) is SECOND
        report = check_weak_iwa(rel, unit_square)
        assert not report.passed
        assert replay_violation(rel, report.results[0].violations[0])


class TestQualificationImplications:
    def test_iwa_pass_implies_weak_iwa_pass(self, unit_square):
        # report-level implication on randomized rank tables: the weak
        # variant's qualifying quadruples are a subset of the full one's
        rng = random.Random(31)
        pts = tuple(unit_square)
        non_vacuous = 0
        for _ in range(60):
            ranks = [rng.randrange(3) for _ in range(4)]
            remap = {r: i for i, r in enumerate(sorted(set(ranks)))}
            rel = table_relation(RankedRelation(pts, tuple(remap[r] for r in ranks)))
            iwa_report = check_iwa(rel, unit_square)
            weak_report = check_weak_iwa(rel, unit_square)
            noncomp_report = check_non_compensation(rel, unit_square)
            axiom2_report = check_axiom2_ms(rel, unit_square)
            if iwa_report.passed:
                non_vacuous += 1
                assert weak_report.passed
            if noncomp_report.passed:
                assert axiom2_report.passed
        assert non_vacuous > 0

    def test_weak_iwa_implies_iwa_at_same_k(self):
        rng = random.Random(7)
        ctx = default_context(3)
        levels = [Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1)]
        for _ in range(300):
            rafs = [
                Raf(ctx, tuple(rng.choice(levels) for _ in range(3)))
                for _ in range(4)
            ]
            k = qualifies_weak_iwa(*rafs)
            if k is not None:
                assert k in iwa_indices(*rafs)

    def test_axiom2_implies_non_compensation(self):
        rng = random.Random(11)
        ctx = default_context(2)
        levels = [Fraction(0), Fraction(1, 2), Fraction(1)]
        hits = 0
        for _ in range(500):
            rafs = [
                Raf(ctx, tuple(rng.choice(levels) for _ in range(2)))
                for _ in range(4)
            ]
            if qualifies_axiom2(*rafs) is not None:
                hits += 1
                assert qualifies_non_compensation(*rafs)
        assert hits > 0


class TestConfigModes:
    def test_sampled_mode_deterministic(self):
        rel, points = mep_40_10_grid(["0", "1/8", "1/4", "1/2"])  # 16 points > cap
        config = CheckConfig(samples=200, seed=5)
        first = check_weak_iwa(rel, points, config)
        second = check_weak_iwa(rel, points, config)
        assert first == second
        assert first.results[0].mode == "sampled"
        assert first.results[0].tuples_examined == 200

    def test_exhaustive_cap_override(self):
        rel, points = mep_40_10_grid(["0", "1/8", "1/4", "1/2"])
        config = CheckConfig(exhaustive_cap=16)
        report = check_non_compensation(rel, points, config)
        assert report.results[0].mode == "exhaustive"
        assert report.results[0].tuples_examined == 16 ** 4

    def test_all_violations_superset(self):
        rel, points = mep_40_10_grid(["1/5", "1/2", "3/5"])
        first_only = check_strong_monotonicity(rel, points)
        everything = check_strong_monotonicity(
            rel, points, CheckConfig(all_violations=True)
        )
        r1, r2 = first_only.results[0], everything.results[0]
        assert r1.violation_count == r2.violation_count
        assert len(r1.violations) == 1
        assert r2.violations[0] == r1.violations[0]
        assert len(r2.violations) == r2.violation_count

    def test_reports_deterministic(self):
        rel, points = mep_40_10_grid(["1/5", "1/2", "3/5"])
        assert check_strong_monotonicity(rel, points) == check_strong_monotonicity(
            rel, points
        )


class TestRunChecks:
    def test_all_axioms_lex(self, nine_grid):
        report = run_checks(LEX, nine_grid)
        assert report.passed
        assert len(report.results) == 11
        assert [r.axiom for r in report.results] == [
            AxiomId.REFLEXIVE,
            AxiomId.MIRROR_CONSISTENT,
            AxiomId.CONNECTED,
            AxiomId.TRANSITIVE,
            AxiomId.WEAK_DOMINANCE,
            AxiomId.STRONG_MONOTONICITY,
            AxiomId.STRONG_DOMINANCE,
            AxiomId.NON_COMPENSATION,
            AxiomId.AXIOM2_MS,
            AxiomId.IWA,
            AxiomId.WEAK_IWA,
        ]

    def test_subset_selection(self, nine_grid):
        report = run_checks(
            LEX, nine_grid, [AxiomId.TRANSITIVE, AxiomId.WEAK_IWA]
        )
        assert [r.axiom for r in report.results] == [
            AxiomId.TRANSITIVE,
            AxiomId.WEAK_IWA,
        ]

    def test_empty_sample_rejected(self):
        with pytest.raises(RafprefError):
            run_checks(LEX, [])
