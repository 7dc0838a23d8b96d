"""Command-line front end.

Subcommands: ``demo`` prints the built-in two-alternative walkthrough,
``rank`` orders named profiles from a JSON document, ``check`` audits a
relation against the axioms on a document or grid sample, and ``verify``
runs the characterization search. Exit codes: 0 all checks pass (or the
survivor set is exactly the priority-order comparator), 1 violations or a
different survivor set, 2 input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from .core import (
    GridSpec,
    PriorityContext,
    Raf,
    RafprefError,
    format_rational,
    grid_points,
    make_raf,
    parse_rational,
)
from .relations import (
    ComparisonOutcome,
    LexicographicRelation,
    MaxExpectedPayoffRelation,
    PreferenceRelation,
    WeightedLogProductRelation,
    WeightVector,
    lex_compare,
    mep_utility,
    utility_compare,
)
from .axioms import (
    ALL_AXIOMS,
    AxiomId,
    AxiomReport,
    AxiomViolation,
    CheckConfig,
    run_checks,
)
from .characterization import (
    CharacterizationReport,
    TooManyPointsError,
    VERIFY_AXIOMS,
    construct_proof_witness,
    verify_characterization,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

RELATION_NAMES = ("lex", "mep", "wlog")


class DocumentError(RafprefError):
    """Input document failed validation; the message names the field."""


@dataclass(frozen=True)
class InputDocument:
    """Parsed, normalized form of the JSON input document.

    Alternatives keep their file order; payoffs, weights, and profile
    values are stored in priority order, so emitting and re-parsing a
    document yields an identical object.
    """

    alternatives: tuple[str, ...]
    priority: tuple[str, ...]
    payoffs: Optional[tuple[tuple[str, Fraction], ...]]
    weights: Optional[tuple[tuple[str, int], ...]]
    rafs: tuple[tuple[str, tuple[Fraction, ...]], ...]

    @classmethod
    def from_json_dict(cls, obj: dict) -> "InputDocument":
        if not isinstance(obj, dict):
            raise DocumentError("document: expected a JSON object")
        alternatives = _require_str_list(obj, "alternatives")
        if len(set(alternatives)) != len(alternatives):
            raise DocumentError("alternatives: labels must be distinct")
        if len(alternatives) < 2:
            raise DocumentError("alternatives: need at least two")
        priority = _require_str_list(obj, "priority")
        if sorted(priority) != sorted(alternatives):
            raise DocumentError("priority: must be a permutation of alternatives")

        payoffs = None
        if obj.get("payoffs") is not None:
            raw = obj["payoffs"]
            if not isinstance(raw, dict):
                raise DocumentError("payoffs: expected a label-to-rational object")
            payoffs = tuple(
                (label, _parse_field_rational(raw, label, "payoffs"))
                for label in priority
            )
            _no_extra_labels(raw, alternatives, "payoffs")
            for label, value in payoffs:
                if value < 0:
                    raise DocumentError(f"payoffs.{label}: must be nonnegative")

        weights = None
        if obj.get("weights") is not None:
            raw = obj["weights"]
            if not isinstance(raw, dict):
                raise DocumentError("weights: expected a label-to-integer object")
            _no_extra_labels(raw, alternatives, "weights")
            parsed = []
            for label in priority:
                if label not in raw:
                    raise DocumentError(f"weights.{label}: missing")
                w = raw[label]
                if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                    raise DocumentError(f"weights.{label}: must be a positive integer")
                parsed.append((label, w))
            weights = tuple(parsed)

        raw_rafs = obj.get("rafs")
        if not isinstance(raw_rafs, dict) or not raw_rafs:
            raise DocumentError("rafs: expected a nonempty object of named profiles")
        rafs = []
        for name, entry in raw_rafs.items():
            if not isinstance(entry, dict):
                raise DocumentError(f"rafs.{name}: expected a label-to-rational object")
            _no_extra_labels(entry, alternatives, f"rafs.{name}")
            values = tuple(
                _parse_field_rational(entry, label, f"rafs.{name}")
                for label in priority
            )
            for v in values:
                if v < 0 or v > 1:
                    raise DocumentError(
                        f"rafs.{name}: availability {format_rational(v)} outside [0, 1]"
                    )
            rafs.append((name, values))
        return cls(
            alternatives=tuple(alternatives),
            priority=tuple(priority),
            payoffs=payoffs,
            weights=weights,
            rafs=tuple(rafs),
        )

    def to_json_dict(self) -> dict:
        out: dict = {
            "alternatives": list(self.alternatives),
            "priority": list(self.priority),
        }
        if self.payoffs is not None:
            out["payoffs"] = {label: format_rational(v) for label, v in self.payoffs}
        if self.weights is not None:
            out["weights"] = {label: w for label, w in self.weights}
        out["rafs"] = {
            name: {
                label: format_rational(v)
                for label, v in zip(self.priority, values)
            }
            for name, values in self.rafs
        }
        return out

    def context(self) -> PriorityContext:
        payoffs = None
        if self.payoffs is not None:
            payoffs = tuple(v for _, v in self.payoffs)
        return PriorityContext(self.priority, payoffs)

    def weight_vector(self, ctx: PriorityContext) -> Optional[WeightVector]:
        if self.weights is None:
            return None
        return WeightVector(ctx, tuple(w for _, w in self.weights))

    def named_rafs(self, ctx: PriorityContext) -> list[tuple[str, Raf]]:
        return [(name, Raf(ctx, values)) for name, values in self.rafs]


def _require_str_list(obj: dict, field: str) -> list[str]:
    raw = obj.get(field)
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise DocumentError(f"{field}: expected a list of strings")
    return raw


def _parse_field_rational(raw: dict, label: str, field: str) -> Fraction:
    if label not in raw:
        raise DocumentError(f"{field}.{label}: missing")
    value = raw[label]
    if not isinstance(value, str):
        raise DocumentError(f"{field}.{label}: expected a rational string")
    try:
        return parse_rational(value)
    except RafprefError as exc:
        raise DocumentError(f"{field}.{label}: {exc}") from None


def _no_extra_labels(raw: dict, alternatives: Sequence[str], field: str) -> None:
    extra = [k for k in raw if k not in alternatives]
    if extra:
        raise DocumentError(f"{field}.{extra[0]}: not an alternative")


def load_document(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from None
    return InputDocument.from_json_dict(obj)


# ---------------------------------------------------------------------------
# Relation and sample construction
# ---------------------------------------------------------------------------


def _build_relation(
    name: str, ctx: PriorityContext, weights: Optional[WeightVector]
) -> PreferenceRelation:
    if name == "lex":
        return LexicographicRelation()
    if name == "mep":
        if ctx.payoffs is None:
            raise DocumentError("payoffs: required by the mep relation")
        return MaxExpectedPayoffRelation()
    if name == "wlog":
        if weights is None:
            raise DocumentError("weights: required by the wlog relation")
        return WeightedLogProductRelation(weights)
    raise DocumentError(f"relation: unknown name {name!r}")


def _parse_rational_csv(text: str, field: str) -> list[Fraction]:
    try:
        return [parse_rational(part) for part in text.split(",") if part.strip()]
    except RafprefError as exc:
        raise DocumentError(f"{field}: {exc}") from None


def _grid_sample(args) -> tuple[PriorityContext, list[Raf], Optional[WeightVector]]:
    levels = _parse_rational_csv(args.grid, "--grid")
    if not levels:
        raise DocumentError("--grid: needs at least one level")
    spec = GridSpec.of(levels, args.arity)
    labels = tuple(f"x{i}" for i in range(1, args.arity + 1))
    payoffs = None
    if args.payoffs:
        values = _parse_rational_csv(args.payoffs, "--payoffs")
        if len(values) != args.arity:
            raise DocumentError(f"--payoffs: expected {args.arity} values")
        payoffs = dict(zip(labels, values))
    ctx = PriorityContext.of(labels, payoffs)
    weights = None
    if args.weights:
        try:
            ws = [int(part) for part in args.weights.split(",") if part.strip()]
        except ValueError:
            raise DocumentError("--weights: expected integers") from None
        if len(ws) != args.arity:
            raise DocumentError(f"--weights: expected {args.arity} values")
        weights = WeightVector(ctx, tuple(ws))
    return ctx, grid_points(spec, ctx), weights


def _parse_axioms(text: str, allowed: Sequence[AxiomId], field: str) -> list[AxiomId]:
    if text.strip().lower() == "all":
        return list(allowed)
    out = []
    for part in text.split(","):
        if not part.strip():
            continue
        axiom = AxiomId.parse(part)
        if axiom not in allowed:
            raise DocumentError(f"{field}: axiom {axiom} not usable here")
        out.append(axiom)
    if not out:
        raise DocumentError(f"{field}: no axioms named")
    return out


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _raf_json(raf: Raf) -> dict:
    return {"values": [format_rational(v) for v in raf.values]}


def _violation_json(v: AxiomViolation) -> dict:
    return {
        "axiom": str(v.axiom),
        "witness": [_raf_json(w) for w in v.witness],
        "index": v.index,
        "observed": [str(o) for o in v.observed],
        "detail": v.detail,
    }


def _check_json(report: AxiomReport, relation: str) -> dict:
    return {
        "command": "check",
        "relation": relation,
        "sample_size": report.sample_size,
        "passed": report.passed,
        "results": [
            {
                "axiom": str(r.axiom),
                "status": "pass" if r.passed else "fail",
                "vacuous": r.vacuous,
                "mode": r.mode,
                "tuples_examined": r.tuples_examined,
                "qualifying": r.qualifying,
                "violation_count": r.violation_count,
                "violations": [_violation_json(v) for v in r.violations],
            }
            for r in report.results
        ],
    }


def _render_check_text(report: AxiomReport, relation: str) -> str:
    lines = [f"axiom check: relation={relation} sample={report.sample_size} points"]
    for r in report.results:
        status = "pass" if r.passed else "FAIL"
        vac = ", vacuous" if r.vacuous else ""
        lines.append(
            f"  {r.axiom.value:<20} {status:<4} "
            f"({r.tuples_examined} tuples, {r.qualifying} qualifying, "
            f"{r.violation_count} violations, {r.mode}{vac})"
        )
        for v in r.violations:
            witness = " vs ".join(str(w) for w in v.witness)
            where = f" at k={v.index}" if v.index is not None else ""
            observed = ", ".join(str(o) for o in v.observed)
            lines.append(f"      witness: {witness}{where}; observed {observed}")
    lines.append("result: " + ("all pass" if report.passed else "violations found"))
    return "\n".join(lines)


def _verify_json(rep: CharacterizationReport) -> dict:
    return {
        "command": "verify",
        "grid": {
            "levels": [format_rational(v) for v in rep.grid.levels],
            "arity": rep.grid.arity,
        },
        "axioms": [str(a) for a in rep.axiom_order],
        "pruned": rep.pruned,
        "workers": rep.workers,
        "enumerated": rep.enumerated,
        "checked": rep.checked,
        "pruned_away": rep.pruned_away,
        "oracle_verified": rep.oracle_verified,
        "pass_counts": {str(a): c for a, c in rep.pass_counts},
        "survivor_count": rep.survivor_count,
        "survivors": [
            {
                "ranks": list(s.ranks),
                "chain": s.chain(),
                "agrees_with_lex": agrees,
            }
            for s, agrees in zip(rep.survivors, rep.survivor_lex_agreement)
        ],
        "survivors_truncated": rep.survivors_truncated,
        "matches_lex": rep.matches_lex,
        "elapsed_ms": rep.elapsed_ms,
    }


def _render_verify_text(rep: CharacterizationReport) -> str:
    levels = ", ".join(format_rational(v) for v in rep.grid.levels)
    lines = [
        f"grid: levels [{levels}] arity {rep.grid.arity} ({len(rep.points)} points)",
        "axioms: "
        + ", ".join(str(a) for a in rep.axiom_order)
        + f"   pruning: {'on' if rep.pruned else 'off'}   workers: {rep.workers}",
        f"enumerated {rep.enumerated} weak orders "
        f"(recurrence check: {'ok' if rep.oracle_verified else 'FAILED'}); "
        f"{rep.checked} reached the checkers, {rep.pruned_away} pruned",
        "pass counts: " + ", ".join(f"{a}={c}" for a, c in rep.pass_counts),
        f"survivors: {rep.survivor_count}"
        + (" (listing first 10)" if rep.survivors_truncated else ""),
    ]
    for s, agrees in zip(rep.survivors, rep.survivor_lex_agreement):
        verdict = "agrees with lex" if agrees else "differs from lex"
        lines.append(f"  {s.chain()}   [{verdict}]")
    lines.append(
        "survivor set equals lex: " + ("yes" if rep.matches_lex else "no")
    )
    lines.append(f"elapsed: {rep.elapsed_ms:.1f} ms")
    return "\n".join(lines)


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_demo(args) -> int:
    ctx = PriorityContext.of(("$40", "$10"), {"$40": 40, "$10": 10})
    a = make_raf(("1/5", "4/5"), ctx)
    b = make_raf(("1/10", "9/10"), ctx)
    ua, ub = mep_utility(a), mep_utility(b)
    mep_verdict = utility_compare(a, b, mep_utility)
    lex_verdict = lex_compare(a, b)
    c = construct_proof_witness(a, b)
    print("alternatives (priority first): $40, $10   pay-offs: 40, 10")
    print(f"A = {a}   (availability of $40, then $10)")
    print(f"B = {b}")
    print()
    print("maximum expected pay-off: u(X) = max over alternatives of payoff * availability")
    print(f"  u(A) = {format_rational(ua)}")
    print(f"  u(B) = {format_rational(ub)}")
    mep_line = "B ≻ A" if mep_verdict is ComparisonOutcome.SECOND_PREFERRED else "A ≻ B"
    print(f"  mep verdict: {mep_line}")
    print()
    print("priority-order comparison: decided at the first differing alternative")
    lex_line = "A ≻ B" if lex_verdict is ComparisonOutcome.FIRST_PREFERRED else "B ≻ A"
    print(f"  A($40) = 1/5 > 1/10 = B($40), so lex verdict: {lex_line}")
    print()
    print(f"characterization witness: C = {c}  (B through the first difference, A after)")
    print(
        "note: after picking B, a chooser who finds $40 sold out is left with a"
        " 9/10 shot at $10 and may regret forgoing A's 1/5 shot at $40;"
        " ranking by priority first avoids that regret."
    )
    return EXIT_OK


def _rank_groups(
    items: list[tuple[str, Raf]], rel: PreferenceRelation
) -> list[list[str]]:
    def cmp(x, y) -> int:
        out = rel.compare(x[1], y[1])
        if out is ComparisonOutcome.FIRST_PREFERRED:
            return -1
        if out is ComparisonOutcome.SECOND_PREFERRED:
            return 1
        return 0

    ordered = sorted(items, key=cmp_to_key(cmp))
    groups: list[list[tuple[str, Raf]]] = []
    for item in ordered:
        if groups and rel.compare(groups[-1][0][1], item[1]) is ComparisonOutcome.INDIFFERENT:
            groups[-1].append(item)
        else:
            groups.append([item])
    return [[name for name, _ in group] for group in groups]


def cmd_rank(args) -> int:
    doc = load_document(args.input)
    ctx = doc.context()
    rel = _build_relation(args.relation, ctx, doc.weight_vector(ctx))
    groups = _rank_groups(doc.named_rafs(ctx), rel)
    chain = " ≻ ".join(" ∼ ".join(group) for group in groups)
    payload = {
        "command": "rank",
        "relation": args.relation,
        "ranking": groups,
        "document": doc.to_json_dict(),
    }
    _emit(args, chain, payload)
    return EXIT_OK


def cmd_check(args) -> int:
    if bool(args.input) == bool(args.grid):
        raise DocumentError("input: give exactly one of --input or --grid")
    if args.input and (args.arity is not None or args.payoffs or args.weights):
        raise DocumentError("--arity/--payoffs/--weights: only meaningful with --grid")
    if args.input:
        doc = load_document(args.input)
        ctx = doc.context()
        sample = [raf for _, raf in doc.named_rafs(ctx)]
        weights = doc.weight_vector(ctx)
    else:
        if args.arity is None:
            raise DocumentError("--arity: required with --grid")
        ctx, sample, weights = _grid_sample(args)
    rel = _build_relation(args.relation, ctx, weights)
    axioms = _parse_axioms(args.axioms, ALL_AXIOMS, "--axioms")
    config = CheckConfig(
        all_violations=args.all_violations,
        samples=args.samples,
        seed=args.seed,
    )
    report = run_checks(rel, sample, axioms, config)
    _emit(args, _render_check_text(report, rel.name), _check_json(report, rel.name))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_verify(args) -> int:
    levels = _parse_rational_csv(args.levels, "--levels")
    if not levels:
        raise DocumentError("--levels: needs at least one level")
    spec = GridSpec.of(levels, args.arity)
    axioms = _parse_axioms(args.axioms, VERIFY_AXIOMS, "--axioms")
    rep = verify_characterization(
        spec,
        axioms,
        prune=args.prune,
        max_points=args.max_points,
        workers=args.workers,
    )
    _emit(args, _render_verify_text(rep), _verify_json(rep))
    return EXIT_OK if rep.matches_lex else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rafpref",
        description="Rank availability profiles, audit preference axioms, "
        "and verify the lexicographic characterization on finite grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_demo = sub.add_parser("demo", help="print the built-in $40/$10 walkthrough")
    p_demo.set_defaults(func=cmd_demo)

    p_rank = sub.add_parser("rank", help="rank the named profiles in a document")
    p_rank.add_argument("--input", "-i", required=True, help="JSON document path")
    p_rank.add_argument("--relation", "-r", required=True, choices=RELATION_NAMES)
    p_rank.add_argument("--format", choices=("text", "json"), default="text")
    p_rank.set_defaults(func=cmd_rank)

    p_check = sub.add_parser("check", help="audit a relation against the axioms")
    p_check.add_argument("--input", "-i", help="JSON document path (sample = its rafs)")
    p_check.add_argument("--grid", help="comma-separated levels for a product grid sample")
    p_check.add_argument("--arity", type=int, help="number of alternatives for --grid")
    p_check.add_argument("--payoffs", help="comma-separated pay-offs (priority order), for mep on a grid")
    p_check.add_argument("--weights", help="comma-separated positive integer weights, for wlog on a grid")
    p_check.add_argument("--relation", "-r", required=True, choices=RELATION_NAMES)
    p_check.add_argument("--axioms", default="all", help="comma-separated axiom names, or 'all'")
    p_check.add_argument("--seed", type=int, default=0, help="seed for sampled quadruple draws")
    p_check.add_argument("--samples", type=int, default=1000, help="quadruple draws in sampled mode")
    p_check.add_argument("--all-violations", action="store_true", help="record every violation, not just the first")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_verify = sub.add_parser("verify", help="enumerate weak orders and filter by axioms")
    p_verify.add_argument("--levels", required=True, help="comma-separated grid levels")
    p_verify.add_argument("--arity", type=int, required=True)
    p_verify.add_argument("--axioms", default="SM,WeakIWA", help="comma-separated axiom names")
    p_verify.add_argument("--prune", action=argparse.BooleanOptionalAction, default=True,
                          help="strong-monotonicity pruning (exact, counted)")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--max-points", type=int, default=9,
                          help="refuse grids with more points than this")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except TooManyPointsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RafprefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
