#!/usr/bin/env python3
"""Audit the built-in relations against every axiom on a few grids.

Prints a pass/fail matrix. lex is the clean row; mep and wlog are the
designed negative controls (utility ties and the zero-coordinate bottom
class break the monotonicity-flavored axioms), and the first witness for
each failure is shown below the table.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from rafpref import (
    ALL_AXIOMS,
    GridSpec,
    LexicographicRelation,
    MaxExpectedPayoffRelation,
    PriorityContext,
    WeightVector,
    WeightedLogProductRelation,
    grid_points,
    run_checks,
)

GRIDS = [
    (["0", "1"], 2),
    (["1/5", "1/2", "3/5"], 2),
    (["0", "1/2", "1"], 2),
]


def relations_for(ctx):
    return [
        LexicographicRelation(),
        MaxExpectedPayoffRelation(),
        WeightedLogProductRelation(WeightVector(ctx, (1,) * ctx.arity)),
    ]


def run() -> None:
    for levels, arity in GRIDS:
        labels = tuple(f"x{i}" for i in range(1, arity + 1))
        payoffs = {label: p for label, p in zip(labels, (40, 10, 5))}
        ctx = PriorityContext.of(labels, payoffs)
        points = grid_points(GridSpec.of(levels, arity), ctx)
        print(f"grid {{{','.join(levels)}}}^{arity} ({len(points)} points), payoffs 40/10")
        width = max(len(str(a)) for a in ALL_AXIOMS) + 2
        print(" " * width + "  ".join(f"{rel.name:>5}" for rel in relations_for(ctx)))
        reports = {rel.name: run_checks(rel, points) for rel in relations_for(ctx)}
        for axiom in ALL_AXIOMS:
            cells = []
            for rel in relations_for(ctx):
                result = reports[rel.name].result_for(axiom)
                cells.append("pass" if result.passed else "FAIL")
            print(f"{str(axiom):<{width}}" + "  ".join(f"{c:>5}" for c in cells))
        for rel in relations_for(ctx):
            for result in reports[rel.name].results:
                if not result.passed:
                    v = result.violations[0]
                    witness = " vs ".join(str(w) for w in v.witness)
                    print(f"  {rel.name} breaks {v.axiom}: {witness} ({v.detail})")
        print()


if __name__ == "__main__":
    run()
