"""Preference relations over availability profiles.

Every relation is a total three-valued comparator. The contract requires
reflexivity (comparing a profile with itself is Indifferent) and mirror
consistency (swapping the arguments mirrors the verdict) but deliberately
does not promise transitivity: the axiom checkers must be able to audit
broken relations, so the contract is the weakest structure they consume.
"""

from __future__ import annotations

import abc
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Sequence

from .core import (
    PriorityContext,
    Raf,
    RafprefError,
    first_difference,
    require_same_context,
)

__all__ = [
    "ComparisonOutcome",
    "at_least_as_good",
    "PreferenceRelation",
    "MissingPayoffsError",
    "WeightArityMismatchError",
    "InvalidWeightError",
    "UnknownPointError",
    "NonContiguousRanksError",
    "lex_compare",
    "mep_utility",
    "utility_compare",
    "wlog_compare",
    "WeightVector",
    "LexicographicRelation",
    "MaxExpectedPayoffRelation",
    "WeightedLogProductRelation",
    "UtilityRelation",
    "RankedRelation",
    "TableRelation",
    "table_relation",
]


class MissingPayoffsError(RafprefError):
    """Pay-off based operation on a context without pay-offs."""


class WeightArityMismatchError(RafprefError):
    """Weight vector does not align with the context."""


class InvalidWeightError(RafprefError):
    """Weight outside the positive integers."""


class UnknownPointError(RafprefError):
    """Table relation queried with a point outside its domain."""


class NonContiguousRanksError(RafprefError):
    """Rank table is malformed (gaps, duplicates, or missing points)."""


class ComparisonOutcome(enum.Enum):
    """Three-valued verdict of comparing two profiles."""

    FIRST_PREFERRED = "first_preferred"
    SECOND_PREFERRED = "second_preferred"
    INDIFFERENT = "indifferent"

    def mirrored(self) -> "ComparisonOutcome":
        """The verdict expected when the two arguments are swapped."""
        if self is ComparisonOutcome.FIRST_PREFERRED:
            return ComparisonOutcome.SECOND_PREFERRED
        if self is ComparisonOutcome.SECOND_PREFERRED:
            return ComparisonOutcome.FIRST_PREFERRED
        return ComparisonOutcome.INDIFFERENT

    def __str__(self) -> str:
        return self.value


def at_least_as_good(outcome: ComparisonOutcome) -> bool:
    """Weak verdict: the first argument is at least as good as the second."""
    return outcome is not ComparisonOutcome.SECOND_PREFERRED


def _outcome_of(x, y) -> ComparisonOutcome:
    if x > y:
        return ComparisonOutcome.FIRST_PREFERRED
    if x < y:
        return ComparisonOutcome.SECOND_PREFERRED
    return ComparisonOutcome.INDIFFERENT


class PreferenceRelation(abc.ABC):
    """Comparator contract shared by every relation and checker."""

    name: str = "relation"

    @abc.abstractmethod
    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        ...

    def at_least_as_good(self, a: Raf, b: Raf) -> bool:
        return at_least_as_good(self.compare(a, b))


def lex_compare(a: Raf, b: Raf) -> ComparisonOutcome:
    """Priority-order comparison: decided at the first differing coordinate.

    Indifferent exactly when the profiles are equal; otherwise the profile
    with the larger availability at the first difference wins, regardless
    of every lower-priority coordinate.
    """
    k = first_difference(a, b)
    if k is None:
        return ComparisonOutcome.INDIFFERENT
    return _outcome_of(a.values[k - 1], b.values[k - 1])


def mep_utility(a: Raf) -> Fraction:
    """Largest expected pay-off: max over alternatives of payoff * availability."""
    payoffs = a.context.payoffs
    if payoffs is None:
        raise MissingPayoffsError("context carries no pay-offs")
    return max(p * v for p, v in zip(payoffs, a.values))


def utility_compare(
    a: Raf, b: Raf, utility: Callable[[Raf], Fraction]
) -> ComparisonOutcome:
    """Order two profiles by exact comparison of their utility values.

    Equal utilities map to Indifferent; that is forced by the definition
    of a numerical representation, not a tie-breaking choice.
    """
    require_same_context(a, b)
    return _outcome_of(utility(a), utility(b))


@dataclass(frozen=True)
class WeightVector:
    """One positive integer weight per alternative, in context order.

    Integer weights keep the weighted product comparison in exact integer
    arithmetic; rational exponents would drag in radicals.
    """

    context: PriorityContext
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.context.arity:
            raise WeightArityMismatchError(
                f"expected {self.context.arity} weights, got {len(self.weights)}"
            )
        for w in self.weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidWeightError(f"weight {w!r} is not a positive integer")

    @classmethod
    def of(
        cls, ctx: PriorityContext, weights: Mapping[str, int] | Sequence[int]
    ) -> "WeightVector":
        if isinstance(weights, Mapping):
            missing = [a for a in ctx.alternatives if a not in weights]
            if missing:
                raise WeightArityMismatchError(f"weight missing for {missing[0]!r}")
            return cls(ctx, tuple(weights[a] for a in ctx.alternatives))
        return cls(ctx, tuple(weights))


def wlog_compare(a: Raf, b: Raf, weights: WeightVector) -> ComparisonOutcome:
    """Order by the weighted product of coordinate availabilities.

    Wherever all coordinates are positive this matches ordering by the
    weighted sum of logarithms, since log is strictly increasing, but the
    product comparison needs no logarithms and stays exact. A zero
    coordinate zeroes the whole product, so every profile touching zero
    falls into one shared bottom indifference class. That boundary
    behaviour intentionally breaks strong monotonicity and gives the
    axiom checkers a designed negative control.
    """
    require_same_context(a, b)
    if weights.context != a.context:
        raise WeightArityMismatchError("weights built on a different context")
    pa = math.prod((v ** w for v, w in zip(a.values, weights.weights)), start=Fraction(1))
    pb = math.prod((v ** w for v, w in zip(b.values, weights.weights)), start=Fraction(1))
    return _outcome_of(pa, pb)


@dataclass(frozen=True)
class LexicographicRelation(PreferenceRelation):
    """Stateless comparator backed by lex_compare."""

    name: str = "lex"

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        return lex_compare(a, b)


@dataclass(frozen=True)
class MaxExpectedPayoffRelation(PreferenceRelation):
    """Utility relation ranking profiles by their largest expected pay-off."""

    name: str = "mep"

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        return utility_compare(a, b, mep_utility)


@dataclass(frozen=True)
class WeightedLogProductRelation(PreferenceRelation):
    """Utility relation backed by the exact weighted product comparison."""

    weights: WeightVector
    name: str = "wlog"

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        return wlog_compare(a, b, self.weights)


@dataclass(frozen=True)
class UtilityRelation(PreferenceRelation):
    """Generic numerical representation: compare by a caller-supplied utility."""

    utility: Callable[[Raf], Fraction]
    name: str = "utility"

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        return utility_compare(a, b, self.utility)


class RankedRelation(NamedTuple):
    """A total preorder on a finite point set, as an ordered partition.

    rank 0 is the most preferred block and equal rank means indifferent.
    The bare constructor trusts its inputs so bulk enumeration stays
    cheap; use from_rank_map (or validate) for anything user-supplied.
    """

    domain: tuple[Raf, ...]
    ranks: tuple[int, ...]

    @classmethod
    def from_rank_map(cls, ranks: Mapping[Raf, int]) -> "RankedRelation":
        rel = cls(tuple(ranks), tuple(ranks[p] for p in ranks))
        rel.validate()
        return rel

    def validate(self) -> "RankedRelation":
        if not self.domain:
            raise NonContiguousRanksError("empty ranking")
        if len(self.domain) != len(self.ranks):
            raise NonContiguousRanksError("one rank per point required")
        if len(set(self.domain)) != len(self.domain):
            raise NonContiguousRanksError("duplicate points in ranking domain")
        if set(self.ranks) != set(range(max(self.ranks) + 1)):
            raise NonContiguousRanksError("ranks must cover 0..m without gaps")
        return self

    def rank_of(self, point: Raf) -> int:
        try:
            return self.ranks[self.domain.index(point)]
        except ValueError:
            raise UnknownPointError(f"point {point} not in ranking domain") from None

    def blocks(self) -> tuple[tuple[Raf, ...], ...]:
        out: list[list[Raf]] = [[] for _ in range(max(self.ranks) + 1)]
        for point, rank in zip(self.domain, self.ranks):
            out[rank].append(point)
        return tuple(tuple(block) for block in out)

    def chain(self) -> str:
        """Human-readable ordering, e.g. "(1, 1) ≻ (1, 0) ∼ (0, 1) ≻ (0, 0)"."""
        return " ≻ ".join(
            " ∼ ".join(str(p) for p in block) for block in self.blocks()
        )


class TableRelation(PreferenceRelation):
    """Comparator backed by an explicit rank table on a finite domain."""

    name = "table"

    def __init__(self, ranking: RankedRelation) -> None:
        ranking.validate()
        self.ranking = ranking
        self._rank = dict(zip(ranking.domain, ranking.ranks))

    def compare(self, a: Raf, b: Raf) -> ComparisonOutcome:
        try:
            ra = self._rank[a]
            rb = self._rank[b]
        except KeyError as missing:
            raise UnknownPointError(
                f"point {missing.args[0]} not in table domain"
            ) from None
        # lower rank is better
        return _outcome_of(rb, ra)


def table_relation(ranks: RankedRelation) -> TableRelation:
    """Wrap a validated rank table as a relation."""
    return TableRelation(ranks)
