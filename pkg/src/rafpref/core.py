"""Exact-rational availability profiles over a fixed priority order.

Probabilities are ``fractions.Fraction`` throughout and every comparison
reduces to exact integer arithmetic. Floats never enter a comparison path:
the first-difference test that drives the priority-order comparator needs
exact coordinate equality, which binary floating point would corrupt.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence, Union

__all__ = [
    "Rational",
    "RafprefError",
    "RationalParseError",
    "OutOfRangeError",
    "ArityMismatchError",
    "ContextMismatchError",
    "InvalidContextError",
    "InvalidGridError",
    "parse_rational",
    "format_rational",
    "PriorityContext",
    "Raf",
    "make_raf",
    "require_same_context",
    "first_difference",
    "strictly_dominates",
    "pointwise_geq",
    "GridSpec",
    "default_context",
    "grid_points",
]

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Union[Fraction, int, str]


class RafprefError(Exception):
    """Base class for every error this package raises deliberately."""


class RationalParseError(RafprefError, ValueError):
    """String or value is not an exact rational literal."""


class OutOfRangeError(RafprefError, ValueError):
    """Availability value outside [0, 1]."""


class ArityMismatchError(RafprefError, ValueError):
    """Value count does not match the context's number of alternatives."""


class ContextMismatchError(RafprefError, ValueError):
    """Binary operation applied to profiles from different contexts."""


class InvalidContextError(RafprefError, ValueError):
    """Priority context violates its invariants."""


class InvalidGridError(RafprefError, ValueError):
    """Grid specification violates its invariants."""


_FRACTION_RE = re.compile(r"^([+-]?\d+)/(\d+)$")
_DECIMAL_RE = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (with q > 0) or a finite decimal, exactly.

    Decimals convert without rounding ("0.8" is 4/5). Exponents and any
    other float notation are rejected so no inexactness can sneak in.
    """
    s = text.strip()
    m = _FRACTION_RE.match(s)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _DECIMAL_RE.match(s):
        return Fraction(s)
    raise RationalParseError(
        f"not a rational literal: {text!r} (use p/q or a finite decimal)"
    )


def format_rational(value: Fraction) -> str:
    """Lowest-terms string form; parse_rational(format_rational(q)) == q."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def coerce_rational(value: RationalLike) -> Fraction:
    """Accept Fraction, int, or rational string. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalParseError(f"cannot interpret {value!r} as an exact rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise RationalParseError(
            f"refusing float {value!r}: pass an exact rational instead"
        )
    raise RationalParseError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class PriorityContext:
    """The alternatives in decreasing priority order, with optional pay-offs.

    Position i holds the alternative of priority rank i+1. All profiles
    built against one context index their values identically, and mixing
    contexts in any binary operation is a hard error rather than a silent
    reindexing.
    """

    alternatives: tuple[str, ...]
    payoffs: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self) -> None:
        if len(self.alternatives) < 2:
            raise InvalidContextError("a context needs at least two alternatives")
        if len(set(self.alternatives)) != len(self.alternatives):
            raise InvalidContextError("alternative labels must be pairwise distinct")
        if self.payoffs is not None:
            if len(self.payoffs) != len(self.alternatives):
                raise InvalidContextError(
                    f"expected {len(self.alternatives)} payoffs, got {len(self.payoffs)}"
                )
            for alt, pay in zip(self.alternatives, self.payoffs):
                if pay < ZERO:
                    raise InvalidContextError(f"payoff for {alt!r} must be nonnegative")

    @classmethod
    def of(
        cls,
        alternatives: Sequence[str],
        payoffs: Optional[Mapping[str, RationalLike]] = None,
    ) -> "PriorityContext":
        """Build a context, accepting payoffs as a label-keyed mapping."""
        alts = tuple(alternatives)
        pay: Optional[tuple[Fraction, ...]] = None
        if payoffs is not None:
            missing = [a for a in alts if a not in payoffs]
            if missing:
                raise InvalidContextError(f"payoff missing for {missing[0]!r}")
            extra = [a for a in payoffs if a not in alts]
            if extra:
                raise InvalidContextError(f"payoff for unknown alternative {extra[0]!r}")
            pay = tuple(coerce_rational(payoffs[a]) for a in alts)
        return cls(alts, pay)

    @property
    def arity(self) -> int:
        return len(self.alternatives)

    def index_of(self, label: str) -> int:
        try:
            return self.alternatives.index(label)
        except ValueError:
            raise InvalidContextError(f"unknown alternative {label!r}") from None


@dataclass(frozen=True, repr=False)
class Raf:
    """One availability profile: an exact probability per alternative."""

    context: PriorityContext
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.context.arity:
            raise ArityMismatchError(
                f"expected {self.context.arity} values, got {len(self.values)}"
            )
        for v in self.values:
            if v < ZERO or v > ONE:
                raise OutOfRangeError(
                    f"availability {format_rational(v)} lies outside [0, 1]"
                )

    def value_of(self, label: str) -> Fraction:
        return self.values[self.context.index_of(label)]

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(v) for v in self.values) + ")"

    def __repr__(self) -> str:
        return f"Raf{self}"


def make_raf(values: Iterable[RationalLike], ctx: PriorityContext) -> Raf:
    """Validated profile constructor; accepts ints, fractions, or strings."""
    return Raf(ctx, tuple(coerce_rational(v) for v in values))


def require_same_context(a: Raf, b: Raf) -> None:
    if a.context != b.context:
        raise ContextMismatchError(
            "profiles built on different contexts cannot be compared"
        )


def first_difference(a: Raf, b: Raf) -> Optional[int]:
    """1-based index of the highest-priority coordinate where a and b differ.

    Returns None exactly when the profiles are equal; symmetric in its
    arguments.
    """
    require_same_context(a, b)
    for i, (x, y) in enumerate(zip(a.values, b.values)):
        if x != y:
            return i + 1
    return None


def strictly_dominates(a: Raf, b: Raf) -> bool:
    """True when a exceeds b at every alternative."""
    require_same_context(a, b)
    return all(x > y for x, y in zip(a.values, b.values))


def pointwise_geq(a: Raf, b: Raf) -> bool:
    """True when a is at least b at every alternative."""
    require_same_context(a, b)
    return all(x >= y for x, y in zip(a.values, b.values))


@dataclass(frozen=True)
class GridSpec:
    """A finite product grid: the same sorted levels at every coordinate."""

    levels: tuple[Fraction, ...]
    arity: int

    def __post_init__(self) -> None:
        if not self.levels:
            raise InvalidGridError("a grid needs at least one level")
        for v in self.levels:
            if v < ZERO or v > ONE:
                raise InvalidGridError(f"level {format_rational(v)} outside [0, 1]")
        for lo, hi in zip(self.levels, self.levels[1:]):
            if lo >= hi:
                raise InvalidGridError("levels must be strictly increasing")
        if self.arity < 2:
            raise InvalidGridError("arity must be at least 2")

    @classmethod
    def of(cls, levels: Iterable[RationalLike], arity: int) -> "GridSpec":
        """Normalizing constructor: coerces, sorts, and deduplicates levels."""
        distinct = sorted({coerce_rational(v) for v in levels})
        return cls(tuple(distinct), int(arity))

    @property
    def size(self) -> int:
        return len(self.levels) ** self.arity


def default_context(arity: int) -> PriorityContext:
    """Anonymous context x1..xK, used when only the grid geometry matters."""
    return PriorityContext(tuple(f"x{i}" for i in range(1, arity + 1)))


def grid_points(spec: GridSpec, ctx: Optional[PriorityContext] = None) -> list[Raf]:
    """Every grid point as a profile, in a fixed deterministic order.

    The order is lexicographic over level positions with the first
    (highest-priority) coordinate varying slowest, so repeated calls and
    separate processes enumerate identically.
    """
    if ctx is None:
        ctx = default_context(spec.arity)
    elif ctx.arity != spec.arity:
        raise ArityMismatchError(
            f"context has {ctx.arity} alternatives but the grid arity is {spec.arity}"
        )
    return [Raf(ctx, vals) for vals in product(spec.levels, repeat=spec.arity)]
