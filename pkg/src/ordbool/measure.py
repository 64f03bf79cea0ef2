"""Height-based set sizes and the two probability notions built on them.

The quick measure takes the maximal height in a set; the summed measure
adds up all member heights (a plain point measure).  Both are divided
by their value on the relevant whole to give probabilities, which are
kept as exact rationals throughout: every comparison is exact, never
tolerance-based.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import DegenerateConditional, EmptyInput
from .ops import Variant, neg_set, set_meet
from .poset import ElemSet, Poset, member_set
from .signed import SignedSet, signed_height

Rational = Fraction


class MeasureKind(Enum):
    MAX_HEIGHT = "max"
    SUM_HEIGHT = "sum"


def ht_of_set(p: Poset, members: Iterable[str]) -> int:
    """Maximal element height within a nonempty set."""
    X = member_set(p, members)
    if not X:
        raise EmptyInput("height of the empty set")
    return max(p.height_of[x] for x in X)


def prob_max(p: Poset, members: Iterable[str]) -> Fraction:
    """Relative height: max height over the set divided by the top's height."""
    return Fraction(ht_of_set(p, members), p.height_of[p.top])


def mu(p: Poset, members: Iterable[str]) -> int:
    """Summed heights of the members; zero on the empty set."""
    X = member_set(p, members)
    return sum(p.height_of[x] for x in X)


def prob_sum(p: Poset, members: Iterable[str]) -> Fraction:
    """Summed-height measure of the set relative to the whole poset."""
    return Fraction(mu(p, members), mu(p, p.ground))


def prob_signed(p: Poset, s: SignedSet) -> Fraction:
    """Relative height of the intended sup/inf element.

    May fall outside [0, 1]; the value is returned unclamped and it is
    up to the caller (e.g. the CLI printer) to flag it.
    """
    return Fraction(signed_height(p, s), p.height_of[p.top])


def _prob(p: Poset, X: ElemSet, kind: MeasureKind) -> Fraction:
    if kind is MeasureKind.MAX_HEIGHT:
        return prob_max(p, X)
    return prob_sum(p, X)


def indep_product(p: Poset, a: Iterable[str], b: Iterable[str], kind: MeasureKind) -> bool:
    """Product rule: P(A meet B) equals P(A) * P(B), compared exactly."""
    A = member_set(p, a)
    B = member_set(p, b)
    if not A or not B:
        raise EmptyInput("independence needs nonempty sets")
    return _prob(p, set_meet(p, A, B, Variant.RAW), kind) == _prob(p, A, kind) * _prob(p, B, kind)


def indep_threshold(
    p: Poset,
    a: Iterable[str],
    b: Iterable[str],
    alpha: Fraction | None = None,
    kind: MeasureKind = MeasureKind.MAX_HEIGHT,
) -> bool:
    """Threshold test: conditioning on A and on not-A brackets the level alpha.

    alpha defaults to P(B).  Holds when P(B|A) hits alpha exactly, or
    when P(B|A) and P(B|not A) land on opposite sides of it.  Raises
    DegenerateConditional when P(A) or P(not A) is zero.
    """
    A = member_set(p, a)
    B = member_set(p, b)
    if not A or not B:
        raise EmptyInput("independence needs nonempty sets")
    neg_a = neg_set(p, A, Variant.RAW)
    p_a = _prob(p, A, kind)
    p_neg_a = _prob(p, neg_a, kind)
    if p_a == 0 or p_neg_a == 0:
        raise DegenerateConditional("conditioning probability is zero")
    if alpha is None:
        alpha = _prob(p, B, kind)
    given_a = _prob(p, set_meet(p, A, B, Variant.RAW), kind) / p_a
    given_neg_a = _prob(p, set_meet(p, neg_a, B, Variant.RAW), kind) / p_neg_a
    if given_a == alpha:
        return True
    if given_a < alpha:
        return given_neg_a >= alpha
    return given_neg_a <= alpha
