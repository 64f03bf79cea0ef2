"""Generalized Boolean operators on posets that need not be complete.

Because a pair of elements may lack a greatest lower / least upper
bound, every operator returns the full *set* of bounds (the raw form,
which always contains bottom resp. top) and can be refined to its
order-maximal/minimal members (prime) or to its height-extremal members
(height-prime).  The height refinement discards order-maximal elements
of non-extremal height, so information is lost when its output feeds
further operators; prefer the prime form for composition.

The alternative set operators (pairwise intersection and union-based)
are kept as first-class citizens precisely because they misbehave;
their failures are pinned by tests.
"""

from __future__ import annotations

from enum import Enum
from functools import reduce
from typing import Iterable, Sequence

from .errors import EmptyInput
from .poset import (
    ElemSet,
    Extreme,
    HtExtreme,
    Poset,
    extremes,
    extremes_by_height,
    member_set,
)


class Variant(Enum):
    """How to post-process a raw bound set.

    RAW keeps every bound, PRIME keeps the order-extremal ones, and
    HT_PRIME keeps the height-extremal ones.  Meet, negation and
    difference refine towards maxima; join refines towards minima.
    """

    RAW = "raw"
    PRIME = "prime"
    HT_PRIME = "htprime"


class AltKind(Enum):
    PAIRWISE = "pairwise"
    UNION_BASED = "union"


def _refine_lower(p: Poset, s: ElemSet, v: Variant) -> ElemSet:
    if v is Variant.RAW:
        return s
    if v is Variant.PRIME:
        return extremes(p, s, Extreme.MAX)
    return extremes_by_height(p, s, HtExtreme.MAXHT)


def _refine_upper(p: Poset, s: ElemSet, v: Variant) -> ElemSet:
    if v is Variant.RAW:
        return s
    if v is Variant.PRIME:
        return extremes(p, s, Extreme.MIN)
    return extremes_by_height(p, s, HtExtreme.MINHT)


def meet_all(p: Poset, xs: Sequence[str], v: Variant = Variant.RAW) -> ElemSet:
    """Common lower bounds of all the given elements (never empty: contains bottom)."""
    if not xs:
        raise EmptyInput("meet over no elements")
    for x in xs:
        p.require(x)
    raw = reduce(frozenset.__and__, (p.downset(x) for x in xs))
    return _refine_lower(p, raw, v)


def join_all(p: Poset, xs: Sequence[str], v: Variant = Variant.RAW) -> ElemSet:
    """Common upper bounds of all the given elements (never empty: contains top)."""
    if not xs:
        raise EmptyInput("join over no elements")
    for x in xs:
        p.require(x)
    raw = reduce(frozenset.__and__, (p.upset(x) for x in xs))
    return _refine_upper(p, raw, v)


def neg_set(p: Poset, members: Iterable[str], v: Variant = Variant.RAW) -> ElemSet:
    """Elements orthogonal to everything in the set (contains bottom)."""
    X = member_set(p, members)
    if not X:
        raise EmptyInput("negation of the empty set")
    raw = reduce(frozenset.__and__, (p.orth_of(x) for x in X))
    return _refine_lower(p, raw, v)


def minus(p: Poset, x: str, y: str, v: Variant = Variant.RAW) -> ElemSet:
    """Direct difference: everything at or below x and orthogonal to y."""
    p.require(x)
    p.require(y)
    raw = p.downset(x) & p.orth_of(y)
    return _refine_lower(p, raw, v)


def set_meet(p: Poset, xs: Iterable[str], ys: Iterable[str], v: Variant = Variant.RAW) -> ElemSet:
    """Union of the pairwise meets, then refined."""
    X = member_set(p, xs)
    Y = member_set(p, ys)
    if not X or not Y:
        raise EmptyInput("set_meet needs nonempty sets")
    raw: set[str] = set()
    for x in X:
        dx = p.downset(x)
        for y in Y:
            raw |= dx & p.downset(y)
    return _refine_lower(p, frozenset(raw), v)


def set_join(p: Poset, xs: Iterable[str], ys: Iterable[str], v: Variant = Variant.RAW) -> ElemSet:
    """Union of the pairwise joins, then refined."""
    X = member_set(p, xs)
    Y = member_set(p, ys)
    if not X or not Y:
        raise EmptyInput("set_join needs nonempty sets")
    raw: set[str] = set()
    for x in X:
        ux = p.upset(x)
        for y in Y:
            raw |= ux & p.upset(y)
    return _refine_upper(p, frozenset(raw), v)


def set_minus(p: Poset, xs: Iterable[str], ys: Iterable[str], v: Variant = Variant.RAW) -> ElemSet:
    """Abbreviation: X meet (negation of Y)."""
    X = member_set(p, xs)
    Y = member_set(p, ys)
    if not X or not Y:
        raise EmptyInput("set_minus needs nonempty sets")
    return set_meet(p, X, neg_set(p, Y, Variant.RAW), v)


def alt_meet(p: Poset, xs: Iterable[str], ys: Iterable[str], kind: AltKind) -> ElemSet:
    """Rejected alternatives: intersect the pairwise meets, or meet over the union."""
    X = member_set(p, xs)
    Y = member_set(p, ys)
    if not X or not Y:
        raise EmptyInput("alt_meet needs nonempty sets")
    if kind is AltKind.PAIRWISE:
        parts = [p.downset(x) & p.downset(y) for x in X for y in Y]
        return reduce(frozenset.__and__, parts)
    return meet_all(p, sorted(X | Y), Variant.RAW)


def alt_join(p: Poset, xs: Iterable[str], ys: Iterable[str], kind: AltKind) -> ElemSet:
    """Dual of alt_meet."""
    X = member_set(p, xs)
    Y = member_set(p, ys)
    if not X or not Y:
        raise EmptyInput("alt_join needs nonempty sets")
    if kind is AltKind.PAIRWISE:
        parts = [p.upset(x) & p.upset(y) for x in X for y in Y]
        return reduce(frozenset.__and__, parts)
    return join_all(p, sorted(X | Y), Variant.RAW)


def alt_neg1(p: Poset, members: Iterable[str]) -> ElemSet:
    """Elements orthogonal to at least one member (not antitone; kept for study)."""
    X = member_set(p, members)
    if not X:
        raise EmptyInput("alt_neg1 of the empty set")
    return reduce(frozenset.__or__, (p.orth_of(x) for x in X))
