"""Finite strict partial orders with distinguished bounds and cached heights.

A poset here is always finite, carries its strict order transitively
closed, and has a least element (bottom) and a greatest element (top).
When the input does not name its own bounds, fresh ``_bot``/``_top``
elements are adjoined below/above everything.  Heights (longest chain
from bottom, counting steps) are computed once at build time.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import (
    BoundsViolation,
    CycleDetected,
    DuplicateLabel,
    EmptyInput,
    InvalidLabel,
    TooSmall,
    UnknownLabel,
)

ElemSet = frozenset[str]

BOT_LABEL = "_bot"
TOP_LABEL = "_top"


class Rel(Enum):
    """Outcome of comparing two elements."""

    LT = "lt"
    GT = "gt"
    EQ = "eq"
    INCOMPARABLE = "incomparable"


class Extreme(Enum):
    MIN = "min"
    MAX = "max"


class HtExtreme(Enum):
    MINHT = "minht"
    MAXHT = "maxht"


class CompareMode(Enum):
    """Set-to-set comparison flavours.

    LEQ: every member of X sits below some member of Y.
    LEQ1: every member of Y has some member of X below it (the rejected
        variant, kept because it admits a documented counterexample).
    LT: LEQ holds and some y in Y strictly dominates all of X's part
        below it (literal existential reading).
    """

    LEQ = "leq"
    LT = "lt"
    LEQ1 = "leq1"


def _check_label(label: str) -> None:
    if not isinstance(label, str) or not label:
        raise InvalidLabel(f"label must be a nonempty string, got {label!r}")
    if any(ch.isspace() for ch in label):
        raise InvalidLabel(f"label {label!r} contains whitespace")
    if label.startswith("_") and label not in (BOT_LABEL, TOP_LABEL):
        raise InvalidLabel(f"label {label!r} starts with '_' (reserved prefix)")


def _transitive_closure(
    order: Sequence[str], succ: Mapping[str, set[str]]
) -> dict[str, frozenset[str]]:
    """Strictly-above sets for every node; raises CycleDetected on any loop."""
    color = dict.fromkeys(order, 0)  # 0 new, 1 on stack, 2 done
    above: dict[str, frozenset[str]] = {}
    for root in order:
        if color[root] == 2:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            node, children = stack[-1]
            pushed = False
            for child in children:
                if color[child] == 1:
                    raise CycleDetected(f"relation loops through {child!r}")
                if color[child] == 0:
                    color[child] = 1
                    stack.append((child, iter(succ[child])))
                    pushed = True
                    break
            if not pushed:
                reach: set[str] = set()
                for child in succ[node]:
                    reach.add(child)
                    reach |= above[child]
                above[node] = frozenset(reach)
                color[node] = 2
                stack.pop()
    return above


class Poset:
    """Immutable validated finite strict order.

    Construct via :func:`build_poset` or the builders module; instances
    are never mutated afterwards, so they may be freely shared between
    threads.  ``elems`` preserves declaration order (synthesized bounds
    sit at the ends), ``gen_edges`` is the pre-closure relation the
    order was generated from (including the implicit bound edges), and
    ``cover_pairs`` is the transitive reduction.
    """

    __slots__ = (
        "name",
        "elems",
        "bottom",
        "top",
        "height_of",
        "gen_edges",
        "cover_pairs",
        "_above",
        "_below",
        "_upsets",
        "_downsets",
        "_members",
        "_orth",
    )

    def __init__(
        self,
        name: str,
        elems: tuple[str, ...],
        bottom: str,
        top: str,
        above: dict[str, frozenset[str]],
        gen_edges: tuple[tuple[str, str], ...],
    ):
        self.name = name
        self.elems = elems
        self.bottom = bottom
        self.top = top
        self._members = frozenset(elems)
        self._above = above
        below: dict[str, set[str]] = {v: set() for v in elems}
        for v in elems:
            for w in above[v]:
                below[w].add(v)
        self._below = {v: frozenset(s) for v, s in below.items()}
        self._upsets = {v: above[v] | {v} for v in elems}
        self._downsets = {v: self._below[v] | {v} for v in elems}
        self.gen_edges = gen_edges
        self.cover_pairs = self._reduction()
        self.height_of = self._heights()
        self._orth: dict[str, ElemSet] = {}

    def _reduction(self) -> tuple[tuple[str, str], ...]:
        index = {v: i for i, v in enumerate(self.elems)}
        pairs = []
        for v in self.elems:
            ups = self._above[v]
            for w in ups:
                # (v, w) is a cover iff nothing sits strictly between.
                if ups.isdisjoint(self._below[w]):
                    pairs.append((v, w))
        pairs.sort(key=lambda e: (index[e[0]], index[e[1]]))
        return tuple(pairs)

    def _heights(self) -> dict[str, int]:
        parents: dict[str, list[str]] = {v: [] for v in self.elems}
        for v, w in self.cover_pairs:
            parents[w].append(v)
        ht: dict[str, int] = {}
        # |below| strictly increases along the order, so it is a topological key.
        for v in sorted(self.elems, key=lambda v: len(self._below[v])):
            if v == self.bottom:
                ht[v] = 0
            else:
                ht[v] = 1 + max(ht[u] for u in parents[v])
        return ht

    def __contains__(self, label: str) -> bool:
        return label in self._members

    def __len__(self) -> int:
        return len(self.elems)

    def __repr__(self) -> str:
        return f"Poset({self.name!r}, {len(self.elems)} elements)"

    @property
    def ground(self) -> ElemSet:
        """All elements, as a frozenset."""
        return self._members

    def require(self, label: str) -> str:
        if label not in self._members:
            raise UnknownLabel(f"{label!r} is not an element of poset {self.name!r}")
        return label

    def lt(self, x: str, y: str) -> bool:
        return y in self._above[x]

    def leq(self, x: str, y: str) -> bool:
        return x == y or y in self._above[x]

    def above(self, x: str) -> ElemSet:
        """Elements strictly greater than x."""
        return self._above[x]

    def below(self, x: str) -> ElemSet:
        """Elements strictly smaller than x."""
        return self._below[x]

    def upset(self, x: str) -> ElemSet:
        """x together with everything above it."""
        return self._upsets[x]

    def downset(self, x: str) -> ElemSet:
        """x together with everything below it."""
        return self._downsets[x]

    def height(self, x: str) -> int:
        self.require(x)
        return self.height_of[x]

    def orth_of(self, x: str) -> ElemSet:
        """Everything orthogonal to x (cached; idempotent, so safe to race)."""
        cached = self._orth.get(x)
        if cached is None:
            only_bot = frozenset((self.bottom,))
            dx = self._downsets[x]
            cached = frozenset(
                a for a in self.elems if dx & self._downsets[a] == only_bot
            )
            self._orth[x] = cached
        return cached


def member_set(p: Poset, members: Iterable[str]) -> ElemSet:
    """Validate membership and freeze an element set."""
    out = frozenset(members)
    for x in out:
        p.require(x)
    return out


def build_poset(
    name: str,
    elems: Sequence[str],
    generators: Iterable[tuple[str, str]],
    bottom: str | None = None,
    top: str | None = None,
) -> Poset:
    """Build and validate a poset from order generators.

    The stored relation is the transitive closure of ``generators`` plus
    the bound edges: the bottom sits strictly below every other element
    and the top strictly above, whether the bounds are declared or
    synthesized as ``_bot``/``_top``.

    Raises InvalidLabel, DuplicateLabel, UnknownLabel, CycleDetected,
    BoundsViolation or TooSmall.
    """
    labels = list(elems)
    for label in labels:
        _check_label(label)
    seen: set[str] = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabel(f"label {label!r} declared twice")
        seen.add(label)
    gens = [(a, b) for a, b in generators]
    for a, b in gens:
        if a not in seen:
            raise UnknownLabel(f"generator endpoint {a!r} not declared")
        if b not in seen:
            raise UnknownLabel(f"generator endpoint {b!r} not declared")

    order = list(labels)
    if bottom is None:
        if BOT_LABEL in seen:
            raise DuplicateLabel(f"{BOT_LABEL!r} is reserved for the synthesized bottom")
        bottom = BOT_LABEL
        order.insert(0, bottom)
    elif bottom not in seen:
        raise UnknownLabel(f"declared bottom {bottom!r} not among the elements")
    if top is None:
        if TOP_LABEL in seen:
            raise DuplicateLabel(f"{TOP_LABEL!r} is reserved for the synthesized top")
        top = TOP_LABEL
        order.append(top)
    elif top not in seen:
        raise UnknownLabel(f"declared top {top!r} not among the elements")

    if len(order) < 2:
        raise TooSmall("a poset needs at least two elements")
    if bottom == top:
        raise BoundsViolation("bottom and top must be distinct")

    succ: dict[str, set[str]] = {v: set() for v in order}
    for a, b in gens:
        succ[a].add(b)
    explicit = _transitive_closure(order, succ)

    for v in order:
        if v != bottom and bottom in explicit[v]:
            raise BoundsViolation(f"declared bottom {bottom!r} lies above {v!r}")
    for v in explicit[top]:
        raise BoundsViolation(f"declared top {top!r} lies below {v!r}")

    # Bound edges close the relation: nothing new composes through them.
    every = set(order)
    above: dict[str, frozenset[str]] = {}
    for v in order:
        reach = set(explicit[v])
        if v != top:
            reach.add(top)
        if v == bottom:
            reach = every - {bottom}
        above[v] = frozenset(reach)

    edge_set = {(a, b) for a, b in gens}
    for v in order:
        if v != bottom:
            edge_set.add((bottom, v))
        if v != top and v != bottom:
            edge_set.add((v, top))
    index = {v: i for i, v in enumerate(order)}
    gen_edges = tuple(sorted(edge_set, key=lambda e: (index[e[0]], index[e[1]])))

    return Poset(name, tuple(order), bottom, top, above, gen_edges)


def order_rel(p: Poset, x: str, y: str) -> Rel:
    """Compare two elements under the stored strict order."""
    p.require(x)
    p.require(y)
    if x == y:
        return Rel.EQ
    if p.lt(x, y):
        return Rel.LT
    if p.lt(y, x):
        return Rel.GT
    return Rel.INCOMPARABLE


def orthogonal(p: Poset, x: str, y: str) -> bool:
    """True iff bottom is the only common lower bound of x and y."""
    p.require(x)
    p.require(y)
    return y in p.orth_of(x)


def extremes(p: Poset, members: Iterable[str], which: Extreme) -> ElemSet:
    """Members with no strictly smaller (MIN) / greater (MAX) member inside the set."""
    X = member_set(p, members)
    if not X:
        raise EmptyInput("extremes of the empty set")
    if which is Extreme.MAX:
        return frozenset(x for x in X if p.above(x).isdisjoint(X))
    return frozenset(x for x in X if p.below(x).isdisjoint(X))


def below_filter(p: Poset, members: Iterable[str], y: str) -> ElemSet:
    """The part of the set at or below y."""
    X = member_set(p, members)
    p.require(y)
    return X & p.downset(y)


def set_compare(p: Poset, xs: Iterable[str], ys: Iterable[str], mode: CompareMode) -> bool:
    X = member_set(p, xs)
    Y = member_set(p, ys)
    if not X or not Y:
        raise EmptyInput("set_compare needs nonempty sets")
    if mode is CompareMode.LEQ:
        return all(any(p.leq(x, y) for y in Y) for x in X)
    if mode is CompareMode.LEQ1:
        return all(any(p.leq(x, y) for x in X) for y in Y)
    if not set_compare(p, X, Y, CompareMode.LEQ):
        return False
    return any(all(p.lt(x, y) for x in X & p.downset(y)) for y in Y)


def height(p: Poset, x: str) -> int:
    """Longest-chain height of x above bottom."""
    return p.height(x)


def extremes_by_height(p: Poset, members: Iterable[str], which: HtExtreme) -> ElemSet:
    """All members attaining the extreme height within the set (ties kept)."""
    X = member_set(p, members)
    if not X:
        raise EmptyInput("extremes_by_height of the empty set")
    hts = {x: p.height_of[x] for x in X}
    pick = max(hts.values()) if which is HtExtreme.MAXHT else min(hts.values())
    return frozenset(x for x, h in hts.items() if h == pick)
