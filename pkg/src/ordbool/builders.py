"""Constructors for the built-in fixtures and for poset families.

The fixture catalogue collects every small poset used by the worked
examples and counterexamples, so tests and the CLI can refer to them by
name.  Synthesized bounds keep the reserved ``_bot``/``_top`` labels;
fixtures whose examples name their own extremes declare them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import AmbiguousBounds, EmptyInput, TooManyAtoms, UnknownFixture
from .poset import Poset, build_poset


@dataclass(frozen=True)
class ValuedFactor:
    """A chain of labels ordered by strictly increasing integer values."""

    labels: tuple[str, ...]
    value_of: Mapping[str, int]

    def __post_init__(self):
        if not self.labels:
            raise EmptyInput("a factor needs at least one label")
        values = [self.value_of[l] for l in self.labels]
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ValueError("factor values must be strictly increasing")

    @classmethod
    def from_values(cls, values: Sequence[int], suffix: str = "") -> "ValuedFactor":
        labels = tuple(f"{v}{suffix}" for v in values)
        return cls(labels, dict(zip(labels, values)))


def powerset_lattice(atoms: Sequence[str]) -> Poset:
    """All subsets of up to five atoms, ordered by proper inclusion.

    Subset labels are the sorted atom strings joined together; the empty
    set takes the reserved bottom label (the expression evaluator also
    accepts ``empty`` for it).
    """
    atoms = list(atoms)
    if not atoms:
        raise EmptyInput("powerset of no atoms")
    if len(atoms) > 5:
        raise TooManyAtoms(f"{len(atoms)} atoms would give {2 ** len(atoms)} subsets")
    base = sorted(atoms)
    labels = []
    subsets = []
    for mask in range(1 << len(base)):
        chosen = [a for i, a in enumerate(base) if mask & (1 << i)]
        subsets.append(frozenset(chosen))
        labels.append(subset_label(chosen))
    gens = [
        (labels[i], labels[j])
        for i, u in enumerate(subsets)
        for j, v in enumerate(subsets)
        if u < v
    ]
    name = "powerset_" + "".join(base)
    return build_poset(name, labels, gens, bottom=labels[0], top=subset_label(base))


def subset_label(atoms: Iterable[str]) -> str:
    """Canonical element label for a set of atoms ('_bot' for the empty set)."""
    atoms = sorted(atoms)
    return "".join(atoms) if atoms else "_bot"


def subset_family_poset(family: Sequence[Iterable[str]], name: str = "family") -> Poset:
    """A chosen family of atom sets ordered by proper inclusion.

    When the family already has a least (greatest) member under
    inclusion it becomes the bottom (top); otherwise bounds are
    synthesized.
    """
    if not family:
        raise EmptyInput("empty subset family")
    sets = [frozenset(s) for s in family]
    labels = [subset_label(s) for s in sets]
    gens = [
        (labels[i], labels[j])
        for i, u in enumerate(sets)
        for j, v in enumerate(sets)
        if u < v
    ]
    bottom = top = None
    for lab, s in zip(labels, sets):
        if all(s <= other for other in sets):
            bottom = lab
        if all(other <= s for other in sets):
            top = lab
    return build_poset(name, labels, gens, bottom=bottom, top=top)


def valued_product(f1: ValuedFactor, f2: ValuedFactor, name: str = "product") -> Poset:
    """Pairs from two valued chains, ordered by the sum of their values.

    Equal sums are incomparable; the bounds must be the unique pairs of
    extreme sum, otherwise AmbiguousBounds is raised.
    """
    pairs = [(a, b) for a in f1.labels for b in f2.labels]
    label = {pair: f"{pair[0]}_{pair[1]}" for pair in pairs}
    total = {pair: f1.value_of[pair[0]] + f2.value_of[pair[1]] for pair in pairs}
    lo, hi = min(total.values()), max(total.values())
    bottoms = [pair for pair in pairs if total[pair] == lo]
    tops = [pair for pair in pairs if total[pair] == hi]
    if len(bottoms) != 1:
        raise AmbiguousBounds(f"{len(bottoms)} pairs tie for the minimal sum")
    if len(tops) != 1:
        raise AmbiguousBounds(f"{len(tops)} pairs tie for the maximal sum")
    gens = [
        (label[s], label[t]) for s in pairs for t in pairs if total[s] < total[t]
    ]
    return build_poset(
        name, [label[pr] for pr in pairs], gens,
        bottom=label[bottoms[0]], top=label[tops[0]],
    )


def random_poset(n: int, density: Fraction | float, seed: int) -> Poset:
    """Seeded random order on n inner elements plus synthesized bounds.

    Each forward pair (i, j) with i < j becomes a generator with the
    given probability; the result is deterministic for fixed arguments.
    Density 0 gives an antichain, density 1 a chain.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("n must be an integer >= 2")
    dens = float(density)
    if not 0.0 <= dens <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    labels = [f"v{i}" for i in range(n)]
    rng = random.Random(seed)
    gens = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < dens
    ]
    return build_poset(f"random-n{n}-s{seed}", labels, gens)


def _v1_like(name: str) -> Poset:
    return build_poset(name, ["a", "b"], [])


def _fixture_supinf() -> Poset:
    elems = ["a", "b", "c", "d", "x", "x'", "y", "e", "e'", "f", "f'"]
    chains = [
        ["e", "c", "x", "a", "f"],
        ["e", "d", "x'", "b", "f"],
        ["c", "x'", "a"],
        ["d", "x", "b"],
        ["e", "y", "f"],
        ["e'", "x'", "f'"],
        ["e'", "y", "f'"],
    ]
    gens = []
    for chain in chains:
        gens.extend(zip(chain, chain[1:]))
    return build_poset("supinf", elems, gens)


_FIXTURE_BUILDERS = {
    "v1": lambda: _v1_like("v1"),
    "alt": lambda: build_poset("alt", ["a", "b", "c", "d"], [("d", "b"), ("d", "c")]),
    "dist": lambda: build_poset("dist", ["x", "y", "z"], []),
    "nn": lambda: build_poset("nn", ["x", "x'", "y"], [("x", "x'")]),
    "orth": lambda: build_poset(
        "orth", ["a", "b", "c", "ab"], [("a", "ab"), ("b", "ab")]
    ),
    "htv": lambda: build_poset("htv", ["a", "b", "b'", "c"], [("b", "b'")]),
    "supinf": _fixture_supinf,
    "schnitt1": lambda: subset_family_poset(
        [
            [],
            ["a"],
            ["a", "a'"],
            ["c"],
            ["c", "c'"],
            ["a", "a'", "b"],
            ["b", "c", "c'"],
            ["b"],
            ["a", "a'", "b", "c", "c'"],
        ],
        name="schnitt1",
    ),
    "schnitt2": lambda: subset_family_poset(
        [
            [],
            ["a", "b"],
            ["a", "a'", "b"],
            ["a", "a'"],
            ["b", "b'"],
            ["a", "a'", "b", "b'"],
        ],
        name="schnitt2",
    ),
    "eq1a": lambda: _v1_like("eq1a"),
    "eq1b": lambda: subset_family_poset(
        [[], ["a"], ["b", "d"], ["a", "b", "c"], ["a", "b", "c", "d"]],
        name="eq1b",
    ),
    "eq1c": lambda: subset_family_poset(
        [[], ["a"], ["a", "a'"], ["b"], ["b", "b'"], ["a", "a'", "b", "b'"]],
        name="eq1c",
    ),
    "pprime": lambda: build_poset(
        "pprime", ["a", "a'", "b", "b'"], [("a", "a'"), ("b", "b'")]
    ),
    "seq_unit": lambda: valued_product(
        ValuedFactor.from_values([0, 1]),
        ValuedFactor.from_values([0, 1], suffix="'"),
        name="seq_unit",
    ),
    "seq_weighted": lambda: valued_product(
        ValuedFactor.from_values([0, 2]),
        ValuedFactor.from_values([0, 1], suffix="'"),
        name="seq_weighted",
    ),
    "remark_ss": lambda: build_poset("remark_ss", ["a", "b"], [("a", "b")]),
}

FIXTURE_NAMES = tuple(sorted(_FIXTURE_BUILDERS))


def builtin_fixture(name: str) -> Poset:
    """One of the built-in worked-example posets, by catalogue name."""
    try:
        builder = _FIXTURE_BUILDERS[name]
    except KeyError:
        known = ", ".join(FIXTURE_NAMES)
        raise UnknownFixture(f"unknown fixture {name!r} (known: {known})") from None
    return builder()


def all_fixtures() -> dict[str, Poset]:
    """Fresh instances of every catalogued fixture."""
    return {name: builtin_fixture(name) for name in FIXTURE_NAMES}
