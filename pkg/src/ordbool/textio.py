"""Poset text format and DOT export.

The file format is line oriented with ``#`` comments::

    poset NAME          # once, first meaningful line
    bottom LABEL        # optional
    top LABEL           # optional
    elem L1 L2 ...      # repeatable
    lt A B              # repeatable, meaning A < B

Printing emits the transitive reduction minus the edges already implied
by the bound declarations, so files stay small and round-trip exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .poset import Poset, build_poset


@dataclass(frozen=True)
class PosetDoc:
    """Parsed form of the text format; building may still fail semantically."""

    name: str
    bottom: str | None
    top: str | None
    elems: tuple[str, ...]
    gens: tuple[tuple[str, str], ...]

    def build(self) -> Poset:
        return build_poset(self.name, self.elems, self.gens, self.bottom, self.top)


def parse_poset_text(text: str) -> PosetDoc:
    """Parse the line format above; raises ParseError with line/column."""
    name = None
    bottom = None
    top = None
    elems: list[str] = []
    gens: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        words = line.split()
        if not words:
            continue
        directive = words[0]
        col = line.index(directive) + 1

        def fail(msg: str):
            raise ParseError(msg, line=lineno, column=col)

        if directive == "poset":
            if name is not None:
                fail("duplicate poset line")
            if len(words) != 2:
                fail("poset takes exactly one name")
            name = words[1]
        elif directive == "bottom":
            if bottom is not None:
                fail("duplicate bottom line")
            if len(words) != 2:
                fail("bottom takes exactly one label")
            bottom = words[1]
        elif directive == "top":
            if top is not None:
                fail("duplicate top line")
            if len(words) != 2:
                fail("top takes exactly one label")
            top = words[1]
        elif directive == "elem":
            if len(words) < 2:
                fail("elem needs at least one label")
            elems.extend(words[1:])
        elif directive == "lt":
            if len(words) != 3:
                fail("lt takes exactly two labels")
            gens.append((words[1], words[2]))
        else:
            fail(f"unknown directive {directive!r}")
    if name is None:
        raise ParseError("missing 'poset NAME' line", line=1, column=1)
    return PosetDoc(name, bottom, top, tuple(elems), tuple(gens))


def poset_to_doc(p: Poset) -> PosetDoc:
    """Document form of a built poset: reduction edges not implied by the bounds."""
    gens = tuple(
        (a, b) for a, b in p.cover_pairs if a != p.bottom and b != p.top
    )
    return PosetDoc(p.name, p.bottom, p.top, p.elems, gens)


def format_poset_doc(doc: PosetDoc) -> str:
    lines = [f"poset {doc.name}"]
    if doc.bottom is not None:
        lines.append(f"bottom {doc.bottom}")
    if doc.top is not None:
        lines.append(f"top {doc.top}")
    if doc.elems:
        lines.append("elem " + " ".join(doc.elems))
    for a, b in doc.gens:
        lines.append(f"lt {a} {b}")
    return "\n".join(lines) + "\n"


def format_poset_text(p: Poset) -> str:
    """Canonical file form of a poset; parses back to an equal order."""
    return format_poset_doc(poset_to_doc(p))


def render_dot(p: Poset) -> str:
    """DOT digraph of the transitive reduction, bottom at the source rank."""
    lines = [f'digraph "{p.name}" {{', "  rankdir=BT;", f'  {{ rank=source; "{p.bottom}"; }}']
    for v in p.elems:
        lines.append(f'  "{v}";')
    for a, b in p.cover_pairs:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
