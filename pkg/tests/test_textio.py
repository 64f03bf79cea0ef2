"""Poset file format and DOT export."""

import pytest

from ordbool import (
    CycleDetected,
    ParseError,
    format_poset_text,
    builtin_fixture,
    parse_poset_text,
    poset_to_doc,
    render_dot,
)
from ordbool.poset import build_poset


class TestParse:
    def test_minimal_file(self):
        doc = parse_poset_text("poset tiny\nelem a b\nlt a b\n")
        p = doc.build()
        assert p.lt("a", "b") and p.bottom == "_bot"

    def test_comments_and_blank_lines(self):
        text = "# heading\n\nposet t  # name\nelem a b  # two atoms\n"
        doc = parse_poset_text(text)
        assert doc.name == "t" and doc.elems == ("a", "b")

    def test_positioned_errors(self):
        with pytest.raises(ParseError) as err:
            parse_poset_text("poset t\nwhatever a b\n")
        assert err.value.line == 2 and err.value.column == 1
        with pytest.raises(ParseError):
            parse_poset_text("elem a b\n")  # missing poset line
        with pytest.raises(ParseError):
            parse_poset_text("poset t\nposet u\n")
        with pytest.raises(ParseError):
            parse_poset_text("poset t\nlt a\n")

    def test_semantic_errors_surface_at_build(self):
        doc = parse_poset_text("poset t\nelem a\nlt a a\n")
        with pytest.raises(CycleDetected):
            doc.build()


class TestRoundTrip:
    def test_doc_round_trip_for_every_fixture(self, fixtures):
        for p in fixtures.values():
            doc = poset_to_doc(p)
            assert parse_poset_text(format_poset_text(p)) == doc

    def test_reparsed_poset_has_the_same_order(self, fixtures):
        for p in fixtures.values():
            q = parse_poset_text(format_poset_text(p)).build()
            assert q.elems == p.elems
            assert q.bottom == p.bottom and q.top == p.top
            assert {(a, b) for a in p.elems for b in p.above(a)} == {
                (a, b) for a in q.elems for b in q.above(a)
            }
            assert q.height_of == p.height_of

    def test_supinf_file_census(self):
        text = format_poset_text(builtin_fixture("supinf"))
        assert len(parse_poset_text(text).build()) == 13


class TestDot:
    def test_diamond_has_four_nodes_four_edges(self, v1):
        dot = render_dot(v1)
        lines = [l.strip() for l in dot.splitlines()]
        nodes = [l for l in lines if l.endswith('";') and "->" not in l]
        edges = [l for l in lines if "->" in l]
        assert len(nodes) == 4
        assert len(edges) == 4

    def test_reduction_only(self, supinf):
        dot = render_dot(supinf)
        assert '"e" -> "c";' in dot
        assert '"e" -> "x";' not in dot  # transitive, must be omitted

    def test_chain_edge_count(self):
        p = build_poset("chain", ["a", "b", "c"], [("a", "b"), ("b", "c")])
        dot = render_dot(p)
        assert dot.count("->") == 4  # bot-a-b-c-top

    def test_no_transitive_edges_anywhere(self, fixtures):
        for p in fixtures.values():
            for a, b in p.cover_pairs:
                assert not (p.above(a) & p.below(b))

    def test_bottom_at_rank_source(self, v1):
        assert '{ rank=source; "_bot"; }' in render_dot(v1)
