"""Tests for the addressed-graph core: moves, invariants, rotation data."""

import random

import pytest

from basilica.graphs import (
    AddressedGraph,
    ContractionError,
    ExpansionError,
    GraphError,
    addresses_adjacent,
    canonical_form,
    isomorphism,
    make_g0,
    make_j,
    make_o,
    parse_address,
)
from basilica.sampling import random_graph_walk, seed_graphs


def brute_occurrences(g):
    """Rescan every vertex against the contraction site pattern directly."""
    found = []
    for v in sorted(g.vertices):
        if g.degree(v) != 4:
            continue
        rot = g.rotation[v]
        for shift in range(4):
            cyc = rot[shift:] + rot[:shift]
            (p, sp), (q0, sq0), (q1, sq1), (r, sr) = cyc
            if (sp, sq0, sq1, sr) != (1, 0, 1, 0):
                continue
            if q0 != q1 or p == r:
                continue
            if g.is_loop(p) or g.is_loop(r) or not g.is_loop(q0):
                continue
            if g.edges[p][1] != v or g.edges[r][0] != v:
                continue
            found.append(((p, q0, r), v))
            break
    return found


def test_base_graph_shape():
    g0 = make_g0()
    assert sorted(g0.vertices) == ["x", "y"]
    assert sorted(g0.edges) == ["a", "b", "c", "d"]
    assert [(o.triple, o.vertex) for o in g0.occurrences()] == [
        (("d", "a", "b"), "x"),
        (("b", "c", "d"), "y"),
    ]
    assert g0.outer_boundary_walk() == (("a", 0), ("b", 0), ("c", 0), ("d", 0))
    assert sorted(g0.collapsible_vertices()) == ["x", "y"]
    assert g0.defect() == 0
    assert g0.min_edge_bound() == 0


def test_contraction_to_bowtie():
    g0 = make_g0()
    bow = g0.contract(("d", "a", "b"))
    assert sorted(bow.vertices) == ["y"]
    assert sorted(bow.edges) == ["c", "ma"]
    assert bow.is_loop("c") and bow.is_loop("ma")
    assert bow.occurrences() == ()
    assert bow.journal == ("ma",)
    with pytest.raises(ContractionError):
        bow.contract(("d", "a", "b"))
    with pytest.raises(ContractionError):
        bow.contract(("ma", "c", "ma"))


def test_expansion_then_contraction_round_trip():
    g0 = make_g0()
    exp = g0.expand("b")
    assert [(o.triple, o.vertex) for o in exp.occurrences()] == [
        (("b1", "b2", "b3"), "b4"),
        (("d", "a", "b1"), "x"),
        (("b3", "c", "d"), "y"),
    ]
    back = exp.contract(("b1", "b2", "b3"))
    beta = isomorphism(g0, back, respect_rotation=True)
    assert beta is not None
    with pytest.raises(ExpansionError):
        g0.expand("q")
    with pytest.raises(ExpansionError):
        exp.expand("b")


def test_family_counts():
    for n in range(4):
        j = make_j(n)
        assert len(j.vertices) == n + 5
        assert len(j.edges) == 2 * n + 10
        assert len(j.occurrences()) == 4
        assert j.defect() == 0
        assert j.min_edge_bound() == 0
        o = make_o(n)
        assert len(o.vertices) == n + 3
        assert len(o.edges) == 2 * n + 4
        assert o.occurrences() == ()
        assert o.defect() == n + 3
        assert o.min_edge_bound() == 2 * n + 4
        assert len(o.outer_boundary_walk()) == 2 * n + 6


def test_carrier_occurrence_sites():
    j = make_j(1)
    sites = {(o.triple, o.vertex) for o in j.occurrences()}
    assert sites == {
        (("v", "w", "x"), "p"),
        (("x", "y", "z"), "q"),
        (("a", "b", "c"), "l"),
        (("c", "d", "e"), "m"),
    }


def test_occurrences_match_brute_rescan():
    rng = random.Random(101)
    for name, seed in seed_graphs():
        g = seed
        for _ in range(6):
            steps = random_graph_walk(g, rng, steps=1)
            g = steps[-1][1]
            fast = [(o.triple, o.vertex) for o in g.occurrences()]
            assert fast == brute_occurrences(g), name


def test_special_circuit_examples():
    g = make_o(1).expand("sa")
    circs = g.special_circuits()
    assert [(c.vertex, c.darts) for c in circs] == [("sa4", (("sa2", 0),))]
    g0 = make_g0()
    circs0 = g0.special_circuits()
    assert {c.vertex for c in circs0} == {"x", "y"}
    at_x = next(c for c in circs0 if c.vertex == "x")
    assert ("a", 0) in at_x.darts


def test_invariants_under_random_walks():
    rng = random.Random(55)
    for name, seed in seed_graphs():
        d0 = seed.defect()
        m0 = seed.min_edge_bound()
        c0 = len(seed.collapsible_vertices())
        g = seed
        for kind, h in random_graph_walk(g, rng, steps=12):
            assert h.defect() == d0, name
            assert h.min_edge_bound() == m0, name
            c1 = len(h.collapsible_vertices())
            assert c1 == c0 + (1 if kind == "expand" else -1), name
            c0, g = c1, h


def test_merge_tokens_are_fresh_and_logged():
    g = make_g0()
    for _ in range(3):
        occs = g.occurrences()
        if not occs:
            g = g.expand(sorted(g.edges)[0])
            continue
        before = set(g.edges) | set(g.vertices) | set(g.journal)
        g = g.contract(occs[0].triple)
        token = g.journal[-1]
        assert token not in before
    assert len(set(g.journal)) == len(g.journal)


def test_rename_preserves_structure_and_rejects_collisions():
    g0 = make_g0()
    renamed = g0.renamed({"a": "za", "x": "zx"})
    assert "za" in renamed.edges and "zx" in renamed.vertices
    assert isomorphism(g0, renamed, respect_rotation=True) is not None
    exp = g0.expand("a")
    deep = exp.renamed({"a": "b"})
    assert "b1" in deep.edges
    with pytest.raises(GraphError):
        exp.renamed({"a1": "a2"})


def test_json_round_trip():
    for g in [make_g0(), make_j(2), make_o(1), make_g0().contract(("d", "a", "b"))]:
        assert AddressedGraph.from_json(g.to_json()) == g
    text = make_g0().to_json()
    assert '"rotation"' in text and '"edges"' in text


def test_canonical_form_is_relabeling_invariant():
    g = make_j(1)
    relabeled = g.renamed({"v": "qa", "p": "qb", "ua": "qc"})
    assert canonical_form(g) == canonical_form(relabeled)
    assert canonical_form(g) != canonical_form(make_j(2))


def test_address_parsing_and_adjacency():
    g0 = make_g0()
    edge, rest = parse_address(g0, "b312")
    assert edge == "b" and rest == "312"
    with pytest.raises(GraphError):
        parse_address(g0, "q1")
    assert addresses_adjacent(g0, "b3", "c")
    assert addresses_adjacent(g0, "a", "b")
    assert not addresses_adjacent(g0, "a", "c")
    assert addresses_adjacent(g0, "b32", "b33")
    assert not addresses_adjacent(g0, "b22", "c")


def test_rotation_validation_rejects_bad_data():
    with pytest.raises(GraphError):
        AddressedGraph(["x"], {"a": ("x", "z")})
    with pytest.raises(GraphError):
        AddressedGraph(
            ["x"], {"a": ("x", "x")}, rotation={"x": (("a", 0),)}
        )
