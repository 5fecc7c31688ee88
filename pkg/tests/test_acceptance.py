"""Acceptance criteria for the certification toolkit, one test per criterion.

Run with ``pytest -v tests/test_acceptance.py`` to get one pass or fail
line per criterion.  Budgets and tolerances are stated inline.
"""

import random
import time

from basilica import certificates
from basilica.cubes import (
    CubeVertex,
    WALL_1,
    WALL_2,
    bfs_sublevel,
    descending_link,
    detour_configs,
    detour_path,
    embedded_two_cube,
    make_fn,
    quarter_space_paths,
    walk_path,
    wall_model_embed,
)
from basilica.diagrams import identity_diagram, range_equivalent, vertex_key
from basilica.graphs import make_g0, make_j, make_o
from basilica.homology import SimplicialComplex, boundary_matrix
from basilica.sampling import (
    random_complex_faces,
    random_diagram,
    random_graph_walk,
    seed_graphs,
)


def test_criterion_01_chain_graphs_hit_the_defect_floor():
    started = time.time()
    for n in range(4):
        o = make_o(n)
        assert o.defect() == n + 3
        assert not o.collapsible_vertices()
        assert o.min_edge_bound() == 2 * n + 4
        assert len(o.edges) == 2 * n + 4
    assert time.time() - started < 1.0


def test_criterion_02_sublevel_emptiness_is_exhaustive():
    started = time.time()
    for n in range(3):
        report = certificates.key_lemma_report(n, slack=2)
        assert report["exhaustive"], n
        assert report["certified"], n
        assert report["min_edges_seen"] == 2 * n + 4, n
        assert set(report["defect_histogram"]) == {str(n + 3)}, n
    assert time.time() - started < 300.0


def test_criterion_03_invariants_hold_along_random_move_sequences():
    rng = random.Random(20240902)
    seeds = seed_graphs()
    for trial in range(10000):
        _, g = seeds[rng.randrange(len(seeds))]
        length = rng.randrange(1, 21)
        defect = g.defect()
        collapsible = len(g.collapsible_vertices())
        for kind, h in random_graph_walk(g, rng, steps=length):
            assert h.defect() == defect, trial
            grown = len(h.collapsible_vertices())
            assert grown == collapsible + (1 if kind == "expand" else -1), trial
            collapsible = grown


def test_criterion_04_quarter_space_witnesses_realize_all_signatures():
    for n in range(5):
        anchor = CubeVertex(make_fn(n))
        keys = set()
        signatures = set()
        for expected, moves in sorted(quarter_space_paths().items()):
            trace, trackers = walk_path(anchor, moves, [WALL_1, WALL_2])
            end = trace[-1]
            assert end.rank == 2 * n + 6, (n, expected)
            got = trackers[0].side + trackers[1].side
            assert got == expected, n
            assert all(t.status != "indeterminate" for t in trackers), n
            keys.add(end.key)
            signatures.add(got)
        assert len(keys) == 4, n
        assert signatures == {"++", "+-", "-+", "--"}, n


def test_criterion_05_wall_model_embedding_shifts_rank_and_is_injective():
    rng = random.Random(20240903)
    for n in range(3):
        images = {}
        for _ in range(50):
            psi = random_diagram(make_o(n), rng, steps=rng.randrange(0, 5))
            embedded = wall_model_embed(n, psi)
            corners = embedded_two_cube(embedded)
            assert max(c.rank for c in corners) == psi.rank + 6, n
            assert embedded.vertex.rank == psi.rank + 2, n
            source = vertex_key(psi)
            image = embedded.vertex.key
            if source in images:
                assert images[source] == image, n
            else:
                assert image not in images.values(), n
                images[source] = image


def test_criterion_06_detours_avoid_walls_and_stay_low():
    configs = detour_configs()
    assert len(configs) == 10
    assert any(c.name == "graph_dance" for c in configs)
    for config in configs:
        top = CubeVertex(config.diagram)
        start, moves, end = detour_path(
            config.diagram, config.A, config.B, config.Z, config.eps
        )
        assert start.key == top.down(config.A).key, config.name
        assert end.key == top.down(config.B).key, config.name
        trace, trackers = walk_path(start, moves, [config.Z])
        assert trace[-1].key == end.key, config.name
        assert all(v.rank <= top.rank - 1 for v in trace), config.name
        assert trackers[0].crossings == 0, config.name
        gamma, delta, eps = config.Z
        across = top.up(eps).down((gamma, delta, eps + "1"))
        token = across.diagram.base_range.journal[-1]
        across = across.down((token, eps + "2", eps + "3"))
        assert not range_equivalent(across.diagram, top.down(config.Z).diagram), (
            config.name
        )


def test_criterion_07_nerve_of_the_half_space_cover_is_a_circle():
    report = certificates.nerve_report(0)
    assert report["certified"]
    assert report["results"]["betti"] == [1, 1]


def test_criterion_08_descending_links_have_the_stated_shape():
    base_link = descending_link(CubeVertex(identity_diagram(make_g0())))
    assert base_link.betti_numbers(up_to=0)[0] == 2
    carrier = CubeVertex(identity_diagram(make_j(2)))
    sweep = bfs_sublevel(carrier, rank_cap=18, node_budget=40)
    sampled = 0
    for v in sweep.vertices.values():
        if len(v.diagram.base_range.vertices) < 5:
            continue
        link = descending_link(v)
        assert link.betti_numbers(up_to=0)[0] == 1
        sampled += 1
    assert sampled >= 5


def test_criterion_09_groupoid_laws_hold_on_random_diagrams():
    report = certificates.diagram_algebra_report(seed=20240904, count=1000)
    assert report["results"]["failures"] == []
    assert report["certified"]
    assert report["results"]["checks"] == 1000


def test_criterion_10_homology_matches_the_rational_oracle():
    sympy = __import__("sympy")
    rng = random.Random(20240905)
    for _ in range(200):
        complex_ = SimplicialComplex(random_complex_faces(rng))
        assert len(complex_.vertices) <= 7
        betti = complex_.betti_numbers()
        for k in range(complex_.dimension + 1):
            n_k = len(complex_.simplices(k))
            dk = boundary_matrix(complex_, k)
            dk1 = boundary_matrix(complex_, k + 1)
            r_k = sympy.Matrix(dk).rank() if dk else 0
            r_k1 = sympy.Matrix(dk1).rank() if dk1 else 0
            assert betti[k] == n_k - r_k - r_k1
            if dk and dk1:
                product = sympy.Matrix(dk) * sympy.Matrix(dk1)
                assert product.is_zero_matrix
