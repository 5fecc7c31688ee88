"""Verification campaigns producing machine-readable certificates.

Each campaign runs a bounded, deterministic computation and returns a
JSON-ready report carrying its configuration, its findings, and a
``certified`` verdict.  Budgeted searches also carry ``exhaustive``:
a certificate with ``exhaustive: false`` and no violation is
inconclusive rather than a pass.
"""

import random
from collections import Counter, deque
from typing import Optional

from basilica.cubes import (
    CubeVertex,
    WALL_1,
    WALL_2,
    bfs_sublevel,
    descending_link,
    detour_configs,
    detour_path,
    make_fn,
    quarter_space_paths,
    walk_path,
)
from basilica.diagrams import (
    compose,
    identity_diagram,
    range_equivalent,
    reduce_diagram,
)
from basilica.graphs import canonical_form, make_g0, make_j, make_o
from basilica.homology import nerve
from basilica.sampling import random_cell_address, random_diagram

__version__ = "0.1.0"

__all__ = [
    "key_lemma_report",
    "quarter_spaces_report",
    "detour_report",
    "nerve_report",
    "descending_links_report",
    "diagram_algebra_report",
]


def key_lemma_report(n: int, slack: int = 2, node_budget: int = 20000) -> dict:
    """Certify that no graph reachable from the chain graph drops below its size.

    Breadth-first search over isomorphism classes reachable from
    ``make_o(n)`` keeping at most ``2n + 4 + 2 * slack`` edges.  Along
    the way every class must keep the defect ``n + 3``, every expansion
    must add exactly one collapsible vertex and every contraction
    remove one, and no class may have fewer than ``2n + 4`` edges.
    """
    start = make_o(n)
    floor = 2 * n + 4
    cap = floor + 2 * slack
    expected_defect = n + 3

    def info(g):
        return (g, g.defect(), len(g.collapsible_vertices()))

    seen = {canonical_form(start): info(start)}
    queue = deque(seen)
    exhaustive = True
    min_edges = len(start.edges)
    violations = []
    while queue:
        key = queue.popleft()
        g, d, c = seen[key]
        moves = []
        if len(g.edges) + 2 <= cap:
            moves.extend(("expand", e) for e in sorted(g.edges))
        moves.extend(("contract", o.triple) for o in g.occurrences())
        for kind, datum in moves:
            h = g.expand(datum) if kind == "expand" else g.contract(datum)
            dh, ch = h.defect(), len(h.collapsible_vertices())
            min_edges = min(min_edges, len(h.edges))
            if len(h.edges) < floor:
                violations.append(
                    f"{kind} reached {len(h.edges)} edges, below the floor {floor}"
                )
            if dh != d:
                violations.append(f"defect changed from {d} to {dh} under {kind}")
            expected_c = c + 1 if kind == "expand" else c - 1
            if ch != expected_c:
                violations.append(
                    f"collapsible count {c} -> {ch} under {kind}, expected {expected_c}"
                )
            hkey = canonical_form(h)
            if hkey not in seen:
                if len(seen) >= node_budget:
                    exhaustive = False
                    queue.clear()
                    break
                seen[hkey] = (h, dh, ch)
                queue.append(hkey)
    histogram = Counter(d for _, d, _ in seen.values())
    bad_defects = {d for d in histogram if d != expected_defect}
    if bad_defects:
        violations.append(f"classes with defect other than {expected_defect}: {sorted(bad_defects)}")
    certified = exhaustive and not violations and min_edges >= floor
    return {
        "campaign": "key-lemma",
        "version": __version__,
        "n": n,
        "slack": slack,
        "edge_cap": cap,
        "classes_visited": len(seen),
        "min_edges_seen": min_edges,
        "defect_histogram": {str(k): v for k, v in sorted(histogram.items())},
        "violations": violations[:20],
        "certified": certified,
        "exhaustive": exhaustive,
    }


def quarter_spaces_report(n: int) -> dict:
    """Certify the four quarter-space witnesses below the anchored vertex.

    Each witness is a double contraction of ``make_fn(n)``; its rank
    must be exactly ``2n + 6`` and its tracked sides against the two
    pendant walls must realize all four sign patterns with no tracker
    ever indeterminate.
    """
    anchor = CubeVertex(make_fn(n))
    expected_rank = 2 * n + 6
    results = {}
    keys = set()
    ok = True
    for signature, moves in sorted(quarter_space_paths().items()):
        trace, trackers = walk_path(anchor, moves, [WALL_1, WALL_2])
        end = trace[-1]
        got = trackers[0].side + trackers[1].side
        statuses = [t.status for t in trackers]
        keys.add(end.key)
        entry = {
            "rank": end.rank,
            "signature": got,
            "statuses": statuses,
            "crossings": [t.crossings for t in trackers],
        }
        results[signature] = entry
        if got != signature or end.rank != expected_rank:
            ok = False
        if "indeterminate" in statuses:
            ok = False
    certified = ok and len(keys) == 4
    return {
        "campaign": "quarter-spaces",
        "version": __version__,
        "config": {"n": n},
        "results": results,
        "distinct_witnesses": len(keys),
        "anchor_rank": anchor.rank,
        "certified": certified,
    }


def detour_report() -> dict:
    """Certify the wall-avoiding detours on all stock configurations.

    For each configuration the path must run from below one occurrence
    to below the other, keep every intermediate rank at least one below
    the top vertex, never cross the avoided wall, and the pinched
    square it replaces must genuinely pinch (the naive two-contraction
    route lands on a different vertex than the plain contraction).
    """
    entries = []
    certified = True
    for config in detour_configs():
        top = CubeVertex(config.diagram)
        h = top.rank
        start, moves, _ = detour_path(
            config.diagram, config.A, config.B, config.Z, config.eps
        )
        trace, trackers = walk_path(start, moves, [config.Z])
        target = top.down(config.B)
        tracker = trackers[0]
        ranks = [v.rank for v in trace]
        endpoint_matches = trace[-1].key == target.key
        gamma, delta, eps = config.Z
        across = top.up(eps).down((gamma, delta, eps + "1"))
        token = across.diagram.base_range.journal[-1]
        across = across.down((token, eps + "2", eps + "3"))
        pinched = across.key != top.down(config.Z).key
        entry = {
            "name": config.name,
            "top_rank": h,
            "trace_ranks": ranks,
            "max_intermediate_rank": max(ranks),
            "endpoint_matches": endpoint_matches,
            "wall_side": tracker.side,
            "wall_crossings": tracker.crossings,
            "wall_status": tracker.status,
            "pinched_square_distinct": pinched,
        }
        entries.append(entry)
        if not (
            endpoint_matches
            and pinched
            and tracker.side == "+"
            and tracker.crossings == 0
            and max(ranks) <= h - 1
        ):
            certified = False
    return {
        "campaign": "detour-path",
        "version": __version__,
        "config": {"configurations": len(entries)},
        "results": entries,
        "certified": certified,
    }


def nerve_report(n: int) -> dict:
    """Certify that the four certified quarters assemble into a circle.

    The anchored vertex and the four witnesses are sorted into the four
    half-space cover sets according to their tracked signatures; the
    nerve of that cover must be a single circle: connected with first
    Betti number one.
    """
    anchor = CubeVertex(make_fn(n))
    members = {"anchor": "++"}
    ok = True
    for signature, moves in sorted(quarter_space_paths().items()):
        _, trackers = walk_path(anchor, moves, [WALL_1, WALL_2])
        got = trackers[0].side + trackers[1].side
        members[f"witness{signature}"] = got
        if got != signature:
            ok = False
    cover = {
        "wall1+": {p for p, s in members.items() if s[0] == "+"},
        "wall1-": {p for p, s in members.items() if s[0] == "-"},
        "wall2+": {p for p, s in members.items() if s[1] == "+"},
        "wall2-": {p for p, s in members.items() if s[1] == "-"},
    }
    complex_ = nerve(cover)
    betti = complex_.betti_numbers(up_to=1)
    certified = (
        ok
        and all(cover.values())
        and betti == [1, 1]
        and complex_.connected_components() == 1
    )
    return {
        "campaign": "nerve",
        "version": __version__,
        "config": {"n": n},
        "results": {
            "cover_sizes": {k: len(v) for k, v in sorted(cover.items())},
            "betti": betti,
            "simplices": complex_.to_json_obj()["simplices"],
        },
        "certified": certified,
    }


def descending_links_report(node_budget: int = 60) -> dict:
    """Certify descending-link shapes at the base vertex and along a sample.

    The link of the anchored base vertex must be two isolated points;
    the links of sampled vertices with at least five base vertices in
    a budgeted sublevel sweep over the rank-18 carrier sublevel must
    each be connected.
    """
    base_vertex = CubeVertex(identity_diagram(make_g0()))
    base_link = descending_link(base_vertex)
    base_betti = base_link.betti_numbers(up_to=1)
    carrier = CubeVertex(identity_diagram(make_j(2)))
    sweep = bfs_sublevel(carrier, rank_cap=18, node_budget=node_budget)
    sampled = []
    all_connected = True
    for v in sweep.vertices.values():
        if len(v.diagram.base_range.vertices) < 5:
            continue
        link = descending_link(v)
        b0 = link.betti_numbers(up_to=0)[0]
        sampled.append(b0)
        if b0 != 1:
            all_connected = False
    certified = base_betti == [2, 0] and all_connected and len(sampled) >= 1
    return {
        "campaign": "descending-links",
        "version": __version__,
        "config": {"node_budget": node_budget, "rank_cap": 18},
        "results": {
            "base_link_betti": base_betti,
            "sampled_links": len(sampled),
            "all_sampled_connected": all_connected,
            "sweep_classes": len(sweep.vertices),
            "sweep_exhaustive": sweep.exhaustive,
        },
        "certified": certified,
    }


def diagram_algebra_report(seed: int = 20240901, count: int = 1000) -> dict:
    """Random groupoid laws: inverses, identities, associativity, cell maps.

    Every trial draws composable diagrams by random walks, and checks
    that composition with the inverse reduces to the identity, that the
    identity acts trivially, that ``apply`` is a homomorphism on random
    cells, and that randomized reduction orders land in the same
    range-renaming class.  Associativity is checked on a subsample.
    """
    rng = random.Random(seed)
    pool = [make_g0(), make_j(0), make_o(1)]
    failures = []
    checks = 0
    for trial in range(count):
        base = pool[rng.randrange(len(pool))]
        f = random_diagram(base, rng, steps=rng.randrange(1, 5))
        g = random_diagram(f.base_range, rng, steps=rng.randrange(1, 4))
        try:
            gf = compose(g, f)
            checks += 1
            if not range_equivalent(
                compose(f.invert(), f), identity_diagram(f.base_domain)
            ):
                failures.append(f"trial {trial}: inverse law failed")
            if not range_equivalent(compose(f, identity_diagram(f.base_domain)), f):
                failures.append(f"trial {trial}: identity law failed")
            addr = random_cell_address(gf, rng)
            if gf.apply(addr) != g.apply(f.apply(addr)):
                failures.append(f"trial {trial}: apply is not a homomorphism")
            r1 = reduce_diagram(gf, random.Random(rng.randrange(1 << 30)))
            r2 = reduce_diagram(gf, random.Random(rng.randrange(1 << 30)))
            if not range_equivalent(r1, r2):
                failures.append(f"trial {trial}: reduction order changed the class")
            if trial % 10 == 0:
                h = random_diagram(g.base_range, rng, steps=rng.randrange(1, 3))
                if not range_equivalent(compose(h, gf), compose(compose(h, g), f)):
                    failures.append(f"trial {trial}: associativity failed")
        except Exception as exc:  # noqa: BLE001 - report, do not abort the campaign
            failures.append(f"trial {trial}: {type(exc).__name__}: {exc}")
        if len(failures) > 10:
            break
    return {
        "campaign": "diagram-algebra",
        "version": __version__,
        "config": {"seed": seed, "count": count},
        "results": {"trials": count, "checks": checks, "failures": failures[:10]},
        "certified": not failures,
    }
