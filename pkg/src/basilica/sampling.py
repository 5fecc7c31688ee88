"""Seeded random walks and instances for the property campaigns.

Everything here takes an explicit ``random.Random`` so the campaigns
and tests are reproducible from their seed; nothing touches the global
generator.
"""

import random
from typing import List, Optional, Sequence, Tuple

from basilica.cubes import CubeVertex
from basilica.diagrams import GraphPairDiagram, identity_diagram
from basilica.graphs import AddressedGraph, make_g0, make_j, make_o

__all__ = [
    "seed_graphs",
    "random_graph_walk",
    "random_vertex_walk",
    "random_diagram",
    "random_cell_address",
    "random_complex_faces",
]


def seed_graphs() -> List[Tuple[str, AddressedGraph]]:
    """The nine seed graphs the move-invariant campaigns start from."""
    out = [("g0", make_g0())]
    for n in range(4):
        out.append((f"j{n}", make_j(n)))
    for n in range(4):
        out.append((f"o{n}", make_o(n)))
    return out


def random_graph_walk(
    g: AddressedGraph, rng: random.Random, steps: int
) -> List[Tuple[str, AddressedGraph]]:
    """A random move sequence on graphs; yields ``(move_kind, graph)`` pairs.

    Each step picks uniformly among all legal expansions and
    contractions.  The trace excludes the start graph.
    """
    trace: List[Tuple[str, AddressedGraph]] = []
    for _ in range(steps):
        expansions = sorted(g.edges)
        contractions = [o.triple for o in g.occurrences()]
        total = len(expansions) + len(contractions)
        pick = rng.randrange(total)
        if pick < len(expansions):
            g = g.expand(expansions[pick])
            trace.append(("expand", g))
        else:
            g = g.contract(contractions[pick - len(expansions)])
            trace.append(("contract", g))
    return trace


def random_vertex_walk(
    base: AddressedGraph,
    rng: random.Random,
    steps: int,
    rank_cap: Optional[int] = None,
) -> CubeVertex:
    """A random walk on the cube complex starting at the identity vertex."""
    v = CubeVertex(identity_diagram(base))
    cap = rank_cap if rank_cap is not None else v.rank + 8
    for _ in range(steps):
        base_range = v.diagram.base_range
        ups = sorted(base_range.edges) if v.rank + 2 <= cap else []
        downs = [o.triple for o in base_range.occurrences()]
        total = len(ups) + len(downs)
        if not total:
            break
        pick = rng.randrange(total)
        if pick < len(ups):
            v = v.up(ups[pick])
        else:
            v = v.down(downs[pick - len(ups)])
    return v


def random_diagram(
    base: AddressedGraph,
    rng: random.Random,
    steps: Optional[int] = None,
    rank_cap: Optional[int] = None,
) -> GraphPairDiagram:
    if steps is None:
        steps = rng.randrange(1, 7)
    return random_vertex_walk(base, rng, steps, rank_cap).diagram


def random_cell_address(
    f: GraphPairDiagram, rng: random.Random, max_extra_depth: int = 6
) -> str:
    """An address on which ``f.apply`` is defined: a domain leaf plus digits."""
    leaf = rng.choice(sorted(f.domain.edges))
    depth = rng.randrange(max_extra_depth + 1)
    return leaf + "".join(rng.choice("123") for _ in range(depth))


def random_complex_faces(
    rng: random.Random, max_vertices: int = 7
) -> List[Tuple[int, ...]]:
    """Random maximal faces over a small vertex pool."""
    n = rng.randrange(1, max_vertices + 1)
    pool = list(range(n))
    faces = []
    for _ in range(rng.randrange(1, 7)):
        size = rng.randrange(1, min(4, n) + 1)
        faces.append(tuple(sorted(rng.sample(pool, size))))
    return faces
