"""The cube complex of reduced diagrams and its certified paths.

A vertex of the complex is a reduced rearrangement diagram anchored at a
fixed domain base, taken up to renaming of the range base.  An upward
move expands one edge of the range base, a downward move contracts one
occurrence; cubes are spanned by commuting moves and the rank of a
vertex is the edge count of its range base.

On top of the moves this module provides:

* wall trackers, which follow the three cells of a chosen occurrence
  through a path of moves and certify on which side of the wall the
  path ends and how many times it crosses;

* the anchored diagram family ``make_fn`` whose range bases are the
  wall-carrier graphs, the four quarter-space witnesses below each of
  them, and the wall-intersection embedding of diagrams over the chain
  graphs;

* the explicit detour path between the two lower corners of a pinched
  square, which stays strictly below the top rank and never crosses the
  wall it avoids;

* budgeted breadth-first enumeration of rank sublevels and descending
  links.
"""

import itertools
from collections import deque
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from basilica.diagrams import (
    DiagramError,
    GraphPairDiagram,
    identity_diagram,
    reduce_diagram,
    vertex_key,
)
from basilica.graphs import (
    AddressedGraph,
    make_g0,
    make_j,
    make_o,
    prefix_rename,
    _letters,
)
from basilica.homology import SimplicialComplex

__all__ = [
    "Move",
    "CubeVertex",
    "WallTracker",
    "walk_path",
    "make_fn",
    "quarter_space_paths",
    "DetourConfig",
    "detour_configs",
    "detour_path",
    "wall_model_embed",
    "bfs_sublevel",
    "down_closure",
    "descending_link",
]


class Move(NamedTuple):
    """One step in the complex: ``up`` an edge, ``down`` a triple, or ``rename``."""

    kind: str
    data: object

    @staticmethod
    def up(eps: str) -> "Move":
        return Move("up", eps)

    @staticmethod
    def down(triple) -> "Move":
        if hasattr(triple, "triple"):
            triple = triple.triple
        return Move("down", tuple(triple))

    @staticmethod
    def rename(mapping: Dict[str, str]) -> "Move":
        return Move("rename", tuple(sorted(mapping.items())))


class CubeVertex:
    """A reduced diagram, hashed and compared by its range-renaming class."""

    __slots__ = ("diagram", "_key")

    def __init__(self, diagram: GraphPairDiagram):
        self.diagram = reduce_diagram(diagram)
        self._key = None

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = vertex_key(self.diagram)
        return self._key

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeVertex):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"CubeVertex(rank={self.rank})"

    # -- moves ---------------------------------------------------------

    def up(self, eps: str) -> "CubeVertex":
        """Expand ``eps`` in the range base; rank goes up by two."""
        d = self.diagram
        if eps not in d.base_range.edges:
            raise DiagramError(f"{eps!r} is not an edge of the range base")
        new_base = d.base_range.expand(eps)
        if eps in d.range.edges:
            delta = next(k for k, v in d.phi.items() if v == eps)
            new_domain = d.domain.expand(delta)
            new_range = d.range.expand(eps)
            phi = {k: v for k, v in d.phi.items() if k != delta}
            for i in "123":
                phi[delta + i] = eps + i
            nd = GraphPairDiagram(d.base_domain, new_base, new_domain, new_range, phi)
        else:
            nd = GraphPairDiagram(d.base_domain, new_base, d.domain, d.range, d.phi)
        return CubeVertex(nd)

    def down(self, triple) -> "CubeVertex":
        """Contract an occurrence of the range base; rank goes down by two."""
        d = self.diagram
        if hasattr(triple, "triple"):
            triple = triple.triple
        p, q, r = triple
        site = None
        for occ in d.base_range.occurrences():
            if occ.triple == (p, q, r):
                site = occ
                break
        if site is None:
            raise DiagramError(f"{triple} is not an occurrence of the range base")
        new_base = d.base_range.contract(triple)
        merged = new_base.journal[-1]
        ren = {
            p: merged + "1",
            q: merged + "2",
            r: merged + "3",
            site.vertex: merged + "4",
        }
        new_range = d.range.renamed(ren, journal=new_base.journal)
        phi = {k: prefix_rename(v, ren) for k, v in d.phi.items()}
        nd = GraphPairDiagram(d.base_domain, new_base, d.domain, new_range, phi)
        return CubeVertex(nd)

    def rename(self, mapping: Dict[str, str]) -> "CubeVertex":
        """Rename the range side by an address prefix map; same vertex, new names."""
        d = self.diagram
        new_base = d.base_range.renamed(mapping)
        new_range = d.range.renamed(mapping, journal=new_base.journal)
        phi = {k: prefix_rename(v, mapping) for k, v in d.phi.items()}
        nd = GraphPairDiagram(d.base_domain, new_base, d.domain, new_range, phi)
        return CubeVertex(nd)

    def apply_move(self, move: Move) -> "CubeVertex":
        if move.kind == "up":
            return self.up(move.data)
        if move.kind == "down":
            return self.down(move.data)
        if move.kind == "rename":
            return self.rename(dict(move.data))
        raise DiagramError(f"unknown move kind {move.kind!r}")

    def neighbors(self) -> List[Tuple[Move, "CubeVertex"]]:
        out = []
        for e in sorted(self.diagram.base_range.edges):
            out.append((Move.up(e), self.up(e)))
        for occ in self.diagram.base_range.occurrences():
            out.append((Move.down(occ.triple), self.down(occ.triple)))
        return out


# -- wall trackers -----------------------------------------------------------

_FOREIGN = ("f",)


class WallTracker:
    """Follows the three cells of an occurrence through a path of moves.

    Each tracked address carries a content term: one of the original
    cells, a numbered third of a split content, or the fusion of three
    contents produced by a contraction.  Contracting the three original
    cells in their roles crosses the wall, and re-expanding the fused
    edge crosses back; every other interaction merely splits, fuses or
    restores content.  The side and crossing count are therefore always
    definite, and ``status`` reports how the material currently lies:
    ``intact`` (original cells, possibly split), ``suspended`` (fused
    into a single wall edge, the path sits on the far side), or
    ``degraded`` (fused with foreign material).  The value
    ``indeterminate`` is reserved for trackers that lose the material
    entirely, which the content algebra never does.
    """

    def __init__(self, triple: Sequence[str]):
        self.triple = tuple(triple)
        if len(self.triple) != 3:
            raise ValueError("a wall is named by a triple of addresses")
        self.vmap: Dict[str, tuple] = {
            addr: ("o", i) for i, addr in enumerate(self.triple)
        }
        self.side = "+"
        self.crossings = 0

    _WHOLE = ("m", ("o", 0), ("o", 1), ("o", 2))

    def _flip(self) -> None:
        self.side = "-" if self.side == "+" else "+"
        self.crossings += 1

    def expand(self, eps: str) -> None:
        content = self.vmap.pop(eps, None)
        if content is None:
            return
        children = (eps + "1", eps + "2", eps + "3")
        if content[0] == "m":
            if content == self._WHOLE:
                self._flip()
            for child, part in zip(children, content[1:]):
                if part != _FOREIGN:
                    self.vmap[child] = part
        else:
            for i, child in enumerate(children):
                self.vmap[child] = ("p", content, i + 1)

    def contract(self, triple: Sequence[str], merged: str) -> None:
        contents = tuple(self.vmap.pop(a, _FOREIGN) for a in triple)
        if all(c == _FOREIGN for c in contents):
            return
        if contents == (("o", 0), ("o", 1), ("o", 2)):
            self._flip()
            self.vmap[merged] = ("m",) + contents
            return
        if (
            all(c[0] == "p" for c in contents)
            and contents[0][1] == contents[1][1] == contents[2][1]
            and tuple(c[2] for c in contents) == (1, 2, 3)
        ):
            self.vmap[merged] = contents[0][1]
            return
        self.vmap[merged] = ("m",) + contents

    def rename(self, mapping: Dict[str, str]) -> None:
        self.vmap = {prefix_rename(k, mapping): v for k, v in self.vmap.items()}

    @property
    def status(self) -> str:
        if not self.vmap:
            return "indeterminate"
        values = list(self.vmap.values())
        if any(v == self._WHOLE for v in values):
            return "suspended"
        if any(v[0] == "m" for v in values):
            return "degraded"
        return "intact"

    def report(self) -> dict:
        return {
            "side": self.side,
            "crossings": self.crossings,
            "status": self.status,
            "material": sorted(self.vmap),
        }


def walk_path(
    start: CubeVertex,
    moves: Iterable[Move],
    wall_triples: Sequence[Sequence[str]] = (),
) -> Tuple[List[CubeVertex], List[WallTracker]]:
    """Execute a move word, feeding every move to the wall trackers.

    Wall triples are read in the range base of ``start``.  Returns the
    vertex trace (including the start) and the trackers in final state.
    """
    trackers = [WallTracker(t) for t in wall_triples]
    v = start
    trace = [v]
    for move in moves:
        if move.kind == "up":
            for t in trackers:
                t.expand(move.data)
            v = v.up(move.data)
        elif move.kind == "down":
            nxt = v.down(move.data)
            merged = nxt.diagram.base_range.journal[-1]
            for t in trackers:
                t.contract(tuple(move.data), merged)
            v = nxt
        elif move.kind == "rename":
            mapping = dict(move.data)
            for t in trackers:
                t.rename(mapping)
            v = v.rename(mapping)
        else:
            raise DiagramError(f"unknown move kind {move.kind!r}")
        trace.append(v)
    return trace, trackers


# -- the anchored family and quarter-space witnesses -------------------------


def make_fn(n: int) -> GraphPairDiagram:
    """The anchored diagram whose range base is the wall carrier ``make_j(n)``.

    Its domain is the expansion of the base graph that nests ``n`` levels
    into the left loop, so the two pendant occurrences of the carrier and
    the doubled chain between them are all in the image of honest cells.
    """
    g0 = make_g0()
    jn = make_j(n)
    if n == 0:
        mapping = {
            "d1": "v", "d2": "w", "d3": "x", "a": "y", "b": "z",
            "c11": "a", "c12": "b", "c13": "c", "c2": "d", "c3": "e",
        }
    else:
        lam = "a" + "2" * (n - 1)
        mapping = {
            lam + "11": "v", lam + "12": "w", lam + "13": "x",
            lam + "2": "y", lam + "3": "z",
            "b": "s" + _letters(n - 1), "d": "t" + _letters(n - 1),
            "c11": "a", "c12": "b", "c13": "c", "c2": "d", "c3": "e",
        }
        for k in range(1, n):
            mapping["a" + "2" * (n - 1 - k) + "3"] = "s" + _letters(k - 1)
            mapping["a" + "2" * (n - 1 - k) + "1"] = "t" + _letters(k - 1)
    return GraphPairDiagram.from_prefix_map(mapping, g0, jn)


WALL_1 = ("x", "y", "z")
WALL_2 = ("c", "d", "e")


def quarter_space_paths() -> Dict[str, List[Move]]:
    """The four double contractions of the anchored vertex, one per quarter.

    Keys are the expected signatures against the walls ``WALL_1`` (the
    left pendant triple) and ``WALL_2`` (the right pendant triple).
    """
    return {
        "++": [Move.down(("v", "w", "x")), Move.down(("a", "b", "c"))],
        "+-": [Move.down(("v", "w", "x")), Move.down(WALL_2)],
        "-+": [Move.down(WALL_1), Move.down(("a", "b", "c"))],
        "--": [Move.down(WALL_1), Move.down(WALL_2)],
    }


# -- detour paths -------------------------------------------------------------


class DetourConfig(NamedTuple):
    name: str
    diagram: GraphPairDiagram
    A: Tuple[str, str, str]
    B: Tuple[str, str, str]
    Z: Tuple[str, str, str]
    eps: str


def detour_configs() -> List[DetourConfig]:
    """Ten configurations satisfying the detour preconditions.

    Each has two occurrences ``A`` and ``B`` sharing exactly one edge,
    both disjoint from a third occurrence ``Z`` whose out-edge ``eps``
    the detour splits.
    """

    def expanded_identity(base: AddressedGraph, word: Sequence[str]) -> GraphPairDiagram:
        g = base
        for e in word:
            g = g.expand(e)
        return identity_diagram(g)

    configs = [
        DetourConfig(
            "graph_dance",
            expanded_identity(make_g0(), ["c", "c1"]),
            ("c13", "c2", "c3"), ("c11", "c12", "c13"), ("d", "a", "b"), "b",
        ),
        DetourConfig(
            "mirror_dance",
            expanded_identity(make_g0(), ["a", "a1"]),
            ("a13", "a2", "a3"), ("a11", "a12", "a13"), ("b", "c", "d"), "d",
        ),
        DetourConfig(
            "carrier0_left",
            make_fn(0), ("v", "w", "x"), ("x", "y", "z"), ("c", "d", "e"), "e",
        ),
        DetourConfig(
            "carrier0_left_reversed",
            make_fn(0), ("x", "y", "z"), ("v", "w", "x"), ("a", "b", "c"), "c",
        ),
        DetourConfig(
            "carrier1_right",
            make_fn(1), ("a", "b", "c"), ("c", "d", "e"), ("v", "w", "x"), "x",
        ),
        DetourConfig(
            "carrier1_right_reversed",
            make_fn(1), ("c", "d", "e"), ("a", "b", "c"), ("x", "y", "z"), "z",
        ),
        DetourConfig(
            "carrier2_left",
            make_fn(2), ("v", "w", "x"), ("x", "y", "z"), ("a", "b", "c"), "c",
        ),
        DetourConfig(
            "carrier_loop_tower",
            expanded_identity(make_j(0), ["y", "y1"]),
            ("y13", "y2", "y3"), ("y11", "y12", "y13"), ("c", "d", "e"), "e",
        ),
        DetourConfig(
            "carrier_left_tower",
            expanded_identity(make_j(1), ["w", "w1"]),
            ("w13", "w2", "w3"), ("w11", "w12", "w13"), ("x", "y", "z"), "z",
        ),
        DetourConfig(
            "carrier_right_tower",
            expanded_identity(make_j(2), ["d", "d1"]),
            ("d13", "d2", "d3"), ("d11", "d12", "d13"), ("v", "w", "x"), "x",
        ),
    ]
    return configs


def detour_path(
    f: GraphPairDiagram,
    A: Sequence[str],
    B: Sequence[str],
    Z: Sequence[str],
    eps: str,
) -> Tuple[CubeVertex, List[Move], CubeVertex]:
    """The explicit move word from below ``A`` to below ``B`` avoiding ``Z``.

    ``A`` and ``B`` are occurrences of the range base of ``f`` sharing
    exactly one edge, and both are edge-disjoint from the occurrence
    ``Z = (gamma, delta, eps)`` whose out-edge is split.  Returns the
    start vertex (``f`` contracted at ``A``), the twelve-move word, and
    the endpoint it reaches, which equals ``f`` contracted at ``B`` up
    to range renaming.  Every intermediate vertex has rank at most the
    rank of ``f`` minus two, and the word never crosses the wall of
    ``Z``.
    """
    start_top = CubeVertex(f)
    base = start_top.diagram.base_range
    A, B, Z = tuple(A), tuple(B), tuple(Z)
    triples = {occ.triple for occ in base.occurrences()}
    for T in (A, B, Z):
        if T not in triples:
            raise DiagramError(f"{T} is not an occurrence of the range base")
    gamma, delta, out = Z
    if eps != out:
        raise DiagramError("the split edge must be the out-edge of the avoided wall")
    if set(Z) & (set(A) | set(B)):
        raise DiagramError("the avoided wall must be edge-disjoint from both squares")
    shared = set(A) & set(B)
    if len(shared) != 1:
        raise DiagramError("the two occurrences must share exactly one edge")
    s = shared.pop()
    if A[2] == s and B[0] == s:
        digit = "1"
    elif A[0] == s and B[2] == s:
        digit = "3"
    else:
        raise DiagramError("the shared edge must be interior to one and boundary to the other")

    start = start_top.down(A)
    token_a = start.diagram.base_range.journal[-1]

    moves: List[Move] = []
    state = {"v": start}

    def step(move: Move) -> str:
        v = state["v"].apply_move(move)
        moves.append(move)
        state["v"] = v
        return v.diagram.base_range.journal[-1] if move.kind == "down" else ""

    b_prime = tuple(token_a if e == s else e for e in B)
    token_b = step(Move.down(b_prime))
    step(Move.up(eps))
    token_z1 = step(Move.down((gamma, delta, eps + "1")))
    token_z2 = step(Move.down((token_z1, eps + "2", eps + "3")))
    step(Move.up(token_b))
    step(Move.up(token_b + digit))
    occ_b = state["v"].diagram.base_range.occurrence_at(token_b + "4")
    step(Move.down(occ_b.triple))
    occ_a_prime = state["v"].diagram.base_range.occurrence_at(token_b + digit + "4")
    token_a_prime = step(Move.down(occ_a_prime.triple))
    step(Move.up(token_z2))
    step(Move.up(token_z2 + "1"))
    occ_eps = state["v"].diagram.base_range.occurrence_at(token_z2 + "4")
    step(Move.down(occ_eps.triple))
    step(Move.up(token_a_prime))
    return start, moves, state["v"]


# -- modeling the wall intersection ------------------------------------------


class EmbeddedVertex(NamedTuple):
    vertex: CubeVertex
    marked: Tuple[str, str]


def wall_model_embed(n: int, psi: GraphPairDiagram) -> EmbeddedVertex:
    """Transport a diagram over the chain graph into the wall intersection.

    ``psi`` must be anchored at ``make_o(n)``.  The image is the vertex
    of the full complex obtained from the anchored carrier vertex by
    contracting both pendant triples (the two marked wall edges appear)
    and then replaying ``psi``: expand its domain tree, rename by its
    leaf isomorphism, contract its range tree.  The result has rank
    ``psi.rank + 2`` and expanding the two marked edges spans the
    two-cube cut by both walls, with top rank ``psi.rank + 6``.
    """
    base_o = make_o(n)
    if psi.base_domain != base_o:
        raise DiagramError("the diagram is not anchored at the chain graph")
    psi = reduce_diagram(psi)
    v = CubeVertex(make_fn(n))
    v = v.down(WALL_1)
    mark_left = v.diagram.base_range.journal[-1]
    v = v.down(WALL_2)
    mark_right = v.diagram.base_range.journal[-1]

    base_vertices = set(base_o.vertices)
    domain_mid = sorted(
        (x[:-1] for x in psi.domain.vertices if x not in base_vertices),
        key=lambda a: (len(a), a),
    )
    for w in domain_mid:
        v = v.up(w)

    mapping = dict(psi.phi)
    mapping.update(psi.induced_vertex_map())
    # The marks must not collide with any name psi's range can carry, so
    # give them names outside the chain graph grammar.
    used = set(mapping.values())
    used |= set(psi.range.edges) | set(psi.range.vertices)
    marks = []
    i = 0
    for mark in (mark_left, mark_right):
        while "q" + _letters(i) in used:
            i += 1
        fresh = "q" + _letters(i)
        i += 1
        mapping[mark] = fresh
        marks.append(fresh)
    v = v.rename(mapping)

    range_base_vertices = set(psi.base_range.vertices)
    range_mid = sorted(
        (x[:-1] for x in psi.range.vertices if x not in range_base_vertices),
        key=lambda a: (len(a), a),
        reverse=True,
    )
    for w in range_mid:
        occ = v.diagram.base_range.occurrence_at(w + "4")
        if occ is None:
            raise DiagramError(f"no contractible site at {w + '4'!r} while replaying")
        v = v.down(occ.triple)
    return EmbeddedVertex(v, tuple(marks))


def embedded_two_cube(embedded: EmbeddedVertex) -> List[CubeVertex]:
    """The four corners of the two-cube spanned by the marked wall edges."""
    v = embedded.vertex
    left, right = embedded.marked
    return [v, v.up(left), v.up(right), v.up(left).up(right)]


# -- breadth-first machinery ---------------------------------------------------


class BfsResult(NamedTuple):
    vertices: Dict[tuple, CubeVertex]
    exhaustive: bool

    def ranks(self) -> List[int]:
        return sorted(v.rank for v in self.vertices.values())


def bfs_sublevel(
    start: CubeVertex, rank_cap: int, node_budget: int = 500
) -> BfsResult:
    """Breadth-first closure of the rank sublevel through ``start``.

    Vertices are deduplicated by their range-renaming class.  The
    sublevel through the anchored base vertex is infinite, so the
    search stops once ``node_budget`` classes are held and reports
    ``exhaustive=False``; a ``True`` flag certifies the closure.
    """
    if start.rank > rank_cap:
        raise DiagramError("the start vertex lies above the rank cap")
    seen: Dict[tuple, CubeVertex] = {start.key: start}
    queue = deque([start])
    exhaustive = True
    while queue:
        v = queue.popleft()
        for _, w in v.neighbors():
            if w.rank > rank_cap or w.key in seen:
                continue
            if len(seen) >= node_budget:
                exhaustive = False
                queue.clear()
                break
            seen[w.key] = w
            queue.append(w)
    return BfsResult(seen, exhaustive)


def down_closure(start: CubeVertex) -> Dict[tuple, CubeVertex]:
    """All vertices reachable from ``start`` by downward moves alone."""
    seen = {start.key: start}
    stack = [start]
    while stack:
        v = stack.pop()
        for occ in v.diagram.base_range.occurrences():
            w = v.down(occ.triple)
            if w.key not in seen:
                seen[w.key] = w
                stack.append(w)
    return seen


def descending_link(v: CubeVertex) -> SimplicialComplex:
    """The complex of sets of pairwise edge-disjoint occurrences below ``v``.

    Vertices are labeled by the interior vertex of each occurrence of
    the range base; a set spans a simplex when the occurrences are
    pairwise edge-disjoint, which is exactly when the contractions
    commute and span a cube going down.
    """
    occs = v.diagram.base_range.occurrences()
    labels = {o.vertex: set(o.triple) for o in occs}
    names = sorted(labels)
    faces = [frozenset([x]) for x in names]
    for size in range(2, len(names) + 1):
        layer = []
        for combo in itertools.combinations(names, size):
            if all(
                not (labels[a] & labels[b])
                for a, b in itertools.combinations(combo, 2)
            ):
                layer.append(frozenset(combo))
        if not layer:
            break
        faces.extend(layer)
    return SimplicialComplex(faces)
