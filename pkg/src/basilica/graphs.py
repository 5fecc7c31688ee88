"""Directed graphs with rotation systems and the Basilica edge replacement.

A graph here is finite and directed, may have loops and parallel edges,
and every edge carries a string address.  Each vertex carries a cyclic
order on its incident darts (a rotation system), which pins down the
planar embedding that the replacement rule preserves.  A dart is a pair
``(addr, end)`` with ``end == 0`` for the tail of the edge (at its
source) and ``end == 1`` for the head (at its target).

The Basilica replacement expands an edge ``e: u -> w`` into a path with
a loop: ``e1: u -> e4``, ``e2: e4 -> e4``, ``e3: e4 -> w`` with a fresh
midpoint vertex ``e4``.  The inverse move contracts an *occurrence*, a
triple of edges ``(p, q, r)`` arranged around a degree-four vertex the
way an expansion leaves them, into a single merged edge with a fresh
token address (``ma``, ``mb``, ...).  The journal of a graph records the
merge tokens allocated so far, so replaying a move sequence always
produces the same addresses.

The module also implements the boundary machinery behind the rank
bounds: the outer boundary walk read off the rotation system, special
circuits, collapsible vertices, and the defect, which is invariant
under both kinds of moves.
"""

import itertools
import json
from typing import Dict, Iterable, Iterator, NamedTuple, Optional, Tuple

from basilica.kernels import canon_code

__all__ = [
    "AddressedGraph",
    "GraphError",
    "ExpansionError",
    "ContractionError",
    "AddressError",
    "Occurrence",
    "SpecialCircuit",
    "make_g0",
    "make_j",
    "make_o",
    "isomorphisms",
    "isomorphism",
    "canonical_form",
    "addresses_adjacent",
    "parse_address",
    "prefix_rename",
]

Dart = Tuple[str, int]


class GraphError(ValueError):
    """Base class for malformed graphs or invalid moves."""


class ExpansionError(GraphError):
    """Raised when an edge cannot be expanded."""


class ContractionError(GraphError):
    """Raised when a triple is not a contractible occurrence."""


class AddressError(GraphError):
    """Raised when an address does not parse over the given base graph."""


class Occurrence(NamedTuple):
    """A contractible site: in-edge ``p``, loop ``q``, out-edge ``r`` at ``vertex``."""

    p: str
    q: str
    r: str
    vertex: str

    @property
    def triple(self) -> Tuple[str, str, str]:
        return (self.p, self.q, self.r)


class SpecialCircuit(NamedTuple):
    """A maximal closed subwalk of the outer boundary walk through degree-4 vertices."""

    vertex: str
    darts: Tuple[Dart, ...]

    @property
    def edge_addresses(self) -> Tuple[str, ...]:
        return tuple(d[0] for d in self.darts)


def _letters(i: int) -> str:
    """0 -> 'a', 25 -> 'z', 26 -> 'aa', bijective base 26."""
    i += 1
    out = ""
    while i:
        i, rem = divmod(i - 1, 26)
        out = chr(97 + rem) + out
    return out


def prefix_rename(name: str, prefix_map: Dict[str, str]) -> str:
    """Apply the longest applicable prefix substitution to an address.

    A key applies when the name equals it or extends it by characters
    from ``1234``; names without an applicable key pass through.
    """
    best = None
    for k in prefix_map:
        if name == k or (
            name.startswith(k) and all(ch in "1234" for ch in name[len(k):])
        ):
            if best is None or len(k) > len(best):
                best = k
    if best is None:
        return name
    return prefix_map[best] + name[len(best):]


def _replace_dart(rot: Tuple[Dart, ...], old: Dart, new: Dart) -> Tuple[Dart, ...]:
    if old not in rot:
        raise GraphError(f"dart {old} missing from rotation {rot}")
    return tuple(new if d == old else d for d in rot)


def _cyclic_normal(rot: Tuple[Dart, ...]) -> Tuple[Dart, ...]:
    if not rot:
        return rot
    k = rot.index(min(rot))
    return rot[k:] + rot[:k]


class AddressedGraph:
    """An immutable directed multigraph with addresses and a rotation system."""

    __slots__ = ("vertices", "edges", "rotation", "journal", "_normal_cache")

    def __init__(
        self,
        vertices: Iterable[str],
        edges,
        rotation: Optional[Dict[str, Tuple[Dart, ...]]] = None,
        journal: Iterable[str] = (),
    ):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        if isinstance(edges, dict):
            self.edges: Dict[str, Tuple[str, str]] = {
                a: (s, d) for a, (s, d) in edges.items()
            }
        else:
            self.edges = {a: (s, d) for a, s, d in edges}
        self.journal: Tuple[str, ...] = tuple(journal)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphError("duplicate vertex names")
        for a, (s, d) in self.edges.items():
            if s not in vset or d not in vset:
                raise GraphError(f"edge {a}: endpoint outside vertex set")
        if rotation is None:
            rotation = {v: tuple(sorted(self._darts_at_unordered(v))) for v in self.vertices}
        self.rotation: Dict[str, Tuple[Dart, ...]] = {
            v: tuple(rotation[v]) for v in self.vertices
        }
        for v in self.vertices:
            expected = sorted(self._darts_at_unordered(v))
            if sorted(self.rotation[v]) != expected:
                raise GraphError(f"rotation at {v} is not a permutation of its darts")
        self._normal_cache = None

    def _darts_at_unordered(self, v: str):
        out = []
        for a, (s, d) in self.edges.items():
            if s == v:
                out.append((a, 0))
            if d == v:
                out.append((a, 1))
        return out

    # -- basic queries ------------------------------------------------

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def dart_vertex(self, dart: Dart) -> str:
        addr, end = dart
        return self.edges[addr][end]

    def darts(self) -> Iterator[Dart]:
        for a in self.edges:
            yield (a, 0)
            yield (a, 1)

    def is_loop(self, addr: str) -> bool:
        s, d = self.edges[addr]
        return s == d

    def _normal(self):
        if self._normal_cache is None:
            self._normal_cache = (
                tuple(sorted(self.vertices)),
                tuple(sorted(self.edges.items())),
                tuple(sorted((v, _cyclic_normal(r)) for v, r in self.rotation.items())),
                self.journal,
            )
        return self._normal_cache

    def __eq__(self, other) -> bool:
        if not isinstance(other, AddressedGraph):
            return NotImplemented
        return self._normal() == other._normal()

    def __hash__(self) -> int:
        return hash(self._normal())

    def __repr__(self) -> str:
        return (
            f"AddressedGraph({len(self.vertices)} vertices, "
            f"{len(self.edges)} edges, journal={list(self.journal)})"
        )

    # -- moves ----------------------------------------------------------

    def expand(self, eps: str) -> "AddressedGraph":
        """Replace edge ``eps: u -> w`` by ``eps1: u -> eps4``, loop ``eps2``, ``eps3: eps4 -> w``."""
        if eps not in self.edges:
            raise ExpansionError(f"no edge {eps!r} to expand")
        u, w = self.edges[eps]
        e1, e2, e3, mid = eps + "1", eps + "2", eps + "3", eps + "4"
        taken = set(self.edges) | set(self.vertices) | set(self.journal)
        for name in (e1, e2, e3, mid):
            if name in taken:
                raise ExpansionError(f"expansion name {name!r} already in use")
        edges = dict(self.edges)
        del edges[eps]
        edges[e1] = (u, mid)
        edges[e2] = (mid, mid)
        edges[e3] = (mid, w)
        rotation = dict(self.rotation)
        rotation[u] = _replace_dart(rotation[u], (eps, 0), (e1, 0))
        rotation[w] = _replace_dart(rotation[w], (eps, 1), (e3, 1))
        rotation[mid] = ((e1, 1), (e2, 0), (e2, 1), (e3, 0))
        return AddressedGraph(
            self.vertices + (mid,), edges, rotation, self.journal
        )

    def occurrences(self) -> Tuple[Occurrence, ...]:
        """All contractible sites, sorted by interior vertex.

        A site is a degree-4 vertex whose rotation reads, up to cyclic
        shift, ``((p, head), (q, tail), (q, head), (r, tail))`` with
        ``p``, ``r`` distinct non-loops, exactly the local picture an
        expansion leaves at its midpoint.
        """
        found = []
        for v in self.vertices:
            rot = self.rotation[v]
            if len(rot) != 4:
                continue
            for k in range(4):
                d0, d1, d2, d3 = rot[k:] + rot[:k]
                if d0[1] != 1 or d1[1] != 0 or d2[1] != 1 or d3[1] != 0:
                    continue
                if d1[0] != d2[0]:
                    continue
                p, q, r = d0[0], d1[0], d3[0]
                if p == r:
                    continue
                if self.edges[p][0] == v or self.edges[r][1] == v:
                    continue
                found.append(Occurrence(p, q, r, v))
                break
        return tuple(sorted(found, key=lambda o: o.vertex))

    def occurrence_at(self, v: str) -> Optional[Occurrence]:
        for occ in self.occurrences():
            if occ.vertex == v:
                return occ
        return None

    def fresh_merge_token(self) -> str:
        taken = set(self.edges) | set(self.vertices) | set(self.journal)
        i = len(self.journal)
        while True:
            name = "m" + _letters(i)
            if name not in taken:
                return name
            i += 1

    def contract(self, triple) -> "AddressedGraph":
        """Contract an occurrence ``(p, q, r)`` into one merged edge.

        The merged edge runs from the source of ``p`` to the target of
        ``r`` (a loop when they coincide), takes the next free journal
        token as its address, and inherits the rotation slots of the
        darts it absorbs.
        """
        if isinstance(triple, Occurrence):
            triple = triple.triple
        p, q, r = triple
        site = None
        for occ in self.occurrences():
            if occ.triple == (p, q, r):
                site = occ
                break
        if site is None:
            raise ContractionError(f"{(p, q, r)} is not a contractible occurrence")
        v = site.vertex
        u, w = self.edges[p][0], self.edges[r][1]
        merged = self.fresh_merge_token()
        edges = dict(self.edges)
        for a in (p, q, r):
            del edges[a]
        edges[merged] = (u, w)
        rotation = dict(self.rotation)
        del rotation[v]
        rotation[u] = _replace_dart(rotation[u], (p, 0), (merged, 0))
        rotation[w] = _replace_dart(rotation[w], (r, 1), (merged, 1))
        vertices = tuple(x for x in self.vertices if x != v)
        return AddressedGraph(vertices, edges, rotation, self.journal + (merged,))

    # -- boundary machinery ----------------------------------------------

    def _sigma(self) -> Dict[Dart, Dart]:
        nxt = {}
        for v in self.vertices:
            rot = self.rotation[v]
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % len(rot)]
        return nxt

    def faces(self) -> Tuple[Tuple[Dart, ...], ...]:
        """The face orbits of the traversal ``dart -> sigma(other end of dart)``."""
        sigma = self._sigma()

        def step(d: Dart) -> Dart:
            return sigma[(d[0], 1 - d[1])]

        seen = set()
        out = []
        for start in sorted(self.darts()):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            d = step(start)
            while d != start:
                orbit.append(d)
                seen.add(d)
                d = step(d)
            out.append(tuple(orbit))
        return tuple(out)

    def outer_boundary_walk(self) -> Tuple[Dart, ...]:
        """The face orbit that meets every edge, rotated to its least dart.

        For the graphs this system reaches there is a unique such face;
        when several qualify (a bare 2-cycle, say) the one containing
        the lexicographically least dart wins.
        """
        all_edges = set(self.edges)
        candidates = [
            f for f in self.faces() if {d[0] for d in f} == all_edges
        ]
        if not candidates:
            raise GraphError("no face meets every edge")
        walk = min(candidates, key=lambda f: min(f))
        return _cyclic_normal(walk)

    def special_circuits(self) -> Tuple[SpecialCircuit, ...]:
        """Maximal closed subwalks of the outer walk meeting only degree-4 vertices.

        The walk is cut at every position based at a vertex of degree
        other than four; inside each remaining arc, a vertex that the
        arc visits at least twice is the base of a circuit, and the
        circuit reported runs from its first visit to its last.  When
        the whole walk stays in degree-4 land every walk vertex gets the
        full cyclic walk starting at its first visit.
        """
        walk = self.outer_boundary_walk()
        length = len(walk)
        base = [self.dart_vertex(d) for d in walk]
        good = [self.degree(v) == 4 for v in base]
        circuits = []
        if all(good):
            seen = set()
            for i in range(length):
                v = base[i]
                if v in seen:
                    continue
                seen.add(v)
                circuits.append(SpecialCircuit(v, walk[i:] + walk[:i]))
            return tuple(sorted(circuits, key=lambda c: c.vertex))
        # maximal runs of good positions, cyclically
        arcs = []
        i = 0
        while i < length:
            if not good[i]:
                i += 1
                continue
            j = i
            while j < length and good[j]:
                j += 1
            arcs.append(list(range(i, j)))
            i = j
        if good[0] and good[length - 1] and len(arcs) > 1:
            tail = arcs.pop()
            arcs[0] = tail + arcs[0]
        for arc in arcs:
            first: Dict[str, int] = {}
            last: Dict[str, int] = {}
            for idx, pos in enumerate(arc):
                v = base[pos]
                first.setdefault(v, idx)
                last[v] = idx
            for v in first:
                if last[v] > first[v]:
                    darts = tuple(walk[arc[k] % length] for k in range(first[v], last[v]))
                    circuits.append(SpecialCircuit(v, darts))
        return tuple(sorted(circuits, key=lambda c: c.vertex))

    def collapsible_vertices(self) -> frozenset:
        return frozenset(c.vertex for c in self.special_circuits())

    def defect(self) -> int:
        """Vertices minus collapsible vertices; invariant under both moves."""
        return len(self.vertices) - len(self.collapsible_vertices())

    def min_edge_bound(self) -> int:
        """Lower bound for the edge count over the whole move class."""
        return 2 * self.defect() + (len(self.edges) - 2 * len(self.vertices))

    # -- renaming -------------------------------------------------------

    def renamed(self, prefix_map: Dict[str, str], journal: Optional[Iterable[str]] = None) -> "AddressedGraph":
        """Rename addresses by longest matching prefix.

        A map key applies to any name equal to it or extending it by
        characters from ``1234`` (children and midpoint vertices).
        Names no key applies to are kept.
        """
        vertices = tuple(prefix_rename(v, prefix_map) for v in self.vertices)
        edges = {
            prefix_rename(a, prefix_map): (
                prefix_rename(s, prefix_map),
                prefix_rename(d, prefix_map),
            )
            for a, (s, d) in self.edges.items()
        }
        if len(edges) != len(self.edges):
            raise GraphError("renaming collides edge addresses")
        rotation = {
            prefix_rename(v, prefix_map): tuple(
                (prefix_rename(a, prefix_map), e) for a, e in rot
            )
            for v, rot in self.rotation.items()
        }
        if journal is None:
            journal = self.journal
        return AddressedGraph(vertices, edges, rotation, journal)

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        obj = {
            "vertices": sorted(self.vertices),
            "edges": [
                {"addr": a, "src": s, "dst": d}
                for a, (s, d) in sorted(self.edges.items())
            ],
            "rotation": {
                v: [
                    f"{a}:{'head' if e else 'tail'}"
                    for a, e in _cyclic_normal(self.rotation[v])
                ]
                for v in sorted(self.vertices)
            },
        }
        if self.journal:
            obj["journal"] = list(self.journal)
        return obj

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=indent)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "AddressedGraph":
        edges = {e["addr"]: (e["src"], e["dst"]) for e in obj["edges"]}
        rotation = {}
        for v, darts in obj["rotation"].items():
            rot = []
            for txt in darts:
                addr, _, end = txt.rpartition(":")
                rot.append((addr, 1 if end == "head" else 0))
            rotation[v] = tuple(rot)
        return cls(obj["vertices"], edges, rotation, obj.get("journal", ()))

    @classmethod
    def from_json(cls, text: str) -> "AddressedGraph":
        return cls.from_json_obj(json.loads(text))

    def to_dot(self) -> str:
        lines = ["digraph {"]
        for v in sorted(self.vertices):
            lines.append(f'  "{v}";')
        for a, (s, d) in sorted(self.edges.items()):
            lines.append(f'  "{s}" -> "{d}" [label="{a}"];')
        lines.append("}")
        return "\n".join(lines)


# -- seed graphs ----------------------------------------------------------


def make_g0() -> AddressedGraph:
    """The base graph: loops ``a`` at ``x`` and ``c`` at ``y`` joined by ``b`` and ``d``."""
    edges = {"a": ("x", "x"), "b": ("x", "y"), "c": ("y", "y"), "d": ("y", "x")}
    rotation = {
        "x": (("d", 1), ("a", 0), ("a", 1), ("b", 0)),
        "y": (("b", 1), ("c", 0), ("c", 1), ("d", 0)),
    }
    return AddressedGraph(("x", "y"), edges, rotation)


def _chain_names(n: int):
    u = ["u" + _letters(i) for i in range(n + 1)]
    s = [None] + ["s" + _letters(i - 1) for i in range(1, n + 1)]
    t = [None] + ["t" + _letters(i - 1) for i in range(1, n + 1)]
    return u, s, t


def make_j(n: int) -> AddressedGraph:
    """The wall-carrier family: a doubled chain with two looped pendants per side."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u, s, t = _chain_names(n)
    vertices = tuple(u) + ("p", "q", "l", "m")
    edges = {
        "v": (u[0], "p"),
        "w": ("p", "p"),
        "x": ("p", "q"),
        "y": ("q", "q"),
        "z": ("q", u[0]),
        "a": (u[n], "l"),
        "b": ("l", "l"),
        "c": ("l", "m"),
        "d": ("m", "m"),
        "e": ("m", u[n]),
    }
    for i in range(1, n + 1):
        edges[s[i]] = (u[i - 1], u[i])
        edges[t[i]] = (u[i], u[i - 1])
    rotation = {
        "p": (("v", 1), ("w", 0), ("w", 1), ("x", 0)),
        "q": (("x", 1), ("y", 0), ("y", 1), ("z", 0)),
        "l": (("a", 1), ("b", 0), ("b", 1), ("c", 0)),
        "m": (("c", 1), ("d", 0), ("d", 1), ("e", 0)),
    }
    if n == 0:
        rotation[u[0]] = (("e", 1), ("v", 0), ("z", 1), ("a", 0))
    else:
        rotation[u[0]] = ((t[1], 1), ("v", 0), ("z", 1), (s[1], 0))
        for i in range(1, n):
            rotation[u[i]] = ((t[i + 1], 1), (t[i], 0), (s[i], 1), (s[i + 1], 0))
        rotation[u[n]] = (("e", 1), (t[n], 0), (s[n], 1), ("a", 0))
    return AddressedGraph(vertices, edges, rotation)


def make_o(n: int) -> AddressedGraph:
    """The wall-intersection family: the doubled chain with one looped pendant per side."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u, s, t = _chain_names(n)
    vertices = tuple(u) + ("p", "l")
    edges = {
        "v": (u[0], "p"),
        "w": ("p", "p"),
        "a": (u[n], "l"),
        "b": ("l", "l"),
    }
    for i in range(1, n + 1):
        edges[s[i]] = (u[i - 1], u[i])
        edges[t[i]] = (u[i], u[i - 1])
    rotation = {
        "p": (("v", 1), ("w", 0), ("w", 1)),
        "l": (("a", 1), ("b", 0), ("b", 1)),
    }
    if n == 0:
        rotation[u[0]] = (("v", 0), ("a", 0))
    else:
        rotation[u[0]] = ((t[1], 1), ("v", 0), (s[1], 0))
        for i in range(1, n):
            rotation[u[i]] = ((t[i + 1], 1), (t[i], 0), (s[i], 1), (s[i + 1], 0))
        rotation[u[n]] = ((t[n], 0), (s[n], 1), ("a", 0))
    return AddressedGraph(vertices, edges, rotation)


# -- isomorphism ------------------------------------------------------------


def _profile(g: AddressedGraph, v: str):
    out_loops = sum(1 for a, (s, d) in g.edges.items() if s == v and d == v)
    outs = sum(1 for a, (s, d) in g.edges.items() if s == v)
    ins = sum(1 for a, (s, d) in g.edges.items() if d == v)
    return (g.degree(v), outs, ins, out_loops)


def isomorphisms(
    g: AddressedGraph, h: AddressedGraph, respect_rotation: bool = False
) -> Iterator[Tuple[Dict[str, str], Dict[str, str]]]:
    """Yield all isomorphisms ``(vertex_map, edge_map)`` from ``g`` to ``h``.

    An isomorphism matches the directed multigraph structure; with
    ``respect_rotation`` it must also carry each rotation to the image
    rotation up to cyclic shift.  This is a plain backtracking search,
    kept independent of the canonical-code kernel so the two can be
    cross-checked.
    """
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return
    gv = sorted(g.vertices, key=lambda v: (_profile(g, v), v))
    hv = sorted(h.vertices)
    hprof: Dict[str, tuple] = {v: _profile(h, v) for v in hv}

    def g_pairs(vmap):
        pairs: Dict[Tuple[str, str], list] = {}
        for a, (s, d) in g.edges.items():
            pairs.setdefault((s, d), []).append(a)
        return pairs

    def extend(i: int, vmap: Dict[str, str], used: set):
        if i == len(gv):
            yield dict(vmap)
            return
        v = gv[i]
        pv = _profile(g, v)
        for wv in hv:
            if wv in used or hprof[wv] != pv:
                continue
            vmap[v] = wv
            used.add(wv)
            yield from extend(i + 1, vmap, used)
            del vmap[v]
            used.discard(wv)

    h_pairs: Dict[Tuple[str, str], list] = {}
    for a, (s, d) in h.edges.items():
        h_pairs.setdefault((s, d), []).append(a)

    for vmap in extend(0, {}, set()):
        pairs = g_pairs(vmap)
        target_lists = []
        ok = True
        for (s, d), addrs in sorted(pairs.items()):
            image = h_pairs.get((vmap[s], vmap[d]), [])
            if len(image) != len(addrs):
                ok = False
                break
            target_lists.append((addrs, sorted(image)))
        if not ok:
            continue
        for perm_choice in itertools.product(
            *[itertools.permutations(image) for _, image in target_lists]
        ):
            emap: Dict[str, str] = {}
            for (addrs, _), perm in zip(target_lists, perm_choice):
                for a, b in zip(addrs, perm):
                    emap[a] = b
            if respect_rotation:
                good = True
                for v in g.vertices:
                    rot = tuple((emap[a], e) for a, e in g.rotation[v])
                    target = h.rotation[vmap[v]]
                    if _cyclic_normal(rot) != _cyclic_normal(target):
                        good = False
                        break
                if not good:
                    continue
            yield dict(vmap), emap


def isomorphism(
    g: AddressedGraph, h: AddressedGraph, respect_rotation: bool = False
) -> Optional[Tuple[Dict[str, str], Dict[str, str]]]:
    for iso in isomorphisms(g, h, respect_rotation):
        return iso
    return None


def canonical_form(
    g: AddressedGraph,
    edge_colors: Optional[Dict[str, int]] = None,
    respect_rotation: bool = True,
) -> tuple:
    """A code equal across graphs exactly when they are isomorphic.

    The rotation system is folded in by encoding each dart as an extra
    node anchored to its vertex, to its rotation successor, and to the
    opposite dart of its edge, the latter arc carrying the edge color.
    """
    vs = sorted(g.vertices)
    vid = {v: i for i, v in enumerate(vs)}
    ds = sorted(g.darts())
    did = {d: len(vs) + i for i, d in enumerate(ds)}
    arcs = []
    for d in ds:
        arcs.append((did[d], vid[g.dart_vertex(d)], 0))
    if respect_rotation:
        sigma = g._sigma()
        for d in ds:
            arcs.append((did[d], did[sigma[d]], 1))
    for a in sorted(g.edges):
        color = 0 if edge_colors is None else edge_colors.get(a, 0)
        arcs.append((did[(a, 0)], did[(a, 1)], 2 + color))
    return canon_code(len(vs) + len(ds), arcs)


# -- limit-space addresses ---------------------------------------------------


def parse_address(g0: AddressedGraph, addr: str) -> Tuple[str, str]:
    """Split ``addr`` into a base edge of ``g0`` and a digit suffix."""
    for e in g0.edges:
        if addr == e or (addr.startswith(e) and all(ch in "123" for ch in addr[len(e):])):
            return e, addr[len(e):]
    raise AddressError(f"{addr!r} is not an address over this base graph")


def addresses_adjacent(
    g0: AddressedGraph, addr1: str, addr2: str, depth: int = 4
) -> bool:
    """Whether the cells named by two addresses touch, checked to ``depth``.

    At stage ``n`` every edge of the stage ``n - 1`` graph is expanded
    once, so stage ``n`` edges are base edges with ``n`` digits.  The
    cell of an address at stage ``n`` consists of the edges extending
    its clamped prefix; two addresses are adjacent when their cells
    share a vertex at every stage up to ``depth``.
    """
    e1, s1 = parse_address(g0, addr1)
    e2, s2 = parse_address(g0, addr2)
    g = g0
    for n in range(depth + 1):
        p1 = e1 + s1[:n]
        p2 = e2 + s2[:n]

        def touched(prefix):
            verts = set()
            for a, (s, d) in g.edges.items():
                if a.startswith(prefix):
                    verts.add(s)
                    verts.add(d)
            return verts

        if not (touched(p1) & touched(p2)):
            return False
        if n < depth:
            for a in sorted(g.edges):
                g = g.expand(a)
    return True
