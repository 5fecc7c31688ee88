"""Rearrangement diagrams: pairs of expansions joined by a graph isomorphism.

A rearrangement from the limit space over one base graph to the limit
space over another is recorded as a *graph pair diagram*: an expansion
of the domain base, an expansion of the range base, and a graph
isomorphism ``phi`` between the two expansions.  Cells of the limit
space are named by edge addresses, and the rearrangement sends the cell
``leaf + suffix`` to ``phi(leaf) + suffix``.

Two diagrams describe the same rearrangement when, after cancelling
matched sibling carets, they differ only by an isomorphism of the range
base compatible with ``phi``; ``range_equivalent`` decides this and
``vertex_key`` produces a hashable complete invariant for it.  The rank
of a diagram is the number of edges of its range base.
"""

import json
from typing import Dict, Iterable, Optional, Tuple

from basilica.graphs import (
    AddressedGraph,
    GraphError,
    canonical_form,
    isomorphisms,
)

__all__ = [
    "DiagramError",
    "GraphPairDiagram",
    "expansion_from_leaves",
    "identity_diagram",
    "elementary_expansion",
    "elementary_contraction",
    "compose",
    "reduce_diagram",
    "range_equivalent",
    "vertex_key",
]


class DiagramError(ValueError):
    """Raised for malformed diagrams or undefined diagram operations."""


def _extends(leaf: str, edge: str) -> bool:
    """Whether ``leaf`` equals ``edge`` or refines it by child digits."""
    return leaf == edge or (
        leaf.startswith(edge) and all(ch in "123" for ch in leaf[len(edge):])
    )


def expansion_from_leaves(base: AddressedGraph, leaves: Iterable[str]) -> AddressedGraph:
    """The expansion of ``base`` whose edge set is exactly ``leaves``.

    Expansions commute, so the leaf set determines the expansion; this
    raises :class:`DiagramError` when the set is not a full antichain of
    addresses over ``base``.
    """
    leaves = set(leaves)
    g = base
    changed = True
    while changed:
        changed = False
        for e in sorted(g.edges):
            if e in leaves:
                continue
            if any(l != e and _extends(l, e) for l in leaves):
                g = g.expand(e)
                changed = True
            else:
                raise DiagramError(
                    f"edge {e!r} is neither a leaf nor refined by the leaf set"
                )
    if set(g.edges) != leaves:
        raise DiagramError("leaf set does not match an expansion of the base")
    return g


class GraphPairDiagram:
    """An expansion pair with a leaf isomorphism, representing a rearrangement."""

    __slots__ = ("base_domain", "base_range", "domain", "range", "phi")

    def __init__(
        self,
        base_domain: AddressedGraph,
        base_range: AddressedGraph,
        domain: AddressedGraph,
        range_graph: AddressedGraph,
        phi: Dict[str, str],
        _trusted: bool = False,
    ):
        self.base_domain = base_domain
        self.base_range = base_range
        self.domain = domain
        self.range = range_graph
        self.phi = dict(phi)
        if not _trusted:
            self._validate()

    def _validate(self) -> None:
        if expansion_from_leaves(self.base_domain, self.domain.edges) != self.domain:
            raise DiagramError("domain is not the expansion of the domain base")
        if expansion_from_leaves(self.base_range, self.range.edges) != self.range:
            raise DiagramError("range is not the expansion of the range base")
        if set(self.phi) != set(self.domain.edges):
            raise DiagramError("phi keys must be the domain leaves")
        if set(self.phi.values()) != set(self.range.edges) or len(
            set(self.phi.values())
        ) != len(self.phi):
            raise DiagramError("phi must be a bijection onto the range leaves")
        # phi must induce a single well-defined vertex bijection
        vmap: Dict[str, str] = {}
        for a, b in self.phi.items():
            for end in (0, 1):
                va = self.domain.edges[a][end]
                vb = self.range.edges[b][end]
                if vmap.setdefault(va, vb) != vb:
                    raise DiagramError(
                        f"phi is not a graph isomorphism at vertex {va!r}"
                    )
        if len(set(vmap.values())) != len(vmap):
            raise DiagramError("phi does not induce a vertex bijection")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_prefix_map(
        cls,
        mapping: Dict[str, str],
        base_domain: AddressedGraph,
        base_range: AddressedGraph,
    ) -> "GraphPairDiagram":
        domain = expansion_from_leaves(base_domain, mapping.keys())
        range_graph = expansion_from_leaves(base_range, mapping.values())
        return cls(base_domain, base_range, domain, range_graph, mapping)

    # -- basics ----------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.base_range.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphPairDiagram):
            return NotImplemented
        return (
            self.base_domain == other.base_domain
            and self.base_range == other.base_range
            and self.domain == other.domain
            and self.range == other.range
            and self.phi == other.phi
        )

    def __hash__(self) -> int:
        return hash(
            (self.base_domain, self.base_range, self.domain, self.range,
             tuple(sorted(self.phi.items())))
        )

    def __repr__(self) -> str:
        return (
            f"GraphPairDiagram(rank={self.rank}, leaves={len(self.phi)}, "
            f"base_range_edges={len(self.base_range.edges)})"
        )

    def apply(self, addr: str) -> str:
        """Image of a cell address; defined when it lies within one leaf."""
        for leaf, image in self.phi.items():
            if _extends(addr, leaf):
                return image + addr[len(leaf):]
        raise DiagramError(f"address {addr!r} does not refine a single domain leaf")

    def induced_vertex_map(self) -> Dict[str, str]:
        """The vertex bijection from the domain to the range expansion."""
        vmap: Dict[str, str] = {}
        for a, b in self.phi.items():
            for end in (0, 1):
                vmap[self.domain.edges[a][end]] = self.range.edges[b][end]
        return vmap

    def invert(self) -> "GraphPairDiagram":
        return GraphPairDiagram(
            self.base_range,
            self.base_domain,
            self.range,
            self.domain,
            {b: a for a, b in self.phi.items()},
            _trusted=True,
        )

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "base_domain": self.base_domain.to_json_obj(),
            "base_range": self.base_range.to_json_obj(),
            "domain": self.domain.to_json_obj(),
            "range": self.range.to_json_obj(),
            "phi": [[a, self.phi[a]] for a in sorted(self.phi)],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=indent)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GraphPairDiagram":
        return cls(
            AddressedGraph.from_json_obj(obj["base_domain"]),
            AddressedGraph.from_json_obj(obj["base_range"]),
            AddressedGraph.from_json_obj(obj["domain"]),
            AddressedGraph.from_json_obj(obj["range"]),
            {a: b for a, b in obj["phi"]},
        )

    @classmethod
    def from_json(cls, text: str) -> "GraphPairDiagram":
        return cls.from_json_obj(json.loads(text))


def identity_diagram(base: AddressedGraph) -> GraphPairDiagram:
    return GraphPairDiagram(
        base, base, base, base, {e: e for e in base.edges}, _trusted=True
    )


def elementary_expansion(base: AddressedGraph, eps: str) -> GraphPairDiagram:
    """The rearrangement that carries the base identically onto its expansion."""
    expanded = base.expand(eps)
    phi = {e: e for e in expanded.edges}
    return GraphPairDiagram(base, expanded, expanded, expanded, phi, _trusted=True)


def elementary_contraction(base: AddressedGraph, triple) -> GraphPairDiagram:
    """The rearrangement onto the contraction of ``base`` at an occurrence."""
    contracted = base.contract(triple)
    if hasattr(triple, "triple"):
        triple = triple.triple
    p, q, r = triple
    merged = contracted.journal[-1]
    range_graph = contracted.expand(merged)
    phi = {e: e for e in base.edges}
    phi[p] = merged + "1"
    phi[q] = merged + "2"
    phi[r] = merged + "3"
    return GraphPairDiagram(base, contracted, base, range_graph, phi, _trusted=True)


def compose(g: GraphPairDiagram, f: GraphPairDiagram, budget: int = 16) -> GraphPairDiagram:
    """The composite ``g after f``, built over the join refinement.

    The middle bases must agree.  ``budget`` caps the digit depth of the
    join leaves over their base edges, guarding runaway refinement in
    long random composition chains.
    """
    if f.base_range != g.base_domain:
        raise DiagramError("middle bases differ, cannot compose")
    lf = set(f.range.edges)
    lg = set(g.domain.edges)
    join = set()
    for l in lf:
        below = [m for m in lg if m != l and _extends(m, l)]
        if below:
            join.update(below)
        else:
            join.add(l)
    inv_f = {v: k for k, v in f.phi.items()}
    mapping: Dict[str, str] = {}
    for j in sorted(join):
        l = next(x for x in lf if _extends(j, x))
        if len(j) - len(l) > budget:
            raise DiagramError("composition exceeds the refinement budget")
        d = next(x for x in lg if _extends(j, x))
        mapping[inv_f[l] + j[len(l):]] = g.phi[d] + j[len(d):]
    return GraphPairDiagram.from_prefix_map(mapping, f.base_domain, g.base_range)


def _allowed(addr: str, base: AddressedGraph) -> bool:
    return any(_extends(addr, e) for e in base.edges)


def _cancellations(f: GraphPairDiagram):
    """Sibling caret pairs of ``f`` that may be cancelled, sorted."""
    leaves = set(f.domain.edges)
    out = []
    for v in f.domain.vertices:
        if not v.endswith("4"):
            continue
        delta = v[:-1]
        trio = (delta + "1", delta + "2", delta + "3")
        if not all(t in leaves for t in trio):
            continue
        images = tuple(f.phi[t] for t in trio)
        if images[0][-1:] != "1":
            continue
        eps = images[0][:-1]
        if not eps or images != (eps + "1", eps + "2", eps + "3"):
            continue
        if not _allowed(delta, f.base_domain) or not _allowed(eps, f.base_range):
            continue
        out.append((delta, eps))
    return sorted(out)


def reduce_diagram(f: GraphPairDiagram, rng=None) -> GraphPairDiagram:
    """Cancel matched sibling carets until none remain.

    A caret cancels when the three children of a domain sibling triple
    map role-by-role onto a range sibling triple and both parent
    addresses are legal over their bases.  With ``rng`` the order of
    cancellation is randomized; the normal form does not depend on it.
    """
    while True:
        cands = _cancellations(f)
        if not cands:
            return f
        if rng is None:
            delta, eps = cands[0]
        else:
            delta, eps = cands[rng.randrange(len(cands))]
        leaves = set(f.domain.edges)
        leaves.difference_update({delta + "1", delta + "2", delta + "3"})
        leaves.add(delta)
        phi = {
            k: v
            for k, v in f.phi.items()
            if k not in (delta + "1", delta + "2", delta + "3")
        }
        phi[delta] = eps
        f = GraphPairDiagram.from_prefix_map(phi, f.base_domain, f.base_range)


def is_reduced(f: GraphPairDiagram) -> bool:
    return not _cancellations(f)


def _range_colors(f: GraphPairDiagram) -> Dict[str, tuple]:
    """For each range-base edge the sorted pairs (domain leaf, suffix) mapping into it."""
    colors: Dict[str, list] = {e: [] for e in f.base_range.edges}
    for leaf, image in f.phi.items():
        for e in f.base_range.edges:
            if _extends(image, e):
                colors[e].append((leaf, image[len(e):]))
                break
        else:
            raise DiagramError(f"range leaf {image!r} outside the range base")
    return {e: tuple(sorted(pairs)) for e, pairs in colors.items()}


def range_equivalent(f: GraphPairDiagram, g: GraphPairDiagram) -> bool:
    """Whether two diagrams present the same rearrangement up to range renaming.

    Both are reduced; they must then share the domain base, have equal
    domain leaf sets, and admit an isomorphism ``beta`` of the range
    bases whose induced prefix renaming carries ``phi`` of one to the
    other.
    """
    f = reduce_diagram(f)
    g = reduce_diagram(g)
    if f.base_domain != g.base_domain:
        return False
    if set(f.domain.edges) != set(g.domain.edges):
        return False
    if len(f.base_range.edges) != len(g.base_range.edges):
        return False
    cf = _range_colors(f)
    cg = _range_colors(g)
    if sorted(cf.values()) != sorted(cg.values()):
        return False
    for _, emap in isomorphisms(f.base_range, g.base_range, respect_rotation=True):
        if all(cf[e] == cg[emap[e]] for e in cf):
            return True
    return False


def vertex_key(f: GraphPairDiagram) -> tuple:
    """A hashable complete invariant of the range-equivalence class of ``f``.

    The range base is canonicalized with each edge colored by the set of
    domain cells landing in it; the domain base and the color values
    themselves are carried alongside.
    """
    f = reduce_diagram(f)
    colors = _range_colors(f)
    palette = sorted(set(colors.values()))
    index = {c: i for i, c in enumerate(palette)}
    code = canonical_form(
        f.base_range,
        edge_colors={e: index[c] for e, c in colors.items()},
        respect_rotation=True,
    )
    return (f.base_domain._normal(), tuple(palette), code)
