"""Canonical codes for small directed multigraphs, pure-Python reference kernel.

The graphs handled here are the shapes that the rewriting system produces:
up to a few dozen vertices, parallel edges and loops allowed, each edge
carrying a small integer color.  ``canon_code`` returns a tuple that is
equal for two graphs exactly when they are isomorphic as colored directed
multigraphs (vertex names forgotten, edge colors preserved).

The algorithm is the usual individualization-refinement scheme: iterated
signature refinement splits the vertices into classes, and whenever a
class is not a singleton one vertex of it is individualized and the
search branches, keeping the lexicographically least edge code found.
Graphs in this package are small and close to rigid, so the branching is
shallow; the compiled twin in ``basilica._canon`` exists because the
breadth-first campaigns call this on every visited state.
"""

__all__ = ["canon_code"]


def _refine(n, out_adj, in_adj, classes):
    """Refine vertex classes until the partition is stable.

    ``out_adj[v]`` and ``in_adj[v]`` list ``(color, other_endpoint)``
    pairs; loops appear in both.  Returns the stable class list, where
    classes are numbered by the sorted order of their signatures, so the
    numbering itself is isomorphism-invariant.
    """
    while True:
        sigs = []
        for v in range(n):
            out_sig = sorted((c, classes[w]) for c, w in out_adj[v])
            in_sig = sorted((c, classes[w]) for c, w in in_adj[v])
            sigs.append((classes[v], tuple(out_sig), tuple(in_sig)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_classes = [order[sig] for sig in sigs]
        if new_classes == classes:
            return classes
        classes = new_classes


def _code_from_discrete(n, edges, classes):
    pos = classes
    return tuple(sorted((pos[s], pos[d], c) for s, d, c in edges))


def _first_non_singleton(n, classes):
    count = [0] * n
    for c in classes:
        count[c] += 1
    best = None
    for v in range(n):
        if count[classes[v]] > 1:
            if best is None or classes[v] < classes[best]:
                best = v
    if best is None:
        return None
    return classes[best]


def _search(n, edges, out_adj, in_adj, classes, best):
    classes = _refine(n, out_adj, in_adj, classes)
    target = _first_non_singleton(n, classes)
    if target is None:
        code = _code_from_discrete(n, edges, classes)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    for v in range(n):
        if classes[v] != target:
            continue
        child = [2 * c for c in classes]
        child[v] = 2 * classes[v] - 1
        order = {c: i for i, c in enumerate(sorted(set(child)))}
        _search(n, edges, out_adj, in_adj, [order[c] for c in child], best)


def canon_code(n, edges):
    """Canonical code of a colored directed multigraph.

    ``n`` is the number of vertices, ``edges`` an iterable of
    ``(src, dst, color)`` triples with endpoints in ``range(n)`` and
    integer colors.  The result is ``(n, sorted_relabeled_edges)`` for
    the lexicographically least relabeling; two inputs get equal codes
    iff some bijection of the vertex sets matches the edge multisets
    including colors.

    >>> canon_code(2, [(0, 1, 0), (1, 0, 0)]) == canon_code(2, [(1, 0, 0), (0, 1, 0)])
    True
    >>> canon_code(2, [(0, 0, 0)]) == canon_code(2, [(0, 1, 0)])
    False
    """
    edges = [(int(s), int(d), int(c)) for s, d, c in edges]
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for s, d, c in edges:
        out_adj[s].append((c, d))
        in_adj[d].append((c, s))
    best = [None]
    _search(n, edges, out_adj, in_adj, [0] * n, best)
    return (n, best[0] if best[0] is not None else ())
