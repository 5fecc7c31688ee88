# cython: language_level=3, boundscheck=False, wraparound=False
"""Canonical codes for small colored directed multigraphs, compiled kernel.

Typed port of :mod:`basilica._canon_py`: the same individualization and
refinement scheme keeping the lexicographically least relabeled edge
code, so both backends return identical tuples on identical input.  The
breadth-first campaigns canonicalize every visited state, which makes
this the hot spot of the whole package.
"""

__all__ = ["canon_code"]


cdef list _refine(Py_ssize_t n, list out_adj, list in_adj, list classes):
    cdef Py_ssize_t v, i
    cdef list sigs, new_classes, out_sig, in_sig
    cdef dict order
    cdef object sig
    while True:
        sigs = []
        for v in range(n):
            out_sig = sorted([(p, classes[w]) for p, w in out_adj[v]])
            in_sig = sorted([(p, classes[w]) for p, w in in_adj[v]])
            sigs.append((classes[v], tuple(out_sig), tuple(in_sig)))
        order = {}
        i = 0
        for sig in sorted(set(sigs)):
            order[sig] = i
            i += 1
        new_classes = [order[sig] for sig in sigs]
        if new_classes == classes:
            return classes
        classes = new_classes


cdef tuple _code_from_discrete(list edges, list classes):
    return tuple(sorted([(classes[s], classes[d], c) for s, d, c in edges]))


cdef object _first_non_singleton(Py_ssize_t n, list classes):
    cdef list count = [0] * n
    cdef Py_ssize_t v
    cdef int c
    cdef object best = None
    for v in range(n):
        c = classes[v]
        count[c] = count[c] + 1
    for v in range(n):
        if count[classes[v]] > 1:
            if best is None or classes[v] < classes[best]:
                best = v
    if best is None:
        return None
    return classes[best]


cdef void _search(
    Py_ssize_t n, list edges, list out_adj, list in_adj, list classes, list best
):
    cdef Py_ssize_t v, i
    cdef list child
    cdef dict order
    cdef object target, c
    cdef tuple code
    classes = _refine(n, out_adj, in_adj, classes)
    target = _first_non_singleton(n, classes)
    if target is None:
        code = _code_from_discrete(edges, classes)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    for v in range(n):
        if classes[v] != target:
            continue
        child = [2 * c for c in classes]
        child[v] = 2 * classes[v] - 1
        order = {}
        i = 0
        for c in sorted(set(child)):
            order[c] = i
            i += 1
        _search(n, edges, out_adj, in_adj, [order[c] for c in child], best)


def canon_code(n, edges):
    """Canonical code of a colored directed multigraph.

    ``n`` is the number of vertices, ``edges`` an iterable of
    ``(src, dst, color)`` triples with endpoints in ``range(n)`` and
    integer colors.  The result is ``(n, sorted_relabeled_edges)`` for
    the lexicographically least relabeling; two inputs get equal codes
    iff some bijection of the vertex sets matches the edge multisets
    including colors.
    """
    cdef Py_ssize_t size = n
    cdef list triples = [(int(s), int(d), int(c)) for s, d, c in edges]
    cdef list out_adj = [[] for _ in range(size)]
    cdef list in_adj = [[] for _ in range(size)]
    cdef int s, d, c
    for s, d, c in triples:
        out_adj[s].append((c, d))
        in_adj[d].append((c, s))
    cdef list best = [None]
    _search(size, triples, out_adj, in_adj, [0] * size, best)
    return (n, best[0] if best[0] is not None else ())
