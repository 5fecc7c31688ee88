"""Simplicial complexes and integral homology via Smith normal form.

Complexes here are tiny (nerves of four-set covers, descending links
with a handful of vertices), so the Smith reduction is the plain
exact-integer pivot algorithm with a divisibility fix-up pass, no
sparsity tricks.  Betti numbers come from the ranks of the boundary
matrices and torsion from the diagonal entries larger than one.
"""

import itertools
import json
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

__all__ = [
    "SimplicialComplex",
    "nerve",
    "smith_diagonal",
    "boundary_matrix",
]


def smith_diagonal(matrix: List[List[int]]) -> List[int]:
    """Nonzero diagonal of the Smith normal form, in divisibility order.

    The input is a list of rows of integers; it is not modified.  The
    returned list holds positive integers ``d_1 | d_2 | ...``.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: List[int] = []
    top = 0
    while top < rows and top < cols:
        pr, pc, best = -1, -1, None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    pr, pc, best = i, j, v
        if best is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[top], row[pc] = row[pc], row[top]
        clean = True
        for i in range(top + 1, rows):
            if m[i][top] % m[top][top]:
                clean = False
            q = m[i][top] // m[top][top]
            if q:
                for j in range(top, cols):
                    m[i][j] -= q * m[top][j]
        for j in range(top + 1, cols):
            if m[top][j] % m[top][top]:
                clean = False
            q = m[top][j] // m[top][top]
            if q:
                for i in range(top, rows):
                    m[i][j] -= q * m[i][top]
        if clean and all(m[i][top] == 0 for i in range(top + 1, rows)) and all(
            m[top][j] == 0 for j in range(top + 1, cols)
        ):
            diag.append(abs(m[top][top]))
            top += 1
    # enforce the divisibility chain; diag(a, b) ~ diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
    return diag


class SimplicialComplex:
    """A finite abstract simplicial complex with sortable vertex labels."""

    def __init__(self, faces: Iterable[Iterable]):
        closed: set = set()
        for face in faces:
            face = frozenset(face)
            if not face:
                continue
            for k in range(1, len(face) + 1):
                for sub in itertools.combinations(sorted(face), k):
                    closed.add(frozenset(sub))
        self._faces: FrozenSet[frozenset] = frozenset(closed)

    @property
    def vertices(self) -> List:
        return sorted({v for f in self._faces for v in f})

    def simplices(self, k: Optional[int] = None) -> List[Tuple]:
        """Sorted simplices, of dimension ``k`` or all of them."""
        if k is None:
            faces = self._faces
        else:
            faces = [f for f in self._faces if len(f) == k + 1]
        return sorted(tuple(sorted(f)) for f in faces)

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self._faces), default=-1)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self._faces)

    def connected_components(self) -> int:
        parent: Dict = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for edge in self.simplices(1):
            a, b = find(edge[0]), find(edge[1])
            if a != b:
                parent[a] = b
        return len({find(v) for v in parent})

    def boundary_matrix(self, k: int) -> List[List[int]]:
        return boundary_matrix(self, k)

    def betti_numbers(self, up_to: Optional[int] = None) -> List[int]:
        """Betti numbers ``b_0 .. b_up_to`` with exact integer arithmetic."""
        dim = self.dimension
        if up_to is None:
            up_to = max(dim, 0)
        counts = [len(self.simplices(k)) for k in range(up_to + 2)]
        ranks = [0] * (up_to + 2)
        for k in range(1, up_to + 2):
            mat = self.boundary_matrix(k)
            ranks[k] = len(smith_diagonal(mat)) if mat else 0
        out = []
        for k in range(up_to + 1):
            out.append(counts[k] - ranks[k] - ranks[k + 1])
        return out

    def torsion(self, k: int) -> List[int]:
        """Torsion coefficients of ``H_k``: diagonal entries above one."""
        mat = self.boundary_matrix(k + 1)
        if not mat:
            return []
        return [d for d in smith_diagonal(mat) if d > 1]

    def to_json_obj(self) -> dict:
        return {"simplices": [list(s) for s in self.simplices()]}

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=indent)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self.vertices)} vertices, "
            f"dim {self.dimension})"
        )


def boundary_matrix(complex_: SimplicialComplex, k: int) -> List[List[int]]:
    """The boundary map from ``k``-chains to ``(k-1)``-chains.

    Simplices are oriented by the sorted order of their labels; rows are
    indexed by the sorted ``(k-1)``-simplices, columns by the sorted
    ``k``-simplices.
    """
    if k <= 0:
        return []
    lower = complex_.simplices(k - 1)
    upper = complex_.simplices(k)
    if not lower or not upper:
        return []
    index = {s: i for i, s in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, simplex in enumerate(upper):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            mat[index[face]][j] += (-1) ** i
    return mat


def nerve(cover: Dict[str, Iterable]) -> SimplicialComplex:
    """The nerve of a named cover: sets span a simplex when they all meet."""
    sets = {name: set(members) for name, members in cover.items()}
    names = sorted(sets)
    faces = []
    for size in range(1, len(names) + 1):
        layer = []
        for combo in itertools.combinations(names, size):
            common = set.intersection(*(sets[c] for c in combo))
            if common:
                layer.append(combo)
        if not layer:
            break
        faces.extend(layer)
    return SimplicialComplex(faces)
