"""Tests for simplicial complexes, boundary maps, and integer homology."""

import random
from fractions import Fraction

from basilica.homology import (
    SimplicialComplex,
    boundary_matrix,
    nerve,
    smith_diagonal,
)
from basilica.sampling import random_complex_faces


def rational_rank(matrix):
    """Row reduce over the rationals, independent of the integer pipeline."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    col = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_smith_diagonal_divisibility():
    rng = random.Random(5)
    for _ in range(100):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)]
        diag = smith_diagonal(m)
        nonzero = [abs(d) for d in diag if d]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        assert len(nonzero) == rational_rank(m)


def test_known_complexes():
    point = SimplicialComplex([(1,)])
    assert point.betti_numbers(up_to=1) == [1, 0]
    circle = SimplicialComplex([(1, 2), (2, 3), (3, 1)])
    assert circle.betti_numbers(up_to=1) == [1, 1]
    disk = SimplicialComplex([(1, 2, 3)])
    assert disk.betti_numbers(up_to=2) == [1, 0, 0]
    sphere = SimplicialComplex([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert sphere.betti_numbers(up_to=2) == [1, 0, 1]
    two_points = SimplicialComplex([(1,), (2,)])
    assert two_points.betti_numbers(up_to=1) == [2, 0]
    assert two_points.connected_components() == 2


def test_projective_plane_has_two_torsion():
    faces = [
        (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 4, 5), (1, 5, 6),
        (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
    ]
    # The six-vertex triangulation of the projective plane.
    rp2 = SimplicialComplex(faces)
    assert rp2.euler_characteristic() == 1
    assert rp2.betti_numbers(up_to=2) == [1, 0, 0]
    assert rp2.torsion(1) == [2]


def test_boundary_of_boundary_vanishes():
    rng = random.Random(77)
    for _ in range(60):
        complex_ = SimplicialComplex(random_complex_faces(rng))
        for k in range(1, complex_.dimension + 1):
            dk = boundary_matrix(complex_, k)
            dk1 = boundary_matrix(complex_, k + 1)
            if not dk or not dk1:
                continue
            product = [
                [
                    sum(dk[i][t] * dk1[t][j] for t in range(len(dk1)))
                    for j in range(len(dk1[0]))
                ]
                for i in range(len(dk))
            ]
            assert all(all(x == 0 for x in row) for row in product)


def test_betti_against_rational_rank_oracle():
    rng = random.Random(13)
    for _ in range(120):
        complex_ = SimplicialComplex(random_complex_faces(rng))
        betti = complex_.betti_numbers()
        for k in range(complex_.dimension + 1):
            n_k = len(complex_.simplices(k))
            dk = boundary_matrix(complex_, k)
            dk1 = boundary_matrix(complex_, k + 1)
            r_k = rational_rank(dk) if dk else 0
            r_k1 = rational_rank(dk1) if dk1 else 0
            assert betti[k] == n_k - r_k - r_k1
        assert betti[0] == complex_.connected_components()


def test_betti_against_sympy_oracle():
    sympy = __import__("sympy")
    rng = random.Random(29)
    for _ in range(40):
        complex_ = SimplicialComplex(random_complex_faces(rng))
        for k in range(complex_.dimension + 1):
            dk = boundary_matrix(complex_, k)
            if not dk:
                continue
            assert sympy.Matrix(dk).rank() == rational_rank(dk)
            diag = smith_diagonal(dk)
            assert len([d for d in diag if d]) == sympy.Matrix(dk).rank()


def test_nerve_of_a_cover():
    cover = {
        "left": {1, 2},
        "right": {2, 3},
        "top": {3, 1},
    }
    complex_ = nerve(cover)
    assert complex_.simplices(1) == [("left", "right"), ("left", "top"), ("right", "top")]
    assert complex_.simplices(2) == []
    assert complex_.betti_numbers(up_to=1) == [1, 1]
    full = nerve({"a": {1}, "b": {1}, "c": {1}})
    assert full.betti_numbers(up_to=2) == [1, 0, 0]


def test_json_shape():
    circle = SimplicialComplex([(1, 2), (2, 3), (3, 1)])
    obj = circle.to_json_obj()
    assert set(obj) == {"simplices"}
    assert [1, 2] in obj["simplices"] and [1] in obj["simplices"]
