from fractions import Fraction as F

from singlib.linalg import (
    echelon_basis,
    feasible_point,
    hermite_basis,
    lattice_coords,
    nullspace,
    rank,
    solve_linear,
    subspace_intersection,
    subspace_sum,
)


def test_rref_rank_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows) == 2
    ns = nullspace(rows)
    assert len(ns) == 1
    v = ns[0]
    for row in rows:
        assert sum(F(a) * x for a, x in zip(row, v)) == 0


def test_solve_linear_inconsistent():
    assert solve_linear([[1, 1], [1, 1]], [1, 2]) is None
    sol = solve_linear([[1, 1], [0, 1]], [3, 1])
    assert sol is not None and sol[0] == (F(2), F(1))


def test_subspace_sum_and_intersection():
    a = echelon_basis([(1, 0, 0), (0, 1, 0)])
    b = echelon_basis([(0, 1, 0), (0, 0, 1)])
    assert len(subspace_sum(a, b)) == 3
    inter = subspace_intersection(a, b)
    assert len(inter) == 1
    assert inter[0][0] == 0 and inter[0][2] == 0


def test_feasible_point_strict():
    # x > 0, y > 0, x + y <= 1  (as -x - y >= -1)
    w = feasible_point(
        [((1, 0), 0, True), ((0, 1), 0, True), ((-1, -1), -1, False)], 2
    )
    assert w is not None and w[0] > 0 and w[1] > 0 and w[0] + w[1] <= 1
    # x > 0 and x < 0 infeasible
    assert feasible_point([((1,), 0, True), ((-1,), 0, True)], 1) is None


def test_feasible_point_equality_pair():
    # x = y, x > 1
    w = feasible_point(
        [((1, -1), 0, False), ((-1, 1), 0, False), ((1, 0), 1, True)], 2
    )
    assert w is not None and w[0] == w[1] and w[0] > 1


def test_hermite_basis_and_coords():
    basis = hermite_basis([(-8, 6, 0), (-14, 0, 5)])
    assert len(basis) == 2
    for v in [(-8, 6, 0), (-14, 0, 5), (-22, 6, 5)]:
        c = lattice_coords(basis, v)
        assert c is not None
        rec = [sum(ci * bi[j] for ci, bi in zip(c, basis)) for j in range(3)]
        assert tuple(rec) == v
