import copy
import random

import pytest

from charsheaf import lusztig
from charsheaf.exactfield import MatrixRF, Poly, RatFunc, is_polynomial, parse_poly
from charsheaf.lusztig import (compare_with_target, compute_X, solve_block_factorization,
                               uniform_degree)

import oracles
from oracles import same, to_sympy

CASES = ["b2", "g2", "f4"]
SIGN_DEGREE = {"b2": 4, "g2": 6, "f4": 24}


def rf(text, d):
    return RatFunc.from_poly(parse_poly(text, d))


@pytest.mark.parametrize("name", CASES)
def test_omega_against_independent_sum(cases, name):
    b, r = cases.bundle(name), cases.result(name)
    for i in range(b.n_pairs):
        for j in range(i, b.n_pairs):
            assert same(to_sympy(r.omega[i, j]), oracles.omega_entry(b, i, j)), (i, j)


@pytest.mark.parametrize("name", CASES)
def test_omega_is_symmetric_and_surd_free(cases, name):
    om = cases.result(name).omega
    assert om.is_symmetric()
    for i in range(om.rows):
        for j in range(om.cols):
            p = is_polynomial(om[i, j])
            assert p is not None
            assert all(c.b == 0 for c in p.coeffs)


@pytest.mark.parametrize("name", CASES)
def test_factorization_residual_is_zero(cases, name):
    r = cases.result(name)
    assert r.p_matrix.transpose() @ r.lambda_matrix @ r.p_matrix - r.omega == \
        MatrixRF.zeros(r.omega.rows, r.omega.cols, r.omega.d)


@pytest.mark.parametrize("name", CASES)
def test_shape_of_p_and_lambda(cases, name):
    b, r = cases.bundle(name), cases.result(name)
    blocks = b.blocks()
    n = b.n_pairs
    for i in range(n):
        for j in range(n):
            p, lam = r.p_matrix[i, j], r.lambda_matrix[i, j]
            if blocks[i] == blocks[j]:
                assert p == RatFunc.const(1 if i == j else 0, b.d)
            else:
                assert lam.is_zero()
                if i > j:
                    assert p.is_zero()


@pytest.mark.parametrize("name", CASES)
def test_every_entry_is_a_polynomial(cases, name):
    r = cases.result(name)
    for m in (r.p_matrix, r.lambda_matrix, r.x_table):
        for i in range(m.rows):
            for j in range(m.cols):
                assert is_polynomial(m[i, j]) is not None


@pytest.mark.parametrize("name", CASES)
@pytest.mark.parametrize("seed", [1, 7, 2024])
def test_solution_is_independent_of_elimination_order(cases, name, seed):
    b, r = cases.bundle(name), cases.result(name)
    P, L = solve_block_factorization(r.omega, b.blocks(), random.Random(seed))
    assert P == r.p_matrix and L == r.lambda_matrix


@pytest.mark.parametrize("name", CASES)
def test_sign_change_of_an_extension_conjugates_the_solution(cases, name):
    b, r = cases.bundle(name), cases.result(name)
    n = b.n_pairs
    rng = random.Random(5)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    D = MatrixRF.from_rows([[RatFunc.const(signs[i] if i == j else 0, b.d) for j in range(n)]
                            for i in range(n)], b.d)
    P, L = solve_block_factorization(D @ r.omega @ D, b.blocks())
    assert P == D @ r.p_matrix @ D
    assert L == D @ r.lambda_matrix @ D


@pytest.mark.parametrize("name", CASES)
def test_trivial_and_sign_rows(cases, name):
    r = cases.result(name)
    d = r.x_table.d
    one, zero = RatFunc.const(1, d), RatFunc.const(0, d)
    assert [r.x_table[r.x_table.rows - 1, j] for j in range(r.x_table.cols)] == [one] * r.x_table.cols
    top = RatFunc.from_poly(Poly.q(d) ** SIGN_DEGREE[name])
    assert [r.x_table[0, j] for j in range(r.x_table.cols)] == [top] + [zero] * (r.x_table.cols - 1)


def test_b2_matrices(cases):
    r = cases.result("b2")
    assert [str(r.lambda_matrix[i, i]) for i in range(3)] == \
        ["1", "q^6-q^4+q^2-1", "q^8-q^6+q^4-q^2"]
    assert str(r.p_matrix[0, 1]) == "q^2-1"
    assert str(r.p_matrix[1, 2]) == "-1"


def test_f4_sample_cell(cases):
    r = cases.result("f4")
    i = r.row_labels.index("R_{4,2}")
    j = r.column_labels.index("u7")
    assert r.x_table[i, j] == rf("2*q^3-q", 2)


@pytest.mark.parametrize("name", CASES)
def test_identity_column_matches_deligne_lusztig_degrees(cases, name):
    b, r = cases.bundle(name), cases.result(name)
    for i in range(b.n_pairs):
        assert uniform_degree(b, i) == r.x_table[i, 0], r.row_labels[i]


def test_perturbed_target_is_reported(cases):
    b, r = cases.bundle("b2"), cases.result("b2")
    rows = [[b.target[i, j] for j in range(b.target.cols)] for i in range(b.target.rows)]
    rows[1][1] = rows[1][1] + RatFunc.const(1, 2)
    target = MatrixRF.from_rows(rows, 2)
    v = compare_with_target(r.x_table, target, r.row_labels, r.column_labels)
    assert not v.ok
    assert [(m[0], m[1]) for m in v.mismatches] == [("R_chi", "u4")]
    assert v.checked == 12


def test_skipped_cells_are_not_checked(cases):
    r = cases.result("b2")
    v = compare_with_target(r.x_table, r.x_table, skip=[(0, 0)])
    assert v.ok and v.checked == 11 and len(v.skipped) == 1


def test_solver_errors():
    d = 2
    one, q = RatFunc.const(1, d), rf("q", d)
    zero = RatFunc.const(0, d)
    asym = MatrixRF.from_rows([[one, q], [one, one]], d)
    with pytest.raises(ValueError, match="symmetric"):
        solve_block_factorization(asym, [0, 1])
    sym = MatrixRF.from_rows([[one, q, q], [q, one, q], [q, q, one]], d)
    with pytest.raises(ValueError, match="consecutive"):
        solve_block_factorization(sym, [0, 1, 0])
    with pytest.raises(ValueError):
        solve_block_factorization(sym, [0, 1])
    singular = MatrixRF.from_rows([[zero, q], [q, one]], d)
    with pytest.raises(ValueError, match="singular"):
        solve_block_factorization(singular, [0, 1])


def test_compute_x_and_compare_shape_errors():
    d = 2
    one = RatFunc.const(1, d)
    P = MatrixRF.identity(2, d)
    Y = MatrixRF.from_rows([[one, one, one]], d)
    with pytest.raises(ValueError, match="dimension mismatch"):
        compute_X(P, Y, [0, 0])
    with pytest.raises(ValueError, match="shape mismatch"):
        compare_with_target(P, Y)


def test_compute_x_scales_by_q_power():
    d = 3
    one = RatFunc.const(1, d)
    P = MatrixRF.from_rows([[one, rf("q^2", d)], [RatFunc.const(0, d), one]], d)
    Y = MatrixRF.from_rows([[one, RatFunc.const(0, d)], [RatFunc.const(0, d), one]], d)
    X = compute_X(P, Y, [2, 1])
    assert X[0, 0] == rf("q^2", d) and X[1, 0] == rf("q^3", d) and X[1, 1] == rf("q", d)


def test_non_polynomial_omega_is_rejected(cases):
    b = copy.deepcopy(cases.bundle("b2"))
    b.group_order = parse_poly("q^10", 2)
    with pytest.raises(ValueError, match="not a polynomial"):
        lusztig.build_omega(b)
