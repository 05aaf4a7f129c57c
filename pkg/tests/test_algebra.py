"""Construction of the algebra, its ideals and quotients."""

import numpy as np
import pytest

from tau_atlas import algebra as alg


def expected_graded(n):
    return [[min(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def test_build_trivial():
    A = alg.build_auslander(1, 2)
    assert A.dim == 1
    assert len(A.arrows) == 0
    with pytest.raises(ValueError):
        alg.build_auslander(0, 2)
    with pytest.raises(ValueError):
        alg.build_auslander(2, 4)


def test_dimensions():
    assert alg.build_auslander(4, 2).dim == 30
    # per-projective lengths are the row sums of the graded dimensions
    A = alg.build_auslander(4, 2)
    assert [int(r.sum()) for r in A.graded_dims()] == [4, 7, 9, 10]
    assert alg.build_auslander(5, 2).dim == 55


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_graded_dims(n):
    A = alg.build_auslander(n, 2)
    assert A.graded_dims().tolist() == expected_graded(n)


def test_relations_hold_in_table():
    for n in (2, 3, 4, 5):
        A = alg.build_auslander(n, 2)
        assert alg.multiply_monomials(A, alg.Monomial(1, 0, 1), alg.Monomial(2, 1, 0)) is None
        for i in range(2, n):
            lhs = alg.multiply_monomials(A, alg.Monomial(i, 0, 1), alg.Monomial(i + 1, 1, 0))
            rhs = alg.multiply_monomials(A, alg.Monomial(i, 1, 0), alg.Monomial(i - 1, 0, 1))
            assert lhs == rhs == alg.Monomial(i, 1, 1)


def test_idempotents():
    A = alg.build_auslander(3, 2)
    for i, e in enumerate(A.idempotents):
        for j, f in enumerate(A.idempotents):
            got = A.mul_indices(e, f)
            assert got == (e if i == j else -1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_associativity_exhaustive(n):
    A = alg.build_auslander(n, 2)
    d = A.dim
    t = np.full((d + 1, d + 1), d, dtype=np.int64)
    t[:d, :d] = np.where(A.table >= 0, A.table, d)
    t[d, :] = d
    t[:, d] = d
    # lhs[i,j,k] = (ij)k and rhs[i,j,k] = i(jk), with d the absorbing zero index
    lhs = t[t[:d, :d].reshape(-1), :d].reshape(d, d, d)
    rhs = np.stack([t[i, t[:d, :d]] for i in range(d)])
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_matches_rewriting_oracle(n):
    A = alg.build_auslander(n, 2)
    for x in A.basis:
        for y in A.basis:
            assert alg.multiply_monomials_normal_form(x, y) == \
                alg.multiply_paths_by_rewriting(n, x, y)


def test_two_sided_closure_of_unit():
    A = alg.build_auslander(3, 2)
    J = alg.two_sided_closure(A, [A.unit_vector()])
    assert J.dim == A.dim


def test_corner_ideal_dims():
    A = alg.build_auslander(4, 2)
    M = alg.corner_ideal(A)
    want = [[max(0, i + j - 4) for j in range(1, 5)] for i in range(1, 5)]
    assert M.graded_dims().tolist() == want


def test_loop_ideal_small():
    A = alg.build_auslander(2, 2)
    L = alg.loop_ideal(A)
    assert L.dim == 1
    gd = L.graded_dims()
    assert gd[1][1] == 1 and gd.sum() == 1


def test_quotient_algebra():
    A = alg.build_auslander(2, 2)
    assert alg.quotient_algebra(A, alg.zero_ideal(A)) is A
    G = alg.build_preprojective(2, 2)
    assert G.dim == 4
    G4 = alg.build_preprojective(4, 2)
    assert G4.dim == 20
    want = [[min(i, j, 5 - i, 5 - j) for j in range(1, 5)] for i in range(1, 5)]
    assert G4.graded_dims().tolist() == want
    # the loop at the last vertex dies in the quotient
    idx = {m: k for k, m in enumerate(G4.basis)}
    assert alg.Monomial(4, 1, 1) not in idx


def test_quotient_rejects_non_ideal():
    A = alg.build_auslander(3, 2)
    bad = alg.TwoSidedIdeal(A, A.basis_vector(A.arrows["a1"]).reshape(1, -1))
    with pytest.raises(ValueError):
        alg.quotient_algebra(A, bad)


def test_op_algebra():
    A = alg.build_auslander(4, 2)
    op = alg.op_algebra(A)
    opop = alg.op_algebra(op)
    assert np.array_equal(opop.table, A.table)
    for i, e in enumerate(op.idempotents):
        for j, f in enumerate(op.idempotents):
            assert op.mul_indices(e, f) == (e if i == j else -1)
    assert op.graded_dims().tolist() == expected_graded(4)


def test_ideal_product_and_units():
    A = alg.build_auslander(3, 2)
    J = alg.two_sided_closure(A, [A.basis_vector(A.arrows["a1"])])
    assert alg.ideal_product(alg.unit_ideal(A), J).key == J.key
    assert alg.ideal_product(J, alg.zero_ideal(A)).dim == 0


def test_loop_corner_containment():
    for n in (2, 3, 4):
        A = alg.build_auslander(n, 2)
        M = alg.corner_ideal(A)
        L = alg.loop_ideal(A)
        assert M.contains_ideal(L)
        assert alg.ideal_product(L, M).key == L.key
        assert alg.ideal_product(M, L).key == L.key


@pytest.mark.parametrize("n", [2, 3, 4])
def test_structure_field_independent(n):
    A2 = alg.build_auslander(n, 2)
    A3 = alg.build_auslander(n, 3)
    assert np.array_equal(A2.table, A3.table)
    assert alg.corner_ideal(A2).graded_dims().tolist() == \
        alg.corner_ideal(A3).graded_dims().tolist()
    assert alg.loop_ideal(A2).dim == alg.loop_ideal(A3).dim


def test_algebra_json_schema():
    import jsonschema

    A = alg.build_auslander(3, 2)
    jsonschema.validate(A.to_json(), alg.ALGEBRA_JSON_SCHEMA)
