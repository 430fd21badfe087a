"""Constructor families: orders, axioms, and frozen structural facts."""

import numpy as np
import pytest

from finring import (
    TableStructureError,
    cyclic,
    cyclic_group,
    formal_triangular,
    from_structure_constants,
    galois,
    group_algebra,
    is_commutative,
    is_local,
    matrix_ring,
    nonabelian_reflexive_64,
    quaternion_group,
    skew_quotient_f4,
    units,
    upper_triangular,
    verify_axioms,
)
from finring.construct import column_bimodule, frobenius_map, ring_bimodule
from finring.table import additive_type


@pytest.mark.parametrize("p,k,n", [(2, 1, 2), (2, 2, 4), (2, 3, 8), (3, 1, 3),
                                   (3, 2, 9), (5, 1, 5), (7, 1, 7)])
def test_galois_fields(p, k, n):
    F = galois(p, k)
    assert F.order == n
    assert verify_axioms(F).passed
    # every nonzero element invertible
    assert len(units(F)) == n - 1
    assert F.characteristic == p


def test_galois_rejects_composite_base():
    with pytest.raises(TableStructureError):
        galois(6)


def test_frobenius_squares_elements():
    F = galois(2, 2)
    fr = frobenius_map(F)
    for x in F.elements():
        assert fr[x] == F.mul[x, x]


def test_matrix_ring_m2f2():
    M = matrix_ring(galois(2), 2)
    assert M.order == 16
    assert verify_axioms(M).passed
    assert not is_commutative(M)
    # |GL_2(F_2)| = 6
    assert len(units(M)) == 6


def test_matrix_ring_over_z4():
    M = matrix_ring(cyclic(4), 2)
    assert M.order == 256
    assert verify_axioms(M).passed


def test_upper_triangular_u2f2():
    U = upper_triangular(galois(2), 2)
    assert U.order == 8
    assert verify_axioms(U).passed
    assert not is_commutative(U)


def test_quaternion_group_table():
    G = quaternion_group()
    assert G.order == 8
    # -1 is the unique element of order 2
    two_torsion = [g for g in range(8) if g != G.identity and G.op[g, g] == G.identity]
    assert len(two_torsion) == 1


def test_cyclic_group():
    G = cyclic_group(6)
    assert G.order == 6
    assert G.op[3, 4] == 1


def test_group_algebra_f2q8():
    R = group_algebra(galois(2), quaternion_group())
    assert R.order == 256
    assert verify_axioms(R).passed
    assert not is_commutative(R)
    assert is_local(R)


def test_group_algebra_f3c2_splits():
    # 3 does not divide |C2|, so the algebra is semisimple and commutative
    R = group_algebra(galois(3), cyclic_group(2))
    assert R.order == 9
    assert is_commutative(R)
    assert len(units(R)) == 4  # Z3 x Z3 component-wise units


def test_skew_quotient_is_local_noncommutative():
    R = skew_quotient_f4()
    assert R.order == 16
    assert verify_axioms(R).passed
    assert not is_commutative(R)
    assert is_local(R)
    assert additive_type(R) == (2, 2, 2, 2)


def test_reflexive64_shape():
    R = nonabelian_reflexive_64()
    assert R.order == 64
    assert verify_axioms(R).passed
    assert not is_commutative(R)


def test_formal_triangular_with_column_module():
    A, B, spec = column_bimodule(galois(2), 2)
    T = formal_triangular(A, B, spec)
    assert T.order == 128
    assert verify_axioms(T).passed


def test_formal_triangular_with_ring_bimodule():
    R = cyclic(2)
    T = formal_triangular(R, R, ring_bimodule(R))
    assert T.order == 8
    assert verify_axioms(T).passed


def test_structure_constants_z4():
    S = from_structure_constants([4], [[[1]]], [1])
    assert S.order == 4
    assert S.table_equal(cyclic(4), labels=False)


def test_structure_constants_f4():
    # basis (1, x) with x^2 = x + 1
    S = from_structure_constants(
        [2, 2],
        [[[1, 0], [0, 1]], [[0, 1], [1, 1]]],
        [1, 0],
    )
    assert S.order == 4
    assert len(units(S)) == 3


def test_structure_constants_reject_broken_identity():
    # claims e0 is the unity but e0*e1 = 0
    with pytest.raises(Exception):
        from_structure_constants(
            [2, 2],
            [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
            [1, 0],
        )
