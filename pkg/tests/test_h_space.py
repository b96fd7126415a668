import pytest

from combinatorics.subset_ops import dim_subset, enumerate_subsets, quotient
from core.combinatorics_model import CardSubset, PositionTuple
from core.errors import ShapeError
from linalg.flags import Flag, SubspaceBasis, induced_flag_on_quotient, position
from linalg.matrix import Mat, kernel_basis
from tangent.h_space import (
    h_intersection_basis,
    h_intersection_dim,
    h_membership,
    h_space_basis,
    hom_index,
    unvectorize,
    vectorize,
)


def unitriangular_flag(K, entries):
    """Adapted basis with ones on the diagonal and the given entries below it, column by column."""
    n = len(entries) + 1
    columns = []
    for a in range(n):
        column = [K.zero] * n
        column[a] = K.one
        for offset, x in enumerate(entries[a] if a < len(entries) else []):
            column[a + 1 + offset] = x
        columns.append(column)
    return Flag(Mat.from_columns(K, columns))


def test_vectorization_is_column_major(Q):
    phi = Mat.from_ints(Q, [[1, 2], [3, 4], [5, 6]])
    vector = vectorize(phi)
    assert vector == [1, 3, 5, 2, 4, 6]
    assert vector[hom_index(2, 1, 3)] == 3
    assert unvectorize(Q, vector, 3, 2) == phi


def test_first_subset_admits_only_zero(Q):
    basis = h_space_basis(CardSubset(5, (1, 2)), Flag.standard(Q, 2), Flag.standard(Q, 3))
    assert basis.dim == 0


def test_standard_flags_give_cell_dimension(Q):
    for n in range(1, 7):
        for r in range(0, n + 1):
            F0, G0 = Flag.standard(Q, r), Flag.standard(Q, n - r)
            for I in enumerate_subsets(r, n):
                basis = h_space_basis(I, F0, G0)
                assert basis.dim == dim_subset(I)
                assert all(h_membership(phi, I, F0, G0) for phi in basis.basis)


def test_canonical_injection_membership(Q):
    F0, G0 = Flag.standard(Q, 3), Flag.standard(Q, 5)
    injection = Mat.from_ints(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0], [0, 0, 0]])
    assert h_membership(injection, CardSubset(8, (3, 4, 7)), F0, G0)
    assert not h_membership(injection, CardSubset(8, (2, 3, 7)), F0, G0)


def test_shape_errors(Q):
    I = CardSubset(4, (1, 4))
    with pytest.raises(ShapeError):
        h_space_basis(I, Flag.standard(Q, 3), Flag.standard(Q, 2))
    with pytest.raises(ShapeError):
        h_space_basis(I, Flag.standard(Q, 2), Flag.standard(Q, 3))
    with pytest.raises(ShapeError):
        h_membership(Mat.zeros(Q, 2, 3), I, Flag.standard(Q, 2), Flag.standard(Q, 2))
    T = PositionTuple.of(4, [[1, 4], [2, 4]])
    with pytest.raises(ShapeError):
        h_intersection_dim(T, [Flag.standard(Q, 2)], [Flag.standard(Q, 2)] * 2)


def test_intersecting_pair_in_four(Q):
    T = PositionTuple.of(4, [[1, 4], [2, 4]])
    F2 = Flag(Mat.from_ints(Q, [[1, 0], [1, 1]]))
    F_tuple = [Flag.standard(Q, 2), F2]
    G_tuple = [Flag.standard(Q, 2)] * 2
    assert h_intersection_dim(T, F_tuple, G_tuple) == 1
    (phi,) = h_intersection_basis(T, F_tuple, G_tuple).basis
    # only the upper right entry survives
    assert [Q.is_zero(x) for x in vectorize(phi)] == [True, True, False, True]


def test_non_intersecting_pair_in_four(Q, rng):
    T = PositionTuple.of(4, [[1, 4], [2, 3]])
    for _ in range(5):
        F_tuple = [Flag.standard(Q, 2), Flag.random(Q, 2, rng)]
        G_tuple = [Flag.standard(Q, 2), Flag.random(Q, 2, rng)]
        assert h_intersection_dim(T, F_tuple, G_tuple) == 1


def test_parametrized_example_in_six(Q, rng):
    T = PositionTuple.of(6, [[3, 4, 6], [2, 4, 5]])
    for _ in range(5):
        z21, z31, z32, u21, u31, u32 = (Q.random(rng) for _ in range(6))
        if Q.is_zero(u31 * u32):
            continue
        F_tuple = [Flag.standard(Q, 3), unitriangular_flag(Q, [[z21, z31], [z32]])]
        G_tuple = [Flag.standard(Q, 3), unitriangular_flag(Q, [[u21, u31], [u32]])]
        assert h_intersection_dim(T, F_tuple, G_tuple) == 3
        w = u32 * u21 - u31
        phis = [
            Mat(Q, [[-z21 * u32, u32, 0], [-z21 * w, w, 0], [0, 0, 0]]),
            Mat(Q, [[z31 * u32, 0, 0], [z31 * w, 0, u31], [0, 0, u32 * u31]]),
            Mat(Q, [[0, 0, 1], [0, 0, u21], [0, 0, u31]]),
        ]
        for phi in phis:
            for I, F, G in zip(T.parts, F_tuple, G_tuple):
                assert h_membership(phi, I, F, G)


def test_basis_elements_satisfy_every_constraint(GF, rng):
    T = PositionTuple.of(6, [[2, 4, 6]] * 3)
    F_tuple = [Flag.random(GF, 3, rng) for _ in range(3)]
    G_tuple = [Flag.random(GF, 3, rng) for _ in range(3)]
    basis = h_intersection_basis(T, F_tuple, G_tuple)
    assert basis.dim == h_intersection_dim(T, F_tuple, G_tuple)
    for phi in basis.basis:
        assert all(h_membership(phi, I, F, G) for I, F, G in zip(T.parts, F_tuple, G_tuple))


def test_kernel_passes_to_the_quotient(GF, rng):
    I = CardSubset(5, (1, 3, 5))
    for _ in range(10):
        F, G = Flag.random(GF, 3, rng), Flag.random(GF, 2, rng)
        vector = [GF.zero] * 6
        for element in h_space_basis(I, F, G).basis:
            c = GF.random(rng)
            vector = [GF.add(x, GF.mul(c, y)) for x, y in zip(vector, vectorize(element))]
        phi = unvectorize(GF, vector, 2, 3)
        S = SubspaceBasis(Mat.from_columns(GF, kernel_basis(phi)))
        J = position(S, F)
        quotient_flag = induced_flag_on_quotient(F, S)
        induced = phi @ quotient_flag.complement
        assert h_membership(induced, quotient(I, J), quotient_flag.flag, G)
