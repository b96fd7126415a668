import pytest

from combinatorics.subset_ops import bruhat_below, compose, enumerate_subsets, quotient
from core.combinatorics_model import CardSubset
from core.errors import ShapeError
from linalg.fields import PrimeField, RationalField
from linalg.flags import (
    Flag,
    SubspaceBasis,
    cell_coordinates,
    degenerate_cell_point,
    induced_flag_on_quotient,
    induced_flag_on_subspace,
    position,
    position_by_rank,
    sample_cell_point,
)
from linalg.matrix import Mat


@pytest.fixture
def example_flag(Q):
    # f(1)=e1+e2+e3, f(2)=e2+e3, f(3)=e3+e4, f(4)=e4
    return Flag(Mat.from_columns(Q, [
        [Q.one, Q.one, Q.one, Q.zero],
        [Q.zero, Q.one, Q.one, Q.zero],
        [Q.zero, Q.zero, Q.one, Q.one],
        [Q.zero, Q.zero, Q.zero, Q.one],
    ]))


@pytest.fixture
def plane(Q):
    return SubspaceBasis(Mat.identity(Q, 4).select_columns([0, 1]))


def test_position_examples(Q, example_flag, plane):
    assert position(plane, example_flag) == CardSubset(4, (2, 4))
    assert position_by_rank(plane, example_flag) == CardSubset(4, (2, 4))
    assert position(plane, Flag.standard(Q, 4)) == CardSubset(4, (1, 2))
    whole = SubspaceBasis(Mat.identity(Q, 4))
    assert position(whole, example_flag) == CardSubset(4, (1, 2, 3, 4))


def test_position_shape_errors(Q, GF, plane):
    with pytest.raises(ShapeError):
        position(plane, Flag.standard(Q, 5))
    with pytest.raises(ShapeError):
        position(plane, Flag.standard(GF, 4))
    with pytest.raises(ShapeError):
        SubspaceBasis(Mat.from_ints(Q, [[1, 2], [2, 4]]))


def test_induced_flag_on_subspace_example(Q, example_flag, plane):
    EV = induced_flag_on_subspace(example_flag, plane)
    # v(1) = f(2) - f(1) = -e1, v(2) = f(4) - f(3) + f(1) = e1 + e2
    assert EV.basis == Mat.from_ints(Q, [[-1, 1], [0, 1]])


def test_induced_flag_on_own_subspace_is_standard(GF, rng):
    E = Flag.random(GF, 5, rng)
    V = SubspaceBasis(E.subspace(3))
    assert induced_flag_on_subspace(E, V).basis == Mat.identity(GF, 3)
    quotient_flag = induced_flag_on_quotient(E, V)
    assert quotient_flag.position == CardSubset(5, (1, 2, 3))
    assert quotient_flag.complement == E.basis.select_columns([3, 4])


def test_induced_flag_on_quotient_example(example_flag, plane):
    quotient_flag = induced_flag_on_quotient(example_flag, plane)
    assert quotient_flag.position == CardSubset(4, (2, 4))
    assert quotient_flag.complement == example_flag.basis.select_columns([0, 2])
    assert quotient_flag.dim == 2


def _random_subspace(F, n, d, rng):
    return SubspaceBasis(Mat.random_invertible(F, n, rng).select_columns(range(d)))


def _nested_trials(F, rng, max_n, trials):
    for _ in range(trials):
        n = int(rng.integers(1, max_n + 1))
        r = int(rng.integers(1, n + 1))
        e = int(rng.integers(0, r + 1))
        E = Flag.random(F, n, rng)
        V = _random_subspace(F, n, r, rng)
        yield E, V, _random_subspace(F, r, e, rng)


@pytest.mark.parametrize("F, max_n", [(PrimeField(2147483647), 8), (RationalField(bound=5), 6)])
def test_chain_and_quotient_rules(F, max_n, rng):
    for E, V, S_coords in _nested_trials(F, rng, max_n, 40):
        S = SubspaceBasis(V.basis @ S_coords.basis)
        I = position(V, E)
        J = position(S_coords, induced_flag_on_subspace(E, V))
        assert position(S, E) == compose(I, J)
        if S.dim == 0:
            continue
        quotient_flag = induced_flag_on_quotient(E, S)
        image = quotient_flag.image(V)
        assert position(image, quotient_flag.flag) == quotient(I, J)


def test_position_methods_agree(GF, rng):
    for n in range(1, 7):
        for d in range(1, n + 1):
            E = Flag.random(GF, n, rng)
            S = _random_subspace(GF, n, d, rng)
            assert position(S, E) == position_by_rank(S, E)


def test_cell_sample_example(Q, rng):
    I = CardSubset(4, (1, 3, 4))
    S = sample_cell_point(I, Flag.standard(Q, 4), rng)
    columns = S.basis.columns()
    assert columns[0] == [1, 0, 0, 0]
    assert columns[1][0] == 0 and columns[1][2] == 1 and columns[1][3] == 0
    assert columns[2][0] == 0 and columns[2][2] == 0 and columns[2][3] == 1


def test_cell_of_the_first_subset_is_a_point(GF, rng):
    E = Flag.random(GF, 5, rng)
    S = sample_cell_point(CardSubset(5, (1, 2)), E, rng)
    assert S.basis == E.subspace(2)


def test_every_cell_sample_lands_in_its_cell(GF, rng):
    E = Flag.random(GF, 5, rng)
    for r in range(0, 6):
        for I in enumerate_subsets(r, 5):
            assert position(sample_cell_point(I, E, rng), E) == I


def test_cell_sample_shape_error(Q, rng):
    with pytest.raises(ShapeError):
        sample_cell_point(CardSubset(5, (1, 3)), Flag.standard(Q, 4), rng)


def test_degenerations_move_strictly_down(Q, rng):
    E = Flag.random(Q, 6, rng)
    for I in enumerate_subsets(3, 6):
        coords = cell_coordinates(I, Q, rng)
        for a in range(1, I.cardinality + 1):
            degenerated = degenerate_cell_point(I, E, coords, a)
            if degenerated is None:
                continue
            below = position(degenerated, E)
            assert below in bruhat_below(I)
            assert below != I


def test_degenerating_a_fixed_column_drops_rank(Q, rng):
    I = CardSubset(4, (1, 3))
    coords = cell_coordinates(I, Q, rng)
    assert degenerate_cell_point(I, Flag.standard(Q, 4), coords, 1) is None
