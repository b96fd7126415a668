import random

import pytest

from combinatorics.subset_ops import (
    bruhat_below,
    canonical_representatives,
    canonical_tuple,
    complement,
    compose,
    compose_tuple,
    dim_subset,
    dual_subset,
    edim,
    enumerate_subsets,
    enumerate_tuples,
    exponent,
    exponent_tuple,
    full_tuple,
    permutation_closure,
    quotient,
    quotient_tuple,
    shuffle_permutation,
)
from core.combinatorics_model import CardSubset, PositionTuple
from core.errors import DomainError, ShapeError


def S(n, *elements):
    return CardSubset(n, elements)


@pytest.mark.parametrize("I, expected", [
    (S(6, 1, 2, 3), 0),
    (S(6, 2, 4, 6), 6),
    (S(4, 2, 4), 3),
])
def test_dim_subset(I, expected):
    assert dim_subset(I) == expected


@pytest.mark.parametrize("I, expected", [
    (S(4, 1, 3), S(4, 2, 4)),
    (S(3), S(3, 1, 2, 3)),
    (S(6, 2, 4, 6), S(6, 1, 3, 5)),
])
def test_complement(I, expected):
    assert complement(I) == expected


def test_compose_examples():
    assert compose(S(6, 1, 3, 5, 6), S(4, 2, 4)) == S(6, 3, 6)
    assert compose(S(6, 2, 4, 6), S(3, 1, 3)) == S(6, 2, 6)
    I = S(7, 2, 3, 7)
    assert compose(I, S(3, 1, 2, 3)) == I


def test_quotient_examples():
    assert quotient(S(6, 1, 3, 5, 6), S(4, 2, 4)) == S(4, 1, 4)
    assert quotient(S(6, 2, 4, 6), S(3, 2)) == S(5, 2, 5)
    I = S(5, 1, 4)
    assert quotient(I, S(2)) == I


def test_exponent_example():
    assert exponent(S(6, 1, 3, 5, 6), S(4, 2, 4)) == S(4, 2, 4)


def test_selector_ground_mismatch():
    with pytest.raises(ShapeError):
        compose(S(6, 1, 3, 5), S(4, 2))
    with pytest.raises(ShapeError):
        quotient(S(6, 1, 3, 5), S(2, 1))
    with pytest.raises(ShapeError):
        exponent(S(6, 1, 3, 5), S(4, 1))


def test_cardsubset_rejects_bad_elements():
    with pytest.raises(ShapeError):
        CardSubset(3, (0, 2))
    with pytest.raises(ShapeError):
        CardSubset(3, (2, 2))
    with pytest.raises(ShapeError):
        CardSubset(3, (1, 4))


def test_edim_examples():
    assert edim(PositionTuple.of(4, [[1, 4], [2, 4]])) == 1
    assert edim(PositionTuple.of(4, [[1, 4], [2, 3]])) == 0
    assert edim(full_tuple(3, 4)) == 0
    assert edim(PositionTuple.of(4, [[1, 2], [1, 2]])) == -4


@pytest.mark.parametrize("I, expected", [
    (S(4, 1, 3, 4), (1, 3, 4, 2)),
    (S(5, 1, 2), (1, 2, 3, 4, 5)),
    (S(4, 2, 4), (2, 4, 1, 3)),
])
def test_shuffle_permutation(I, expected):
    assert shuffle_permutation(I) == expected


def test_enumerate_subsets():
    subsets = enumerate_subsets(2, 4)
    assert len(subsets) == 6
    assert subsets[0] == S(4, 1, 2)
    assert subsets[-1] == S(4, 3, 4)
    assert enumerate_subsets(0, 3) == [S(3)]
    assert enumerate_subsets(3, 3) == [S(3, 1, 2, 3)]
    with pytest.raises(DomainError):
        enumerate_subsets(4, 3)


def _all_pairs(max_n):
    for n in range(0, max_n + 1):
        for r in range(0, n + 1):
            for I in enumerate_subsets(r, n):
                for d in range(0, r + 1):
                    for J in enumerate_subsets(d, r):
                        yield I, J


def test_quotient_dimension_identity():
    for I, J in _all_pairs(8):
        assert dim_subset(quotient(I, J)) == dim_subset(I) + dim_subset(J) - dim_subset(compose(I, J))


def test_exponent_is_quotient_by_complement():
    for I, J in _all_pairs(7):
        assert exponent(I, J) == quotient(I, complement(J))


def test_exponent_dimension_identity():
    for I, J in _all_pairs(6):
        for e in range(0, J.cardinality + 1):
            for K in enumerate_subsets(e, J.cardinality):
                left = dim_subset(compose(exponent(I, J), K)) - dim_subset(K)
                right = dim_subset(compose(I, compose(J, K))) - dim_subset(compose(J, K))
                assert left == right


def _random_subset(rnd, r, n):
    return CardSubset(n, tuple(sorted(rnd.sample(range(1, n + 1), r))))


def test_tuple_edim_identities():
    rnd = random.Random(5)
    for _ in range(300):
        n = rnd.randint(1, 8)
        r = rnd.randint(0, n)
        d = rnd.randint(0, r)
        e = rnd.randint(0, d)
        s = rnd.randint(1, 4)
        T = PositionTuple(tuple(_random_subset(rnd, r, n) for _ in range(s)))
        U = PositionTuple(tuple(_random_subset(rnd, d, r) for _ in range(s)))
        V = PositionTuple(tuple(_random_subset(rnd, e, d) for _ in range(s)))
        TU = compose_tuple(T, U)
        assert edim(quotient_tuple(T, U)) == edim(T) + edim(U) - edim(TU)
        assert edim(exponent_tuple(T, U)) == edim(TU) - edim(U)
        UV = compose_tuple(U, V)
        assert edim(compose_tuple(exponent_tuple(T, U), V)) - edim(V) == edim(compose_tuple(T, UV)) - edim(UV)


def test_dual_subset_is_an_involution():
    assert dual_subset(S(4, 1)) == S(4, 1, 2, 3)
    assert dual_subset(S(3, 1, 3)) == S(3, 2)
    for r in range(1, 6):
        for d in range(0, r + 1):
            for J in enumerate_subsets(d, r):
                assert dual_subset(dual_subset(J)) == J
                assert dim_subset(dual_subset(J)) == dim_subset(J)


def test_bruhat_below():
    below = bruhat_below(S(4, 2, 4))
    assert below == [S(4, 1, 2), S(4, 1, 3), S(4, 1, 4), S(4, 2, 3), S(4, 2, 4)]
    assert bruhat_below(S(5, 1, 2)) == [S(5, 1, 2)]


def test_canonical_representatives_cover_every_tuple():
    r, n, s = 2, 4, 3
    reps = list(canonical_representatives(r, n, s))
    assert all(canonical_tuple(T) == T for T in reps)
    closure = {T for rep in reps for T in permutation_closure(rep)}
    assert closure == set(enumerate_tuples(r, n, s))
    assert len(closure) == len(enumerate_subsets(r, n)) ** s


def test_permutation_closure_sizes():
    assert len(permutation_closure(PositionTuple.of(2, [[1], [2], [2]]))) == 3
    assert len(permutation_closure(PositionTuple.of(4, [[2], [3], [4]]))) == 6
    assert permutation_closure(full_tuple(2, 3)) == [full_tuple(2, 3)]


def test_tuple_serialization():
    T = PositionTuple.of(4, [[1, 4], [2, 3]])
    assert T.to_json() == {"n": 4, "parts": [[1, 4], [2, 3]]}
    assert PositionTuple.from_json(T.to_json()) == T
    assert str(T) == "({1, 4}, {2, 3})"


def test_tuple_parts_must_share_shape():
    with pytest.raises(ShapeError):
        PositionTuple((S(4, 1, 2), S(4, 1)))
    with pytest.raises(ShapeError):
        PositionTuple((S(4, 1), S(5, 1)))
