# subset_ops.py
"""
Arithmetic of Schubert positions: cell dimensions, composition, quotient and
exponent of subsets, expected dimension of tuples, and the enumeration helpers
used by the Horn recursion.
"""
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterator, List, Tuple

from core.combinatorics_model import CardSubset, PositionTuple
from core.errors import DomainError, ShapeError


def dim_subset(I: CardSubset) -> int:
    """Dimension of the Schubert cell at position I, Σ_a (I(a) - a)."""
    return sum(x - a for a, x in enumerate(I.elements, start=1))


def complement(I: CardSubset) -> CardSubset:
    members = set(I.elements)
    return CardSubset(I.ground, tuple(x for x in range(1, I.ground + 1) if x not in members))


def _check_selector(I: CardSubset, J: CardSubset):
    if J.ground != I.cardinality:
        raise ShapeError(f"selector {J} lives in [{J.ground}] but {I} has cardinality {I.cardinality}")


def compose(I: CardSubset, J: CardSubset) -> CardSubset:
    """IJ = {I(J(1)) < ... < I(J(d))}."""
    _check_selector(I, J)
    return CardSubset(I.ground, tuple(I.at(j) for j in J.elements))


def quotient(I: CardSubset, J: CardSubset) -> CardSubset:
    """I/J = {I(J^c(b)) - J^c(b) + b}, a subset of [n - d]."""
    _check_selector(I, J)
    jc = complement(J).elements
    return CardSubset(
        I.ground - J.cardinality,
        tuple(I.at(c) - c + b for b, c in enumerate(jc, start=1)),
    )


def exponent(I: CardSubset, J: CardSubset) -> CardSubset:
    """I^J = {I(J(b)) - J(b) + b}; equal to quotient(I, J^c)."""
    _check_selector(I, J)
    r, d = I.cardinality, J.cardinality
    return CardSubset(
        I.ground - (r - d),
        tuple(I.at(j) - j + b for b, j in enumerate(J.elements, start=1)),
    )


def edim(T: PositionTuple) -> int:
    """Expected dimension r(n-r) - Σ_k codim I_k; negative values are allowed."""
    full = T.r * (T.n - T.r)
    return full - sum(full - dim_subset(I) for I in T.parts)


def shuffle_permutation(I: CardSubset) -> Tuple[int, ...]:
    """Images (σ_I(1), ..., σ_I(n)): first the elements of I, then those of I^c."""
    return I.elements + complement(I).elements


def enumerate_subsets(cardinality: int, ground: int) -> List[CardSubset]:
    if cardinality < 0 or cardinality > ground:
        raise DomainError(f"no subsets of cardinality {cardinality} in [{ground}]")
    return [CardSubset(ground, c) for c in combinations(range(1, ground + 1), cardinality)]


def dual_subset(J: CardSubset) -> CardSubset:
    """{r+1-a : a ∈ J^c}; identifies positions in Gr(d, r) with positions in Gr(r-d, r)."""
    r = J.ground
    return CardSubset(r, tuple(sorted(r + 1 - a for a in complement(J).elements)))


def bruhat_below(I: CardSubset) -> List[CardSubset]:
    """All I' of the same shape with I'(a) <= I(a) for every a, in lexicographic order."""
    return [
        J for J in enumerate_subsets(I.cardinality, I.ground)
        if all(x <= y for x, y in zip(J.elements, I.elements))
    ]


# Операции над кортежами выполняются покомпонентно

def _check_tuples(T: PositionTuple, U: PositionTuple):
    if T.s != U.s:
        raise ShapeError(f"tuples have {T.s} and {U.s} components")


def compose_tuple(T: PositionTuple, U: PositionTuple) -> PositionTuple:
    _check_tuples(T, U)
    return PositionTuple(tuple(compose(I, J) for I, J in zip(T.parts, U.parts)))


def quotient_tuple(T: PositionTuple, U: PositionTuple) -> PositionTuple:
    _check_tuples(T, U)
    return PositionTuple(tuple(quotient(I, J) for I, J in zip(T.parts, U.parts)))


def exponent_tuple(T: PositionTuple, U: PositionTuple) -> PositionTuple:
    _check_tuples(T, U)
    return PositionTuple(tuple(exponent(I, J) for I, J in zip(T.parts, U.parts)))


def dual_tuple(T: PositionTuple) -> PositionTuple:
    return PositionTuple(tuple(dual_subset(J) for J in T.parts))


def full_tuple(r: int, s: int) -> PositionTuple:
    """([r], ..., [r]) inside [r]."""
    return PositionTuple.of(r, [range(1, r + 1)] * s)


def enumerate_tuples(r: int, n: int, s: int) -> Iterator[PositionTuple]:
    """Subsets(r, n, s) in lexicographic order."""
    subsets = enumerate_subsets(r, n)
    for parts in product(subsets, repeat=s):
        yield PositionTuple(parts)


def canonical_tuple(T: PositionTuple) -> PositionTuple:
    """Representative under permutation of components: parts sorted lexicographically."""
    return PositionTuple(tuple(sorted(T.parts, key=CardSubset.sort_key)))


def canonical_representatives(r: int, n: int, s: int) -> Iterator[PositionTuple]:
    subsets = enumerate_subsets(r, n)
    for parts in combinations_with_replacement(subsets, s):
        yield PositionTuple(parts)


def permutation_closure(T: PositionTuple) -> List[PositionTuple]:
    """Distinct reorderings of the components of T, sorted."""
    seen = {PositionTuple(p) for p in permutations(T.parts)}
    return sorted(seen, key=PositionTuple.sort_key)
