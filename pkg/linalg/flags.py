# flags.py
"""
Flags, subspaces and Schubert positions.

A flag E on an n-dimensional space is stored by an adapted basis f(1..n), the
columns of an invertible matrix, with E(j) = span{f(1), ..., f(j)}. Subspaces
are stored by a basis of column vectors. Positions are computed in adapted
coordinates: a reduced echelon form in which every basis vector of S has a
distinct last nonzero f-coordinate, and these last indices form Pos(S, E).
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

from combinatorics.subset_ops import complement
from core.combinatorics_model import CardSubset
from core.errors import InvariantViolation, ShapeError
from linalg.fields import Field
from linalg.matrix import Mat, column_space, inverse, rank, row_reduce, solve

logger = logging.getLogger(__name__)


@dataclass
class Flag:
    basis: Mat
    _inverse: Optional[Mat] = dataclass_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.basis.nrows != self.basis.ncols:
            raise ShapeError(f"adapted basis must be square, got {self.basis.shape}")
        if rank(self.basis) != self.basis.nrows:
            raise ShapeError("adapted basis of a flag must be invertible")

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def space_dim(self) -> int:
        return self.basis.nrows

    @property
    def inverse(self) -> Mat:
        if self._inverse is None:
            self._inverse = inverse(self.basis)
        return self._inverse

    def subspace(self, j: int) -> Mat:
        """E(j) as the first j adapted vectors."""
        return self.basis.select_columns(range(j))

    def to_json(self) -> dict:
        return self.basis.to_json()

    @staticmethod
    def standard(F: Field, n: int) -> "Flag":
        return Flag(Mat.identity(F, n))

    @staticmethod
    def random(F: Field, n: int, rng) -> "Flag":
        return Flag(Mat.random_invertible(F, n, rng))


@dataclass
class SubspaceBasis:
    basis: Mat

    def __post_init__(self):
        if rank(self.basis) != self.basis.ncols:
            raise ShapeError(f"basis of {self.basis.ncols} vectors has rank {rank(self.basis)}")

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def ambient_dim(self) -> int:
        return self.basis.nrows

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def coordinates_of(self, vectors: Mat) -> Mat:
        """Coordinates of vectors lying in this subspace with respect to its basis."""
        return solve(self.basis, vectors)

    def to_json(self) -> dict:
        return self.basis.to_json()

    @staticmethod
    def span(M: Mat) -> "SubspaceBasis":
        """Column span of an arbitrary matrix."""
        return SubspaceBasis(column_space(M))


def _check_pair(S: SubspaceBasis, E: Flag):
    if S.ambient_dim != E.space_dim:
        raise ShapeError(f"subspace of a {S.ambient_dim}-space against a flag on a {E.space_dim}-space")
    if S.field != E.field:
        raise ShapeError(f"subspace over {S.field.tag!r} against a flag over {E.field.tag!r}")


def adapted_coordinates(S: SubspaceBasis, E: Flag) -> Tuple[CardSubset, List[list]]:
    """
    Position I = Pos(S, E) together with f-coordinates of a basis v(1..d) of S
    where v(a) = f(I(a)) + Σ_{i ∈ I^c, i < I(a)} c_i f(i).
    """
    _check_pair(S, E)
    n = E.space_dim
    C = E.inverse @ S.basis
    # столбцы в обратном порядке: ведущий элемент строки = последняя ненулевая f-координата
    reversed_rows = [[C.data[n - 1 - j][i] for j in range(n)] for i in range(S.dim)]
    R, pivots = row_reduce(Mat(E.field, reversed_rows, ncols=n))
    vectors = []
    for row in R.data[:len(pivots)]:
        vectors.append([row[n - 1 - i] for i in range(n)])
    vectors.reverse()
    top = sorted(n - p for p in pivots)
    return CardSubset(n, tuple(top)), vectors


def position(S: SubspaceBasis, E: Flag) -> CardSubset:
    """Pos(S, E): J(b) = min{j : dim(E(j) ∩ S) = b}."""
    return adapted_coordinates(S, E)[0]


def position_by_rank(S: SubspaceBasis, E: Flag) -> CardSubset:
    """Same as position, through dim(E(j) ∩ S) = j + d - rank([E(1..j) | S])."""
    _check_pair(S, E)
    d = S.dim
    jumps = []
    previous = 0
    for j in range(1, E.space_dim + 1):
        current = j + d - rank(E.subspace(j).hstack(S.basis))
        if current > previous:
            jumps.append(j)
            previous = current
    return CardSubset(E.space_dim, tuple(jumps))


def induced_flag_on_subspace(E: Flag, V: SubspaceBasis) -> Flag:
    """E^V(a) = E(I(a)) ∩ V, in coordinates relative to V.basis."""
    _, vectors = adapted_coordinates(V, E)
    ambient = Mat.from_columns(E.field, [E.basis.apply(v) for v in vectors])
    return Flag(V.coordinates_of(ambient))


@dataclass
class QuotientFlag:
    """
    W/V realised on the complement spanned by the adapted vectors f(I^c(b)).
    In these coordinates the induced flag (E(I^c(b)) + V)/V is the standard one.
    """
    subspace: SubspaceBasis
    complement: Mat
    flag: Flag
    position: CardSubset

    @property
    def dim(self) -> int:
        return self.complement.ncols

    def project(self, vectors: Mat) -> Mat:
        """Complement coordinates of the classes of the given ambient vectors."""
        coords = solve(self.subspace.basis.hstack(self.complement), vectors)
        d = self.subspace.dim
        return Mat(coords.field, coords.data[d:], ncols=vectors.ncols)

    def image(self, U: SubspaceBasis) -> SubspaceBasis:
        """(U + V)/V as a subspace of the quotient."""
        return SubspaceBasis.span(self.project(U.basis))


def induced_flag_on_quotient(E: Flag, V: SubspaceBasis) -> QuotientFlag:
    I = position(V, E)
    Ic = complement(I)
    Q = E.basis.select_columns([i - 1 for i in Ic.elements])
    return QuotientFlag(V, Q, Flag.standard(E.field, Q.ncols), I)


def cell_coordinates(I: CardSubset, F: Field, rng) -> Mat:
    """
    f-coordinates of a random point in the Schubert cell of I: column a is
    e_{I(a)} + Σ_{b <= I(a)-a} φ_{b,a} e_{I^c(b)} with random φ.
    """
    n, r = I.ground, I.cardinality
    Ic = complement(I).elements
    C = Mat.zeros(F, n, r)
    for a, x in enumerate(I.elements, start=1):
        C.data[x - 1][a - 1] = F.one
        for b in range(1, x - a + 1):
            C.data[Ic[b - 1] - 1][a - 1] = F.random(rng)
    return C


def sample_cell_point(I: CardSubset, E: Flag, rng) -> SubspaceBasis:
    """Random S with Pos(S, E) == I exactly."""
    if I.ground != E.space_dim:
        raise ShapeError(f"{I} is a subset of [{I.ground}] but the flag lives on a {E.space_dim}-space")
    S = SubspaceBasis(E.basis @ cell_coordinates(I, E.field, rng))
    found = position(S, E)
    if found != I:
        raise InvariantViolation(f"cell sample for {I} landed at position {found}")
    return S


def degenerate_cell_point(I: CardSubset, E: Flag, coords: Mat, a: int) -> Optional[SubspaceBasis]:
    """
    Drops the leading coefficient of the a-th column of cell coordinates.
    Returns None when the columns become dependent; otherwise the result lies
    in the Schubert variety of I, at some I' <= I entrywise.
    """
    degenerated = coords.copy()
    degenerated.data[I.at(a) - 1][a - 1] = E.field.zero
    if rank(degenerated) < I.cardinality:
        return None
    return SubspaceBasis(E.basis @ degenerated)
