# h_space.py
"""
The spaces H_I(F, G) = {φ ∈ Hom(V_0, Q_0) : φ(F(a)) ⊆ G(I(a) - a)}.

Maps φ are (n-r) x r matrices: rows index Q_0, columns index V_0. They are
vectorized in the elementary basis E_{b,a} ordered by (a, b), i.e. column by
column; E_{b,a} sits at index (a-1)(n-r) + (b-1).
"""
from dataclasses import dataclass
from typing import List, Sequence

from core.combinatorics_model import CardSubset, PositionTuple
from core.errors import ShapeError
from linalg.fields import Field
from linalg.flags import Flag
from linalg.matrix import Mat, kernel_basis, rank


@dataclass
class HomSpaceBasis:
    r: int
    q: int
    basis: List[Mat]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {"r": self.r, "q": self.q, "basis": [m.to_json() for m in self.basis]}


def hom_index(b: int, a: int, q: int) -> int:
    """Position of E_{b,a} (1-based b, a) in the vectorization."""
    return (a - 1) * q + (b - 1)


def vectorize(phi: Mat) -> list:
    return [x for col in phi.columns() for x in col]


def unvectorize(F: Field, vector: Sequence, q: int, r: int) -> Mat:
    return Mat.from_columns(F, [list(vector[a * q:(a + 1) * q]) for a in range(r)], nrows=q)


def _check_shapes(I: CardSubset, F: Flag, G: Flag):
    r = I.cardinality
    if F.space_dim != r:
        raise ShapeError(f"{I} has cardinality {r} but the flag on V lives on a {F.space_dim}-space")
    if G.space_dim != I.ground - r:
        raise ShapeError(f"{I} needs a flag on a {I.ground - r}-space for Q, got {G.space_dim}")
    if F.field != G.field:
        raise ShapeError("flags on V and Q are over different fields")


def constraint_rows(I: CardSubset, F: Flag, G: Flag) -> List[list]:
    """
    One row per condition "G-coordinate b of φ(f(a)) vanishes", b > I(a) - a.
    The coefficient of φ[i][j] is Ginv[b][i] * F[j][a].
    """
    _check_shapes(I, F, G)
    K = F.field
    r, q = F.space_dim, G.space_dim
    Ginv = G.inverse.data
    Fb = F.basis.data
    rows = []
    for a in range(1, r + 1):
        for b in range(I.at(a) - a + 1, q + 1):
            row = [K.zero] * (r * q)
            g_row = Ginv[b - 1]
            for j in range(r):
                f = Fb[j][a - 1]
                if K.is_zero(f):
                    continue
                for i in range(q):
                    if not K.is_zero(g_row[i]):
                        row[j * q + i] = K.mul(g_row[i], f)
            rows.append(row)
    return rows


def h_space_basis(I: CardSubset, F: Flag, G: Flag) -> HomSpaceBasis:
    rows = constraint_rows(I, F, G)
    r, q = F.space_dim, G.space_dim
    system = Mat(F.field, rows, ncols=r * q)
    return HomSpaceBasis(r, q, [unvectorize(F.field, v, q, r) for v in kernel_basis(system)])


def h_membership(phi: Mat, I: CardSubset, F: Flag, G: Flag) -> bool:
    """φ ∈ H_I(F, G), checked directly on the images of the adapted vectors."""
    _check_shapes(I, F, G)
    if phi.shape != (G.space_dim, F.space_dim):
        raise ShapeError(f"φ must be {G.space_dim}x{F.space_dim}, got {phi.shape}")
    coords = G.inverse @ phi @ F.basis
    K = F.field
    return all(
        K.is_zero(coords[b - 1, a - 1])
        for a in range(1, F.space_dim + 1)
        for b in range(I.at(a) - a + 1, G.space_dim + 1)
    )


def _check_tuple(T: PositionTuple, F_tuple: Sequence[Flag], G_tuple: Sequence[Flag]):
    if len(F_tuple) != T.s or len(G_tuple) != T.s:
        raise ShapeError(f"{T.s} components but {len(F_tuple)} flags on V and {len(G_tuple)} on Q")


def h_intersection_system(T: PositionTuple, F_tuple: Sequence[Flag], G_tuple: Sequence[Flag]) -> Mat:
    _check_tuple(T, F_tuple, G_tuple)
    rows = []
    for I, F, G in zip(T.parts, F_tuple, G_tuple):
        rows.extend(constraint_rows(I, F, G))
    r, q = T.r, T.n - T.r
    field = F_tuple[0].field
    return Mat(field, rows, ncols=r * q)


def h_intersection_dim(T: PositionTuple, F_tuple: Sequence[Flag], G_tuple: Sequence[Flag]) -> int:
    """dim ∩_k H_{I_k}(F_k, G_k), the kernel dimension of the stacked constraints."""
    system = h_intersection_system(T, F_tuple, G_tuple)
    return system.ncols - rank(system)


def h_intersection_basis(T: PositionTuple, F_tuple: Sequence[Flag], G_tuple: Sequence[Flag]) -> HomSpaceBasis:
    system = h_intersection_system(T, F_tuple, G_tuple)
    r, q = T.r, T.n - T.r
    field = system.field
    return HomSpaceBasis(r, q, [unvectorize(field, v, q, r) for v in kernel_basis(system)])
