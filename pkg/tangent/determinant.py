# determinant.py
"""
The tangent map Δ(ζ, φ_1, ..., φ_s) = (ζ + h_k φ_k g_k^{-1})_k and its
determinant δ_I(g, h) for tuples of expected dimension zero.

Domain basis: first the elementary matrices E_{b,a} of Hom(V_0, Q_0) (the ζ
part), then for every k the E_{b,a} with b <= I_k(a) - a spanning
H_{I_k}(F_0, G_0). Target basis: the elementary matrices of each of the s
copies of Hom(V_0, Q_0). Everything is ordered by (a, b).
"""
import logging
from typing import Sequence

from combinatorics.subset_ops import complement, dim_subset, edim
from combinatorics.weights import lambda_of_subset
from core.combinatorics_model import PositionTuple, Weight
from core.errors import DomainError, ShapeError
from linalg.matrix import Mat, determinant, inverse

logger = logging.getLogger(__name__)


def _check_group_elements(T: PositionTuple, g_vec: Sequence[Mat], h_vec: Sequence[Mat]):
    r, q = T.r, T.n - T.r
    if len(g_vec) != T.s or len(h_vec) != T.s:
        raise ShapeError(f"{T.s} components but {len(g_vec)} g's and {len(h_vec)} h's")
    for k, (g, h) in enumerate(zip(g_vec, h_vec), start=1):
        if g.shape != (r, r):
            raise ShapeError(f"g_{k} must be {r}x{r}, got {g.shape}")
        if h.shape != (q, q):
            raise ShapeError(f"h_{k} must be {q}x{q}, got {h.shape}")


def _inverse_or_domain_error(M: Mat, name: str) -> Mat:
    try:
        return inverse(M)
    except DomainError:
        raise DomainError(f"{name} is singular") from None


def tangent_map_matrix(T: PositionTuple, g_vec: Sequence[Mat], h_vec: Sequence[Mat]) -> Mat:
    """
    Matrix of Δ, s·r(n-r) rows by r(n-r) + Σ_k dim I_k columns. Its kernel has
    the dimension of ∩_k H_{I_k}(g_k F_0, h_k G_0).
    """
    _check_group_elements(T, g_vec, h_vec)
    F = g_vec[0].field
    r, q = T.r, T.n - T.r
    block = r * q
    ncols = block + sum(dim_subset(I) for I in T.parts)
    data = [[F.zero] * ncols for _ in range(T.s * block)]

    # ζ входит в каждый блок тождественно
    for idx in range(block):
        for k in range(T.s):
            data[k * block + idx][idx] = F.one

    col = block
    for k, (I, g, h) in enumerate(zip(T.parts, g_vec, h_vec)):
        ginv = _inverse_or_domain_error(g, f"g_{k + 1}").data
        offset = k * block
        for a in range(1, r + 1):
            for b in range(1, I.at(a) - a + 1):
                # h E_{b,a} g^{-1} has entry h[i][b] * ginv[a][j] at (i, j)
                for j in range(r):
                    right = ginv[a - 1][j]
                    if F.is_zero(right):
                        continue
                    for i in range(q):
                        left = h.data[i][b - 1]
                        if not F.is_zero(left):
                            data[offset + j * q + i][col] = F.mul(left, right)
                col += 1
    return Mat(F, data, ncols=ncols)


def delta_determinant(T: PositionTuple, g_vec: Sequence[Mat], h_vec: Sequence[Mat]):
    e = edim(T)
    if e != 0:
        raise DomainError(f"δ is defined for edim 0 only; {T} has edim {e}")
    _check_group_elements(T, g_vec, h_vec)
    for k, h in enumerate(h_vec, start=1):
        _inverse_or_domain_error(h, f"h_{k}")
    return determinant(tangent_map_matrix(T, g_vec, h_vec))


def borel_character(mu: Weight, b: Mat):
    """χ_μ(b) = Π_i b(i,i)^{μ(i)} for an invertible upper-triangular b."""
    if b.nrows != b.ncols:
        raise ShapeError(f"Borel element must be square, got {b.shape}")
    if len(mu) != b.nrows:
        raise ShapeError(f"weight of length {len(mu)} against a {b.nrows}x{b.nrows} matrix")
    if not b.is_upper_triangular():
        raise DomainError("Borel element is not upper triangular")
    F = b.field
    value = F.one
    for i, m in enumerate(mu, start=1):
        diagonal = b[i - 1, i - 1]
        if F.is_zero(diagonal):
            raise DomainError(f"diagonal entry ({i}, {i}) of the Borel element is zero")
        value = F.mul(value, F.power(diagonal, int(m)))
    return value


def hom_base_change_determinant(g: Mat, g_prime: Mat):
    """Determinant of ψ ↦ g' ψ g^{-1} on (q x r) matrices, in the elementary basis."""
    if g.nrows != g.ncols or g_prime.nrows != g_prime.ncols:
        raise ShapeError(f"base change needs square matrices, got {g.shape} and {g_prime.shape}")
    F = g.field
    r, q = g.nrows, g_prime.nrows
    ginv = _inverse_or_domain_error(g, "g").data
    _inverse_or_domain_error(g_prime, "g'")
    size = r * q
    data = [[F.zero] * size for _ in range(size)]
    for a in range(r):
        for b in range(q):
            col = a * q + b
            for j in range(r):
                for i in range(q):
                    data[j * q + i][col] = F.mul(g_prime.data[i][b], ginv[a][j])
    return determinant(Mat(F, data, ncols=size))


def right_borel_factor(T: PositionTuple, b_vec: Sequence[Mat], b_prime_vec: Sequence[Mat]):
    """Π_k χ_{λ_{I_k}}(b_k) χ_{λ_{I_k^c} + r𝟙}(b'_k)."""
    F = b_vec[0].field
    value = F.one
    for I, b, bp in zip(T.parts, b_vec, b_prime_vec):
        value = F.mul(value, borel_character(lambda_of_subset(I), b))
        value = F.mul(value, borel_character(lambda_of_subset(complement(I)).shifted(T.r), bp))
    return value


def diagonal_factor(T: PositionTuple, g: Mat, g_prime: Mat):
    """det(g)^{-(n-r)(1-s)} det(g')^{r(1-s)}."""
    F = g.field
    r, q, s = T.r, T.n - T.r, T.s
    return F.mul(
        F.power(determinant(g), -q * (1 - s)),
        F.power(determinant(g_prime), r * (1 - s)),
    )


def right_borel_identity_holds(T, g_vec, h_vec, b_vec, b_prime_vec) -> bool:
    F = g_vec[0].field
    left = delta_determinant(T, [g @ b for g, b in zip(g_vec, b_vec)], [h @ bp for h, bp in zip(h_vec, b_prime_vec)])
    right = F.mul(delta_determinant(T, g_vec, h_vec), right_borel_factor(T, b_vec, b_prime_vec))
    logger.debug("right Borel identity for %s: %s vs %s", T, F.format(left), F.format(right))
    return left == right


def diagonal_identity_holds(T, g_vec, h_vec, g: Mat, g_prime: Mat) -> bool:
    F = g.field
    ginv = _inverse_or_domain_error(g, "g")
    gpinv = _inverse_or_domain_error(g_prime, "g'")
    left = delta_determinant(T, [ginv @ x for x in g_vec], [gpinv @ y for y in h_vec])
    right = F.mul(diagonal_factor(T, g, g_prime), delta_determinant(T, g_vec, h_vec))
    logger.debug("diagonal identity for %s: %s vs %s", T, F.format(left), F.format(right))
    return left == right
