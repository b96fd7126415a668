from fractions import Fraction
from typing import List, Sequence

from combinatorics.subset_ops import edim
from core.combinatorics_model import CardSubset, PositionTuple, Weight
from core.errors import DomainError, InvariantViolation, ShapeError


def lambda_of_subset(I: CardSubset) -> Weight:
    """λ_I(a) = a - I(a); dominant with entries in [r-n, 0]."""
    return Weight(tuple(a - x for a, x in enumerate(I.elements, start=1)))


def subset_of_lambda(lam: Weight, n: int) -> CardSubset:
    """Inverse of lambda_of_subset on dominant weights with λ(1) <= 0 and λ(r) >= r - n."""
    r = len(lam)
    if not lam.is_dominant():
        for a in range(1, r):
            if lam.at(a) < lam.at(a + 1):
                raise DomainError(f"weight {list(lam)} is not dominant at entries {a}, {a + 1}")
    for a in range(1, r + 1):
        if lam.at(a) > 0 or lam.at(a) < r - n:
            raise DomainError(f"entry {a} of {list(lam)} is {lam.at(a)}, outside [{r - n}, 0]")
    return CardSubset(n, tuple(a - lam.at(a) for a in range(1, r + 1)))


def weights_of_tuple(T: PositionTuple) -> List[Weight]:
    """
    λ_k = λ_{I_k} + (n-r)·𝟙 for k < s and λ_s = λ_{I_s}.
    The result always satisfies edim(T) == -Σ_k |λ_k|.
    """
    shift = T.n - T.r
    weights = [lambda_of_subset(I).shifted(shift) for I in T.parts[:-1]]
    weights.append(lambda_of_subset(T.parts[-1]))
    total = sum(w.total() for w in weights)
    if edim(T) != -total:
        raise InvariantViolation(f"edim {edim(T)} != -Σ|λ_k| = {-total} for {T}")
    return weights


def slope(J_tuple: PositionTuple, theta: Sequence[Weight]) -> Fraction:
    """μ_θ(J) = (1/d) Σ_k Σ_{a ∈ J_k} θ_k(a), exact."""
    if len(theta) != J_tuple.s:
        raise ShapeError(f"{len(theta)} weights for a tuple with {J_tuple.s} components")
    d = J_tuple.r
    if d == 0:
        raise DomainError("slope of the zero subspace is undefined")
    total = 0
    for k, (J, th) in enumerate(zip(J_tuple.parts, theta), start=1):
        if len(th) != J.ground:
            raise ShapeError(f"weight {k} has length {len(th)}, expected {J.ground}")
        if not th.is_antidominant():
            raise DomainError(f"weight {k} = {list(th)} is not antidominant")
        total += sum(th.at(a) for a in J.elements)
    return Fraction(total, d)


def dual_weight(lam: Weight) -> Weight:
    """λ* = (-λ(r), ..., -λ(1))."""
    return Weight(tuple(-x for x in reversed(lam.entries)))
