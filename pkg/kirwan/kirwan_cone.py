# kirwan_cone.py
"""
Kirwan cone membership and nonvanishing of Littlewood-Richardson coefficients.

Kirwan(r, s) is cut out by the trace equality Σ_k |ξ_k| = 0 and one inequality
Σ_k Σ_{a ∈ J_k} ξ_k(a) <= 0 for every J in Horn0(d, r, s), 0 < d < r. By
saturation c(λ) > 0 exactly when the integral tuple λ lies in the cone.
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from combinatorics.subset_ops import edim, full_tuple
from combinatorics.weights import subset_of_lambda, weights_of_tuple
from core.combinatorics_model import PositionTuple, Weight
from core.errors import DomainError, InvariantViolation, ShapeError
from core.verdict_model import SLACK, TIGHT, VIOLATED, IneqCertificate, KirwanVerdict
from horn.horn_engine import HornTable, horn0

logger = logging.getLogger(__name__)

KirwanPoint = Tuple[Tuple[Fraction, ...], ...]


def kirwan_inequality_set(r: int, s: int, cache: HornTable) -> List[Tuple[int, PositionTuple]]:
    if r < 1 or s < 2:
        raise DomainError(f"Kirwan({r},{s}) needs r >= 1 and s >= 2")
    return [(d, J) for d in range(1, r) for J in horn0(d, r, s, cache)]


def _check_point(xi: Sequence[Sequence]) -> KirwanPoint:
    if len(xi) < 2:
        raise ShapeError(f"a Kirwan point needs at least two parts, got {len(xi)}")
    r = len(xi[0])
    point = []
    for k, part in enumerate(xi, start=1):
        if len(part) != r:
            raise ShapeError(f"part {k} has length {len(part)}, expected {r}")
        values = tuple(Fraction(x) for x in part)
        for i in range(1, r):
            if values[i - 1] < values[i]:
                raise DomainError(f"part {k} increases at coordinates ({i}, {i + 1}): {values[i - 1]} < {values[i]}")
        point.append(values)
    if r < 1:
        raise ShapeError("parts must be nonempty")
    return tuple(point)


def _status(lhs: Fraction) -> str:
    if lhs > 0:
        return VIOLATED
    return TIGHT if lhs == 0 else SLACK


def inequality_value(xi: KirwanPoint, J: PositionTuple) -> Fraction:
    """Σ_k Σ_{a ∈ J_k} ξ_k(a)."""
    return sum((part[a - 1] for part, Jk in zip(xi, J.parts) for a in Jk.elements), Fraction(0))


def kirwan_certificates(xi: Sequence[Sequence], cache: HornTable) -> List[IneqCertificate]:
    """Every inequality evaluated at ξ, the trace certificate first."""
    point = _check_point(xi)
    r, s = len(point[0]), len(point)
    trace = sum((sum(part) for part in point), Fraction(0))
    certificates = [IneqCertificate(r, full_tuple(r, s), trace, TIGHT if trace == 0 else VIOLATED)]
    for d, J in kirwan_inequality_set(r, s, cache):
        lhs = inequality_value(point, J)
        certificates.append(IneqCertificate(d, J, lhs, _status(lhs)))
    return certificates


def kirwan_check(xi: Sequence[Sequence], cache: HornTable) -> KirwanVerdict:
    certificates = kirwan_certificates(xi, cache)
    violated = [c for c in certificates if c.status == VIOLATED]
    verdict = KirwanVerdict(not violated, certificates[0].lhs, violated, len(certificates))
    logger.debug("Kirwan check: %d inequalities, %d violated", len(certificates), len(violated))
    return verdict


def _check_dominant(lambdas: Sequence[Weight]):
    for k, lam in enumerate(lambdas, start=1):
        for i in range(1, len(lam)):
            if lam.at(i) < lam.at(i + 1):
                raise DomainError(f"λ_{k} = {list(lam)} is not dominant at entries ({i}, {i + 1})")
        for i, x in enumerate(lam, start=1):
            if int(x) != x:
                raise DomainError(f"λ_{k} has a non-integral entry {x} at {i}")


def lr_verdict(lambdas: Sequence[Weight], cache: HornTable) -> KirwanVerdict:
    _check_dominant(lambdas)
    return kirwan_check([tuple(Fraction(x) for x in lam) for lam in lambdas], cache)


def lr_nonvanishing(lambdas: Sequence[Weight], cache: HornTable) -> bool:
    """c(λ) > 0, decided through the Kirwan inequalities."""
    return lr_verdict(lambdas, cache).member


def tuple_from_weights(lambdas: Sequence[Weight]) -> Tuple[int, PositionTuple]:
    """
    Shifts λ_1..λ_{s-1} into [0, n-r] and λ_s into [r-n, 0] by multiples of 𝟙
    (the shifts sum to zero) and inverts the dictionary of weights_of_tuple.
    """
    if not lambdas:
        raise ShapeError("at least one weight is required")
    r = len(lambdas[0])
    if r < 1 or any(len(lam) != r for lam in lambdas):
        raise ShapeError(f"weights must share a positive length, got {[len(lam) for lam in lambdas]}")
    _check_dominant(lambdas)
    s = len(lambdas)
    if s == 1:
        lam = lambdas[0].shifted(-lambdas[0].at(1))
        n = r - lam.at(r)
        T = PositionTuple((subset_of_lambda(lam, n),))
        shifted = [lam]
    else:
        shifts = [max(0, -lam.at(r)) for lam in lambdas[:-1]]
        shifts.append(-sum(shifts))
        excess = lambdas[-1].at(1) + shifts[-1]
        if excess > 0:
            shifts[-1] -= excess
            shifts[0] += excess
        shifted = [lam.shifted(c) for lam, c in zip(lambdas, shifts)]
        q = max([lam.at(1) for lam in shifted[:-1]] + [-shifted[-1].at(r)])
        n = r + q
        parts = [subset_of_lambda(lam.shifted(-q), n) for lam in shifted[:-1]]
        parts.append(subset_of_lambda(shifted[-1], n))
        T = PositionTuple(tuple(parts))
    recovered = weights_of_tuple(T)
    if [tuple(w) for w in recovered] != [tuple(w) for w in shifted]:
        raise InvariantViolation(f"weights of {T} are {[list(w) for w in recovered]}, expected {[list(w) for w in shifted]}")
    total = sum(w.total() for w in shifted)
    if edim(T) != -total:
        raise InvariantViolation(f"edim {edim(T)} != -Σ|λ_k| = {-total}")
    return n, T
