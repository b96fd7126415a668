"""
Floating-point check of the variational principle for Hermitian matrices:
with X = U diag(ξ) U* and F_X(j) spanned by the first j columns of U,
min over S in the Schubert variety of J of tr(P_S X) equals Σ_{j ∈ J} ξ(j),
attained at S = span{u_j : j ∈ J}.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from combinatorics.subset_ops import complement
from core.combinatorics_model import CardSubset
from core.errors import DomainError, ShapeError
from horn.horn_engine import HornTable
from kirwan.kirwan_cone import kirwan_inequality_set

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


@dataclass
class VariationalReport:
    xi: List[float]
    J: CardSubset
    bound: float
    equality_error: float
    min_trace: float
    margin: float
    trials: int
    tolerance: float
    offending_sample: Optional[int] = None
    traces: List[float] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.equality_error <= self.tolerance and self.offending_sample is None

    def to_json(self) -> dict:
        data = {
            "xi": self.xi,
            "J": list(self.J.elements),
            "bound": self.bound,
            "equality_error": self.equality_error,
            "min_trace": self.min_trace,
            "margin": self.margin,
            "trials": self.trials,
            "passed": self.passed,
        }
        if self.offending_sample is not None:
            data["offending_sample"] = self.offending_sample
        return data


def random_unitary(r: int, rng) -> np.ndarray:
    A = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
    Q, _ = np.linalg.qr(A)
    return Q


def _cell_sample(J: CardSubset, rng) -> np.ndarray:
    """u-coordinates of a random point in the cell of J, orthonormalized."""
    r, d = J.ground, J.cardinality
    Jc = complement(J).elements
    C = np.zeros((r, d), dtype=complex)
    for a, x in enumerate(J.elements, start=1):
        C[x - 1, a - 1] = 1.0
        for b in range(1, x - a + 1):
            C[Jc[b - 1] - 1, a - 1] = rng.standard_normal() + 1j * rng.standard_normal()
    Q, _ = np.linalg.qr(C)
    return Q


def _trace(X: np.ndarray, Q: np.ndarray) -> float:
    return float(np.real(np.trace(Q.conj().T @ X @ Q)))


def variational_check(
    xi: Sequence[float],
    J: CardSubset,
    trials: int,
    tolerance: float = DEFAULT_TOLERANCE,
    rng=None,
) -> VariationalReport:
    xi = [float(x) for x in xi]
    r = len(xi)
    if J.ground != r:
        raise ShapeError(f"{J} is a subset of [{J.ground}] but ξ has length {r}")
    for i in range(1, r):
        if xi[i - 1] < xi[i]:
            raise DomainError(f"ξ increases at coordinates ({i}, {i + 1})")
    rng = rng if rng is not None else np.random.default_rng()
    scale = tolerance * max(1.0, max((abs(x) for x in xi), default=0.0))

    U = random_unitary(r, rng)
    X = U @ np.diag(xi) @ U.conj().T
    bound = sum(xi[j - 1] for j in J.elements)
    eigen_span = U[:, [j - 1 for j in J.elements]]
    equality_error = abs(_trace(X, eigen_span) - bound)

    traces = []
    offending = None
    for t in range(trials):
        value = _trace(X, U @ _cell_sample(J, rng))
        traces.append(value)
        if offending is None and value < bound - scale:
            offending = t
            logger.warning("trace %.3e below the bound %.3e at sample %d", value, bound, t)
    min_trace = min(traces) if traces else bound
    return VariationalReport(
        xi=xi,
        J=J,
        bound=bound,
        equality_error=equality_error,
        min_trace=min_trace,
        margin=min_trace - bound,
        trials=trials,
        tolerance=scale,
        offending_sample=offending,
        traces=traces,
    )


def random_spectrum(r: int, rng) -> List[float]:
    return sorted((float(x) for x in rng.standard_normal(r)), reverse=True)


def random_spectra(r: int, s: int, rng) -> List[List[float]]:
    """Eigenvalues of random Hermitian X_1..X_{s-1} and X_s = -Σ X_k, each nonincreasing."""
    if s < 2:
        raise DomainError(f"random spectra need s >= 2, got {s}")
    matrices = []
    for _ in range(s - 1):
        A = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
        matrices.append((A + A.conj().T) / 2)
    matrices.append(-sum(matrices))
    return [sorted(np.linalg.eigvalsh(X).tolist(), reverse=True) for X in matrices]


def horn_inequality_margin(spectra: Sequence[Sequence[float]], cache: HornTable) -> float:
    """Largest Σ_k Σ_{a ∈ J_k} ξ_k(a) over the inequality set; <= 0 up to rounding for true spectra."""
    r, s = len(spectra[0]), len(spectra)
    values = [
        sum(spectra[k][a - 1] for k, Jk in enumerate(J.parts) for a in Jk.elements)
        for _, J in kirwan_inequality_set(r, s, cache)
    ]
    return max(values, default=float("-inf"))
