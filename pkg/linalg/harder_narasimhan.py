"""
Exhaustive Harder-Narasimhan search over a small prime field.

Every nonzero subspace S of GF(q)^r gets the slope of its position tuple
(Pos(S, F_1), ..., Pos(S, F_s)) against antidominant weights θ. The search
returns a subspace of minimal slope and, among those, maximal dimension,
together with how many subspaces share that (slope, dimension).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, List, Sequence

from combinatorics.weights import slope
from core.combinatorics_model import PositionTuple, Weight, format_rational
from core.config import DEFAULT_BUDGET
from core.errors import DomainError, ResourceError, ShapeError
from linalg.fields import PrimeField
from linalg.flags import Flag, SubspaceBasis, position
from linalg.matrix import Mat

logger = logging.getLogger(__name__)


@dataclass
class HNResult:
    subspace: SubspaceBasis
    slope: Fraction
    multiplicity: int
    dim: int
    positions: PositionTuple
    enumerated: int

    def to_json(self) -> dict:
        return {
            "subspace": self.subspace.to_json(),
            "slope": format_rational(self.slope),
            "multiplicity": self.multiplicity,
            "dim": self.dim,
            "positions": self.positions.as_lists(),
            "enumerated": self.enumerated,
        }


def gaussian_binomial(r: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of GF(q)^r."""
    num, den = 1, 1
    for i in range(d):
        num *= q ** (r - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(r: int, q: int) -> int:
    return sum(gaussian_binomial(r, d, q) for d in range(1, r + 1))


def enumerate_subspaces(F: PrimeField, r: int) -> Iterator[SubspaceBasis]:
    """All nonzero subspaces of F^r, once each, by reduced row echelon bases."""
    q = F.p
    for d in range(1, r + 1):
        for pivots in combinations(range(r), d):
            pivot_set = set(pivots)
            free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, r) if j not in pivot_set]
            for values in product(range(q), repeat=len(free)):
                rows = [[0] * r for _ in range(d)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield SubspaceBasis(Mat(F, rows, ncols=r).transpose())


def hn_minimizer_exhaustive(
    flags: Sequence[Flag],
    theta: Sequence[Weight],
    budget: int = DEFAULT_BUDGET,
) -> HNResult:
    if not flags:
        raise ShapeError("at least one flag is required")
    if len(flags) != len(theta):
        raise ShapeError(f"{len(flags)} flags but {len(theta)} weights")
    F = flags[0].field
    if not isinstance(F, PrimeField):
        raise DomainError(f"exhaustive search needs a prime field, got {F.tag!r}")
    r = flags[0].space_dim
    if r < 1:
        raise DomainError(f"exhaustive search needs a space of dimension >= 1, got {r}")
    for k, (E, th) in enumerate(zip(flags, theta), start=1):
        if E.space_dim != r or E.field != F:
            raise ShapeError(f"flag {k} does not live on GF({F.p})^{r}")
        if len(th) != r:
            raise ShapeError(f"weight {k} has length {len(th)}, expected {r}")
        if not th.is_antidominant():
            raise DomainError(f"weight {k} = {list(th)} is not antidominant")
    total = subspace_count(r, F.p)
    if total > budget:
        raise ResourceError(f"GF({F.p})^{r} has {total} nonzero subspaces, budget is {budget}")

    best_key = None
    best = None
    multiplicity = 0
    for S in enumerate_subspaces(F, r):
        J = PositionTuple(tuple(position(S, E) for E in flags))
        mu = slope(J, theta)
        key = (mu, -S.dim)
        if best_key is None or key < best_key:
            best_key, best, multiplicity = key, (S, J), 1
        elif key == best_key:
            multiplicity += 1
    S, J = best
    logger.debug("HN search over GF(%d)^%d: %d subspaces, slope %s, multiplicity %d", F.p, r, total, best_key[0], multiplicity)
    return HNResult(S, best_key[0], multiplicity, S.dim, J, total)


def random_antidominant(r: int, rng, low: int = -3, high: int = 3) -> Weight:
    return Weight(tuple(sorted(int(x) for x in rng.integers(low, high + 1, size=r))))


def random_trial(F: PrimeField, r: int, s: int, rng, budget: int = DEFAULT_BUDGET) -> HNResult:
    """One random (flag tuple, θ) instance."""
    flags: List[Flag] = [Flag.random(F, r, rng) for _ in range(s)]
    theta = [random_antidominant(r, rng) for _ in range(s)]
    return hn_minimizer_exhaustive(flags, theta, budget)
