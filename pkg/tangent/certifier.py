# certifier.py
"""
Randomized certification of intersecting tuples through the true dimension.

For random flags F_k on V_0 and G_k on Q_0, dim ∩_k H_{I_k}(F_k, G_k) >= edim(T)
always, and equality at a single point means T is intersecting. A positive
verdict found over GF(p) is exact in characteristic zero as well: lifting the
sampled entries to integers, a nonzero maximal minor mod p stays a nonzero
integer, so the rank can only grow and the dimension can only drop, and it
cannot drop below edim. A negative verdict is Monte-Carlo.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from combinatorics.subset_ops import edim
from core.combinatorics_model import PositionTuple
from core.errors import InvariantViolation
from core.verdict_model import (
    INTERSECTING_CERTIFIED,
    NOT_INTERSECTING,
    NOT_INTERSECTING_MC,
    CrossValidationReport,
    IntersectVerdict,
)
from horn.horn_engine import HornTable, horn_member
from linalg.fields import Field
from linalg.flags import Flag
from tangent.h_space import h_intersection_dim

logger = logging.getLogger(__name__)


def random_flag_tuples(T: PositionTuple, F: Field, rng) -> Tuple[List[Flag], List[Flag]]:
    r, q = T.r, T.n - T.r
    F_tuple = [Flag.random(F, r, rng) for _ in range(T.s)]
    G_tuple = [Flag.random(F, q, rng) for _ in range(T.s)]
    return F_tuple, G_tuple


def sample_tdim(T: PositionTuple, F: Field, rng) -> Tuple[int, List[Flag], List[Flag]]:
    F_tuple, G_tuple = random_flag_tuples(T, F, rng)
    return h_intersection_dim(T, F_tuple, G_tuple), F_tuple, G_tuple


def tdim_estimate(T: PositionTuple, F: Field, samples: int, rng) -> int:
    """Minimum of the sampled kernel dimensions: an upper bound on tdim, never below edim."""
    return min(sample_tdim(T, F, rng)[0] for _ in range(max(samples, 1)))


def _witness(F: Field, F_tuple: Sequence[Flag], G_tuple: Sequence[Flag]) -> dict:
    return {
        "field": F.tag,
        "F": [E.basis.to_json()["matrix"] for E in F_tuple],
        "G": [E.basis.to_json()["matrix"] for E in G_tuple],
    }


def certify_intersecting(T: PositionTuple, F: Field, samples: int, rng) -> IntersectVerdict:
    e = edim(T)
    if e < 0:
        return IntersectVerdict(T, NOT_INTERSECTING, e, None, 0, F.tag)
    if T.r in (0, T.n):
        # Hom(V_0, Q_0) = 0, edim = 0
        return IntersectVerdict(T, INTERSECTING_CERTIFIED, e, 0, 0, F.tag)
    best: Optional[int] = None
    for i in range(1, max(samples, 1) + 1):
        dim, F_tuple, G_tuple = sample_tdim(T, F, rng)
        if dim < e:
            raise InvariantViolation(f"sampled dimension {dim} below edim {e} for {T}")
        best = dim if best is None else min(best, dim)
        if dim == e:
            logger.debug("%s certified at sample %d", T, i)
            return IntersectVerdict(T, INTERSECTING_CERTIFIED, e, dim, i, F.tag, _witness(F, F_tuple, G_tuple))
    return IntersectVerdict(T, NOT_INTERSECTING_MC, e, best, samples, F.tag)


def _certify_task(args) -> Tuple[int, str, str, bool]:
    """Worker: (index, first kind, final kind, escalated). Escalation continues the same stream."""
    index, T, F, samples, escalated_samples, expected, seed = args
    rng = np.random.default_rng(seed)
    first = certify_intersecting(T, F, samples, rng)
    if first.intersecting == expected:
        return index, first.kind, first.kind, False
    extra = max(escalated_samples - samples, 0)
    final = certify_intersecting(T, F, extra, rng) if extra else first
    return index, first.kind, final.kind, True


def cross_validate(tuples: Sequence[PositionTuple], config, cache: HornTable) -> CrossValidationReport:
    """
    certify_intersecting against horn_member on every tuple. Each tuple gets its
    own spawned stream, so the report does not depend on --jobs.
    """
    F = config.make_field()
    expected = [horn_member(T, cache).member for T in tuples]
    streams = config.seed_sequence().spawn(len(tuples))
    tasks = [
        (i, T, F, config.samples, config.escalated_samples, expected[i], streams[i])
        for i, T in enumerate(tuples)
    ]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_certify_task, tasks, chunksize=max(1, len(tasks) // (4 * config.jobs))))
    else:
        results = [_certify_task(task) for task in tasks]

    report = CrossValidationReport(total=len(tuples))
    for index, first_kind, final_kind, escalated in sorted(results, key=lambda item: item[0]):
        T = tuples[index]
        if escalated:
            report.escalations += 1
            logger.debug("escalated %s: %s -> %s", T, first_kind, final_kind)
        agrees = (final_kind == INTERSECTING_CERTIFIED) == expected[index]
        if agrees:
            report.agreements += 1
        else:
            logger.warning("certifier says %s for %s, Horn recursion says member=%s", final_kind, T, expected[index])
            report.disagreements.append({"tuple": T.to_json(), "certifier": final_kind, "horn_member": expected[index]})
    return report
