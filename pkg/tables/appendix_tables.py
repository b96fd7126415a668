# appendix_tables.py
"""
Recomputes the embedded appendix tables and compares them with the fixtures.
A mismatch is an InvariantViolation: the Horn recursion disagrees with the
published data.
"""
import logging
from typing import Dict, List, Set, Tuple

from combinatorics.subset_ops import canonical_tuple, permutation_closure
from core.combinatorics_model import PositionTuple
from core.errors import InvariantViolation
from core.report_generator import Report
from horn.horn_engine import HornTable, horn_classes
from kirwan.kirwan_cone import kirwan_inequality_set
from tables.appendix_data import HORN_TRIPLES, KIRWAN_INEQUALITIES

logger = logging.getLogger(__name__)

S = 3


def fixture_classes(d: int, r: int) -> Set[Tuple[PositionTuple, int]]:
    return {(canonical_tuple(PositionTuple.of(r, parts)), e) for parts, e in HORN_TRIPLES[(d, r)]}


def fixture_inequalities(r: int) -> Set[Tuple[int, PositionTuple]]:
    """Permutation closure of the listed representatives."""
    return {
        (d, T)
        for d, reps in KIRWAN_INEQUALITIES[r].items()
        for parts in reps
        for T in permutation_closure(PositionTuple.of(r, parts))
    }


def check_appendix_a(cache: HornTable) -> Dict[Tuple[int, int], List[Tuple[PositionTuple, int, int]]]:
    tables = {}
    for (d, r) in sorted(HORN_TRIPLES):
        computed = horn_classes(d, r, S, cache)
        found = {(T, e) for T, e, _ in computed}
        expected = fixture_classes(d, r)
        if found != expected:
            missing = sorted(str(T) for T, _ in expected - found)
            extra = sorted(str(T) for T, _ in found - expected)
            raise InvariantViolation(f"Horn({d},{r},{S}) differs from the table: missing {missing}, extra {extra}")
        logger.debug("Horn(%d,%d,%d) matches the table, %d classes", d, r, S, len(computed))
        tables[(d, r)] = computed
    return tables


def check_appendix_b(cache: HornTable) -> Dict[int, List[Tuple[int, PositionTuple]]]:
    systems = {}
    for r in sorted(KIRWAN_INEQUALITIES):
        computed = kirwan_inequality_set(r, S, cache)
        expected = fixture_inequalities(r)
        if set(computed) != expected or len(computed) != len(expected):
            raise InvariantViolation(
                f"Kirwan({r},{S}) has {len(computed)} inequalities, the table lists {len(expected)} up to permutation"
            )
        systems[r] = computed
    return systems


def appendix_a_report(cache: HornTable) -> Report:
    tables = check_appendix_a(cache)
    rows, highlight, payload = [], [], []
    for (d, r), classes in tables.items():
        for T, e, _ in classes:
            rows.append([f"d={d}, r={r}"] + T.as_lists() + [e])
            highlight.append(e == 0)
        payload.append({
            "d": d, "r": r, "s": S,
            "classes": [{"tuple": T.as_lists(), "edim": e, "orbit_size": orbit} for T, e, orbit in classes],
            "matches_fixture": True,
        })
    return Report(
        title="Horn triples in low dimensions",
        columns=["(d, r)", "J_1", "J_2", "J_3", "edim"],
        rows=rows,
        payload={"tables": payload},
        highlight=highlight,
        group_first_column=True,
    )


def appendix_b_report(cache: HornTable) -> Report:
    systems = check_appendix_b(cache)
    rows, payload = [], []
    for r, inequalities in systems.items():
        groups: Dict[Tuple[int, PositionTuple], int] = {}
        for d, J in inequalities:
            key = (d, canonical_tuple(J))
            groups[key] = groups.get(key, 0) + 1
        for (d, rep), count in sorted(groups.items(), key=lambda item: (item[0][0], item[0][1].sort_key())):
            rows.append([f"r={r}", d] + rep.as_lists() + [count])
        payload.append({
            "r": r, "s": S,
            "count": len(inequalities),
            "representatives": [
                {"d": d, "J": rep.as_lists(), "permutations": count}
                for (d, rep), count in sorted(groups.items(), key=lambda item: (item[0][0], item[0][1].sort_key()))
            ],
            "matches_fixture": True,
        })
    return Report(
        title="Kirwan cones in low dimensions",
        columns=["r", "d", "J_1", "J_2", "J_3", "permutations"],
        rows=rows,
        payload={"systems": payload},
        group_first_column=True,
    )
