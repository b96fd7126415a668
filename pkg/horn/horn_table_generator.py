# horn_table_generator.py
from typing import List, Tuple

from core.combinatorics_model import PositionTuple
from core.report_generator import Report
from core.verdict_model import HornVerdict


def _part_columns(s: int) -> List[str]:
    return [f"J_{k}" for k in range(1, s + 1)]


def enumeration_report(r: int, n: int, s: int, entries: List[Tuple[PositionTuple, int]]) -> Report:
    rows = [[n] + T.as_lists() + [e] for T, e in entries]
    payload = {
        "r": r, "n": n, "s": s,
        "count": len(entries),
        "tuples": [{"tuple": T.as_lists(), "edim": e} for T, e in entries],
    }
    return Report(
        title=f"Horn({r},{n},{s})",
        columns=["n"] + _part_columns(s) + ["edim"],
        rows=rows,
        payload=payload,
        highlight=[e == 0 for _, e in entries],
        group_first_column=True,
    )


def classes_report(r: int, n: int, s: int, classes: List[Tuple[PositionTuple, int, int]]) -> Report:
    rows = [[n] + T.as_lists() + [e, orbit] for T, e, orbit in classes]
    payload = {
        "r": r, "n": n, "s": s,
        "classes": [{"tuple": T.as_lists(), "edim": e, "orbit_size": orbit} for T, e, orbit in classes],
        "count": sum(orbit for _, _, orbit in classes),
    }
    return Report(
        title=f"Horn({r},{n},{s}) up to permutations",
        columns=["n"] + _part_columns(s) + ["edim", "orbit"],
        rows=rows,
        payload=payload,
        highlight=[e == 0 for _, e, _ in classes],
        group_first_column=True,
    )


def horn0_report(d: int, r: int, s: int, tuples: List[PositionTuple]) -> Report:
    return Report(
        title=f"Horn0({d},{r},{s})",
        columns=_part_columns(s),
        rows=[T.as_lists() for T in tuples],
        payload={"d": d, "r": r, "s": s, "tuples": [T.as_lists() for T in tuples]},
    )


def verdict_report(verdict: HornVerdict) -> Report:
    rows = [["member", verdict.member], ["edim", verdict.edim]]
    violation = verdict.violation
    if violation is not None:
        if violation.J is None:
            rows.append(["violation", "edim negative"])
        else:
            rows.append(["violation d", violation.d])
            for k, J in enumerate(violation.J.parts, start=1):
                rows.append([f"violation J_{k}", list(J.elements)])
            rows.append(["edim of composition", violation.edim])
    return Report(
        title=f"Horn membership of {verdict.tuple}",
        columns=["field", "value"],
        rows=rows,
        payload=verdict.to_json(),
    )
