# kirwan_table_generator.py
from typing import List, Optional, Tuple

from core.combinatorics_model import PositionTuple, Weight
from core.report_generator import Report
from core.verdict_model import KirwanVerdict
from kirwan.variational import VariationalReport


def inequalities_report(r: int, s: int, inequalities: List[Tuple[int, PositionTuple]]) -> Report:
    return Report(
        title=f"Horn inequalities of Kirwan({r},{s})",
        columns=["d"] + [f"J_{k}" for k in range(1, s + 1)],
        rows=[[d] + J.as_lists() for d, J in inequalities],
        payload={
            "r": r, "s": s,
            "count": len(inequalities),
            "inequalities": [{"d": d, "J": J.as_lists()} for d, J in inequalities],
        },
        group_first_column=True,
    )


def kirwan_report(verdict: KirwanVerdict, title: str = "Kirwan cone membership", extra: Optional[dict] = None) -> Report:
    rows = [["member", verdict.member], ["trace", verdict.trace], ["inequalities checked", verdict.checked]]
    for c in verdict.certificates:
        rows.append([f"violated d={c.d} J={c.J_tuple.as_lists()}", c.lhs])
    payload = verdict.to_json()
    if extra:
        payload.update(extra)
    return Report(title=title, columns=["field", "value"], rows=rows, payload=payload)


def lr_report(lambdas: List[Weight], verdict: KirwanVerdict, T: PositionTuple) -> Report:
    extra = {
        "lambda": [lam.to_json() for lam in lambdas],
        "nonvanishing": verdict.member,
        "subset_tuple": T.to_json(),
    }
    report = kirwan_report(verdict, "Littlewood-Richardson nonvanishing", extra)
    report.rows.append(["subset tuple", str(T)])
    return report


def variational_report(reports: List[VariationalReport]) -> Report:
    rows = [
        [list(rep.J.elements), rep.bound, rep.min_trace, rep.margin, rep.equality_error, rep.passed]
        for rep in reports
    ]
    return Report(
        title="Variational principle for Hermitian matrices",
        columns=["J", "bound", "min trace", "margin", "equality error", "passed"],
        rows=[[c if not isinstance(c, float) else f"{c:.6g}" for c in row] for row in rows],
        payload={"runs": [rep.to_json() for rep in reports], "passed": all(rep.passed for rep in reports)},
        highlight=[not rep.passed for rep in reports],
    )
