# tangent_table_generator.py
from typing import List

from core.report_generator import Report
from core.verdict_model import CrossValidationReport, IntersectVerdict


def intersect_report(verdict: IntersectVerdict) -> Report:
    rows = [
        ["kind", verdict.kind],
        ["edim", verdict.edim],
        ["tdim upper bound", verdict.tdim_upper_bound],
        ["samples", verdict.samples],
    ]
    return Report(
        title=f"Intersection certificate for {verdict.tuple}",
        columns=["field", "value"],
        rows=rows,
        payload=verdict.to_json(),
    )


def crossval_report(r: int, n: int, s: int, report: CrossValidationReport) -> Report:
    rows = [
        ["tuples", report.total],
        ["agreements", report.agreements],
        ["escalations", report.escalations],
        ["disagreements", len(report.disagreements)],
    ]
    payload = dict(report.to_json(), r=r, n=n, s=s)
    return Report(
        title=f"Certifier against the Horn recursion on Subsets({r},{n},{s})",
        columns=["field", "value"],
        rows=rows,
        payload=payload,
    )


def delta_report(title: str, samples: List[dict]) -> Report:
    rows = [
        [i, sample["delta"], sample["right_borel"], sample["diagonal"]]
        for i, sample in enumerate(samples, start=1)
    ]
    return Report(
        title=title,
        columns=["sample", "delta", "right Borel", "diagonal"],
        rows=rows,
        payload={"title": title, "samples": samples},
    )
