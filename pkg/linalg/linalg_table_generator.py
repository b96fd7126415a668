# linalg_table_generator.py
from typing import List, Optional

from core.combinatorics_model import CardSubset
from core.report_generator import Report
from linalg.flags import Flag, SubspaceBasis
from linalg.harder_narasimhan import HNResult


def position_report(S: SubspaceBasis, E: Flag, J: CardSubset, J_by_rank: CardSubset) -> Report:
    return Report(
        title="Schubert position",
        columns=["method", "position"],
        rows=[["adapted coordinates", list(J.elements)], ["rank formula", list(J_by_rank.elements)]],
        payload={
            "position": list(J.elements),
            "position_by_rank": list(J_by_rank.elements),
            "subspace": S.to_json(),
            "flag": E.to_json(),
        },
    )


def cell_report(I: CardSubset, E: Flag, S: SubspaceBasis, found: CardSubset) -> Report:
    return Report(
        title=f"Random point in the Schubert cell of {I}",
        columns=["field", "value"],
        rows=[["requested", list(I.elements)], ["position", list(found.elements)]],
        payload={"requested": list(I.elements), "position": list(found.elements), "subspace": S.to_json(), "flag": E.to_json()},
    )


def degenerate_report(I: CardSubset, results: List[dict]) -> Report:
    rows = [[item["a"], item["position"], item["below"]] for item in results]
    return Report(
        title=f"Degenerations of a cell point at {I}",
        columns=["a", "position", "below"],
        rows=rows,
        payload={"I": list(I.elements), "degenerations": results},
        highlight=[item["below"] is False for item in results],
    )


def hn_report(results: List[HNResult], q: int, theta: Optional[list] = None) -> Report:
    rows = [[i, r.dim, r.slope, r.multiplicity, r.positions.as_lists()] for i, r in enumerate(results, start=1)]
    payload = {"q": q, "trials": [r.to_json() for r in results]}
    if theta is not None:
        payload["theta"] = theta
    return Report(
        title=f"Harder-Narasimhan subspaces over GF({q})",
        columns=["trial", "dim", "slope", "multiplicity", "positions"],
        rows=rows,
        payload=payload,
        highlight=[r.multiplicity != 1 for r in results],
    )
