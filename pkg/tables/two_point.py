# two_point.py
"""
Three flags on Q(√5)^6 from the osculating curve f(t) = Σ_i t^{i-1}/(i-1)! e_i,
with E(t) adapted to (f(t), f'(t), ..., f^(5)(t)), and the two subspaces V_1,
V_2 in the intersection of the cells at {2, 4, 6} for E(0), E(1), E(-1).
"""
from fractions import Fraction
from math import factorial
from typing import Dict, List

from core.combinatorics_model import CardSubset
from core.report_generator import Report
from linalg.fields import Sqrt5Field
from linalg.flags import Flag, SubspaceBasis, position
from linalg.matrix import Mat

N = 6
TARGET = CardSubset(N, (2, 4, 6))
TIMES = (0, 1, -1)


def osculating_flag(K: Sqrt5Field, t: int) -> Flag:
    """Column k is the k-th derivative of f at t: entry i is t^(i-k)/(i-k)! for i >= k."""
    rows = [
        [K.from_fraction(Fraction(t ** (i - k), factorial(i - k))) if i >= k else K.zero for k in range(N)]
        for i in range(N)
    ]
    return Flag(Mat(K, rows, ncols=N))


def two_point_subspaces(K: Sqrt5Field) -> List[SubspaceBasis]:
    s5 = K.element(0, 1)
    one = K.one

    def scaled(c: int):
        return K.mul(K.from_int(c), s5)

    z = K.zero
    columns_v1 = [
        [s5, one, z, z, z, z],
        [scaled(-24), z, scaled(-3), one, z, z],
        [z, z, scaled(-24), z, s5, one],
    ]
    V1 = SubspaceBasis(Mat.from_columns(K, columns_v1))
    columns_v2 = [[K.conjugate(x) for x in col] for col in columns_v1]
    V2 = SubspaceBasis(Mat.from_columns(K, columns_v2))
    return [V1, V2]


def two_point_positions(K: Sqrt5Field = None) -> Dict[str, Dict[int, CardSubset]]:
    K = K or Sqrt5Field()
    flags = {t: osculating_flag(K, t) for t in TIMES}
    return {
        name: {t: position(V, E) for t, E in flags.items()}
        for name, V in zip(("V1", "V2"), two_point_subspaces(K))
    }


def two_point_report(K: Sqrt5Field = None) -> Report:
    K = K or Sqrt5Field()
    positions = two_point_positions(K)
    rows, highlight = [], []
    for name, by_time in positions.items():
        for t, J in by_time.items():
            rows.append([name, f"E({t})", list(J.elements)])
            highlight.append(J == TARGET)
    subspaces = two_point_subspaces(K)
    payload = {
        "field": K.tag,
        "target": list(TARGET.elements),
        "subspaces": {name: V.to_json()["matrix"] for name, V in zip(("V1", "V2"), subspaces)},
        "positions": {name: {str(t): list(J.elements) for t, J in by_time.items()} for name, by_time in positions.items()},
        "all_at_target": all(highlight),
    }
    return Report(
        title="Two points in the intersection of three cells at {2, 4, 6}",
        columns=["subspace", "flag", "position"],
        rows=rows,
        payload=payload,
        highlight=highlight,
        group_first_column=True,
    )
