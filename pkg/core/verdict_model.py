from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from core.combinatorics_model import PositionTuple, format_rational

# Модели результатов проверок; каждая умеет сериализоваться в JSON


@dataclass
class HornViolation:
    # d == 0 и J is None: нарушено базовое условие edim(T) >= 0
    d: int
    J: Optional[PositionTuple]
    edim: int

    def to_json(self) -> dict:
        if self.J is None:
            return {"kind": "edim negative", "edim": self.edim}
        return {"kind": "horn inequality", "d": self.d, "J": self.J.as_lists(), "edim_of_composition": self.edim}


@dataclass
class HornVerdict:
    tuple: PositionTuple
    member: bool
    edim: int
    violation: Optional[HornViolation] = None

    def to_json(self) -> dict:
        data = {"tuple": self.tuple.to_json(), "member": self.member, "edim": self.edim}
        if self.violation is not None:
            data["violation"] = self.violation.to_json()
        return data


INTERSECTING_CERTIFIED = "IntersectingCertified"
NOT_INTERSECTING_MC = "NotIntersectingMC"
NOT_INTERSECTING = "NotIntersecting"


@dataclass
class IntersectVerdict:
    tuple: PositionTuple
    kind: str
    edim: int
    tdim_upper_bound: Optional[int]
    samples: int
    field_tag: object
    witness: Optional[dict] = None

    @property
    def intersecting(self) -> bool:
        return self.kind == INTERSECTING_CERTIFIED

    @property
    def min_observed_dim(self) -> Optional[int]:
        return self.tdim_upper_bound

    def to_json(self) -> dict:
        data = {
            "tuple": self.tuple.to_json(),
            "kind": self.kind,
            "edim": self.edim,
            "tdim_upper_bound": self.tdim_upper_bound,
            "samples": self.samples,
            "field": self.field_tag,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data


VIOLATED = "violated"
TIGHT = "tight"
SLACK = "slack"


@dataclass
class IneqCertificate:
    """
    One inequality Σ_k Σ_{a ∈ J_k} ξ_k(a) <= 0 evaluated at a point.
    With d == r and every J_k == [r] the certificate carries the trace
    instead, where only equality to zero is acceptable.
    """
    d: int
    J_tuple: PositionTuple
    lhs: Fraction
    status: str

    def to_json(self) -> dict:
        return {"d": self.d, "J": self.J_tuple.as_lists(), "lhs": format_rational(self.lhs), "status": self.status}


@dataclass
class KirwanVerdict:
    member: bool
    trace: Fraction
    certificates: List[IneqCertificate] = field(default_factory=list)
    checked: int = 0

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "trace": format_rational(self.trace),
            "inequalities_checked": self.checked,
            "violations": [c.to_json() for c in self.certificates],
        }


@dataclass
class CrossValidationReport:
    agreements: int = 0
    disagreements: List[dict] = field(default_factory=list)
    escalations: int = 0
    total: int = 0

    @property
    def consistent(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "agreements": self.agreements,
            "escalations": self.escalations,
            "disagreements": self.disagreements,
        }
