import logging
from fractions import Fraction
from typing import List, Tuple

from core.combinatorics_model import CardSubset, PositionTuple, Weight
from core.errors import PayloadError, ShapeError
from core.payload_parser import PayloadParser

logger = logging.getLogger(__name__)


def _require_list(value, what: str) -> list:
    if not isinstance(value, list):
        raise PayloadError(f"{what} must be a JSON array, got {type(value).__name__}")
    return value


def _require_int(value, what: str) -> int:
    # bool является подклассом int, его отбрасываем явно
    if isinstance(value, bool) or not isinstance(value, int):
        raise PayloadError(f"{what} must be an integer, got {value!r}")
    return value


def parse_rational(value, what: str) -> Fraction:
    """Integers, or strings such as "3", "-1/2"."""
    if isinstance(value, bool):
        raise PayloadError(f"{what} must be a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise PayloadError(f"{what}: cannot read {value!r} as a rational") from e
    raise PayloadError(f"{what} must be an integer or an \"a/b\" string, got {value!r}")


class SubsetPayloadParser(PayloadParser):
    """`[1,3,4]` with the ground set given separately."""

    def __init__(self, ground: int):
        self.ground = ground

    def parse(self, payload: str) -> CardSubset:
        data = _require_list(self.load_json(payload), "subset")
        return CardSubset(self.ground, tuple(_require_int(x, "subset element") for x in data))


class TuplePayloadParser(PayloadParser):
    """`[[1,4],[2,3]]` with n given separately, or `{"n": 4, "parts": [...]}`."""

    def __init__(self, ground: int = None):
        self.ground = ground

    def parse(self, payload: str) -> PositionTuple:
        data = self.load_json(payload)
        ground = self.ground
        if isinstance(data, dict):
            if "parts" not in data:
                raise PayloadError("tuple object needs a \"parts\" field")
            ground = _require_int(data.get("n", ground), "n")
            data = data["parts"]
        if ground is None:
            raise PayloadError("ground set size n is missing")
        parts = _require_list(data, "tuple")
        if not parts:
            raise PayloadError("tuple must have at least one component")
        subsets = []
        for k, part in enumerate(parts, start=1):
            elements = [_require_int(x, f"element of component {k}") for x in _require_list(part, f"component {k}")]
            subsets.append(CardSubset(ground, tuple(elements)))
        return PositionTuple(tuple(subsets))


class WeightsPayloadParser(PayloadParser):
    """`[[1,-1],[1,-1],[1,-1]]`: s integer weights of a common length."""

    def parse(self, payload: str) -> List[Weight]:
        rows = _require_list(self.load_json(payload), "weights")
        if not rows:
            raise PayloadError("at least one weight is required")
        weights = []
        for k, row in enumerate(rows, start=1):
            entries = [_require_int(x, f"entry of weight {k}") for x in _require_list(row, f"weight {k}")]
            weights.append(Weight(tuple(entries)))
        lengths = {len(w) for w in weights}
        if len(lengths) != 1:
            raise ShapeError(f"weights have different lengths {sorted(lengths)}")
        return weights


class KirwanPointPayloadParser(PayloadParser):
    """Like WeightsPayloadParser but the entries are exact rationals."""

    def parse(self, payload: str) -> Tuple[Tuple[Fraction, ...], ...]:
        rows = _require_list(self.load_json(payload), "xi")
        if not rows:
            raise PayloadError("at least one part is required")
        parts = []
        for k, row in enumerate(rows, start=1):
            parts.append(tuple(parse_rational(x, f"entry of part {k}") for x in _require_list(row, f"part {k}")))
        lengths = {len(p) for p in parts}
        if len(lengths) != 1:
            raise ShapeError(f"parts have different lengths {sorted(lengths)}")
        logger.debug("parsed point with %d parts of length %d", len(parts), len(parts[0]))
        return tuple(parts)
