import logging
from dataclasses import dataclass
from typing import List

from core.errors import PayloadError
from core.payload_parser import PayloadParser
from linalg.fields import Field, field_from_tag
from linalg.matrix import Mat

logger = logging.getLogger(__name__)


@dataclass
class MatrixPayload:
    field: Field
    matrices: List[Mat]

    def single(self) -> Mat:
        if len(self.matrices) != 1:
            raise PayloadError(f"expected one matrix, file holds {len(self.matrices)}")
        return self.matrices[0]


class MatrixFileParser(PayloadParser):
    """
    {"field": "rational" | {"prime": p} | "sqrt5", "matrix": [[...], ...]}
    or the same with "matrices": [[[...]], ...] for a list (a flag tuple, say).
    Entries are integers or strings: "a/b", "a+b*s5".
    """

    def parse(self, payload: str) -> MatrixPayload:
        data = self.load_json(payload)
        if not isinstance(data, dict) or "field" not in data:
            raise PayloadError("matrix file must be an object with a \"field\" tag")
        F = field_from_tag(data["field"])
        if "matrix" in data:
            raw = [data["matrix"]]
        elif "matrices" in data:
            raw = data["matrices"]
            if not isinstance(raw, list):
                raise PayloadError("\"matrices\" must be an array")
        else:
            raise PayloadError("matrix file needs a \"matrix\" or \"matrices\" field")
        matrices = [self._read_matrix(F, m, k) for k, m in enumerate(raw, start=1)]
        logger.debug("read %d matrices over %r", len(matrices), F.tag)
        return MatrixPayload(F, matrices)

    @staticmethod
    def _read_matrix(F: Field, rows, k: int) -> Mat:
        if not isinstance(rows, list) or not rows or not all(isinstance(row, list) for row in rows):
            raise PayloadError(f"matrix {k} must be a nonempty array of rows")
        width = len(rows[0])
        for i, row in enumerate(rows, start=1):
            if len(row) != width:
                raise PayloadError(f"matrix {k}, row {i} has {len(row)} entries, expected {width}")
        return Mat(F, [[F.parse(x) for x in row] for row in rows], ncols=width)
