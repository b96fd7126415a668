# payload_parser.py
import json
from abc import ABC, abstractmethod

from core.errors import PayloadError


class PayloadParser(ABC):
    @abstractmethod
    def parse(self, payload: str):
        pass

    @staticmethod
    def load_json(payload: str):
        """json.loads; позиция ошибки сохраняется в PayloadError."""
        try:
            return json.loads(payload)
        except json.JSONDecodeError as e:
            raise PayloadError(f"malformed JSON payload: {e.msg}", e.lineno, e.colno, e.pos) from e
