from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List


# Табличное представление результата команды; payload уходит в JSON как есть
@dataclass
class Report:
    title: str
    columns: List[str]
    rows: List[list]
    payload: object
    highlight: List[bool] = field(default_factory=list)  # строки с edim == 0 выделяются
    group_first_column: bool = False  # как в таблицах приложения: повтор первой колонки не печатается


class ReportGenerator(ABC):
    @abstractmethod
    def generate(self, report: Report) -> str:
        pass
