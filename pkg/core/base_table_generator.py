from fractions import Fraction

from core.report_generator import Report

TEX_ESCAPES = {
    "\\": "\\textbackslash{}",
    "&": "\\&",
    "%": "\\%",
    "$": "\\$",
    "#": "\\#",
    "_": "\\_",
    "{": "\\{",
    "}": "\\}",
    "∅": "$\\emptyset$",
}


class BaseTableGenerator:
    @staticmethod
    def format_subset(elements) -> str:
        """
        Форматирует подмножество как в таблицах: [1, 4] -> {1, 4}.
        Пустое подмножество печатается как ∅.
        """
        elements = list(elements)
        if not elements:
            return "∅"
        return "{" + ", ".join(str(x) for x in elements) + "}"

    @staticmethod
    def format_value(value) -> str:
        """
        Форматирует ячейку:
          - списки целых -> подмножество в фигурных скобках
          - списки списков -> кортеж подмножеств
          - Fraction -> a/b
          - bool -> true/false
        """
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, Fraction):
            return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        if isinstance(value, (list, tuple)):
            if value and all(isinstance(x, (list, tuple)) for x in value):
                return "(" + ", ".join(BaseTableGenerator.format_subset(x) for x in value) + ")"
            return BaseTableGenerator.format_subset(value)
        if value is None:
            return "-"
        return str(value)

    @staticmethod
    def escape_tex(text: str) -> str:
        return "".join(TEX_ESCAPES.get(ch, ch) for ch in text)

    @staticmethod
    def cells(report: Report):
        """Строки отчёта как текст; повторы первого столбца стираются, если отчёт это просит."""
        previous = None
        for row in report.rows:
            cells = [BaseTableGenerator.format_value(v) for v in row]
            if report.group_first_column and cells:
                if cells[0] == previous:
                    cells[0] = ""
                else:
                    previous = cells[0]
            yield cells
