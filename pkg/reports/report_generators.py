# report_generators.py
import csv
import io
import json

from core.base_table_generator import BaseTableGenerator
from core.errors import DomainError
from core.report_generator import Report, ReportGenerator


class JsonReportGenerator(BaseTableGenerator, ReportGenerator):
    def generate(self, report: Report) -> str:
        # sort_keys: одинаковый ввод -> побайтно одинаковый вывод
        return json.dumps(report.payload, sort_keys=True, indent=2, ensure_ascii=False)


class CsvReportGenerator(BaseTableGenerator, ReportGenerator):
    def generate(self, report: Report) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow([self.format_value(v) for v in row])
        return buffer.getvalue().rstrip("\n")


class TextReportGenerator(BaseTableGenerator, ReportGenerator):
    def generate(self, report: Report) -> str:
        body = list(self.cells(report))
        marks = report.highlight or [False] * len(body)
        widths = [len(c) for c in report.columns]
        for cells in body:
            widths = [max(w, len(c)) for w, c in zip(widths, cells)]
        lines = [report.title, ""]
        lines.append("  " + "  ".join(c.rjust(w) for c, w in zip(report.columns, widths)))
        lines.append("  " + "  ".join("-" * w for w in widths))
        for cells, bold in zip(body, marks):
            # '*' отмечает строки, которые в таблицах выделены жирным
            lines.append(("* " if bold else "  ") + "  ".join(c.rjust(w) for c, w in zip(cells, widths)))
        return "\n".join(lines)


class TexReportGenerator(BaseTableGenerator, ReportGenerator):
    def generate(self, report: Report) -> str:
        body = list(self.cells(report))
        marks = report.highlight or [False] * len(body)
        column_spec = "r" + "c" * max(len(report.columns) - 2, 0) + ("r" if len(report.columns) > 1 else "")
        lines = [f"% {report.title}", "\\begin{tabular}{" + column_spec + "}", "\\toprule"]
        lines.append(" & ".join(self.escape_tex(c) for c in report.columns) + " \\\\")
        lines.append("\\midrule")
        for cells, bold in zip(body, marks):
            escaped = [self.escape_tex(c) for c in cells]
            if bold:
                escaped = [f"\\bf {c}" if c else c for c in escaped]
            lines.append(" & ".join(escaped) + " \\\\")
        lines.append("\\bottomrule")
        lines.append("\\end{tabular}")
        return "\n".join(lines)


GENERATORS = {
    "json": JsonReportGenerator,
    "csv": CsvReportGenerator,
    "text": TextReportGenerator,
    "tex": TexReportGenerator,
}


def generator_for(output_format: str) -> ReportGenerator:
    try:
        return GENERATORS[output_format]()
    except KeyError:
        raise DomainError(f"unknown output format {output_format!r}") from None
