"""Plain-text rendering of a `MetricReport`: methods as rows, categories as columns."""
from schemas.evaluation import MetricReport

MISSING = "-"


def _rate(rate: float | None) -> str:
    return MISSING if rate is None else f"{rate:.2f}"


def _align(rows: list[list[str]]) -> str:
    """Left-align the first column, right-align the rates."""
    widths = [max(len(row[column]) for row in rows) for column in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [
            value.ljust(width) if column == 0 else value.rjust(width)
            for column, (value, width) in enumerate(zip(row, widths, strict=True))
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def helpfulness_table(report: MetricReport) -> str:
    rows = [["Method", *report.categories]]
    for method in report.methods:
        cells = [report.cell(method, category) for category in report.categories]
        rows.append([method, *(_rate(cell.helpfulness_rate if cell else None) for cell in cells)])
    return _align(rows)


def ordering_table(report: MetricReport) -> str:
    """Top-n and average correct rates per method; empty without gold orderings."""
    cutoffs = sorted({n for rates in report.top_n_rate.values() for n in rates})
    if not cutoffs and not any(rate is not None for rate in report.average_correct_rate.values()):
        return ""
    rows = [["Method", *(f"top-{n}" for n in cutoffs), "correct"]]
    for method in report.methods:
        rates = report.top_n_rate.get(method, {})
        correct = report.average_correct_rate.get(method)
        rows.append([method, *(_rate(rates.get(n)) for n in cutoffs), _rate(correct)])
    return _align(rows)


def render_report(report: MetricReport) -> str:
    tables = [helpfulness_table(report), ordering_table(report)]
    return "\n".join(table for table in tables if table)
