"""
Output renderers: tab-separated rows with a header, or one JSON document.
"""

import json
from typing import Any, Iterable, Sequence

from src.domain.models import TSV_FIELDS, Classification, SubgroupSearchResult, VerificationReport

REPORT_FIELDS = (
    "n",
    "k",
    "check",
    "mode",
    "involutions_checked",
    "expected_count",
    "failures",
    "verified",
    "elapsed_seconds",
)
SEARCH_FIELDS = (
    "n",
    "k",
    "target_order",
    "outcome",
    "subgroups_examined",
    "even_order_subgroups",
    "generators",
    "reason",
)
LINE_ORDER_FIELDS = ("k", "n", "base_order", "degree", "line_order", "parity", "base_order_mod_4")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def render_tsv(rows: Iterable[dict], fields: Sequence[str]) -> str:
    lines = ["\t".join(fields)]
    lines.extend("\t".join(_cell(row.get(name)) for name in fields) for row in rows)
    return "\n".join(lines)


def render_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)


def render_classifications(rows: Sequence[Classification], output_format: str) -> str:
    if output_format == "json":
        return render_json([row.to_dict() for row in rows])
    return render_tsv((row.row() for row in rows), TSV_FIELDS)


def render_report(report: VerificationReport, output_format: str) -> str:
    data = report.to_dict()
    if output_format == "json":
        return render_json(data)
    row = dict(data)
    row["mode"] = str(report.mode)
    row["failures"] = len(report.failures)
    table = render_tsv([row], REPORT_FIELDS)
    failure_lines = [f"# {f.permutation}\t{f.reason}" for f in report.failures]
    return "\n".join([table, *failure_lines])


def render_search(result: SubgroupSearchResult, output_format: str) -> str:
    data = result.to_dict()
    if output_format == "json":
        return render_json(data)
    return render_tsv([data], SEARCH_FIELDS)


def render_line_orders(rows: Sequence[dict], output_format: str, fields: Sequence[str] = LINE_ORDER_FIELDS) -> str:
    if output_format == "json":
        return render_json(list(rows))
    return render_tsv(rows, fields)
