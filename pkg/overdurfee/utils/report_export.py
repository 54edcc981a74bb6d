# overdurfee/utils/report_export.py
"""
Rendering of command results as text, JSON or CSV.

JSON output is deterministic: keys keep insertion order, counts are
emitted as decimal strings and nothing time-dependent is included. CSV
tables are built with pandas.
"""

import io
import json
import sys
from typing import Iterable, List, Optional, Sequence

import pandas as pd

from overdurfee.components.durfee import DurfeeDissection, dissection_to_json
from overdurfee.components.partition_core import (
    Part,
    format_partition,
    format_rows,
    rows_to_json,
)
from overdurfee.components.qseries import QSeries, RefinedQSeries
from overdurfee.components.verification import VerificationReport
from overdurfee.components.weighted_maps import (
    FiberReport,
    PhiTrace,
    Thm21Pair,
    fiber_report_to_json,
)
from overdurfee.utils.constants import OUTPUT_FORMATS
from overdurfee.utils.diagram import ascii_ferrers, row_shape
from overdurfee.utils.errors import PreconditionError
from overdurfee.utils.logging import get_logger

logger = get_logger("report_export")

# report fields holding counts; these become decimal strings in JSON
_COUNT_KEYS = (
    "expected", "actual", "enumeration", "at_most_squares_series", "dkk_count",
    "beta_set", "literal_sum", "fiber_count", "literal_weight",
)


def _check_format(fmt: str):
    if fmt not in OUTPUT_FORMATS:
        raise PreconditionError(f"format must be one of {OUTPUT_FORMATS}, got {fmt!r}")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def _decimal_strings(obj, key=None):
    """Replace counts by decimal strings; indices, limits and booleans stay JSON values."""
    if isinstance(obj, dict):
        return {name: _decimal_strings(value, name) for name, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_decimal_strings(value, key) for value in obj]
    if isinstance(obj, int) and not isinstance(obj, bool) and key in _COUNT_KEYS:
        return str(obj)
    return obj


def render_count(kind: str, params: dict, value: int, fmt: str = "text") -> str:
    """Render one exact count; text output is the bare decimal value."""
    _check_format(fmt)
    if fmt == "json":
        return _dumps({"kind": kind, "params": params, "count": str(value)})
    if fmt == "csv":
        return _csv(pd.DataFrame([{"kind": kind, **params, "count": str(value)}]))
    return f"{value}\n"


def render_series(series, fmt: str = "text") -> str:
    """
    Render a series.

    A QSeries becomes ``n<TAB>coefficient`` lines, a JSON array of decimal
    strings, or a two-column CSV. A RefinedQSeries lists its nonzero
    a^m q^n coefficients as ``n<TAB>m<TAB>coefficient``.
    """
    _check_format(fmt)
    if isinstance(series, RefinedQSeries):
        cells = sorted(series.coefficients().items(), key=lambda item: (item[0][1], item[0][0]))
        if fmt == "json":
            return _dumps([{"n": n, "m": m, "coefficient": str(c)} for (m, n), c in cells])
        if fmt == "csv":
            return _csv(pd.DataFrame(
                [{"n": n, "m": m, "coefficient": str(c)} for (m, n), c in cells],
                columns=["n", "m", "coefficient"],
            ))
        return "".join(f"{n}\t{m}\t{c}\n" for (m, n), c in cells)

    if not isinstance(series, QSeries):
        raise PreconditionError(f"cannot render {type(series).__name__} as a series")
    coefficients = series.coefficients()
    if fmt == "json":
        return _dumps([str(c) for c in coefficients])
    if fmt == "csv":
        return _csv(pd.DataFrame({"n": range(len(coefficients)), "coefficient": [str(c) for c in coefficients]}))
    return "".join(f"{n}\t{c}\n" for n, c in enumerate(coefficients))


def render_rows(rows: Sequence[Part], fmt: str = "text") -> str:
    """Render parts in the order given; JSON uses the ``{"v", "o"}`` objects."""
    _check_format(fmt)
    if fmt == "json":
        return _dumps(rows_to_json(rows))
    if fmt == "csv":
        return _csv(pd.DataFrame(
            [{"value": value, "overlined": overlined} for value, overlined in rows],
            columns=["value", "overlined"],
        ))
    return format_rows(rows) + "\n"


def render_pair(pair: Thm21Pair, fmt: str = "text") -> str:
    _check_format(fmt)
    if fmt == "json":
        return _dumps({"gamma": list(pair.gamma.parts), "delta": list(pair.delta.parts)})
    if fmt == "csv":
        return _csv(pd.DataFrame([{
            "gamma": format_partition(pair.gamma),
            "delta": format_partition(pair.delta),
        }]))
    return f"gamma={format_partition(pair.gamma)} delta={format_partition(pair.delta)}\n"


def render_phi_trace(trace: PhiTrace, fmt: str = "text") -> str:
    """Every intermediate object of one application of phi."""
    _check_format(fmt)
    record = {
        "source": rows_to_json(trace.source.parts),
        "k": trace.k,
        "num_squares": trace.num_squares,
        "first_size": trace.first_size,
        "identity": trace.identity,
        "shifted": rows_to_json(trace.shifted.parts) if trace.shifted else None,
        "shifted_sizes": list(trace.shifted_sizes),
        "above": rows_to_json(trace.above),
        "below": list(trace.below.parts),
        "below_conjugate": list(trace.below_conjugate.parts),
        "overlay": rows_to_json(trace.overlay),
        "result": rows_to_json(trace.result.parts),
    }
    if fmt == "json":
        return _dumps(record)
    flat = {
        "source": format_rows(trace.source.parts),
        "k": str(trace.k),
        "num_squares": str(trace.num_squares),
        "first_size": str(trace.first_size),
        "shifted": format_rows(trace.shifted.parts) if trace.shifted else "",
        "shifted_sizes": format_partition(trace.shifted_sizes),
        "above": format_rows(trace.above),
        "below": format_partition(trace.below),
        "below_conjugate": format_partition(trace.below_conjugate),
        "overlay": format_rows(trace.overlay),
        "result": format_rows(trace.result.parts),
    }
    if fmt == "csv":
        return _csv(pd.DataFrame([flat]))
    if trace.identity:
        return f"{flat['source']} has {trace.num_squares} squares, at most {trace.k - 1}: unchanged\n"
    width = max(len(name) for name in flat)
    return "".join(f"{name:<{width}}  {value}\n" for name, value in flat.items())


def _level_text(level) -> str:
    if level and isinstance(level[0], Part):
        return format_rows(level)
    return format_partition(level)


def render_dissection(dissection: DurfeeDissection, fmt: str = "text", diagram: bool = True) -> str:
    """Square sizes, the rows of each level and, in text mode, the ASCII diagram."""
    _check_format(fmt)
    if fmt == "json":
        return _dumps(dissection_to_json(dissection))
    if fmt == "csv":
        records = []
        for index, level in enumerate(dissection.level_rows, start=1):
            for row in level:
                value, overlined = row_shape(row)
                records.append({"level": index, "square_size": dissection.square_sizes[index - 1],
                                "value": value, "overlined": overlined})
        return _csv(pd.DataFrame(records, columns=["level", "square_size", "value", "overlined"]))

    lines = [f"sizes: ({','.join(str(size) for size in dissection.square_sizes)})"]
    for index, level in enumerate(dissection.level_rows, start=1):
        lines.append(f"level {index}: {_level_text(level)}")
    text = "\n".join(lines) + "\n"
    if diagram and dissection.square_sizes:
        text += "\n" + ascii_ferrers(dissection) + "\n"
    return text


def render_fiber_reports(reports: List[FiberReport], fmt: str = "text") -> str:
    """One FiberReport or a whole table of them."""
    _check_format(fmt)
    if fmt == "json":
        payload = [fiber_report_to_json(report) for report in reports]
        return _dumps(payload[0] if len(payload) == 1 else payload)
    frame = pd.DataFrame(
        [{
            "beta": format_rows(report.beta.parts),
            "fiber_count": report.fiber_count,
            "literal_weight": str(report.literal_weight),
            "agrees": report.agrees,
            "fiber": " ".join(format_rows(lam.parts) for lam in report.fiber),
        } for report in reports],
        columns=["beta", "fiber_count", "literal_weight", "agrees", "fiber"],
    )
    if fmt == "csv":
        return _csv(frame)
    if frame.empty:
        return "no targets\n"
    return frame.to_string(index=False) + "\n"


def _string_frame(records: Iterable[dict], missing: str) -> pd.DataFrame:
    # cells as strings so large counts never pass through float columns
    return pd.DataFrame([{name: missing if value is None else str(value) for name, value in record.items()}
                         for record in records])


def _table_text(records: Iterable[dict]) -> str:
    frame = _string_frame(records, "-")
    if frame.empty:
        return ""
    return frame.to_string(index=False) + "\n"


def render_verification(report: VerificationReport, fmt: str = "text") -> str:
    """
    Render a verification report.

    JSON leaves out the elapsed time so that repeated runs are
    byte-identical; text mode prints it in the header line.
    """
    _check_format(fmt)
    if fmt == "json":
        return _dumps(_decimal_strings({
            "identity": report.identity,
            "params": report.params,
            "passed": report.passed,
            "rows": report.rows,
            "details": report.details,
        }))
    if fmt == "csv":
        return _csv(_string_frame(report.rows, ""))

    params = " ".join(f"{name}={value}" for name, value in report.params.items() if value is not None)
    status = "PASS" if report.passed else "FAIL"
    text = f"{report.identity} {params}: {status} ({report.elapsed:.2f}s)\n"
    text += _table_text(report.rows)
    for name, detail in report.details.items():
        text += f"\n{name}:\n"
        if isinstance(detail, list):
            text += _table_text(detail) or "none\n"
        elif isinstance(detail, dict):
            text += "".join(f"  {key}: {value}\n" for key, value in detail.items())
        else:
            text += f"  {detail}\n"
    return text


def write_output(text: str, out: Optional[str] = None):
    """Write rendered output to ``out`` or, when it is None, to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info("wrote %d characters to %s", len(text), out)
