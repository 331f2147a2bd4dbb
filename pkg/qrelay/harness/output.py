import csv
import io
from typing import IO, List, Optional, Sequence, Union

from .models import MetricsRecord

CSV_COLUMNS = ["x", "mean_fidelity", "stderr_fidelity", "delivery_rate", "n_delivered", "adversary_mean_fidelity"]


def _fixed(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6f}"


def _row(record: MetricsRecord) -> List[str]:
    return [
        _fixed(record.x),
        _fixed(record.mean_fidelity),
        _fixed(record.stderr_fidelity),
        _fixed(record.delivery_rate),
        str(record.n_delivered),
        _fixed(record.adversary_mean_fidelity),
    ]


def _write(records: Sequence[MetricsRecord], fh: IO[str]) -> None:
    if not records:
        raise ValueError("no records to write")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(_row(record))


def format_csv(records: Sequence[MetricsRecord]) -> str:
    buf = io.StringIO()
    _write(records, buf)
    return buf.getvalue()


def emit_csv(records: Sequence[MetricsRecord], destination: Union[str, IO[str]]) -> None:
    """Write records in sweep order to a path or an open text stream."""
    if isinstance(destination, str):
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            _write(records, fh)
    else:
        _write(records, destination)
