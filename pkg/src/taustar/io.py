"""Reading paired samples from delimited text files.

Accepts two-column comma- or tab-separated text; the delimiter is
sniffed from the first data line.  A first line whose fields do not all
parse as numbers is treated as a header and skipped.  Blank lines are
ignored anywhere; CRLF endings are fine.  Anything else malformed --
wrong column count, unparseable or non-finite numbers past the header
-- raises :class:`~taustar.errors.IngestError` naming the offending
line.
"""

from __future__ import annotations

import math

from .errors import IngestError
from .sample import PairedSample

__all__ = ["read_xy_file"]


def _parse_fields(fields: list[str]) -> tuple[float, ...] | None:
    """Fields as floats, or None if any of them does not parse."""
    try:
        return tuple(float(f) for f in fields)
    except ValueError:
        return None


def read_xy_file(path: str, ranks: bool = False) -> PairedSample:
    """Load a paired sample; with ``ranks`` substitute midranks per axis."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as e:
        raise IngestError(f"cannot read {path}: {e.strerror or e}") from e

    xs: list[float] = []
    ys: list[float] = []
    delimiter = None
    first_data_line = True
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if delimiter is None:
            delimiter = "\t" if "\t" in line else ","
        fields = [f.strip() for f in line.split(delimiter)]
        if len(fields) != 2:
            raise IngestError(
                f"expected two {'tab' if delimiter == chr(9) else 'comma'}-separated "
                f"columns, found {len(fields)}",
                line=lineno,
            )
        values = _parse_fields(fields)
        if first_data_line:
            first_data_line = False
            if values is None:
                continue  # header row
        elif values is None:
            raise IngestError(f"could not parse {fields!r} as numbers", line=lineno)
        x, y = values
        if not (math.isfinite(x) and math.isfinite(y)):
            raise IngestError(f"non-finite value in {fields!r}", line=lineno)
        xs.append(x)
        ys.append(y)

    if not xs:
        raise IngestError(f"{path} contains no data rows")
    sample = PairedSample(xs, ys)
    return sample.with_midranks() if ranks else sample
