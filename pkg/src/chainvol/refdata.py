"""Reference volume tables: schema, parsing, and the bundled dataset.

The bundled CSV carries five tables of SnapPea-computed volumes, with the
digit strings kept verbatim so every comparison can be audited against
the printed sources:

  T1  minimally twisted n-chain complements, n in [5, 60], next to the
      cover volumes (n-1) v8 (about ten significant digits);
  T2  fillings (1, m), m in [-7, -1], of the minimally twisted family,
      n in [11, 59] (three decimals);
  T3  fillings (1, m), m in [1, 7], of the minimally twisted family,
      odd n in [11, 59];
  T4  fillings (1, m), m in [-7, 0], of the half-twisted family,
      even n in [12, 58];
  T5  small chains, n in [5, 10]: the residual fillings next to the
      minimally twisted volume.

Schema: header ``table_id,base,n,m,volume,cover_volume``; ``base`` is
``hatW``/``barW``/``none``; ``m`` is empty exactly for T1 rows; for
T1..T4 ``cover_volume`` is the recorded (n-1) v8, for T5 it is the
recorded minimally twisted chain volume.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from functools import lru_cache
from importlib import resources
from pathlib import Path

__all__ = [
    "EXPECTED_HEADER",
    "ReferenceFormatError",
    "ReferenceRow",
    "bundled_reference_text",
    "load_bundled_reference",
    "load_reference_csv",
    "parse_reference_rows",
]

EXPECTED_HEADER = ["table_id", "base", "n", "m", "volume", "cover_volume"]

_TABLE_IDS = {"T1", "T2", "T3", "T4", "T5"}
_BASES = {"hatW", "barW", "none"}


class ReferenceFormatError(ValueError):
    """Malformed reference data; carries the 1-based CSV line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ReferenceRow:
    """One recorded volume, digits verbatim."""

    table_id: str
    base: str
    n: int
    m: int | None
    volume: str
    cover_volume: str
    line: int  # CSV line the row came from, for error reporting

    @property
    def volume_decimal(self) -> Decimal:
        return Decimal(self.volume)

    @property
    def cover_decimal(self) -> Decimal:
        return Decimal(self.cover_volume)


def _parse_decimal_field(text: str, line: int, field: str) -> str:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise ReferenceFormatError(line, f"{field} {text!r} is not a decimal") from None
    if not value.is_finite():
        raise ReferenceFormatError(line, f"{field} {text!r} is not finite")
    return text


def parse_reference_rows(text: str) -> list[ReferenceRow]:
    """Parse reference CSV text; raise :class:`ReferenceFormatError` on bad rows."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ReferenceFormatError(1, "empty file, header row missing") from None
    if header != EXPECTED_HEADER:
        raise ReferenceFormatError(1, f"bad header {header!r}, expected {EXPECTED_HEADER!r}")

    rows: list[ReferenceRow] = []
    for line, record in enumerate(reader, start=2):
        if not record:
            continue
        if len(record) != len(EXPECTED_HEADER):
            raise ReferenceFormatError(
                line, f"expected {len(EXPECTED_HEADER)} fields, got {len(record)}"
            )
        table_id, base, n_text, m_text, volume, cover = record
        if table_id not in _TABLE_IDS:
            raise ReferenceFormatError(line, f"unknown table id {table_id!r}")
        if base not in _BASES:
            raise ReferenceFormatError(line, f"unknown base {base!r}")
        try:
            n = int(n_text)
        except ValueError:
            raise ReferenceFormatError(line, f"n {n_text!r} is not an integer") from None
        if m_text == "":
            if table_id != "T1":
                raise ReferenceFormatError(line, f"missing m in table {table_id}")
            m: int | None = None
        else:
            try:
                m = int(m_text)
            except ValueError:
                raise ReferenceFormatError(line, f"m {m_text!r} is not an integer") from None
        if (base == "none") != (table_id == "T1"):
            raise ReferenceFormatError(line, f"base {base!r} inconsistent with {table_id}")
        rows.append(
            ReferenceRow(
                table_id=table_id,
                base=base,
                n=n,
                m=m,
                volume=_parse_decimal_field(volume, line, "volume"),
                cover_volume=_parse_decimal_field(cover, line, "cover_volume"),
                line=line,
            )
        )
    if not rows:
        raise ReferenceFormatError(2, "no data rows")
    return rows


def load_reference_csv(path: str | Path) -> list[ReferenceRow]:
    return parse_reference_rows(Path(path).read_text(encoding="utf-8"))


def bundled_reference_text() -> str:
    return resources.files("chainvol").joinpath("data/tables.csv").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def load_bundled_reference() -> tuple[ReferenceRow, ...]:
    return tuple(parse_reference_rows(bundled_reference_text()))
