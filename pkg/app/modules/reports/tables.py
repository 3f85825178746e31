# -*- coding: utf-8 -*-
import io
import csv
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Table:
    """Rows of plain values under named columns, the shape CSV output and plots consume."""
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[Any, ...], ...]
    title: str = ""

    @classmethod
    def of(cls, rows: Sequence[Mapping[str, Any]], columns: Optional[Sequence[str]] = None,
           title: str = "") -> "Table":
        if columns is None:
            columns = list(rows[0]) if rows else []
        return cls(tuple(columns), tuple(tuple(row.get(column) for column in columns) for row in rows), title)

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> list:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def records(self) -> list:
        return [dict(zip(self.columns, row)) for row in self.rows]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(["" if value is None else value for value in row])
        return buffer.getvalue()
