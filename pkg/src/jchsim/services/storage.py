"""
Output files of an experiment run.

Every CSV starts with a ``# config:`` comment line holding the resolved
config as sorted JSON, then a header row. Floats use 12 significant digits
in scientific notation, so identical configs give byte-identical files.
Files are written to a temp file and renamed into place.
"""

import csv
import io
import json
import os
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import numpy as np

DEFAULT_OUT_DIR = Path("jch-output")


def format_value(value: Any) -> str:
    """Render one CSV cell."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.11e}"
    return str(value)


class OutputStorage:
    """Writes CSV tables and plot scripts into one output directory."""

    def __init__(self, out_dir: Optional[Path] = None, config: Optional[dict[str, Any]] = None):
        """Initialize storage.

        Args:
            out_dir: Target directory (default: ./jch-output)
            config: Resolved config recorded in every CSV
        """
        self.out_dir = Path(out_dir) if out_dir is not None else DEFAULT_OUT_DIR
        self.config = config or {}

    def initialize(self) -> None:
        """Create the output directory if it doesn't exist."""
        self.out_dir.mkdir(parents=True, exist_ok=True)

    def _write_atomic(self, name: str, text: str) -> Path:
        self.initialize()
        target = self.out_dir / name
        temp_file = target.with_suffix(target.suffix + ".tmp")
        with open(temp_file, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        temp_file.replace(target)
        return target

    def write_csv(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]
    ) -> Path:
        """
        Write a table.

        Args:
            name: File name inside the output directory
            header: Column names
            rows: Row values, formatted with ``format_value``

        Returns:
            Path of the written file

        Raises:
            OSError: If the directory or file cannot be written
        """
        buffer = io.StringIO()
        buffer.write(f"# config: {json.dumps(self.config, sort_keys=True)}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
        return self._write_atomic(name, buffer.getvalue())

    def write_grid(self, name: str, times: np.ndarray, grid: np.ndarray) -> Path:
        """Write a (T, N) array as rows of time samples and columns of cavities."""
        header = ["time", *(f"Q{q}" for q in range(1, grid.shape[1] + 1))]
        return self.write_csv(name, header, ([t, *row] for t, row in zip(times, grid)))

    def write_text(self, name: str, text: str) -> Path:
        """Write a plain text file (plot scripts)."""
        return self._write_atomic(name, text)
