"""
Result Writer - CSV ve metin çıktıları
Aynı girdi her zaman bayt bayt aynı dosyayı üretir.
"""
import csv
import logging
import os
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from core.forces import ForceExpr
from core.linsolve import SolutionGrid
from modules.oracle import ConvergenceReport, PublishedColumn, compare_with_table

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "KASKAD_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "results"
SOLUTION_HEADER = ("t", "y_numeric", "y_exact", "abs_error")
CONVERGENCE_HEADER = ("n", "max_abs_error", "observed_order", "published_value", "ratio")


def format_value(value: Optional[float]) -> str:
    """17 anlamlı basamak; değer yoksa boş hücre"""
    if value is None:
        return ""
    return f"{float(value):.17g}"


class ResultWriter:
    def __init__(self, output_dir: Optional[str] = None):
        self.output_dir = Path(output_dir or os.getenv(OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR))

    def resolve(self, csv_path: str) -> Path:
        """Göreli yollar çıktı klasörüne bağlanır"""
        path = Path(csv_path)
        if not path.is_absolute():
            path = self.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def _write_rows(self, path: Path, header: Sequence[str], rows) -> Path:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        logger.info(f"💾 Yazıldı: {path}")
        return path

    def write_solution(
        self, csv_path: str, grid: SolutionGrid, reference_values: Optional[np.ndarray] = None
    ) -> Path:
        path = self.resolve(csv_path)
        rows = []
        for i, (t, y) in enumerate(zip(grid.t, grid.y)):
            if reference_values is None:
                rows.append((format_value(t), format_value(y), "", ""))
            else:
                exact = reference_values[i]
                rows.append((format_value(t), format_value(y), format_value(exact), format_value(abs(y - exact))))
        return self._write_rows(path, SOLUTION_HEADER, rows)

    def write_convergence(
        self, csv_path: str, report: ConvergenceReport, column: Optional[PublishedColumn] = None
    ) -> Path:
        path = self.resolve(csv_path)
        ratios = compare_with_table(report, column) if column else {}
        rows = []
        for (n, error), order in zip(report.entries, report.orders + [None]):
            published = column.values.get(n) if column else None
            rows.append((n, format_value(error), format_value(order), format_value(published), format_value(ratios.get(n))))
        return self._write_rows(path, CONVERGENCE_HEADER, rows)

    def write_expression(self, csv_path: str, expr: ForceExpr) -> Path:
        """Kaskaddan derlenen g(t): <csv>.g.txt"""
        path = self.resolve(csv_path)
        path = path.with_name(path.name + ".g.txt")
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(expr.to_text() + "\n")
        logger.info(f"💾 g(t) yazıldı: {path}")
        return path


def format_convergence_table(report: ConvergenceReport, column: Optional[PublishedColumn] = None) -> str:
    """Konsol için hizalı tablo"""
    ratios = compare_with_table(report, column) if column else {}
    lines = [f"mode={report.mode.value}  params={report.params}  referans={report.reference_kind}"]
    header = f"{'n':>6}  {'max hata':>12}  {'mertebe':>8}"
    if column:
        header += f"  {'yayın':>10}  {'oran':>8}"
    lines.append(header)
    lines.append("-" * len(header))
    for (n, error), order in zip(report.entries, report.orders + [None]):
        line = f"{n:>6}  {error:>12.3e}  {(f'{order:.2f}' if order is not None else '-'):>8}"
        if column:
            published = column.values.get(n)
            ratio = ratios.get(n)
            line += f"  {(f'{published:.2e}' if published is not None else '-'):>10}"
            line += f"  {(f'{ratio:.2f}' if ratio is not None else '-'):>8}"
            if n in column.excluded:
                line += "  (ön-asimptotik)"
        lines.append(line)
    return "\n".join(lines)
