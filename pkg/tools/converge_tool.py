"""
Converge Tool - n listesi boyunca hata ve gözlenen mertebe
"""
import logging

from modules.oracle import convergence_study, published_column
from storage.config_loader import load_config
from storage.result_writer import ResultWriter, format_convergence_table

logger = logging.getLogger(__name__)


def run_converge(config: str) -> str:
    run = load_config(config, "converge")
    method = run.method
    column = published_column(run.output.table) if run.output.table else None

    report = convergence_study(
        run.problem, method.params, method.mode, method.n_list, method.workers, taylor_shift=method.taylor_shift
    )
    path = ResultWriter().write_convergence(run.output.csv_path, report, column)
    return f"{format_convergence_table(report, column)}\n💾 {path}"
