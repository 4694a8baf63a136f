import csv
import io
from typing import Iterable

from app.modules.simulation.application.dtos.simulation_dtos import SlashingReportDTO

CSV_COLUMNS = ("level", "strategy", "slashed_count", "bound")


def render_slashing_csv(reports: Iterable[SlashingReportDTO]) -> str:
    """Resumo (level, strategy, slashed_count, bound) com quebras de linha \\n"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerow(
            (report.level, report.strategy, report.slashed_count, report.analytic_lower_bound)
        )
    return buffer.getvalue()
