from app.modules.simulation.application.dtos.simulation_dtos import SlashingReportDTO
from app.modules.simulation.domain.entities.attestation_scenario_entity import SlashingReport


def to_slashing_report_dto(report: SlashingReport) -> SlashingReportDTO:
    """Converte um SlashingReport para SlashingReportDTO."""
    return SlashingReportDTO(
        level=report.level,
        strategy=report.strategy,
        slashed_count=report.slashed_count,
        analytic_lower_bound=report.analytic_lower_bound,
        quorums_formed=report.quorums_formed,
        shared_committees=report.shared_committees,
        seed=report.seed,
    )
