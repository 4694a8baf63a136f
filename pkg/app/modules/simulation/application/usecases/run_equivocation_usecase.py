import logging
from typing import List

from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.simulation.application.dtos.simulation_dtos import (
    SimulationQueryDTO,
    SlashingReportDTO,
)
from app.modules.simulation.application.mappers.slashing_report_mapper import (
    to_slashing_report_dto,
)
from app.modules.simulation.domain.services.equivocation import run_equivocation, sweep_levels
from app.shared.infrastructure.random.seed_streams import make_rng

logger = logging.getLogger(__name__)


class RunEquivocationUseCase:
    """Caso de uso para simular equivocações em um nível ou em todos."""

    def execute(self, system: MultilevelSystem, query: SimulationQueryDTO) -> List[SlashingReportDTO]:
        """
        Raises:
            UnknownLevelException: nível inexistente
            WitnessUnavailableException / BudgetExceededException: par mínimo indisponível
        """
        rng = make_rng(query.seed)
        reports = []
        for _ in range(query.repeats):
            if query.level is None:
                reports.extend(sweep_levels(system, query.strategies, rng, query.seed))
            else:
                reports.extend(
                    run_equivocation(system, query.level, strategy, rng, query.seed)
                    for strategy in query.strategies
                )

        logger.info("Simulated %d scenarios", len(reports))
        return [to_slashing_report_dto(report) for report in reports]
