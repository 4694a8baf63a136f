import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from app.core.config import settings
from app.modules.availability.application.dtos.availability_dtos import (
    AvailabilityQueryDTO,
    AvailabilityReportDTO,
)
from app.modules.availability.application.mappers.availability_mapper import AvailabilityMapper
from app.modules.availability.domain.exceptions.availability_exceptions import (
    InvalidAvailabilityParamsException,
)
from app.modules.availability.domain.services import analytic
from app.modules.availability.domain.services.monte_carlo import (
    LivenessModel,
    estimate_successes,
    wilson_interval,
)
from app.modules.availability.domain.value_objects.availability_params_vo import AvailabilityParams
from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.services.slashing import committee_threshold
from app.shared.domain.value_objects.rational_vo import parse_rational

logger = logging.getLogger(__name__)


class AvailabilityMonteCarloUseCase:
    """
    Caso de uso para estimar A_p(P_{r_j}(Q_j)) por Monte Carlo ao lado da cota
    1 - (n/c_min)·exp(-a1(r)·c_min).
    """

    def __init__(self, block_size: Optional[int] = None, workers: Optional[int] = None):
        self._block_size = block_size
        self._workers = workers

    def execute(self, system: MultilevelSystem, query: AvailabilityQueryDTO) -> List[AvailabilityReportDTO]:
        """
        Uma estimativa por valor de p (o p da configuração quando `query.ps`
        está vazio). Todos os p compartilham os mesmos números aleatórios.

        Raises:
            InvalidAvailabilityParamsException: p fora de (r_j, 1]
            UnknownLevelException: nível inexistente
        """
        ps = [parse_rational(p, "p") for p in query.ps] or [system.config.p]
        return self.sweep(system, query.level, ps, query.trials, query.seed, query.mode)

    def sweep(
        self,
        system: MultilevelSystem,
        j: int,
        ps: Sequence[Fraction],
        trials: int,
        seed: int,
        mode: str = "order_statistic",
    ) -> List[AvailabilityReportDTO]:
        if trials < 1:
            raise InvalidAvailabilityParamsException(f"trials precisa ser >= 1 ({trials})")

        r = system.level_spec(j).r
        sizes = system.assignment.sizes
        params = [
            AvailabilityParams(p=Fraction(p), r=r, n=system.config.n, c_min=min(sizes))
            for p in ps
        ]

        model = LivenessModel(
            incidence=system.level(j).incidence_matrix,
            sizes=np.asarray(sizes, dtype=np.int64),
            thresholds=np.asarray([committee_threshold(c, r) for c in sizes], dtype=np.int64),
        )
        successes = estimate_successes(
            model,
            [float(item.p) for item in params],
            trials,
            seed,
            mode=mode,
            block_size=self._block_size,
            workers=self._workers,
        )

        reports = []
        for item, count in zip(params, successes):
            reports.append(
                AvailabilityMapper.to_report_dto(
                    level=j,
                    n=item.n,
                    p=item.p,
                    r=r,
                    sizes=sizes,
                    trials=trials,
                    seed=seed,
                    mode=mode,
                    confidence=settings.CONFIDENCE_LEVEL,
                    lower_bound=analytic.availability_lower_bound(item.n, item.c_min, r, item.p),
                    product_form=analytic.product_form_availability(sizes, r, item.p),
                    failure=analytic.committee_failure(item.c_min, r, item.p),
                    successes=count,
                    interval=wilson_interval(count, trials),
                )
            )
            logger.info(
                "Availability level %d, p=%s: %d/%d trials live", j, item.p, count, trials
            )
        return reports
