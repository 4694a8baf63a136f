import logging
from typing import Optional

from app.modules.multilevel.application.dtos.multilevel_dtos import (
    LevelMetricsDTO,
    SystemMetricsDTO,
)
from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.services import slashing
from app.modules.quorum.application.mappers.intersection_system_mapper import (
    IntersectionSystemMapper,
)
from app.modules.quorum.domain.exceptions.quorum_exceptions import BudgetExceededException
from app.modules.quorum.domain.services import metrics
from app.shared.domain.value_objects.rational_vo import render_decimal, render_rational
from app.shared.infrastructure.random.seed_streams import make_rng

logger = logging.getLogger(__name__)


class ComputeMetricsUseCase:
    """
    Caso de uso para calcular, por nível, as métricas de comitês (msg, carga,
    slashability por fórmula e medida) e de processos (slashability, cota
    superior, razão de otimalidade).
    """

    def __init__(self, pair_budget: Optional[int] = None, sampled_pairs: Optional[int] = None):
        self._pair_budget = pair_budget
        self._sampled_pairs = sampled_pairs

    def execute(self, system: MultilevelSystem, seed: int = 0) -> SystemMetricsDTO:
        rng = make_rng(seed)
        config = system.config
        sizes = system.assignment.sizes

        levels = [self._level_metrics(system, j, rng) for j in range(1, system.num_levels + 1)]
        logger.info("Metrics computed for %d levels", len(levels))

        return SystemMetricsDTO(
            k=config.k,
            q=config.q,
            n=config.n,
            p=render_rational(config.p),
            variant=system.variant,
            seed=system.seed,
            committees=len(sizes),
            committee_size_min=min(sizes),
            committee_size_max=max(sizes),
            levels=levels,
        )

    def _level_metrics(self, system: MultilevelSystem, j: int, rng) -> LevelMetricsDTO:
        config = system.config
        spec = system.level_spec(j)
        committees = system.level(j)
        k, q, d = config.k, config.q, spec.d

        load = metrics.load(committees)
        measured = metrics.slashability(
            committees, rng, pair_budget=self._pair_budget, pairs=self._sampled_pairs
        )

        try:
            first, second = slashing.minimal_committee_pair(system, j)
            witness_pair = len(set(first) & set(second))
        except BudgetExceededException:
            witness_pair = None

        applies = slashing.has_integral_thresholds(system, j)
        process = slashing.process_slashability(system, j)
        in_n = slashing.process_slashability_in_n(k, q, d, spec.r, config.n)
        ratio = slashing.optimality_ratio(k, q, d)

        upper = achieved = None
        if system.assignment.is_uniform():
            upper = slashing.level_upper_bound(system, j)
            if applies:
                achieved = process / upper

        exponent = slashing.msg_exponent(k, d)
        msg = metrics.msg_complexity(committees)
        mu_ref, lam_ref = slashing.projective_reference(k, q, d)

        return LevelMetricsDTO(
            level=j,
            d=d,
            r=render_rational(spec.r),
            quorums=committees.size,
            msg=msg,
            max_degree=metrics.max_degree(committees),
            load=render_rational(load),
            load_decimal=render_decimal(load),
            slash_formula=slashing.slashability_formula(k, q, d),
            slash_asymptotic=slashing.asymptotic_slashability(k, q, d),
            slash_measured=IntersectionSystemMapper.to_slashability_dto(measured),
            slash_witness_pair=witness_pair,
            msg_exponent=render_rational(exponent),
            msg_exponent_decimal=render_decimal(exponent),
            process_slashability=process,
            process_formula_applies=applies,
            process_slashability_in_n=render_rational(in_n),
            process_slashability_in_n_decimal=render_decimal(in_n),
            generalized_bound=slashing.generalized_slashability_bound(system, j),
            upper_bound=render_rational(upper) if upper is not None else None,
            upper_bound_decimal=render_decimal(upper) if upper is not None else None,
            achieved_over_bound=render_rational(achieved) if achieved is not None else None,
            optimality_ratio=render_rational(ratio),
            optimality_ratio_decimal=render_decimal(ratio),
            in_optimality_class=slashing.in_optimality_class(system, j, mu_ref, lam_ref),
        )
