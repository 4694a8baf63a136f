from typing import Optional

from app.modules.quorum.application.dtos.intersection_system_dtos import (
    IntersectionSystemDTO,
    QuorumMetricsDTO,
    SlashabilityDTO,
)
from app.modules.quorum.domain.entities.intersection_system_entity import IntersectionSystem
from app.modules.quorum.domain.services import metrics
from app.shared.domain.value_objects.rational_vo import render_decimal, render_rational


class IntersectionSystemMapper:

    @staticmethod
    def to_dto(system: IntersectionSystem) -> IntersectionSystemDTO:
        return IntersectionSystemDTO(**system.to_dict())

    @staticmethod
    def to_entity(dto: IntersectionSystemDTO) -> IntersectionSystem:
        return IntersectionSystem.create(dto.ground, dto.quorums)

    @staticmethod
    def to_slashability_dto(result: metrics.SlashabilityResult) -> SlashabilityDTO:
        return SlashabilityDTO(
            value=result.value,
            witness=result.witness,
            exact=result.exact,
            pairs_examined=result.pairs_examined,
        )

    @classmethod
    def to_metrics_dto(
        cls,
        system: IntersectionSystem,
        slashability: Optional[metrics.SlashabilityResult] = None,
        intersecting: Optional[bool] = None,
    ) -> QuorumMetricsDTO:
        load = metrics.load(system)
        return QuorumMetricsDTO(
            quorums=system.size,
            ground=len(system.ground),
            msg=metrics.msg_complexity(system),
            max_degree=metrics.max_degree(system),
            load=render_rational(load),
            load_decimal=render_decimal(load),
            intersecting=intersecting,
            slashability=cls.to_slashability_dto(slashability) if slashability else None,
        )
