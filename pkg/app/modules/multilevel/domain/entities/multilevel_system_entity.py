from dataclasses import dataclass
from typing import Literal, Optional, Tuple

import numpy as np

from app.modules.geometry.domain.services.counting import points_in_subspace
from app.modules.multilevel.domain.entities.committee_assignment_entity import CommitteeAssignment
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import (
    InvalidConfigException,
    UnknownLevelException,
)
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import (
    LevelSpec,
    MultilevelConfig,
)
from app.modules.quorum.domain.entities.intersection_system_entity import IntersectionSystem

Variant = Literal["full", "sampled"]

_NESTING_BLOCK = 256


@dataclass(frozen=True, eq=False)
class MultilevelSystem:
    """
    Sistema de interseção multinível.

    committee_systems[j-1] é Q_j (ou Q'_j na variante amostrada) sobre os
    índices de comitê 0..m-1. Os sistemas de processos P_{r_j}(Q_j) não são
    materializados: ficam implícitos em (Q_j, r_j).
    """

    config: MultilevelConfig
    assignment: CommitteeAssignment
    committee_systems: Tuple[IntersectionSystem, ...]
    variant: Variant = "full"
    seed: Optional[int] = None

    def __post_init__(self):
        if len(self.committee_systems) != self.config.num_levels:
            raise InvalidConfigException(
                f"{len(self.committee_systems)} sistemas para {self.config.num_levels} níveis"
            )
        if self.assignment.num_committees != self.config.num_committees:
            raise InvalidConfigException("Número de comitês difere de |PG(k, q)|")
        if self.variant == "sampled" and self.seed is None:
            raise InvalidConfigException("Variante amostrada exige semente")

    @property
    def num_levels(self) -> int:
        return self.config.num_levels

    def level(self, j: int) -> IntersectionSystem:
        """Q_j, 1-indexado"""
        self._check_level(j)
        return self.committee_systems[j - 1]

    def level_spec(self, j: int) -> LevelSpec:
        self._check_level(j)
        return self.config.level(j)

    def level_sizes(self) -> Tuple[int, ...]:
        return tuple(system.size for system in self.committee_systems)

    def _check_level(self, j: int) -> None:
        if not 1 <= j <= self.num_levels:
            raise UnknownLevelException(f"Nível {j} fora de [1, {self.num_levels}]")

    # ---------- structural checks ----------

    def verify_quorum_sizes(self) -> bool:
        """Todo quórum do nível j tem (q^{d_j+1}-1)/(q-1) comitês"""
        for system, spec in zip(self.committee_systems, self.config.levels):
            expected = points_in_subspace(self.config.q, spec.d)
            if np.any(system.quorum_sizes != expected):
                return False
        return True

    def verify_nesting(self) -> bool:
        """Para i < j, todo quórum de Q_j contém algum quórum de Q_i"""
        for i in range(self.num_levels):
            lower = self.committee_systems[i].incidence_matrix.astype(np.int32)
            lower_sizes = self.committee_systems[i].quorum_sizes
            for j in range(i + 1, self.num_levels):
                upper = self.committee_systems[j].incidence_matrix.astype(np.int32)
                for start in range(0, upper.shape[0], _NESTING_BLOCK):
                    overlap = upper[start:start + _NESTING_BLOCK] @ lower.T
                    contained = overlap == lower_sizes[None, :]
                    if not contained.any(axis=1).all():
                        return False
        return True

    def __repr__(self) -> str:
        return (
            f"MultilevelSystem(k={self.config.k}, q={self.config.q}, "
            f"levels={self.level_sizes()}, variant={self.variant})"
        )
