"""
Construção do sistema multinível a partir de PG(k, q).

1. Partição equitativa dos n processos em m = |PG(k, q)| comitês.
2. Comitê i ↔ i-ésimo ponto enumerado (bijeção com).
3. Nível j: quóruns de comitês com(S) para S de dimensão d_j
   (todos, na variante completa; δ_j sorteados por ponto, na amostrada).
"""
import logging
from typing import Dict, List, Optional, Tuple

from app.core.config import settings
from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.entities.subspace_entity import Subspace
from app.modules.geometry.domain.services.projective_space import ProjectiveSpace
from app.modules.multilevel.domain.entities.committee_assignment_entity import CommitteeAssignment
from app.modules.multilevel.domain.entities.multilevel_system_entity import (
    MultilevelSystem,
    Variant,
)
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import (
    InvalidConfigException,
    SamplingExhaustedException,
)
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.modules.quorum.domain.entities.intersection_system_entity import IntersectionSystem
from app.shared.infrastructure.random.seed_streams import point_rng

logger = logging.getLogger(__name__)


def build(
    config: MultilevelConfig,
    variant: Variant = "full",
    seed: Optional[int] = None,
    enumeration_cap: Optional[int] = None,
    retry_factor: Optional[int] = None,
) -> MultilevelSystem:
    """
    Raises:
        InvalidConfigException: semente ausente/presente em desacordo com a variante
        SizeOverflowException: variante completa acima do limite de enumeração
        SamplingExhaustedException: δ_j subespaços distintos não obtidos
    """
    space = ProjectiveSpace(config.k, field_new(config.q), enumeration_cap=enumeration_cap)
    assignment = CommitteeAssignment.create(config.n, config.num_committees)

    if variant == "full":
        if seed is not None:
            raise InvalidConfigException("Variante completa não usa semente")
        systems = build_full_levels(config, space)
    elif variant == "sampled":
        if seed is None:
            raise InvalidConfigException("Variante amostrada exige semente")
        if config.deltas is None:
            raise InvalidConfigException("Variante amostrada exige δ_j por nível")
        systems = build_sampled_levels(config, space, seed, retry_factor)
    else:
        raise InvalidConfigException(f"Variante desconhecida: {variant}")

    system = MultilevelSystem(config, assignment, systems, variant, seed)
    logger.info("Built %r", system)
    return system


def build_full_levels(
    config: MultilevelConfig, space: ProjectiveSpace
) -> Tuple[IntersectionSystem, ...]:
    ground = range(config.num_committees)
    by_dimension: Dict[int, IntersectionSystem] = {}
    for spec in config.levels:
        if spec.d not in by_dimension:
            incidence = space.incidence(spec.d)
            by_dimension[spec.d] = IntersectionSystem.from_incidence(ground, incidence)
            logger.info("Level with d=%d: %d quorums", spec.d, len(incidence))
    return tuple(by_dimension[spec.d] for spec in config.levels)


def build_sampled_levels(
    config: MultilevelConfig,
    space: ProjectiveSpace,
    seed: int,
    retry_factor: Optional[int] = None,
) -> Tuple[IntersectionSystem, ...]:
    """
    Para cada ponto A, sorteia N_j(A): δ_j subespaços distintos de dimensão d_j
    contendo A. Q'_j é a união sobre os pontos, sem duplicatas.

    Cada ponto tem o próprio subfluxo (seed XOR índice do ponto), consumido
    nível a nível.
    """
    factor = settings.SAMPLING_RETRY_FACTOR if retry_factor is None else retry_factor
    quorums: List[List[Tuple[int, ...]]] = [[] for _ in config.levels]

    for index in range(config.num_committees):
        rng = point_rng(seed, index)
        point = space.point(index)
        for j, (spec, delta) in enumerate(zip(config.levels, config.deltas)):
            drawn: Dict[Subspace, None] = {}
            attempts = 0
            while len(drawn) < delta:
                if attempts >= factor * delta:
                    raise SamplingExhaustedException(
                        f"Apenas {len(drawn)} de {delta} subespaços distintos pelo ponto "
                        f"{index} no nível {j + 1} após {attempts} sorteios",
                        point=index,
                        level=j + 1,
                    )
                drawn.setdefault(space.sample_subspace_containing(point, spec.d, rng))
                attempts += 1
            quorums[j].extend(space.subspace_point_indices(s) for s in drawn)

    ground = range(config.num_committees)
    systems = tuple(IntersectionSystem.create(ground, level) for level in quorums)
    logger.info("Sampled levels: %s quorums", [s.size for s in systems])
    return systems
