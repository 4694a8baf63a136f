from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.modules.quorum.application.dtos.intersection_system_dtos import SlashabilityDTO


class BuildSystemDTO(BaseModel):
    """Pedido de construção"""
    config: MultilevelConfig
    variant: Literal["full", "sampled"] = "full"
    seed: Optional[int] = Field(default=None, ge=0)
    output: Optional[str] = None

    model_config = ConfigDict(arbitrary_types_allowed=True)


class BuildResultDTO(BaseModel):
    system: MultilevelSystem
    level_sizes: List[int]
    checksum: Optional[str] = None

    model_config = ConfigDict(arbitrary_types_allowed=True)


class LevelMetricsDTO(BaseModel):
    """
    Métricas de um nível. Valores exatos como string (inteiro ou racional),
    acompanhados da aproximação decimal quando não inteiros.
    """
    level: int
    d: int
    r: str
    quorums: int
    msg: int
    max_degree: int
    load: str
    load_decimal: float

    slash_formula: int
    slash_asymptotic: int
    slash_measured: SlashabilityDTO
    slash_witness_pair: Optional[int] = None
    msg_exponent: str
    msg_exponent_decimal: float

    process_slashability: int
    process_formula_applies: bool
    process_slashability_in_n: str
    process_slashability_in_n_decimal: float
    generalized_bound: int

    upper_bound: Optional[str] = None
    upper_bound_decimal: Optional[float] = None
    achieved_over_bound: Optional[str] = None
    optimality_ratio: str
    optimality_ratio_decimal: float
    in_optimality_class: bool


class SystemMetricsDTO(BaseModel):
    k: int
    q: int
    n: int
    p: str
    variant: str
    seed: Optional[int] = None
    committees: int
    committee_size_min: int
    committee_size_max: int
    levels: List[LevelMetricsDTO]


class OptimalityRowDTO(BaseModel):
    k: int
    d: int
    q: int
    msg: int
    committees: int
    slash: int
    ratio: str
    ratio_decimal: float
    achieved_over_bound: str
