from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field

Label = Union[int, str]


class IntersectionSystemDTO(BaseModel):
    """Forma JSON de um sistema de interseção: {"ground", "quorums"}"""
    ground: List[Label] = Field(..., min_length=1)
    quorums: List[List[int]] = Field(..., min_length=1)


class SlashabilityDTO(BaseModel):
    value: int
    witness: Tuple[int, int]
    exact: bool
    pairs_examined: int


class QuorumMetricsDTO(BaseModel):
    """Métricas de um sistema; racionais exatos como string + aproximação decimal"""
    quorums: int
    ground: int
    msg: int
    max_degree: int
    load: str
    load_decimal: float
    intersecting: Optional[bool] = None
    slashability: Optional[SlashabilityDTO] = None
