from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

Strategy = Literal["minimal-pair", "random-pair", "honest"]


class SimulationQueryDTO(BaseModel):
    strategies: List[Strategy] = Field(default_factory=lambda: ["minimal-pair"], min_length=1)
    seed: int = Field(..., ge=0)
    level: Optional[int] = Field(default=None, ge=1, description="Todos os níveis quando ausente")
    repeats: int = Field(default=1, ge=1)


class SlashingReportDTO(BaseModel):
    level: int
    strategy: Strategy
    slashed_count: int = Field(..., ge=0)
    analytic_lower_bound: int
    quorums_formed: Tuple[bool, bool]
    shared_committees: int
    seed: Optional[int] = None
