from typing import List, Literal

from pydantic import BaseModel, Field


class AvailabilityQueryDTO(BaseModel):
    """Parâmetros de uma estimativa Monte Carlo (o p padrão é o da configuração)"""
    level: int = Field(1, ge=1)
    trials: int = Field(..., ge=1)
    seed: int = Field(..., ge=0)
    mode: Literal["order_statistic", "bernoulli"] = "order_statistic"
    ps: List[str] = Field(default_factory=list, description="Valores de p para varredura")


class AvailabilityReportDTO(BaseModel):
    """
    Cota analítica ao lado da estimativa Monte Carlo, com todas as entradas
    ecoadas para reprodução.
    """
    level: int
    n: int
    p: str
    r: str
    committees: int
    committee_size_min: int
    trials: int
    seed: int
    mode: str
    confidence: float

    analytic_lower_bound: float = Field(..., ge=0, le=1)
    analytic_lower_bound_digits: str
    product_form: float = Field(..., ge=0, le=1)
    committee_failure_exact: float = Field(..., ge=0, le=1)
    committee_failure_bound: float = Field(..., ge=0, le=1)

    mc_successes: int = Field(..., ge=0)
    mc_estimate: float = Field(..., ge=0, le=1)
    mc_half_width: float = Field(..., ge=0)
    wilson_low: float = Field(..., ge=0, le=1)
    wilson_high: float = Field(..., ge=0, le=1)
