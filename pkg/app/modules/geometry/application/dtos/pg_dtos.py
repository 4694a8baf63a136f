from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PgQueryDTO(BaseModel):
    """DTO de consulta sobre PG(k, q)"""
    k: int = Field(..., ge=0, description="Dimensão projetiva do espaço ambiente")
    q: int = Field(..., ge=2, description="Ordem do corpo (potência de primo)")
    d: int = Field(..., ge=0, description="Dimensão projetiva dos subespaços")
    format: Literal["json", "csv"] = "json"

    @model_validator(mode="after")
    def validate_dimensions(self) -> "PgQueryDTO":
        if self.d > self.k:
            raise ValueError("d não pode exceder k")
        return self

    model_config = ConfigDict(
        json_schema_extra={"example": {"k": 7, "q": 2, "d": 4, "format": "json"}}
    )


class PgCountDTO(BaseModel):
    """Contagens exatas (inteiros como string para precisão arbitrária)"""
    k: int
    q: int
    d: int
    points: str
    subspaces: str
    points_per_subspace: str
    subspaces_through_point: str


class SubspaceDTO(BaseModel):
    index: int
    dimension: int
    basis: List[List[int]]
    points: List[int] = Field(description="Índices dos pontos (bijeção com os comitês)")


class PgListingDTO(BaseModel):
    k: int
    q: int
    d: int
    count: int
    subspaces: List[SubspaceDTO]
