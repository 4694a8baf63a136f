from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from app.modules.geometry.domain.entities.field_entity import Field, FieldElement
from app.modules.geometry.domain.exceptions.geometry_exceptions import (
    DimensionMismatchException,
    InvalidPointException,
)
from app.modules.geometry.domain.services import linear_algebra as la


@dataclass(frozen=True)
class ProjectivePoint:
    """
    Ponto de PG(k, q): subespaço vetorial de dimensão 1, representado pelo
    vetor cujo primeiro coordenada não nula é 1.
    """

    field: Field
    coords: Tuple[int, ...]

    def __post_init__(self):
        if not self.coords:
            raise InvalidPointException("Ponto sem coordenadas")
        if any(not 0 <= c < self.field.q for c in self.coords):
            raise InvalidPointException(f"Coordenadas fora de GF({self.field.q}): {self.coords}")
        lead = next((c for c in self.coords if c != 0), None)
        if lead is None:
            raise InvalidPointException("O vetor nulo não é um ponto projetivo")
        if lead != 1:
            raise InvalidPointException(f"Ponto não normalizado: {self.coords}")

    @classmethod
    def normalize(cls, field: Field, vector: Sequence[int]) -> "ProjectivePoint":
        """Representante canônico da reta gerada por `vector`"""
        lead = next((int(c) for c in vector if c != 0), None)
        if lead is None:
            raise InvalidPointException("O vetor nulo não é um ponto projetivo")
        tables = field.tables
        scale = tables.inv[lead]
        return cls(field, tuple(int(tables.mul[scale, int(c)]) for c in vector))

    @property
    def ambient_k(self) -> int:
        return len(self.coords) - 1

    @property
    def elements(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Subspace:
    """
    Subespaço projetivo de PG(k, q) representado pela base em forma escalonada
    reduzida (representação canônica: igualdade e hash usam a matriz).

    O subespaço vazio tem base sem linhas e dimensão projetiva -1.
    """

    field: Field
    ambient_k: int
    basis: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if any(len(row) != self.ambient_k + 1 for row in self.basis):
            raise DimensionMismatchException(
                f"Linhas da base precisam de {self.ambient_k + 1} coordenadas"
            )
        if not la.is_rref(self.basis):
            raise DimensionMismatchException("Base fora da forma escalonada reduzida")

    # ---------- construction ----------

    @classmethod
    def from_vectors(
        cls, field: Field, ambient_k: int, vectors: Sequence[Sequence[int]]
    ) -> "Subspace":
        """Subespaço gerado por `vectors` (canonicalizado)"""
        return cls(field, ambient_k, la.rref(field, vectors, ambient_k + 1))

    @classmethod
    def empty(cls, field: Field, ambient_k: int) -> "Subspace":
        return cls(field, ambient_k, ())

    @classmethod
    def full(cls, field: Field, ambient_k: int) -> "Subspace":
        n = ambient_k + 1
        identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(field, ambient_k, identity)

    # ---------- properties ----------

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        """Dimensão projetiva (posto - 1)"""
        return self.rank - 1

    def is_empty(self) -> bool:
        return self.rank == 0

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.basis)

    # ---------- behavior ----------

    def contains(self, point: ProjectivePoint) -> bool:
        return subspace_contains(self, point)

    def intersection(self, other: "Subspace") -> "Subspace":
        return subspace_intersection(self, other)

    def point_vectors(self) -> np.ndarray:
        """Pontos normalizados do subespaço, (P, k+1)"""
        if self.is_empty():
            return np.zeros((0, self.ambient_k + 1), dtype=np.int64)
        bases = np.asarray(self.basis, dtype=np.int64)[None, :, :]
        return la.span_points(self.field, bases)[0]

    def points(self) -> List[ProjectivePoint]:
        vectors = self.point_vectors()
        order = np.lexsort(vectors.T[::-1]) if len(vectors) else []
        return [ProjectivePoint(self.field, tuple(int(x) for x in vectors[i])) for i in order]

    def __str__(self) -> str:
        rows = ";".join(",".join(str(x) for x in row) for row in self.basis)
        return f"Subspace(PG({self.ambient_k},{self.field.q}), dim={self.dimension}, [{rows}])"


# ============================================================================
# OPERATIONS
# ============================================================================

def _check_same_space(field: Field, k: int, other_field: Field, other_k: int) -> None:
    if field != other_field or k != other_k:
        raise DimensionMismatchException(
            f"PG({k},{field.q}) != PG({other_k},{other_field.q})"
        )


def subspace_contains(subspace: Subspace, point: ProjectivePoint) -> bool:
    """Ponto pertence ao subespaço sse o posto não aumenta ao juntá-lo à base"""
    _check_same_space(subspace.field, subspace.ambient_k, point.field, point.ambient_k)
    if subspace.is_empty():
        return False
    n = subspace.ambient_k + 1
    rows = list(subspace.basis) + [point.coords]
    return la.rank(subspace.field, rows, n) == subspace.rank


def subspace_intersection(first: Subspace, second: Subspace) -> Subspace:
    """
    S ∩ T via anuladores: x ∈ S ∩ T sse x é ortogonal a null(S) e a null(T).
    Interseção trivial devolve o subespaço vazio (dimensão -1).
    """
    _check_same_space(first.field, first.ambient_k, second.field, second.ambient_k)
    field, k = first.field, first.ambient_k
    n = k + 1

    if first.is_empty() or second.is_empty():
        return Subspace.empty(field, k)

    constraints = list(la.null_space(field, first.basis, n)) + list(
        la.null_space(field, second.basis, n)
    )
    if not constraints:
        return Subspace.full(field, k)

    return Subspace.from_vectors(field, k, la.null_space(field, constraints, n))
