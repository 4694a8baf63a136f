import itertools
import logging
from functools import cached_property
from typing import Iterator, List, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException
from app.modules.geometry.domain.entities.field_entity import Field
from app.modules.geometry.domain.entities.subspace_entity import ProjectivePoint, Subspace
from app.modules.geometry.domain.exceptions.geometry_exceptions import (
    DimensionMismatchException,
    SizeOverflowException,
)
from app.modules.geometry.domain.services import linear_algebra as la
from app.modules.geometry.domain.services.counting import (
    count_subspaces,
    points_in_subspace,
)

logger = logging.getLogger(__name__)


class ProjectiveSpace:
    """
    PG(k, q) com enumeração determinística.

    - Pontos: vetores normalizados em ordem lexicográfica.
    - Subespaços de dimensão d: bases escalonadas reduzidas de posto d+1,
      iterando conjuntos de colunas pivô (ordem de combinations) e depois as
      entradas livres (ordem de product).

    O índice de um ponto nessa ordem é a bijeção `com` entre pontos e comitês.
    """

    def __init__(
        self,
        k: int,
        field: Field,
        enumeration_cap: Optional[int] = None,
        chunk_size: Optional[int] = None,
    ):
        if k < 0:
            raise InvalidArgumentsException(f"k precisa ser >= 0 (k={k})")
        self.k = k
        self.field = field
        self.n = k + 1
        self.enumeration_cap = settings.ENUMERATION_CAP if enumeration_cap is None else enumeration_cap
        self.chunk_size = settings.INCIDENCE_CHUNK if chunk_size is None else chunk_size

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def num_points(self) -> int:
        return points_in_subspace(self.q, self.k)

    def __repr__(self) -> str:
        return f"ProjectiveSpace(k={self.k}, q={self.q})"

    # ------------------------------------------------------------------
    # POINTS
    # ------------------------------------------------------------------

    @cached_property
    def point_vectors(self) -> np.ndarray:
        self._check_cap(self.num_points, "pontos")
        return la.normalized_vectors(self.q, self.n)

    def points(self) -> List[ProjectivePoint]:
        return [
            ProjectivePoint(self.field, tuple(int(x) for x in row))
            for row in self.point_vectors
        ]

    def point(self, index: int) -> ProjectivePoint:
        if not 0 <= index < self.num_points:
            raise InvalidArgumentsException(f"Ponto {index} fora de [0, {self.num_points})")
        return ProjectivePoint(self.field, tuple(int(x) for x in self.point_vectors[index]))

    def point_index(self, point: ProjectivePoint) -> int:
        if point.field != self.field or point.ambient_k != self.k:
            raise DimensionMismatchException(f"Ponto {point} não pertence a {self!r}")
        return int(la.point_indices(self.q, np.asarray(point.coords, dtype=np.int64)[None, :])[0])

    # ------------------------------------------------------------------
    # SUBSPACES
    # ------------------------------------------------------------------

    def count_subspaces(self, d: int) -> int:
        return count_subspaces(self.k, d, self.q)

    def iter_bases(self, d: int) -> Iterator[np.ndarray]:
        """Blocos (N, d+1, k+1) de bases escalonadas reduzidas, em ordem de enumeração"""
        self._check_dimension(d)
        self._check_cap(self.count_subspaces(d), f"subespaços de dimensão {d}")

        q, n, r = self.q, self.n, d + 1
        for pivots in itertools.combinations(range(n), r):
            free = [
                (i, j)
                for i, col in enumerate(pivots)
                for j in range(col + 1, n)
                if j not in pivots
            ]
            total = q ** len(free)
            chunk = self._chunk_for(r)
            for start in range(0, total, chunk):
                stop = min(start + chunk, total)
                assignments = la.digits(np.arange(start, stop, dtype=np.int64), q, len(free))
                bases = np.zeros((stop - start, r, n), dtype=np.int64)
                for i, col in enumerate(pivots):
                    bases[:, i, col] = 1
                for t, (i, j) in enumerate(free):
                    bases[:, i, j] = assignments[:, t]
                yield bases

    def subspaces(self, d: int) -> List[Subspace]:
        """Todos os subespaços de dimensão projetiva d (enumerate_subspaces)"""
        result = []
        for bases in self.iter_bases(d):
            for basis in bases:
                result.append(
                    Subspace(self.field, self.k, tuple(tuple(int(x) for x in row) for row in basis))
                )
        return result

    def incidence(self, d: int) -> np.ndarray:
        """
        Índices (ordenados) dos pontos de cada subespaço de dimensão d,
        na mesma ordem de `subspaces(d)`. Forma (|PG_d|, (q^{d+1}-1)/(q-1)).
        """
        blocks = []
        for bases in self.iter_bases(d):
            vectors = la.span_points(self.field, bases)
            indices = la.point_indices(self.q, vectors)
            indices.sort(axis=1)
            blocks.append(indices)
            logger.debug("Incidence block of %d subspaces (d=%d)", len(bases), d)
        return np.vstack(blocks)

    def subspace_point_indices(self, subspace: Subspace) -> Tuple[int, ...]:
        if subspace.field != self.field or subspace.ambient_k != self.k:
            raise DimensionMismatchException(f"{subspace} não pertence a {self!r}")
        if subspace.is_empty():
            return ()
        indices = la.point_indices(self.q, subspace.point_vectors())
        return tuple(sorted(int(i) for i in indices))

    # ------------------------------------------------------------------
    # SAMPLING
    # ------------------------------------------------------------------

    def sample_subspace_containing(
        self, point: ProjectivePoint, d: int, rng: np.random.Generator
    ) -> Subspace:
        """
        Subespaço de dimensão d uniforme entre os que contêm `point`.

        Fixa o vetor do ponto como primeira linha, sorteia d vetores uniformes e
        rejeita até a matriz ter posto d+1. Todo subespaço que contém o ponto
        admite o mesmo número de bases completando o vetor, daí a uniformidade.
        """
        if point.field != self.field or point.ambient_k != self.k:
            raise DimensionMismatchException(f"Ponto {point} não pertence a {self!r}")
        if not 1 <= d <= self.k:
            raise InvalidArgumentsException(f"Exige 1 <= d <= k (d={d}, k={self.k})")

        if d == self.k:
            return Subspace.full(self.field, self.k)

        while True:
            extra = rng.integers(0, self.q, size=(d, self.n))
            rows = [list(point.coords)] + extra.tolist()
            if la.rank(self.field, rows, self.n) == d + 1:
                return Subspace.from_vectors(self.field, self.k, rows)

    # ------------------------------------------------------------------
    # SHARPNESS
    # ------------------------------------------------------------------

    def sharpness_pair(self, d: int) -> Tuple[Subspace, Subspace]:
        """
        U = span(e_0..e_d) e W = span(e_{k-d}..e_k) na base canônica.
        Quando 2d >= k, U ∩ W tem dimensão projetiva exatamente 2d - k.
        """
        self._check_dimension(d)
        n = self.n

        def unit(i: int) -> Tuple[int, ...]:
            return tuple(1 if j == i else 0 for j in range(n))

        first = Subspace.from_vectors(self.field, self.k, [unit(i) for i in range(d + 1)])
        second = Subspace.from_vectors(self.field, self.k, [unit(i) for i in range(self.k - d, n)])
        return first, second

    # ------------------------------------------------------------------
    # GUARDS
    # ------------------------------------------------------------------

    def _check_dimension(self, d: int) -> None:
        if not 0 <= d <= self.k:
            raise InvalidArgumentsException(f"Exige 0 <= d <= k (d={d}, k={self.k})")

    def _chunk_for(self, r: int) -> int:
        # limita o tensor (N, P, r, n) de span_points a ~4M entradas
        per_subspace = points_in_subspace(self.q, r - 1) * r * self.n
        return max(1, min(self.chunk_size, 4_000_000 // per_subspace))

    def _check_cap(self, count: int, what: str) -> None:
        if count > self.enumeration_cap:
            raise SizeOverflowException(
                f"Enumeração de {count} {what} excede o limite {self.enumeration_cap}",
                requested=count,
                limit=self.enumeration_cap,
            )


# ============================================================================
# MODULE-LEVEL OPERATIONS
# ============================================================================

def enumerate_points(k: int, field: Field, cap: Optional[int] = None) -> List[ProjectivePoint]:
    return ProjectiveSpace(k, field, enumeration_cap=cap).points()


def enumerate_subspaces(k: int, d: int, field: Field, cap: Optional[int] = None) -> List[Subspace]:
    return ProjectiveSpace(k, field, enumeration_cap=cap).subspaces(d)


def sample_subspace_containing(
    point: ProjectivePoint, d: int, rng: np.random.Generator
) -> Subspace:
    return ProjectiveSpace(point.ambient_k, point.field).sample_subspace_containing(point, d, rng)

