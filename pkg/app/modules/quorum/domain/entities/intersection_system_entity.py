from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, Iterable, Sequence, Tuple

import numpy as np

from app.modules.quorum.domain.exceptions.quorum_exceptions import (
    InvalidIntersectionSystemException,
    UnknownElementException,
)


@dataclass(frozen=True, eq=False)
class IntersectionSystem:
    """
    Sistema de interseção sobre um conjunto base rotulado.

    quorums: tuplas ordenadas de índices do conjunto base, sem repetição
    (semântica de conjunto; a ordem de construção é preservada).

    A propriedade de interseção par a par NÃO é imposta na construção:
    ela é verificada por `verify_intersecting`.
    """

    ground: Tuple[Hashable, ...]
    quorums: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.quorums:
            raise InvalidIntersectionSystemException("Sistema sem quóruns")

        size = len(self.ground)
        covered = np.zeros(size, dtype=bool)
        for quorum in self.quorums:
            if not quorum:
                raise InvalidIntersectionSystemException("Quórum vazio")
            if min(quorum) < 0 or max(quorum) >= size:
                raise InvalidIntersectionSystemException(
                    f"Índice fora do conjunto base de tamanho {size}"
                )
            covered[list(quorum)] = True

        if not covered.all():
            raise InvalidIntersectionSystemException(
                "Todo elemento do conjunto base precisa estar em algum quórum"
            )

    # ---------- construction ----------

    @classmethod
    def create(
        cls, ground: Sequence[Hashable], quorums: Iterable[Iterable[int]]
    ) -> "IntersectionSystem":
        """Normaliza (ordena índices) e remove quóruns duplicados"""
        unique = dict.fromkeys(tuple(sorted(set(int(i) for i in q))) for q in quorums)
        return cls(tuple(ground), tuple(unique))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[Hashable]]) -> "IntersectionSystem":
        """Conjunto base = união ordenada dos rótulos"""
        materialized = [set(s) for s in sets]
        ground = sorted(set().union(*materialized)) if materialized else []
        position = {label: i for i, label in enumerate(ground)}
        return cls.create(ground, ([position[x] for x in s] for s in materialized))

    @classmethod
    def from_incidence(
        cls, ground: Sequence[Hashable], indices: np.ndarray
    ) -> "IntersectionSystem":
        return cls.create(ground, indices.tolist())

    # ---------- properties ----------

    @property
    def size(self) -> int:
        """|Q|"""
        return len(self.quorums)

    @cached_property
    def _positions(self) -> Dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.ground)}

    def index_of(self, element: Hashable) -> int:
        try:
            return self._positions[element]
        except KeyError:
            raise UnknownElementException(f"Elemento {element!r} fora do conjunto base")

    @cached_property
    def incidence_matrix(self) -> np.ndarray:
        """Matriz booleana |Q| x |ground|"""
        matrix = np.zeros((self.size, len(self.ground)), dtype=bool)
        for row, quorum in enumerate(self.quorums):
            matrix[row, list(quorum)] = True
        return matrix

    @cached_property
    def quorum_sizes(self) -> np.ndarray:
        return np.fromiter((len(q) for q in self.quorums), dtype=np.int64, count=self.size)

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.incidence_matrix.sum(axis=0, dtype=np.int64)

    def is_subsystem_of(self, other: "IntersectionSystem") -> bool:
        """Todo quórum deste sistema também é quórum de `other` (mesmo conjunto base)"""
        if tuple(self.ground) != tuple(other.ground):
            return False
        known = set(other.quorums)
        return all(q in known for q in self.quorums)

    # ---------- serialization ----------

    def to_dict(self) -> dict:
        return {
            "ground": list(self.ground),
            "quorums": [list(q) for q in self.quorums],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IntersectionSystem":
        return cls.create(data["ground"], data["quorums"])

    def __repr__(self) -> str:
        return f"IntersectionSystem(ground={len(self.ground)}, quorums={self.size})"
