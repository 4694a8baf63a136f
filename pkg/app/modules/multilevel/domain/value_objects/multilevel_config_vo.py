from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from app.modules.geometry.domain.services.counting import (
    count_subspaces_through_point,
    points_in_subspace,
)
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import InvalidConfigException
from app.shared.domain.value_objects.rational_vo import RationalLike, parse_rational

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LevelSpec:
    """Nível j: dimensão d_j dos subespaços e limiar r_j"""
    d: int
    r: Fraction


@dataclass(frozen=True)
class MultilevelConfig:
    """
    Value Object com os parâmetros da construção.

    n: número de processos
    p: probabilidade de disponibilidade de cada processo
    k, q: espaço ambiente PG(k, q)
    levels: (d_j, r_j) para j = 1..ℓ
    deltas: δ_j da variante amostrada (opcional)
    """

    n: int
    p: Fraction
    k: int
    q: int
    levels: Tuple[LevelSpec, ...]
    deltas: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.k < 1:
            raise InvalidConfigException(f"k precisa ser >= 1 (k={self.k})")
        if self.q < 2:
            raise InvalidConfigException(f"q precisa ser >= 2 (q={self.q})")

        # p = 1 é aceito como caso degenerado (disponibilidade total)
        if not HALF < self.p <= 1:
            raise InvalidConfigException(f"p precisa estar em (1/2, 1] (p={self.p})")

        if not self.levels:
            raise InvalidConfigException("Configuração sem níveis")

        m = points_in_subspace(self.q, self.k)
        if self.n < m:
            raise InvalidConfigException(f"n={self.n} menor que |PG({self.k},{self.q})|={m}")

        previous = None
        for j, level in enumerate(self.levels, start=1):
            if not (2 * level.d > self.k and level.d < self.k):
                raise InvalidConfigException(
                    f"d_{j}={level.d} fora de (k/2, k) com k={self.k}"
                )
            if not HALF < level.r < self.p:
                raise InvalidConfigException(f"r_{j}={level.r} fora de (1/2, p={self.p})")
            if previous and (level.d < previous.d or level.r < previous.r):
                raise InvalidConfigException("d_j e r_j precisam ser fracamente crescentes")
            previous = level

        if self.deltas is not None:
            self._validate_deltas()

    def _validate_deltas(self) -> None:
        if len(self.deltas) != len(self.levels):
            raise InvalidConfigException(
                f"{len(self.deltas)} valores de δ para {len(self.levels)} níveis"
            )
        for j, (delta, level) in enumerate(zip(self.deltas, self.levels), start=1):
            limit = count_subspaces_through_point(self.k, level.d, self.q)
            if not 1 <= delta <= limit:
                raise InvalidConfigException(
                    f"δ_{j}={delta} fora de [1, {limit}] (subespaços por ponto)"
                )
        if any(a > b for a, b in zip(self.deltas, self.deltas[1:])):
            raise InvalidConfigException("δ_j precisa ser fracamente crescente")

    # ---------- factory ----------

    @classmethod
    def create(
        cls,
        n: int,
        p: RationalLike,
        k: int,
        q: int,
        d: Sequence[int],
        r: Sequence[RationalLike],
        delta: Optional[Sequence[int]] = None,
    ) -> "MultilevelConfig":
        if len(d) != len(r):
            raise InvalidConfigException(f"{len(d)} dimensões para {len(r)} limiares")
        levels = tuple(
            LevelSpec(int(dj), parse_rational(rj, f"r_{j}"))
            for j, (dj, rj) in enumerate(zip(d, r), start=1)
        )
        return cls(
            n=n,
            p=parse_rational(p, "p"),
            k=k,
            q=q,
            levels=levels,
            deltas=tuple(int(x) for x in delta) if delta is not None else None,
        )

    # ---------- properties ----------

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    @property
    def num_committees(self) -> int:
        """m = |PG(k, q)|"""
        return points_in_subspace(self.q, self.k)

    def level(self, j: int) -> LevelSpec:
        """Nível j, 1-indexado"""
        return self.levels[j - 1]

    def with_p(self, p: Fraction) -> "MultilevelConfig":
        return MultilevelConfig(self.n, Fraction(p), self.k, self.q, self.levels, self.deltas)
