from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np

from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException


def equitable_partition(n: int, m: int) -> Tuple[int, ...]:
    """
    Tamanhos de uma partição equitativa de n processos em m comitês:
    os primeiros n mod m comitês têm ⌈n/m⌉ membros, os demais ⌊n/m⌋.
    """
    if m < 1:
        raise InvalidArgumentsException(f"m precisa ser >= 1 (m={m})")
    if n < m:
        raise InvalidArgumentsException(f"n={n} menor que m={m}")
    base, extra = divmod(n, m)
    return tuple(base + 1 if i < extra else base for i in range(m))


@dataclass(frozen=True)
class CommitteeAssignment:
    """
    Comitês como blocos contíguos de identidades 1..n.

    O comitê i corresponde ao i-ésimo ponto enumerado de PG(k, q) (bijeção com).
    """

    sizes: Tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or min(self.sizes) < 1:
            raise InvalidArgumentsException("Todo comitê precisa de ao menos um processo")
        if max(self.sizes) - min(self.sizes) > 1:
            raise InvalidArgumentsException("Tamanhos dos comitês diferem em mais de 1")

    @classmethod
    def create(cls, n: int, m: int) -> "CommitteeAssignment":
        return cls(equitable_partition(n, m))

    @property
    def num_committees(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @cached_property
    def offsets(self) -> np.ndarray:
        """Identidade inicial (1-indexada) de cada comitê"""
        return np.concatenate(([1], 1 + np.cumsum(self.sizes[:-1], dtype=np.int64)))

    def is_uniform(self) -> bool:
        return len(set(self.sizes)) == 1

    @property
    def committee_size(self) -> int:
        """c quando todos os comitês têm o mesmo tamanho"""
        if not self.is_uniform():
            raise InvalidArgumentsException("Comitês com tamanhos diferentes")
        return self.sizes[0]

    def members(self, committee: int) -> range:
        start = int(self.offsets[committee])
        return range(start, start + self.sizes[committee])

    def committee_of(self, identity: int) -> int:
        if not 1 <= identity <= self.n:
            raise InvalidArgumentsException(f"Processo {identity} fora de [1, {self.n}]")
        return int(np.searchsorted(self.offsets, identity, side="right") - 1)
