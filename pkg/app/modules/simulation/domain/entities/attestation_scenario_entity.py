from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Mapping, Optional, Tuple

from app.modules.multilevel.domain.entities.committee_assignment_entity import CommitteeAssignment
from app.modules.multilevel.domain.services.slashing import committee_threshold
from app.modules.simulation.domain.exceptions.simulation_exceptions import InvalidScenarioException

BLOCK = "v"
CONFLICTING_BLOCK = "v'"
BLOCKS = (BLOCK, CONFLICTING_BLOCK)


@dataclass(frozen=True)
class AttestationScenario:
    """
    Tabela de votos de um nível: cada processo atesta um subconjunto de
    {v, v'}. Quem atesta os dois equivoca e pode ser punido.
    """

    level: int
    quorum_pair: Tuple[Tuple[int, ...], Tuple[int, ...]]
    byzantine: FrozenSet[int]
    votes: Mapping[int, FrozenSet[str]]

    def __post_init__(self):
        for process, blocks in self.votes.items():
            if not blocks <= set(BLOCKS):
                raise InvalidScenarioException(f"Processo {process} votou em bloco desconhecido")
            if len(blocks) > 1 and process not in self.byzantine:
                raise InvalidScenarioException(f"Processo honesto {process} votou em dois blocos")

    def equivocators(self) -> FrozenSet[int]:
        return frozenset(p for p, blocks in self.votes.items() if len(blocks) > 1)

    def voters_for(self, block: str) -> FrozenSet[int]:
        return frozenset(p for p, blocks in self.votes.items() if block in blocks)

    def shared_committees(self) -> Tuple[int, ...]:
        first, second = self.quorum_pair
        return tuple(sorted(set(first) & set(second)))

    def quorum_formed(
        self, committees: Iterable[int], block: str, assignment: CommitteeAssignment, r: Fraction
    ) -> bool:
        """Todo comitê do quórum tem ao menos ⌈r|C|⌉ votos para o bloco"""
        voters = self.voters_for(block)
        for committee in committees:
            members = assignment.members(committee)
            count = sum(1 for p in members if p in voters)
            if count < committee_threshold(len(members), r):
                return False
        return True


@dataclass(frozen=True)
class SlashingReport:
    level: int
    strategy: str
    slashed_count: int
    analytic_lower_bound: int
    quorums_formed: Tuple[bool, bool]
    shared_committees: int
    seed: Optional[int] = None

    def __post_init__(self):
        if self.slashed_count < 0:
            raise InvalidScenarioException("slashed_count negativo")
