"""
Cenários de equivocação sobre dois quóruns conflitantes de um nível.

A simulação é combinatória: só importa quem assinou o quê. Processos em S
atestam v, processos em T atestam v'; quem está nos dois equivoca.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.services import slashing
from app.modules.simulation.domain.entities.attestation_scenario_entity import (
    BLOCK,
    CONFLICTING_BLOCK,
    AttestationScenario,
    SlashingReport,
)
from app.modules.simulation.domain.exceptions.simulation_exceptions import (
    UnknownStrategyException,
)

logger = logging.getLogger(__name__)

MINIMAL_PAIR = "minimal-pair"
RANDOM_PAIR = "random-pair"
HONEST = "honest"
STRATEGIES = (MINIMAL_PAIR, RANDOM_PAIR, HONEST)

QuorumPair = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _random_picks(
    system: MultilevelSystem, committees: Iterable[int], j: int, rng: np.random.Generator
) -> FrozenSet[int]:
    """⌈r|C|⌉ membros uniformes de cada comitê"""
    r = system.level_spec(j).r
    chosen = set()
    for committee in committees:
        members = system.assignment.members(committee)
        t = slashing.committee_threshold(len(members), r)
        picks = rng.choice(len(members), size=t, replace=False)
        chosen.update(members[int(i)] for i in picks)
    return frozenset(chosen)


def _random_quorum_pair(system: MultilevelSystem, j: int, rng: np.random.Generator) -> QuorumPair:
    committees = system.level(j)
    if committees.size == 1:
        return committees.quorums[0], committees.quorums[0]
    a = int(rng.integers(committees.size))
    b = int(rng.integers(committees.size - 1))
    b += b >= a
    return committees.quorums[a], committees.quorums[b]


def build_scenario(
    system: MultilevelSystem, j: int, strategy: str, rng: np.random.Generator
) -> AttestationScenario:
    r = system.level_spec(j).r

    if strategy in (MINIMAL_PAIR, HONEST):
        pair = slashing.minimal_committee_pair(system, j)
        first = slashing.threshold_picks(system.assignment, pair[0], r, lowest=True)
        second = slashing.threshold_picks(system.assignment, pair[1], r, lowest=False)
    elif strategy == RANDOM_PAIR:
        pair = _random_quorum_pair(system, j, rng)
        first = _random_picks(system, pair[0], j, rng)
        second = _random_picks(system, pair[1], j, rng)
    else:
        raise UnknownStrategyException(
            f"Estratégia desconhecida: {strategy} (use {', '.join(STRATEGIES)})"
        )

    votes: Dict[int, FrozenSet[str]] = {}
    for process in first:
        votes[process] = frozenset({BLOCK})
    for process in second:
        if process in votes and strategy != HONEST:
            votes[process] = frozenset({BLOCK, CONFLICTING_BLOCK})
        elif process not in votes:
            votes[process] = frozenset({CONFLICTING_BLOCK})

    byzantine = frozenset() if strategy == HONEST else first & second
    return AttestationScenario(level=j, quorum_pair=pair, byzantine=byzantine, votes=votes)


def run_equivocation(
    system: MultilevelSystem,
    j: int,
    strategy: str,
    rng: np.random.Generator,
    seed: Optional[int] = None,
) -> SlashingReport:
    """
    Monta o cenário da estratégia e conta os processos puníveis.

    Raises:
        UnknownStrategyException: estratégia fora de STRATEGIES
    """
    scenario = build_scenario(system, j, strategy, rng)
    r = system.level_spec(j).r
    first, second = scenario.quorum_pair

    report = SlashingReport(
        level=j,
        strategy=strategy,
        slashed_count=len(scenario.equivocators()),
        analytic_lower_bound=slashing.process_slashability(system, j),
        quorums_formed=(
            scenario.quorum_formed(first, BLOCK, system.assignment, r),
            scenario.quorum_formed(second, CONFLICTING_BLOCK, system.assignment, r),
        ),
        shared_committees=len(scenario.shared_committees()),
        seed=seed,
    )
    logger.debug("Level %d %s: slashed %d", j, strategy, report.slashed_count)
    return report


def sweep_levels(
    system: MultilevelSystem,
    strategies: Sequence[str],
    rng: np.random.Generator,
    seed: Optional[int] = None,
) -> List[SlashingReport]:
    """Um relatório por nível e estratégia, níveis em ordem crescente"""
    return [
        run_equivocation(system, j, strategy, rng, seed)
        for j in range(1, system.num_levels + 1)
        for strategy in strategies
    ]
