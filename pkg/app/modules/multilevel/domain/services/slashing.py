"""
Fórmulas de slashing do sistema multinível.

Todas as grandezas são exatas (int/Fraction). Os sistemas de processos
P_{r_j}(Q_j) nunca são materializados: tudo sai de dados de comitês.
"""
import math
from fractions import Fraction
from typing import FrozenSet, Iterable, NamedTuple, Tuple

from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.services.counting import points_in_subspace
from app.modules.geometry.domain.services.projective_space import ProjectiveSpace
from app.modules.multilevel.domain.entities.committee_assignment_entity import CommitteeAssignment
from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import (
    WitnessUnavailableException,
)
from app.modules.quorum.domain.services import metrics
from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException

HALF = Fraction(1, 2)


class WorstCaseWitness(NamedTuple):
    """Par de quóruns de processos (S, T) e o par de quóruns de comitês de origem"""
    first: FrozenSet[int]
    second: FrozenSet[int]
    first_committees: Tuple[int, ...]
    second_committees: Tuple[int, ...]

    @property
    def overlap(self) -> int:
        return len(self.first & self.second)


# ============================================================================
# COMMITTEE-LEVEL FORMULAS
# ============================================================================

def quorum_size_formula(q: int, d: int) -> int:
    """(q^{d+1} - 1)/(q - 1) comitês por quórum"""
    if d < 0:
        raise InvalidArgumentsException(f"d precisa ser >= 0 (d={d})")
    return points_in_subspace(q, d)


def _check_sharp(k: int, d: int) -> None:
    if 2 * d <= k:
        raise InvalidArgumentsException(f"Exige 2d > k (k={k}, d={d})")


def slashability_formula(k: int, q: int, d: int) -> int:
    """(q^{2d-k+1} - 1)/(q - 1): menor interseção entre d-subespaços de PG(k, q)"""
    _check_sharp(k, d)
    return points_in_subspace(q, 2 * d - k)


def asymptotic_slashability(k: int, q: int, d: int) -> int:
    """Termo dominante q^{2d-k}"""
    _check_sharp(k, d)
    return q ** (2 * d - k)


def msg_exponent(k: int, d: int) -> Fraction:
    """slash(Q_j) ∼ msg(Q_j)^{2 - k/d}"""
    _check_sharp(k, d)
    return 2 - Fraction(k, d)


def optimality_ratio(k: int, q: int, d: int) -> Fraction:
    """(q^{2d-k+1}-1)(q^{k+1}-1)/(q^{d+1}-1)^2, a razão slash atingido / cota superior"""
    _check_sharp(k, d)
    return Fraction(
        (q ** (2 * d - k + 1) - 1) * (q ** (k + 1) - 1),
        (q ** (d + 1) - 1) ** 2,
    )


# ============================================================================
# PROCESS-LEVEL FORMULAS
# ============================================================================

def committee_threshold(committee_size: int, r: Fraction) -> int:
    """⌈r·|C|⌉: menor contagem com |Q ∩ C| >= r|C|"""
    r = Fraction(r)
    if not HALF < r < 1:
        raise InvalidArgumentsException(f"r precisa estar em (1/2, 1) (r={r})")
    if committee_size < 1:
        raise InvalidArgumentsException(f"Comitê vazio (tamanho={committee_size})")
    return math.ceil(r * committee_size)


def has_integral_thresholds(system: MultilevelSystem, j: int) -> bool:
    """Hipótese da fórmula fechada: comitês de tamanho c com r_j·c inteiro"""
    r = system.level_spec(j).r
    return system.assignment.is_uniform() and (r * system.assignment.sizes[0]).denominator == 1


def process_slashability(system: MultilevelSystem, j: int, strict: bool = False) -> int:
    """
    slash(P_{r_j}(Q_j)) = (2r_j - 1)·c·slash(Q_j) sob a hipótese de comitês
    iguais com r_j·c inteiro. Fora dela devolve a cota generalizada, ou
    falha quando `strict`.
    """
    spec = system.level_spec(j)
    if not has_integral_thresholds(system, j):
        if strict:
            raise InvalidArgumentsException(
                f"Nível {j}: comitês desiguais ou r·c não inteiro (r={spec.r})"
            )
        return generalized_slashability_bound(system, j)

    c = system.assignment.committee_size
    value = (2 * spec.r - 1) * c * slashability_formula(system.config.k, system.config.q, spec.d)
    return int(value)


def process_slashability_in_n(k: int, q: int, d: int, r: Fraction, n: int) -> Fraction:
    """(2r-1)(q^{2d-k+1}-1)/(q^{k+1}-1)·n"""
    _check_sharp(k, d)
    return (2 * Fraction(r) - 1) * Fraction(q ** (2 * d - k + 1) - 1, q ** (k + 1) - 1) * n


def process_asymptotic_slashability(k: int, q: int, d: int, r: Fraction, n: int) -> Fraction:
    """(2r-1)·q^{2d-2k}·n"""
    _check_sharp(k, d)
    return (2 * Fraction(r) - 1) * Fraction(q) ** (2 * d - 2 * k) * n


def generalized_slashability_bound(system: MultilevelSystem, j: int) -> int:
    """
    Cota inferior válida para quaisquer tamanhos: dois quóruns de comitês
    dividem ao menos slash(Q_j) comitês e cada comitê C compartilhado
    contribui max(0, 2⌈r|C|⌉ - |C|) processos. Soma as slash(Q_j) menores
    contribuições.
    """
    spec = system.level_spec(j)
    shared = slashability_formula(system.config.k, system.config.q, spec.d)
    overlaps = sorted(
        max(0, 2 * committee_threshold(size, spec.r) - size)
        for size in system.assignment.sizes
    )
    return sum(overlaps[:shared])


def slashing_upper_bound(r: Fraction, c: int, mu: Fraction, lam: Fraction) -> Fraction:
    """(2r-1)·c·μ·λ: nenhum sistema em 𝕊(μ, λ, r) tem slashability maior"""
    r, mu, lam = Fraction(r), Fraction(mu), Fraction(lam)
    if not HALF < r < 1:
        raise InvalidArgumentsException(f"r precisa estar em (1/2, 1) (r={r})")
    if not 0 < lam < 1:
        raise InvalidArgumentsException(f"λ precisa estar em (0, 1) (λ={lam})")
    if mu < 1:
        raise InvalidArgumentsException(f"μ precisa ser >= 1 (μ={mu})")
    if c < 1:
        raise InvalidArgumentsException(f"c precisa ser >= 1 (c={c})")
    return (2 * r - 1) * c * mu * lam


def level_upper_bound(system: MultilevelSystem, j: int) -> Fraction:
    """Cota com μ = msg(Q_j) e λ = load(Q_j)"""
    committees = system.level(j)
    return slashing_upper_bound(
        system.level_spec(j).r,
        system.assignment.committee_size,
        metrics.msg_complexity(committees),
        metrics.load(committees),
    )


def projective_reference(k: int, q: int, d: int) -> Tuple[int, Fraction]:
    """
    (μ, λ) do nível completo PG_d(k, q): μ = (q^{d+1}-1)/(q-1) e
    λ = μ/|PG(k, q)|. Referência fixa para `in_optimality_class`.
    """
    mu = quorum_size_formula(q, d)
    return mu, Fraction(mu, points_in_subspace(q, k))


def in_optimality_class(system: MultilevelSystem, j: int, mu: Fraction, lam: Fraction) -> bool:
    """msg(Q_j)·load(Q_j) <= μ·λ"""
    committees = system.level(j)
    return metrics.msg_complexity(committees) * metrics.load(committees) <= Fraction(mu) * Fraction(lam)


# ============================================================================
# WITNESS
# ============================================================================

def minimal_committee_pair(system: MultilevelSystem, j: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Par de quóruns de comitês com interseção mínima.

    Variante completa: o par de subespaços da base canônica, levado pela
    bijeção com (interseção de dimensão exatamente 2d - k). Variante
    amostrada: força bruta sobre Q'_j.
    """
    spec = system.level_spec(j)
    if system.variant == "full":
        space = ProjectiveSpace(system.config.k, field_new(system.config.q))
        first, second = space.sharpness_pair(spec.d)
        return space.subspace_point_indices(first), space.subspace_point_indices(second)

    committees = system.level(j)
    result = metrics.slashability_bruteforce_detailed(committees)
    a, b = result.witness
    return committees.quorums[a], committees.quorums[b]


def worst_case_witness(system: MultilevelSystem, j: int) -> WorstCaseWitness:
    """
    S toma os ⌈r c⌉ processos de menor identidade de cada comitê do primeiro
    quórum; T toma os de maior identidade no segundo. Em cada comitê
    compartilhado sobram exatamente 2⌈r c⌉ - c processos em S ∩ T.

    Na variante amostrada o par mínimo de Q'_j pode dividir mais comitês que
    slash(Q_j), então |S ∩ T| pode exceder `process_slashability`.
    """
    if not has_integral_thresholds(system, j):
        raise WitnessUnavailableException(
            f"Nível {j}: testemunha exige comitês iguais e r·c inteiro"
        )

    r = system.level_spec(j).r
    first_committees, second_committees = minimal_committee_pair(system, j)
    return WorstCaseWitness(
        threshold_picks(system.assignment, first_committees, r, lowest=True),
        threshold_picks(system.assignment, second_committees, r, lowest=False),
        tuple(first_committees),
        tuple(second_committees),
    )


def threshold_picks(
    assignment: CommitteeAssignment, committees: Iterable[int], r: Fraction, lowest: bool
) -> FrozenSet[int]:
    """⌈r|C|⌉ processos de menor (ou maior) identidade de cada comitê"""
    chosen = set()
    for committee in committees:
        members = assignment.members(committee)
        t = committee_threshold(len(members), r)
        chosen.update(members[:t] if lowest else members[len(members) - t:])
    return frozenset(chosen)
