"""
Estimativa Monte Carlo da disponibilidade de P_r(Q).

Um ensaio marca cada processo como disponível com probabilidade p e tem
sucesso sse algum quórum de comitês tem todos os comitês com ao menos
⌈r|C|⌉ membros disponíveis.

Modos:
- order_statistic: por comitê, a ⌈r|C|⌉-ésima menor de |C| uniformes é uma
  Beta(t, |C|-t+1); o comitê está vivo sse ela é < p. Mesma lei do modo
  bernoulli, com um sorteio por comitê.
- bernoulli: uniformes explícitas por processo.

Nos dois modos os sorteios não dependem de p: sementes iguais dão números
aleatórios comuns e a estimativa é monótona em p.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Literal, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from app.core.config import settings
from app.modules.availability.domain.exceptions.availability_exceptions import (
    UnknownSamplingModeException,
)
from app.shared.infrastructure.random.seed_streams import block_rngs

logger = logging.getLogger(__name__)

SamplingMode = Literal["order_statistic", "bernoulli"]

_MAX_ENTRIES = 4_000_000


class LivenessModel(NamedTuple):
    """Dados de um nível necessários ao sorteio"""
    incidence: np.ndarray     # (|Q|, m) bool
    sizes: np.ndarray         # (m,) tamanho de cada comitê
    thresholds: np.ndarray    # (m,) ⌈r|C|⌉


class WilsonInterval(NamedTuple):
    low: float
    high: float

    @property
    def half_width(self) -> float:
        return (self.high - self.low) / 2


def wilson_interval(successes: int, trials: int, confidence: Optional[float] = None) -> WilsonInterval:
    """Intervalo de Wilson para uma proporção binomial"""
    confidence = settings.CONFIDENCE_LEVEL if confidence is None else confidence
    z = float(norm.ppf(1 - (1 - confidence) / 2))
    phat = successes / trials
    denominator = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denominator
    spread = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denominator
    return WilsonInterval(max(0.0, center - spread), min(1.0, center + spread))


# ============================================================================
# LIVENESS DRAWS
# ============================================================================

def _order_statistic_draws(model: LivenessModel, trials: int, rng: np.random.Generator) -> np.ndarray:
    """(trials, m): ⌈r|C|⌉-ésima menor de |C| uniformes, por comitê"""
    thresholds = model.thresholds
    return rng.beta(thresholds, model.sizes - thresholds + 1, size=(trials, len(thresholds)))


def _bernoulli_live(model: LivenessModel, p: float, trials: int, rng: np.random.Generator) -> np.ndarray:
    """(trials, m) bool: comitê atingiu o limiar, com uniformes por processo"""
    sizes = model.sizes
    n = int(sizes.sum())
    starts = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    step = max(1, _MAX_ENTRIES // n)
    live = np.empty((trials, len(sizes)), dtype=bool)
    for start in range(0, trials, step):
        stop = min(start + step, trials)
        available = rng.random((stop - start, n)) < p
        counts = np.add.reduceat(available, starts, axis=1, dtype=np.int64)
        live[start:stop] = counts >= model.thresholds
    return live


def _count_successes(model: LivenessModel, live: np.ndarray) -> int:
    dead = ~live
    # sem comitê morto todo quórum está vivo
    trivial = ~dead.any(axis=1)
    successes = int(trivial.sum())

    pending = dead[~trivial].astype(np.int32)
    if len(pending) == 0:
        return successes

    incidence = model.incidence.astype(np.int32).T
    step = max(1, _MAX_ENTRIES // incidence.shape[1])
    for start in range(0, len(pending), step):
        hits = pending[start:start + step] @ incidence
        successes += int((hits == 0).any(axis=1).sum())
    return successes


def _run_block(
    model: LivenessModel, ps: Sequence[float], trials: int, rng: np.random.Generator, mode: SamplingMode
) -> List[int]:
    """Um bloco de ensaios; mesmas uniformes para todos os p (números aleatórios comuns)"""
    if mode == "order_statistic":
        draws = _order_statistic_draws(model, trials, rng)
        return [
            _count_successes(model, draws < p if p < 1 else np.ones_like(draws, dtype=bool))
            for p in ps
        ]

    # bernoulli: replays do subfluxo garantem as mesmas uniformes para cada p
    state = rng.bit_generator.state
    results = []
    for p in ps:
        rng.bit_generator.state = state
        results.append(_count_successes(model, _bernoulli_live(model, p, trials, rng)))
    return results


def estimate_successes(
    model: LivenessModel,
    ps: Sequence[float],
    trials: int,
    seed: int,
    mode: SamplingMode = "order_statistic",
    block_size: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[int]:
    """
    Sucessos por valor de p, em blocos de ensaios com subfluxos derivados da
    semente mestre. A soma sobre blocos independe da ordem de execução.
    """
    if mode not in ("order_statistic", "bernoulli"):
        raise UnknownSamplingModeException(f"Modo de amostragem desconhecido: {mode}")

    block_size = block_size or settings.MC_BLOCK_SIZE
    workers = workers or settings.MC_WORKERS
    blocks = math.ceil(trials / block_size)
    rngs = block_rngs(seed, blocks)
    plan: List[Tuple[int, np.random.Generator]] = [
        (min(block_size, trials - i * block_size), rng) for i, rng in enumerate(rngs)
    ]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partial = list(pool.map(lambda item: _run_block(model, ps, item[0], item[1], mode), plan))
    else:
        partial = [_run_block(model, ps, count, rng, mode) for count, rng in plan]

    totals = [sum(block[i] for block in partial) for i in range(len(ps))]
    logger.debug("Monte Carlo: %d trials in %d blocks, successes=%s", trials, blocks, totals)
    return totals
