"""
Fábrica de fluxos aleatórios com semente explícita.

Toda aleatoriedade do projeto passa por aqui: o chamador é dono do fluxo,
e subfluxos derivados são determinísticos dada a semente mestre.
"""
from typing import List

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def point_rng(seed: int, point_index: int) -> np.random.Generator:
    """Subfluxo por ponto: semente derivada como seed XOR índice do ponto."""
    return np.random.default_rng(seed ^ point_index)


def block_rngs(seed: int, blocks: int) -> List[np.random.Generator]:
    """Subfluxos independentes por bloco de ensaios (SeedSequence.spawn)."""
    children = np.random.SeedSequence(seed).spawn(blocks)
    return [np.random.default_rng(child) for child in children]
