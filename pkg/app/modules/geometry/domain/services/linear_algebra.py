"""
Álgebra linear sobre GF(q).

Operações matriciais pontuais (forma escalonada reduzida, posto, espaço nulo)
usam o galois; operações em lote sobre milhares de bases usam as tabelas
de soma/produto do Field com numpy vetorizado.
"""
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from app.modules.geometry.domain.entities.field_entity import Field

Rows = Tuple[Tuple[int, ...], ...]


def _as_field_array(field: Field, rows: Sequence[Sequence[int]], ncols: int):
    matrix = np.asarray(rows, dtype=np.int64).reshape(-1, ncols)
    return field.gf(matrix)


def rref(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> Rows:
    """Linhas não nulas da forma escalonada reduzida de `rows`"""
    if len(rows) == 0:
        return ()
    reduced = _as_field_array(field, rows, ncols).row_reduce().view(np.ndarray)
    return tuple(
        tuple(int(x) for x in row) for row in reduced if np.any(row != 0)
    )


def rank(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> int:
    if len(rows) == 0:
        return 0
    return int(np.linalg.matrix_rank(_as_field_array(field, rows, ncols)))


def null_space(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> Rows:
    """Base do espaço nulo à direita {x : A x = 0}"""
    if len(rows) == 0:
        return tuple(
            tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)
        )
    basis = _as_field_array(field, rows, ncols).null_space().view(np.ndarray)
    return tuple(tuple(int(x) for x in row) for row in basis)


def is_rref(rows: Rows) -> bool:
    """Pivôs estritamente crescentes, iguais a 1, colunas de pivô nulas fora do pivô"""
    pivots = []
    for row in rows:
        nonzero = [j for j, x in enumerate(row) if x != 0]
        if not nonzero or row[nonzero[0]] != 1:
            return False
        pivots.append(nonzero[0])
    if any(a >= b for a, b in zip(pivots, pivots[1:])):
        return False
    for i, col in enumerate(pivots):
        if any(rows[t][col] != 0 for t in range(len(rows)) if t != i):
            return False
    return True


# ============================================================================
# BATCH SPAN (table lookups)
# ============================================================================

@lru_cache(maxsize=None)
def normalized_vectors(q: int, length: int) -> np.ndarray:
    """
    Vetores de comprimento `length` cujo primeiro não nulo é 1, em ordem
    lexicográfica (os pontos de PG(length-1, q)).
    """
    if length == 0:
        return np.zeros((0, 0), dtype=np.int64)
    blocks = []
    for tail in range(length):
        lead = length - 1 - tail
        count = q ** tail
        block = np.zeros((count, length), dtype=np.int64)
        block[:, lead] = 1
        if tail:
            block[:, lead + 1:] = digits(np.arange(count, dtype=np.int64), q, tail)
        blocks.append(block)
    return np.vstack(blocks)


def digits(values: np.ndarray, base: int, width: int) -> np.ndarray:
    """Dígitos big-endian de `values` em base `base` com `width` posições"""
    powers = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (values[:, None] // powers[None, :]) % base


def point_indices(q: int, vectors: np.ndarray) -> np.ndarray:
    """
    Índice, na ordem lexicográfica de PG(n-1, q), de vetores já normalizados.

    Os pontos com t coordenadas após o pivô ocupam as posições
    [(q^t - 1)/(q - 1), (q^{t+1} - 1)/(q - 1)).
    """
    n = vectors.shape[-1]
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = vectors @ weights
    lead = np.argmax(vectors != 0, axis=-1)
    tail = n - 1 - lead
    q_tail = q ** tail
    return (q_tail - 1) // (q - 1) + codes - q_tail


def span_points(field: Field, bases: np.ndarray) -> np.ndarray:
    """
    Para bases (N, r, n) em forma escalonada reduzida, devolve (N, P, n) com os
    P = (q^r - 1)/(q - 1) pontos normalizados de cada subespaço.

    Combinações com coeficientes normalizados já saem normalizadas: na coluna do
    pivô i o vetor vale exatamente o coeficiente i.
    """
    tables = field.tables
    count, r, n = bases.shape
    coefficients = normalized_vectors(field.q, r)
    products = tables.mul[coefficients[None, :, :, None], bases[:, None, :, :]]
    acc = products[:, :, 0, :]
    for i in range(1, r):
        acc = tables.add[acc, products[:, :, i, :]]
    return acc
