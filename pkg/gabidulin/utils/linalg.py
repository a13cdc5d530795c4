"""
Álgebra lineal exacta sobre F_{q^m} y F_q.
"""

import itertools
import logging

import numpy as np

from gabidulin.errors import CapExceeded, DimensionError, TooLarge
from gabidulin.models.field_tower import SubspaceFq

logger = logging.getLogger(__name__)

SUPERREGULAR_LIMIT = 6


def rref(matrix):
    """Forma escalonada reducida, rango y columnas pivote"""
    reduced = matrix.row_reduce()
    pivots = [int(np.argmax(row != 0)) for row in reduced if np.any(row)]
    return reduced, len(pivots), pivots


def rank(matrix):
    """Rango sobre el cuerpo de las entradas"""
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def q_rank(tower, v):
    """rk_q(v): dimensión sobre F_q del span de las entradas"""
    return tower.rank_over_base(v)


def q_support(tower, v):
    """supp_q(v) como subespacio con base reducida"""
    return SubspaceFq.spanned_by(tower, v)


def moore_matrix(tower, v, k, s):
    """Matriz de Moore k × n: la fila i es θ^{is} aplicado a v"""
    tower.check_s(s)
    if k < 1:
        raise DimensionError(f'La matriz de Moore necesita k >= 1 (k={k})')
    v = tower.as_array(v).reshape(-1)
    rows = [v]
    for _ in range(k - 1):
        rows.append(tower.frobenius(rows[-1], s))
    return tower.field(np.stack([row.view(np.ndarray) for row in rows]))


def phi_matrix(tower, matrix, s):
    """Φ_s(X) = θ^s(X) - X entrada a entrada"""
    return tower.phi(matrix, s)


def superregular(matrix):
    """Indica si todos los menores de la matriz son no nulos"""
    rows, cols = matrix.shape
    if max(rows, cols) > SUPERREGULAR_LIMIT:
        raise TooLarge(f'Matriz {rows}x{cols}: máximo {SUPERREGULAR_LIMIT}x{SUPERREGULAR_LIMIT}')
    if np.any(matrix == 0):
        return False
    for size in range(2, min(rows, cols) + 1):
        for row_set in itertools.combinations(range(rows), size):
            for col_set in itertools.combinations(range(cols), size):
                if np.linalg.det(matrix[np.ix_(row_set, col_set)]) == 0:
                    return False
    return True


def gaussian_binomial(n, k, q):
    """Coeficiente binomial gaussiano: número de subespacios de dimensión k de F_q^n"""
    if not 0 <= k <= n:
        raise DimensionError(f'Se requiere 0 <= k <= n (k={k}, n={n})')
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** n - q ** i
        denominator *= q ** k - q ** i
    return numerator // denominator


def enumerate_tq(base, k, n, cap):
    """Enumera T_q(k,n): matrices k × n sobre F_q de rango k en forma escalonada reducida.

    Orden: conjuntos de columnas pivote en orden lexicográfico y, dentro de cada
    uno, las entradas libres en orden de odómetro sobre F_q.
    """
    total = gaussian_binomial(n, k, base.order)
    if total > cap:
        raise CapExceeded(f'|T_q({k},{n})| = {total} supera el límite {cap}', size=total, cap=cap)
    logger.debug('Enumerando T_%d(%d,%d): %d matrices', base.order, k, n, total)

    for pivots in itertools.combinations(range(n), k):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivots]
        for values in itertools.product(range(base.order), repeat=len(free)):
            entries = np.zeros((k, n), dtype=np.int64)
            entries[np.arange(k), pivots] = 1
            for (i, j), value in zip(free, values):
                entries[i, j] = value
            yield base(entries)


# Matrices estructuradas

def is_hankel(matrix):
    """Entradas constantes a lo largo de las antidiagonales"""
    return bool(np.array_equal(matrix[1:, :-1], matrix[:-1, 1:]))


def is_toeplitz(matrix):
    """Entradas constantes a lo largo de las diagonales"""
    return bool(np.array_equal(matrix[:-1, :-1], matrix[1:, 1:]))


def is_circulant(matrix):
    """Matriz cuadrada cuyas filas son desplazamientos cíclicos de la primera"""
    rows, cols = matrix.shape
    if rows != cols:
        return False
    return all(np.array_equal(matrix[i], np.roll(matrix[0], i)) for i in range(rows))


def hankel_from(vector, rows, cols):
    """Matriz de Hankel con X[i, j] = a[i + j]"""
    if len(vector) != rows + cols - 1:
        raise DimensionError(f'Se esperaban {rows + cols - 1} valores para Hankel {rows}x{cols}')
    index = np.arange(rows)[:, np.newaxis] + np.arange(cols)
    return vector[index]


def toeplitz_from(vector, rows, cols):
    """Matriz de Toeplitz con X[i, j] = a[j - i + rows - 1]"""
    if len(vector) != rows + cols - 1:
        raise DimensionError(f'Se esperaban {rows + cols - 1} valores para Toeplitz {rows}x{cols}')
    index = np.arange(cols) - np.arange(rows)[:, np.newaxis] + rows - 1
    return vector[index]


def circulant_from(vector):
    """Matriz circulante con X[i, j] = a[(j - i) mod n]"""
    n = len(vector)
    index = (np.arange(n) - np.arange(n)[:, np.newaxis]) % n
    return vector[index]


def recognition_cost(k, n, m):
    """Estimación de operaciones sobre F_{q^m} del reconocimiento rápido"""
    elimination = k * k * n
    phi = m * k * (n - k)
    q_ranks = m * m * n
    rank_one = k * (n - k)
    return elimination + phi + q_ranks + rank_one
