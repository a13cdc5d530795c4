"""
Códigos de Gabidulin generalizados: construcción, codificación, distancia de
rango y criterios de reconocimiento.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from gabidulin.config import DEFAULT_DISTANCE_CAP, DEFAULT_ENUM_CAP
from gabidulin.errors import (
    CapExceeded,
    DependentPoints,
    DimensionError,
    NoStandardForm,
    RankDeficient,
)
from gabidulin.utils.linalg import (
    enumerate_tq,
    moore_matrix,
    phi_matrix,
    q_rank,
    rank,
    recognition_cost,
    rref,
    superregular,
)

logger = logging.getLogger(__name__)

CHUNK = 4096


class Verdict(Enum):
    NOT_MRD_SHAPE = 'not_mrd_shape'
    NOT_GABIDULIN = 'not_gabidulin'
    GABIDULIN = 'gabidulin'


@dataclass(frozen=True, eq=False)
class LinearizedPoly:
    """f_0 x + f_1 x^[s] + ... + f_{k-1} x^[s(k-1)], con [i] = q^i"""
    tower: object
    coeffs: object
    s: int

    def __post_init__(self):
        self.tower.check_s(self.s)
        object.__setattr__(self, 'coeffs', self.tower.as_array(self.coeffs).reshape(-1))

    @property
    def terms(self):
        return int(self.coeffs.size)

    def evaluate(self, x):
        """Evalúa el polinomio linealizado entrada a entrada"""
        x = self.tower.as_array(x)
        total = self.tower.field.Zeros(x.shape)
        conjugate = x
        for coeff in self.coeffs:
            total = total + coeff * conjugate
            conjugate = self.tower.frobenius(conjugate, self.s)
        return total

    def __repr__(self):
        return f'<LinearizedPoly s={self.s} coeffs={[int(c) for c in self.coeffs]}>'


@dataclass(frozen=True, eq=False)
class GabidulinSpec:
    """Código de Gabidulin generalizado G_{k,s}(g)"""
    tower: object
    g: object
    k: int
    s: int

    def __post_init__(self):
        object.__setattr__(self, 'g', self.tower.as_array(self.g).reshape(-1))
        self.tower.check_s(self.s)
        if not 0 < self.k < self.n <= self.tower.m:
            raise DimensionError(f'Se requiere 0 < k < n <= m (k={self.k}, n={self.n}, m={self.tower.m})')
        if q_rank(self.tower, self.g) != self.n:
            raise DependentPoints('Los puntos de evaluación deben ser independientes sobre F_q')

    @property
    def n(self):
        return int(self.g.size)

    def to_dict(self):
        """Convierte la especificación a diccionario"""
        return {'g': [int(x) for x in self.g], 'k': self.k, 's': self.s, 'n': self.n}


class CodeHandle:
    """Código F_{q^m}-lineal dado por una matriz generadora de rango completo por filas"""

    def __init__(self, tower, generator):
        self.tower = tower
        self.generator = tower.as_array(generator)
        if self.generator.ndim != 2:
            raise DimensionError('La matriz generadora debe ser bidimensional')
        if rank(self.generator) != self.k:
            raise RankDeficient(f'Rango {rank(self.generator)} < k={self.k}')

    @classmethod
    def systematic(cls, tower, X):
        """Código C_X generado por (I_k | X)"""
        X = tower.as_array(X)
        return cls(tower, np.hstack((tower.field.Identity(X.shape[0]), X)))

    @property
    def k(self):
        return int(self.generator.shape[0])

    @property
    def n(self):
        return int(self.generator.shape[1])

    @cached_property
    def reduced(self):
        """RREF de la matriz generadora"""
        reduced, _, pivots = rref(self.generator)
        return reduced, pivots

    @property
    def standard_form(self):
        """X tal que el código es C_X, o None si la RREF no es (I_k | X)"""
        reduced, pivots = self.reduced
        if pivots != list(range(self.k)):
            return None
        return reduced[:, self.k:]

    def require_standard_form(self):
        X = self.standard_form
        if X is None:
            raise NoStandardForm()
        return X

    def same_code(self, other):
        """Igualdad de espacios fila vía RREF"""
        if self.generator.shape != other.generator.shape:
            return False
        return bool(np.array_equal(self.reduced[0], other.reduced[0]))

    def __repr__(self):
        return f'<CodeHandle [{self.n},{self.k}] sobre {self.tower!r}>'


@dataclass
class Recognition:
    """Resultado del reconocimiento de un código"""
    verdict: Verdict
    s: int
    k: int
    n: int
    ops: int
    rank_phi: int = None
    row_q_rank: int = None
    col_q_rank: int = None

    def to_dict(self):
        """Convierte el resultado a diccionario"""
        data = {'verdict': self.verdict.value, 's': self.s}
        if self.rank_phi is not None:
            data.update(rank_phi=self.rank_phi, row_q_rank=self.row_q_rank, col_q_rank=self.col_q_rank)
        data['ops'] = self.ops
        return data

    def to_record(self):
        return ' '.join(f'{key}={value}' for key, value in self.to_dict().items())


# Codificación

def lin_eval(f, x):
    """Evaluación de un polinomio linealizado"""
    return f.evaluate(x)


def canonical_generator(spec):
    """Matriz generadora canónica M_{k,s}(g)"""
    return moore_matrix(spec.tower, spec.g, spec.k, spec.s)


def encode(spec, message):
    """Codifica m como m · M_{k,s}(g)"""
    message = spec.tower.as_array(message).reshape(-1)
    if message.size != spec.k:
        raise DimensionError(f'El mensaje debe tener {spec.k} símbolos')
    return message @ canonical_generator(spec)


def encode_by_evaluation(spec, message):
    """Codifica evaluando Σ m_i x^[si] en cada g_j"""
    return LinearizedPoly(spec.tower, message, spec.s).evaluate(spec.g)


def subspace_poly(tower, h, s):
    """Polinomio p_{h,s}(x) = det(M_{ℓ+1,s}(h_1, ..., h_ℓ, x)) por cofactores de la última columna"""
    h = tower.as_array(h).reshape(-1)
    ell = int(h.size)
    if ell == 0:
        return LinearizedPoly(tower, [1], s)
    if q_rank(tower, h) != ell:
        raise DependentPoints('p_{h,s} requiere puntos independientes sobre F_q')

    moore = moore_matrix(tower, h, ell + 1, s)
    coeffs = tower.field.Zeros(ell + 1)
    for i in range(ell + 1):
        minor = np.linalg.det(moore[[j for j in range(ell + 1) if j != i]])
        coeffs[i] = -minor if (i + ell) % 2 else minor
    return LinearizedPoly(tower, coeffs, s)


def systematic_basis(spec):
    """Base f_1, ..., f_k de G_{k,s} con f_i(g_j) = δ_ij para j <= k"""
    basis = []
    head = spec.g[:spec.k]
    for i in range(spec.k):
        others = head[[j for j in range(spec.k) if j != i]]
        poly = subspace_poly(spec.tower, others, spec.s)
        scale = poly.evaluate(head[i]) ** -1
        basis.append(LinearizedPoly(spec.tower, poly.coeffs * scale, spec.s))
    return basis


def evaluation_matrix(basis, g):
    """Matriz cuyas filas son los polinomios de la base evaluados en g"""
    rows = [f.evaluate(g).view(np.ndarray) for f in basis]
    return basis[0].tower.field(np.stack(rows))


# Distancia de rango

def rank_weight(tower, c):
    """Peso de rango: rk_q de las entradas del vector"""
    return q_rank(tower, c)


def min_rank_distance(code, cap=DEFAULT_DISTANCE_CAP):
    """Distancia mínima de rango por fuerza bruta sobre representantes proyectivos"""
    tower = code.tower
    total = tower.order ** code.k
    if total > cap:
        raise CapExceeded(f'q^(mk) = {total} supera el límite {cap}', size=total, cap=cap)

    best = code.n
    for lead in range(code.k):
        free = code.k - lead - 1
        count = tower.order ** free
        for start in range(0, count, CHUNK):
            index = np.arange(start, min(start + CHUNK, count), dtype=np.int64)
            messages = np.zeros((index.size, code.k), dtype=np.int64)
            messages[:, lead] = 1
            if free:
                messages[:, lead + 1:] = (index[:, np.newaxis] // tower.order ** np.arange(free)) % tower.order
            for codeword in tower.field(messages) @ code.generator:
                best = min(best, rank_weight(tower, codeword))
                if best == 1:
                    return best
    logger.debug('Distancia mínima de %r: %d', code, best)
    return best


def is_mrd(code, cap=DEFAULT_ENUM_CAP):
    """Criterio MRD: rk(E G^T) = k para toda E en T_q(k,n)"""
    tower = code.tower
    transposed = code.generator.T
    for E in enumerate_tq(tower.base, code.k, code.n, cap):
        if rank(tower.embed(E) @ transposed) < code.k:
            return False
    return True


# Criterios de Gabidulin

def is_gabidulin_given_mrd(tower, X, s):
    """Para C_X MRD: es Gabidulin de parámetro s si y solo si rk(Φ_s(X)) = 1"""
    return rank(phi_matrix(tower, tower.as_array(X), s)) == 1


def is_gabidulin_fast(tower, X, s, adjoin_one=False):
    """Criterio rápido sobre X de tamaño k × (n-k).

    Con ``adjoin_one`` las q-rangos se calculan sobre X adjuntando el 1 en
    lugar de sobre Φ_s(X); ambos caminos dan el mismo veredicto.
    """
    tower.check_s(s)
    X = tower.as_array(X)
    k, r = X.shape
    phi = phi_matrix(tower, X, s)
    if adjoin_one:
        one = tower.field.Ones(1)
        row_ok = q_rank(tower, np.concatenate([one, X[0]])) == r + 1
        col_ok = q_rank(tower, np.concatenate([one, X[:, 0]])) == k + 1
    else:
        row_ok = q_rank(tower, phi[0]) == r
        col_ok = q_rank(tower, phi[:, 0]) == k
    return row_ok and col_ok and rank(phi) == 1


def gabidulin_criterion(code, s, cap=DEFAULT_ENUM_CAP):
    """Oráculo lento: C_X es MRD y rk(Φ_s(X)) = 1"""
    X = code.standard_form
    if X is None:
        return False
    return is_mrd(code, cap) and is_gabidulin_given_mrd(code.tower, X, s)


def recognize(tower, G, s):
    """Reconoce si la matriz G genera un código de Gabidulin de parámetro s"""
    tower.check_s(s)
    code = CodeHandle(tower, G)
    if not 0 < code.k < code.n:
        raise DimensionError(f'Se requiere 0 < k < n (k={code.k}, n={code.n})')
    ops = recognition_cost(code.k, code.n, tower.m)

    X = code.standard_form
    if X is None:
        return Recognition(Verdict.NOT_MRD_SHAPE, s, code.k, code.n, ops)

    phi = phi_matrix(tower, X, s)
    result = Recognition(
        Verdict.NOT_GABIDULIN, s, code.k, code.n, ops,
        rank_phi=rank(phi),
        row_q_rank=q_rank(tower, phi[0]),
        col_q_rank=q_rank(tower, phi[:, 0]),
    )
    if result.rank_phi == 1 and result.row_q_rank == code.n - code.k and result.col_q_rank == code.k:
        result.verdict = Verdict.GABIDULIN
    logger.debug('Reconocimiento s=%d: %s', s, result.to_record())
    return result


def recognize_all_s(tower, G):
    """Reconoce para cada s coprimo con m"""
    return [recognize(tower, G, s) for s in range(1, tower.m) if math.gcd(s, tower.m) == 1]


# Dualidad

def dual_code(code):
    """Código dual generado por (-X^T | I_{n-k})"""
    X = code.require_standard_form()
    tower = code.tower
    return CodeHandle(tower, np.hstack((-X.T, tower.field.Identity(X.shape[1]))))


def permutation_equivalent_dual(code):
    """Comprueba que C_X^⊥ coincide con C_{-X^T} tras mover el bloque identidad al frente"""
    X = code.require_standard_form()
    dual = dual_code(code)
    r = X.shape[1]
    order = list(range(code.k, code.n)) + list(range(code.k))
    permuted = CodeHandle(code.tower, dual.generator[:, order])
    return permuted.same_code(CodeHandle.systematic(code.tower, -X.T)) and r == code.n - code.k


# Conteo

def count_gabidulin(q, m, n, k=None, s=None):
    """|Gab_q(k,n,m,s)| = ∏_{i=1}^{n-1} (q^m - q^i)"""
    total = 1
    for i in range(1, n):
        total *= q ** m - q ** i
    return total


@dataclass
class GabidulinCensus:
    """Resultado de la enumeración exhaustiva de códigos de Gabidulin"""
    codes: int
    vectors: int
    vectors_per_code: tuple


def enumerate_gabidulin_codes(tower, n, k, s, cap=DEFAULT_ENUM_CAP):
    """Cuenta los espacios fila distintos de M_{k,s}(g) sobre todos los g de q-rango n"""
    total = tower.order ** n
    if total > cap:
        raise CapExceeded(f'q^(mn) = {total} supera el límite {cap}', size=total, cap=cap)
    tower.check_s(s)

    codes = {}
    vectors = 0
    for values in itertools.product(range(tower.order), repeat=n):
        g = tower.field(np.array(values, dtype=np.int64))
        if q_rank(tower, g) != n:
            continue
        vectors += 1
        reduced, _, _ = rref(moore_matrix(tower, g, k, s))
        key = reduced.view(np.ndarray).astype(np.int64).tobytes()
        codes[key] = codes.get(key, 0) + 1
    logger.info('Censo: %d vectores, %d códigos', vectors, len(codes))
    return GabidulinCensus(len(codes), vectors, tuple(sorted(set(codes.values()))))


# Superregularidad

def _unitriangular(base, size):
    """Matrices triangulares superiores con unos en la diagonal sobre F_q"""
    upper = [(i, j) for i in range(size) for j in range(i + 1, size)]
    for values in itertools.product(range(base.order), repeat=len(upper)):
        entries = np.eye(size, dtype=np.int64)
        for (i, j), value in zip(upper, values):
            entries[i, j] = value
        yield entries


def mrd_superregular_check(tower, X, cap=DEFAULT_ENUM_CAP):
    """C_X es MRD si y solo si AXB + C es superregular para A, B unitriangulares y C sobre F_q"""
    X = tower.as_array(X)
    k, r = X.shape
    q = tower.q
    total = q ** (k * (k - 1) // 2) * q ** (r * (r - 1) // 2) * q ** (k * r)
    if total > cap:
        raise CapExceeded(f'{total} combinaciones (A, B, C) superan el límite {cap}', size=total, cap=cap)

    shifts = [tower.embed(np.array(values, dtype=np.int64).reshape(k, r))
              for values in itertools.product(range(q), repeat=k * r)]
    for A in _unitriangular(tower.base, k):
        left = tower.embed(A) @ X
        for B in _unitriangular(tower.base, r):
            product = left @ tower.embed(B)
            if not all(superregular(product + C) for C in shifts):
                return False
    return True


# Generadores aleatorios

def random_full_rank_points(tower, n, rng):
    """Vector aleatorio de n elementos independientes sobre F_q"""
    if n > tower.m:
        raise DimensionError(f'No hay {n} elementos independientes en F_q^{tower.m}')
    while True:
        g = tower.field.Random(n, seed=rng)
        if q_rank(tower, g) == n:
            return g


def random_gabidulin_spec(tower, k, n, s, rng):
    """Especificación de Gabidulin aleatoria"""
    return GabidulinSpec(tower, random_full_rank_points(tower, n, rng), k, s)
