"""
Matrices (q,s)-Cauchy: forma estándar de los códigos de Gabidulin,
recuperación de parámetros y de puntos de evaluación, y construcciones
de Hankel y Toeplitz.
"""

import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from gabidulin.errors import (
    DependentPoints,
    DimensionError,
    GabidulinError,
    NotCirculant,
    NotQCauchy,
    SingularSystem,
    ValidationFailed,
    VerificationFailed,
)
from gabidulin.models.codes import rank_weight
from gabidulin.utils.linalg import (
    circulant_from,
    hankel_from,
    is_circulant,
    moore_matrix,
    q_rank,
    q_support,
    toeplitz_from,
)

logger = logging.getLogger(__name__)


def _outer(alpha, beta):
    """Matriz α^T β"""
    return alpha[:, np.newaxis] * beta[np.newaxis, :]


@dataclass(frozen=True, eq=False)
class QCauchyParams:
    """Parámetros (α, β, B, s, γ) de una matriz (q,s)-Cauchy"""
    tower: object
    alpha: object
    beta: object
    B: object
    s: int
    gamma: object = None

    def __post_init__(self):
        tower = self.tower
        object.__setattr__(self, 'alpha', tower.as_array(self.alpha).reshape(-1))
        object.__setattr__(self, 'beta', tower.as_array(self.beta).reshape(-1))
        B = np.asarray(self.B, dtype=np.int64).reshape(self.alpha.size, self.beta.size)
        object.__setattr__(self, 'B', tower.base(B))
        gamma = tower.default_gamma if self.gamma is None else tower.as_array(self.gamma)
        object.__setattr__(self, 'gamma', gamma)

    @property
    def k(self):
        return int(self.alpha.size)

    @property
    def r(self):
        return int(self.beta.size)

    @property
    def n(self):
        return self.k + self.r

    def with_gamma(self, gamma):
        return replace(self, gamma=gamma)

    def to_dict(self):
        """Convierte los parámetros a diccionario"""
        return {
            'alpha': [int(x) for x in self.alpha],
            'beta': [int(x) for x in self.beta],
            'B': self.B.view(np.ndarray).tolist(),
            's': self.s,
            'gamma': int(self.gamma),
        }


@dataclass(frozen=True)
class Violation:
    """Condición incumplida por unos parámetros"""
    condition: str
    message: str

    def __str__(self):
        return f'{self.condition}: {self.message}'


@dataclass
class StructuredCode:
    """Salida de una construcción estructurada"""
    X: object
    params: QCauchyParams
    ell: int


@dataclass
class CirculantWitness:
    """Palabra de peso bajo en un código con parte no sistemática circulante"""
    codeword: object
    weight: int
    not_mrd: bool


def validate(params):
    """Valida las condiciones (A), (B), (C) y la normalización β_1 = 1"""
    tower = params.tower
    violations = []

    if math.gcd(params.s, tower.m) != 1:
        violations.append(Violation('s', f'gcd(s={params.s}, m={tower.m}) != 1'))
    if params.k == 0 or params.r == 0:
        violations.append(Violation('dimensions', 'alpha y beta no pueden ser vacíos'))
        return violations
    if tower.trace(params.gamma) == 0:
        violations.append(Violation('gamma', 'Tr(gamma) = 0'))

    if q_rank(tower, params.alpha) != params.k:
        violations.append(Violation('A', f'rk_q(alpha) != {params.k}'))
    if q_rank(tower, params.beta) != params.r:
        violations.append(Violation('B', f'rk_q(beta) != {params.r}'))

    traces = tower.trace(_outer(params.alpha, params.beta))
    if np.any(traces != 0):
        violations.append(Violation('C', 'supp_q(beta) no está contenido en supp_q(alpha)^×'))
    if params.beta[0] != 1:
        violations.append(Violation('normalization', 'beta_1 debe ser 1'))
    return violations


def build(params):
    """X_ij = π_s(α_i β_j) + B_ij"""
    violations = validate(params)
    if violations:
        raise ValidationFailed('; '.join(str(v) for v in violations),
                               violations=[str(v) for v in violations])
    tower = params.tower
    outer = _outer(params.alpha, params.beta)
    return tower.pi(outer, params.s, params.gamma) + tower.embed(params.B)


def recover_params(tower, X, s, gamma=None):
    """Recupera (α, β, B) a partir de X con la normalización β_1 = 1"""
    tower.check_s(s)
    X = tower.as_array(X)
    phi = tower.phi(X, s)
    alpha = phi[:, 0]
    if alpha[0] == 0:
        raise NotQCauchy('Φ_s(X) tiene la primera entrada nula')
    beta = phi[0] / alpha[0]
    if not np.array_equal(_outer(alpha, beta), phi):
        raise NotQCauchy('Φ_s(X) no es de rango uno')

    try:
        base_part = X - tower.pi(_outer(alpha, beta), s, gamma)
    except GabidulinError as error:
        raise NotQCauchy(error.message)
    if not np.all(tower.in_base(base_part)):
        raise NotQCauchy('X - π_s(α^T β) no está sobre F_q')

    params = QCauchyParams(tower, alpha, beta, tower.to_base(base_part).view(np.ndarray), s, gamma)
    violations = validate(params)
    if violations:
        raise NotQCauchy('; '.join(str(v) for v in violations), violations=[str(v) for v in violations])
    if not np.array_equal(build(params), X):
        raise NotQCauchy('La reconstrucción no reproduce X')
    return params


def recover_points(params):
    """Puntos de evaluación g con g_1 = 1 tales que G_{k,s}(g) tiene forma (I_k | X)"""
    violations = validate(params)
    if violations:
        raise ValidationFailed('; '.join(str(v) for v in violations))
    tower, k, s = params.tower, params.k, params.s
    X = build(params)

    head = tower.field.Ones(1)
    if k > 1:
        # Σ_{j>=2} g_j σ^{-t}(α_j) = -σ^{-t}(α_1), t = 1, ..., k-1
        shifted = tower.frobenius(params.alpha, -s)
        system = moore_matrix(tower, shifted[1:], k - 1, -s)
        rhs = -moore_matrix(tower, shifted[:1], k - 1, -s)[:, 0]
        try:
            solution = np.linalg.solve(system, rhs)
        except np.linalg.LinAlgError:
            raise SingularSystem('El sistema de Moore para g_2, ..., g_k es singular')
        head = np.concatenate([head, solution])
    tail = head @ X
    g = np.concatenate([head, tail])

    if not np.array_equal(moore_matrix(tower, head, k, s) @ X, moore_matrix(tower, tail, k, s)):
        raise VerificationFailed('M_{k,s}(g_1..g_k) X != M_{k,s}(g_{k+1}..g_n)')
    if q_rank(tower, g) != params.n:
        raise VerificationFailed('Los puntos recuperados no son independientes sobre F_q')
    logger.debug('Puntos recuperados: %s', [int(x) for x in g])
    return g


def inverse_moore_factor(tower, g, k, s):
    """X = M_{k,s}(g_1..g_k)^{-1} M_{k,s}(g_{k+1}..g_n)"""
    g = tower.as_array(g).reshape(-1)
    if not 0 < k < g.size:
        raise DimensionError(f'Se requiere 0 < k < n (k={k}, n={g.size})')
    if q_rank(tower, g) != g.size:
        raise DependentPoints('Los puntos deben ser independientes sobre F_q')
    head = moore_matrix(tower, g[:k], k, s)
    return np.linalg.inv(head) @ moore_matrix(tower, g[k:], k, s)


# Construcciones estructuradas

def _structured_b(tower, k, r, diagonals, builder):
    if diagonals is None:
        return tower.base.Zeros((k, r))
    values = np.asarray(diagonals, dtype=np.int64).reshape(-1)
    if np.any((values < 0) | (values >= tower.q)):
        raise ValidationFailed(f'Las diagonales de B deben estar en F_{tower.q}', diagonals=values.tolist())
    values = tower.base(values)
    return builder(values, k, r)


def _check_structured(tower, k, n):
    if not 0 < k < n <= tower.m:
        raise DimensionError(f'Se requiere 0 < k < n <= m (k={k}, n={n}, m={tower.m})')


def build_hankel(tower, k, n, s, primitive=None, gamma=None, b_diagonals=None):
    """Código de Gabidulin con parte no sistemática de Hankel"""
    _check_structured(tower, k, n)
    primitive = tower.primitive if primitive is None else tower.as_array(primitive)
    r = n - k
    ell = tower.consecutive_trace_zero_start(primitive)
    alpha = primitive ** np.arange(ell, ell + k)
    beta = primitive ** np.arange(r)
    B = _structured_b(tower, k, r, b_diagonals, hankel_from)
    params = QCauchyParams(tower, alpha, beta, B.view(np.ndarray), s, gamma)
    return StructuredCode(build(params), params, ell)


def build_toeplitz(tower, k, n, s, primitive=None, gamma=None, b_diagonals=None):
    """Código de Gabidulin con parte no sistemática de Toeplitz"""
    _check_structured(tower, k, n)
    primitive = tower.primitive if primitive is None else tower.as_array(primitive)
    r = n - k
    ell = tower.consecutive_trace_zero_start(primitive)
    alpha = primitive ** np.arange(ell + r - 1, ell + n - 1)
    beta = (primitive ** -1) ** np.arange(r)
    B = _structured_b(tower, k, r, b_diagonals, toeplitz_from)
    params = QCauchyParams(tower, alpha, beta, B.view(np.ndarray), s, gamma)
    return StructuredCode(build(params), params, ell)


def circulant_demo(tower, X):
    """Testigo de que C_X con X circulante k × k no es MRD para n = 2k >= 4"""
    X = tower.as_array(X)
    if not is_circulant(X):
        raise NotCirculant()
    k = X.shape[0]
    generator = np.hstack((tower.field.Identity(k), X))
    codeword = tower.field.Ones(k) @ generator
    weight = rank_weight(tower, codeword)
    if weight > 2:
        raise VerificationFailed(f'Peso de rango {weight} > 2 para el mensaje (1, ..., 1)')
    not_mrd = weight < k + 1
    if 2 * k >= 4 and not not_mrd:
        raise VerificationFailed('El testigo no descarta la propiedad MRD')
    return CirculantWitness(codeword, weight, not_mrd)


# Generadores aleatorios

def _random_span(tower, subspace, count, rng, prefix=None):
    """count elementos aleatorios del subespacio, independientes junto con el prefijo"""
    prefix = tower.field.Zeros(0) if prefix is None else prefix
    target = prefix.size + count
    while True:
        coeffs = rng.integers(0, tower.q, size=(count, subspace.dim))
        candidate = np.concatenate([prefix, tower.embed(coeffs) @ subspace.basis])
        if q_rank(tower, candidate) == target:
            return candidate


def random_params(tower, k, n, s, rng, gamma=None):
    """Parámetros (q,s)-Cauchy válidos aleatorios con β_1 = 1"""
    _check_structured(tower, k, n)
    alpha = _random_span(tower, tower.kernel_T(tower.field(1)), k, rng)
    orthogonal = tower.trace_orthogonal(q_support(tower, alpha))
    beta = _random_span(tower, orthogonal, n - k - 1, rng, prefix=tower.field.Ones(1))
    B = rng.integers(0, tower.q, size=(k, n - k))
    return QCauchyParams(tower, alpha, beta, B, s, gamma)


def random_circulant(tower, k, rng):
    """Matriz circulante k × k aleatoria sobre F_{q^m}"""
    return circulant_from(tower.field.Random(k, seed=rng))
