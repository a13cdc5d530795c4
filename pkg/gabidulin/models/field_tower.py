"""
Torre de cuerpos finitos F_p ⊂ F_q ⊂ F_{q^m} y maquinaria de la traza.

Los elementos de F_{q^m} se representan como arreglos de ``galois`` sobre un
cuerpo plano GF(p^{em}) cuyo polinomio de definición es el polinomio mínimo
del elemento primitivo elegido. Las coordenadas sobre F_q (las de la torre) se
obtienen con un cambio de base F_p-lineal fijo.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property

import galois
import numpy as np

from gabidulin.config import DEFAULT_LOG_TABLE_LIMIT
from gabidulin.errors import (
    BadGamma,
    BadParameterS,
    NoPrimitiveFound,
    NotABasis,
    NotInKernel,
    NotIrreducible,
    NotPrimitive,
    VerificationFailed,
    ZeroFunctional,
)

logger = logging.getLogger(__name__)


def _digits(values, base, width):
    """Dígitos little-endian de enteros en la base dada"""
    values = np.asarray(values, dtype=np.int64)
    return (values[..., np.newaxis] // base ** np.arange(width, dtype=np.int64)) % base


class FieldTower:
    """Cuerpo F_{q^m} como extensión de grado m de F_q = F_{p^e}"""

    def __init__(self, p, e, base_modulus, m, ext_modulus, log_table_limit=DEFAULT_LOG_TABLE_LIMIT):
        if not galois.is_prime(p):
            raise NotIrreducible(f'p={p} no es primo')
        if e < 1 or m < 2:
            raise NotIrreducible(f'Grados inválidos: e={e}, m={m}')

        self.p, self.e, self.m = p, e, m
        self.q = p ** e
        self.order = self.q ** m
        self.log_table_limit = log_table_limit
        self.prime = galois.GF(p)

        self.base_modulus = tuple(int(c) % p for c in base_modulus)
        self.base = self._build_base()
        self.ext_modulus = tuple(self.base_int(c) for c in ext_modulus)
        self.ext_poly = self._build_ext()

        self.primitive_coords, primitive_poly = self._find_primitive()
        self._to_tower, self._to_flat, minimal = self._change_of_basis(primitive_poly)

        mode = None if self.order <= log_table_limit else 'jit-calculate'
        self.field = galois.GF(p ** (e * m), irreducible_poly=minimal, primitive_element=p, compile=mode)
        self.primitive = self.field.primitive_element

        lut = np.zeros((self.q, m), dtype=np.int64)
        lut[:, 0] = np.arange(self.q)
        self._embed_lut = self.element(lut).view(np.ndarray).astype(np.int64)

        logger.debug('Torre construida: %r', self)

    # Construcción

    def _build_base(self):
        """Construye F_q a partir del módulo base"""
        coeffs = list(self.base_modulus)
        if len(coeffs) != self.e + 1 or coeffs[-1] != 1:
            raise NotIrreducible('El módulo base debe ser mónico de grado e')
        poly = galois.Poly(coeffs[::-1], field=self.prime)
        if not poly.is_irreducible():
            raise NotIrreducible(f'El módulo base {poly} no es irreducible sobre F_{self.p}')
        if self.e == 1:
            return self.prime
        return galois.GF(self.q, irreducible_poly=poly)

    def _build_ext(self):
        """Construye el polinomio de la extensión F_{q^m}/F_q"""
        coeffs = list(self.ext_modulus)
        if len(coeffs) != self.m + 1 or coeffs[-1] != 1:
            raise NotIrreducible('El módulo de la extensión debe ser mónico de grado m')
        poly = galois.Poly(coeffs[::-1], field=self.base)
        if not poly.is_irreducible():
            raise NotIrreducible(f'El módulo {poly} no es irreducible sobre F_{self.q}')
        return poly

    def base_int(self, value):
        """Entero de F_q a partir de un entero o de una lista de coeficientes sobre F_p"""
        if isinstance(value, (list, tuple)):
            if len(value) > self.e:
                raise NotIrreducible(f'Coeficiente {value} con más de e={self.e} componentes')
            return sum((int(c) % self.p) * self.p ** j for j, c in enumerate(value))
        value = int(value)
        if not 0 <= value < self.q:
            raise NotIrreducible(f'Coeficiente {value} fuera de F_{self.q}')
        return value

    def _poly_coeffs(self, poly):
        """Coeficientes little-endian (enteros de F_q, longitud m) de un polinomio reducido"""
        coeffs = [int(c) for c in poly.coeffs[::-1]]
        return coeffs + [0] * (self.m - len(coeffs))

    def _find_primitive(self):
        """Busca el primer elemento primitivo en orden creciente de coordenadas"""
        n = self.order - 1
        primes, _ = galois.factors(n)
        one = galois.Poly.One(field=self.base)
        for candidate in range(1, self.order):
            coeffs = [int(c) for c in _digits(candidate, self.q, self.m)]
            poly = galois.Poly(coeffs[::-1], field=self.base)
            if all(pow(poly, n // r, self.ext_poly) != one for r in primes):
                logger.debug('Elemento primitivo encontrado: %s', coeffs)
                return tuple(coeffs), poly
        raise NoPrimitiveFound('No hay elemento primitivo: revise el módulo de la extensión')

    def _change_of_basis(self, primitive_poly):
        """Matrices de cambio de base entre coordenadas de la torre y del cuerpo plano"""
        em = self.e * self.m
        rows = []
        power = galois.Poly.One(field=self.base)
        for _ in range(em + 1):
            rows.append(_digits(self._poly_coeffs(power), self.p, self.e).reshape(em))
            power = (power * primitive_poly) % self.ext_poly
        powers = self.prime(np.array(rows))
        to_tower = powers[:em]
        to_flat = np.linalg.inv(to_tower)
        top = powers[em] @ to_flat
        minimal = galois.Poly([1] + [int(c) for c in (-top)[::-1]], field=self.prime)
        return to_tower, to_flat, minimal

    # Conversiones

    def as_array(self, values):
        """Convierte enteros, listas o arreglos al cuerpo F_{q^m}"""
        if isinstance(values, self.field):
            return values
        return self.field(np.asarray(values, dtype=np.int64))

    def element(self, coeffs):
        """Elemento(s) de F_{q^m} desde coordenadas sobre F_q (última dimensión = m)"""
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape[-1] != self.m:
            raise ValueError(f'Se esperaban {self.m} coordenadas, hay {coeffs.shape[-1]}')
        em = self.e * self.m
        lead = coeffs.shape[:-1]
        tower = self.prime(_digits(coeffs, self.p, self.e).reshape(-1, em))
        flat = (tower @ self._to_flat).view(np.ndarray).astype(np.int64)
        ints = flat @ (self.p ** np.arange(em, dtype=np.int64))
        return self.field(ints.reshape(lead))

    def coefficients(self, x):
        """Coordenadas sobre F_q de elemento(s) de F_{q^m} (arreglo de F_q, última dimensión = m)"""
        x = self.as_array(x)
        em = self.e * self.m
        lead = x.shape
        flat = self.prime(_digits(x.view(np.ndarray), self.p, em).reshape(-1, em))
        tower = (flat @ self._to_tower).view(np.ndarray).astype(np.int64)
        coeffs = tower.reshape(lead + (self.m, self.e)) @ (self.p ** np.arange(self.e, dtype=np.int64))
        return self.base(coeffs)

    def embed(self, b):
        """Sumerge elementos de F_q en F_{q^m}"""
        return self.field(self._embed_lut[np.asarray(b, dtype=np.int64)])

    def in_base(self, x):
        """Indica, entrada a entrada, si x pertenece a F_q"""
        x = self.as_array(x)
        return np.asarray(x ** self.q == x)

    def to_base(self, x):
        """Proyecta elementos de F_q ⊂ F_{q^m} al arreglo de F_q"""
        if not np.all(self.in_base(x)):
            raise ValueError('El elemento no pertenece a F_q')
        return self.coefficients(x)[..., 0]

    @cached_property
    def power_basis(self):
        """Base 1, a, ..., a^{m-1} de F_{q^m} sobre F_q (a = variable del módulo)"""
        return self.element(np.eye(self.m, dtype=np.int64))

    def elements(self):
        """Todos los elementos en el orden determinista 0, a^0, a^1, ..."""
        powers = self.primitive ** np.arange(self.order - 1)
        return np.concatenate([self.field.Zeros(1), powers])

    @cached_property
    def log_table(self):
        """Tabla de logaritmos discretos (None si el cuerpo supera el límite)"""
        if self.order > self.log_table_limit:
            return None
        exps = (self.primitive ** np.arange(self.order - 1)).view(np.ndarray).astype(np.int64)
        table = np.full(self.order, -1, dtype=np.int64)
        table[exps] = np.arange(self.order - 1)
        return table

    def discrete_log(self, x):
        """Logaritmo discreto en base al elemento primitivo"""
        x = self.as_array(x)
        if x == 0:
            raise ArithmeticError('El cero no tiene logaritmo discreto')
        if self.log_table is not None:
            return int(self.log_table[int(x)])
        return int(x.log())

    # Aritmética polinómica de referencia

    def _as_poly(self, x):
        coeffs = self.coefficients(x)
        return galois.Poly(coeffs[::-1], field=self.base)

    def poly_multiply(self, x, y):
        """Producto por aritmética polinómica módulo ext_modulus (camino de referencia)"""
        product = (self._as_poly(x) * self._as_poly(y)) % self.ext_poly
        return self.element(self._poly_coeffs(product))

    def poly_add(self, x, y):
        """Suma por aritmética polinómica (camino de referencia)"""
        total = self._as_poly(x) + self._as_poly(y)
        return self.element(self._poly_coeffs(total))

    # Frobenius y traza

    def check_s(self, s):
        """Verifica que gcd(s, m) = 1"""
        if math.gcd(int(s), self.m) != 1:
            raise BadParameterS(f'gcd(s={s}, m={self.m}) != 1')

    def frobenius(self, x, s=1):
        """θ^s(x) = x^{q^s}, con s reducido módulo m"""
        return self.as_array(x) ** (self.q ** (int(s) % self.m))

    def trace(self, x):
        """Traza de F_{q^m} sobre F_q (valor en F_q ⊂ F_{q^m})"""
        x = self.as_array(x)
        total = x
        conjugate = x
        for _ in range(self.m - 1):
            conjugate = conjugate ** self.q
            total = total + conjugate
        return total

    def trace_form(self, x, y):
        """Forma traza tr(x, y) = Tr(xy)"""
        return self.trace(self.as_array(x) * self.as_array(y))

    def phi(self, x, s):
        """φ_s(x) = θ^s(x) - x"""
        self.check_s(s)
        x = self.as_array(x)
        return self.frobenius(x, s) - x

    @cached_property
    def default_gamma(self):
        """Primer elemento (en el orden determinista) con traza no nula"""
        powers = self.elements()[1:]
        nonzero = np.flatnonzero(np.asarray(self.trace(powers) != 0))
        return powers[int(nonzero[0])]

    def pi(self, alpha, s, gamma=None):
        """Preimagen explícita π_s: devuelve x con φ_s(x) = alpha, para Tr(alpha) = 0"""
        self.check_s(s)
        gamma = self.default_gamma if gamma is None else self.as_array(gamma)
        tr_gamma = self.trace(gamma)
        if tr_gamma == 0:
            raise BadGamma(f'Tr(gamma) = 0 para gamma={int(gamma)}')
        alpha = self.as_array(alpha)
        if np.any(self.trace(alpha) != 0):
            raise NotInKernel('pi_s solo está definida sobre ker(Tr)')

        total = self.field.Zeros(alpha.shape)
        partial = alpha
        conjugate = alpha
        gamma_conjugate = gamma
        for _ in range(self.m - 1):
            gamma_conjugate = self.frobenius(gamma_conjugate, s)
            total = total + gamma_conjugate * partial
            conjugate = self.frobenius(conjugate, s)
            partial = partial + conjugate
        return -total / tr_gamma

    # Rango sobre F_q y dualidad

    def rank_over_base(self, v):
        """Dimensión sobre F_q del subespacio generado por las entradas de v"""
        v = self.as_array(v).reshape(-1)
        if v.size == 0:
            return 0
        return int(np.linalg.matrix_rank(self.coefficients(v)))

    def kernel_T(self, alpha):
        """Núcleo del funcional T_alpha(x) = Tr(alpha x)"""
        alpha = self.as_array(alpha)
        if alpha == 0:
            raise ZeroFunctional('T_0 es idénticamente nulo')
        return self.trace_orthogonal(SubspaceFq.spanned_by(self, alpha.reshape(1)))

    def trace_orthogonal(self, subspace):
        """Espacio traza-ortogonal S^× = ∩ ker(T_b) sobre una base de S"""
        if subspace.dim == 0:
            return SubspaceFq.spanned_by(self, self.power_basis)
        products = subspace.basis[:, np.newaxis] * self.power_basis[np.newaxis, :]
        gram = self.to_base(self.trace(products))
        null = gram.null_space()
        if null.shape[0] == 0:
            return SubspaceFq.zero(self)
        return SubspaceFq.spanned_by(self, self.element(null.view(np.ndarray)))

    def dual_basis(self, basis):
        """Base dual respecto de la forma traza"""
        basis = self.as_array(basis).reshape(-1)
        if basis.size != self.m or self.rank_over_base(basis) != self.m:
            raise NotABasis(f'Se requieren {self.m} elementos independientes sobre F_q')
        gram = self.to_base(self.trace(basis[:, np.newaxis] * basis[np.newaxis, :]))
        dual = self.embed(np.linalg.inv(gram)) @ basis

        check = self.to_base(self.trace(basis[:, np.newaxis] * dual[np.newaxis, :]))
        if not np.array_equal(check, self.base.Identity(self.m)):
            raise VerificationFailed('La base dual no satisface tr(a_i, b_j) = δ_ij')
        return dual

    def consecutive_trace_zero_start(self, gamma=None):
        """Menor ℓ tal que γ^ℓ, ..., γ^{ℓ+m-2} tienen traza nula"""
        gamma = self.primitive if gamma is None else self.as_array(gamma)
        if gamma == 0 or gamma.multiplicative_order() != self.order - 1:
            raise NotPrimitive(f'{int(gamma)} no es primitivo')

        period = self.order - 1
        powers = gamma ** np.arange(period)

        # construcción: T_β anula 1, γ, ..., γ^{m-2}
        beta = self.dual_basis(powers[:self.m])[-1]
        multiples = self.embed(np.arange(1, self.q)) * beta
        constructive = min(int(np.flatnonzero(np.asarray(powers == c))[0]) for c in multiples)

        # comprobación por barrido
        zero = np.asarray(self.trace(powers) == 0)
        window = (np.arange(period)[:, np.newaxis] + np.arange(self.m - 1)) % period
        runs = np.all(zero[window], axis=1)
        scanned = int(np.argmax(runs))
        if not runs[scanned] or scanned != constructive:
            raise VerificationFailed(f'Barrido ({scanned}) y construcción ({constructive}) no coinciden')
        logger.debug('Inicio de la racha de trazas nulas: %d', constructive)
        return constructive

    def to_dict(self):
        """Convierte la torre a diccionario"""
        return {
            'p': self.p,
            'e': self.e,
            'q': self.q,
            'm': self.m,
            'order': self.order,
            'base_modulus': list(self.base_modulus),
            'ext_modulus': list(self.ext_modulus),
            'primitive': list(self.primitive_coords),
            'log_table': self.order <= self.log_table_limit,
        }

    def __repr__(self):
        return f'<FieldTower F_{self.q}^{self.m} ext={list(self.ext_modulus)}>'


@dataclass(frozen=True, eq=False)
class SubspaceFq:
    """Subespacio F_q-lineal de F_{q^m} con base reducida"""
    tower: FieldTower
    generators: galois.FieldArray
    basis: galois.FieldArray

    @classmethod
    def spanned_by(cls, tower, generators):
        """Subespacio generado por una lista de elementos"""
        generators = tower.as_array(generators).reshape(-1)
        if generators.size == 0:
            return cls(tower, generators, tower.field.Zeros(0))
        reduced = tower.coefficients(generators).row_reduce()
        rows = reduced[np.any(np.asarray(reduced != 0), axis=1)]
        if rows.shape[0] == 0:
            return cls(tower, generators, tower.field.Zeros(0))
        return cls(tower, generators, tower.element(rows.view(np.ndarray)))

    @classmethod
    def zero(cls, tower):
        """Subespacio nulo"""
        return cls(tower, tower.field.Zeros(0), tower.field.Zeros(0))

    @property
    def dim(self):
        return int(self.basis.size)

    def contains(self, x):
        """Indica si x pertenece al subespacio"""
        x = self.tower.as_array(x).reshape(1)
        if self.dim == 0:
            return bool(x[0] == 0)
        stacked = np.concatenate([self.basis, x])
        return self.tower.rank_over_base(stacked) == self.dim

    def is_subspace_of(self, other):
        """Indica si este subespacio está contenido en otro"""
        return all(other.contains(b) for b in self.basis)

    def same_space(self, other):
        """Igualdad de subespacios"""
        return self.dim == other.dim and self.is_subspace_of(other)

    def elements(self):
        """Enumera los q^dim elementos del subespacio"""
        if self.dim == 0:
            return self.tower.field.Zeros(1)
        coeffs = np.array(list(itertools.product(range(self.tower.q), repeat=self.dim)), dtype=np.int64)
        return self.tower.embed(coeffs) @ self.basis

    def __repr__(self):
        return f'<SubspaceFq dim={self.dim} de {self.tower!r}>'


def tower_build(p, e, base_modulus, m, ext_modulus, log_table_limit=DEFAULT_LOG_TABLE_LIMIT):
    """Construye y valida una torre F_p ⊂ F_q ⊂ F_{q^m}"""
    return FieldTower(p, e, base_modulus, m, ext_modulus, log_table_limit=log_table_limit)


def standard_tower(q, m, log_table_limit=DEFAULT_LOG_TABLE_LIMIT):
    """Torre estándar: polinomio de Conway si q es primo, primitivo en otro caso"""
    if not galois.is_prime_power(q):
        raise NotIrreducible(f'q={q} no es potencia de primo')
    primes, exponents = galois.factors(q)
    p, e = int(primes[0]), int(exponents[0])
    if e == 1:
        base_modulus = [0, 1]
        try:
            ext = galois.conway_poly(p, m)
        except LookupError:
            ext = galois.primitive_poly(p, m)
    else:
        base_modulus = [int(c) for c in galois.GF(q).irreducible_poly.coeffs[::-1]]
        ext = galois.primitive_poly(q, m)
    ext_modulus = [int(c) for c in ext.coeffs[::-1]]
    return tower_build(p, e, base_modulus, m, ext_modulus, log_table_limit=log_table_limit)
