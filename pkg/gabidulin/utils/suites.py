"""
Suites de verificación que ejecuta el comando ``verify``.

Cada suite devuelve un informe determinista cuyos registros tienen la forma
``suite=... check=... expected=... found=... pass|fail``.
"""

import itertools
import logging
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import wraps

import numpy as np

from gabidulin.config import DEFAULT_DISTANCE_CAP, DEFAULT_ENUM_CAP, DEFAULT_LOG_TABLE_LIMIT, DEFAULT_SEED
from gabidulin.errors import GabidulinError, UnknownSuite
from gabidulin.models.codes import (
    CodeHandle,
    GabidulinSpec,
    Verdict,
    canonical_generator,
    count_gabidulin,
    dual_code,
    encode,
    encode_by_evaluation,
    enumerate_gabidulin_codes,
    evaluation_matrix,
    is_gabidulin_fast,
    is_gabidulin_given_mrd,
    is_mrd,
    min_rank_distance,
    mrd_superregular_check,
    random_full_rank_points,
    random_gabidulin_spec,
    recognize,
    systematic_basis,
)
from gabidulin.models.field_tower import SubspaceFq, standard_tower
from gabidulin.models.q_cauchy import (
    QCauchyParams,
    build,
    build_hankel,
    build_toeplitz,
    circulant_demo,
    inverse_moore_factor,
    random_circulant,
    random_params,
    recover_params,
    recover_points,
    validate,
)
from gabidulin.utils.formats import (
    load_field,
    load_params,
    read_key_values,
    read_matrix,
    render_element,
    render_matrix,
)
from gabidulin.utils.linalg import is_hankel, is_toeplitz, phi_matrix, q_rank, rref

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')

SUITES = {}


@dataclass
class Check:
    """Una comprobación individual de una suite"""
    name: str
    expected: object
    found: object
    passed: bool = None
    informational: bool = False

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.found

    @property
    def status(self):
        if self.informational:
            return 'info'
        return 'pass' if self.passed else 'fail'

    def to_record(self, suite):
        return f'suite={suite} check={self.name} expected={self.expected} found={self.found} {self.status}'


@dataclass
class SuiteReport:
    """Informe de una suite"""
    suite: str
    options: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name, expected, found, passed=None, informational=False):
        check = Check(name, expected, found, passed, informational)
        self.checks.append(check)
        if not check.passed and not informational:
            logger.warning('Suite %s: falla %s (esperado %s, obtenido %s)', self.suite, name, expected, found)
        return check

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed and not c.informational]

    @property
    def passed(self):
        return not self.failures

    def to_records(self):
        lines = [check.to_record(self.suite) for check in self.checks]
        lines.append(f'suite={self.suite} checks={len(self.checks)} failed={len(self.failures)} '
                     f'{"pass" if self.passed else "fail"}')
        return lines

    def to_dict(self):
        return {
            'suite': self.suite,
            'options': self.options,
            'checks': [vars(c) | {'status': c.status} for c in self.checks],
            'passed': self.passed,
        }


def suite(name, aliases=(), **defaults):
    """Registra una suite con sus opciones por defecto y sus nombres alternativos"""
    def decorator(f):
        @wraps(f)
        def decorated(**options):
            merged = {
                'seed': DEFAULT_SEED,
                'cap': DEFAULT_ENUM_CAP,
                'distance_cap': DEFAULT_DISTANCE_CAP,
                'log_table_limit': DEFAULT_LOG_TABLE_LIMIT,
                **defaults,
            }
            merged.update({key: value for key, value in options.items() if value is not None})
            if 'q' in defaults:
                tower = merged.get('tower') or standard_tower(
                    merged['q'], merged['m'], log_table_limit=merged['log_table_limit'])
                merged.update(tower=tower, q=tower.q, m=tower.m)
            report = SuiteReport(name, merged)
            f(report, **merged)
            return report
        SUITES[name] = decorated
        for alias in aliases:
            SUITES[alias] = decorated
        return decorated
    return decorator


def run_suite(name, **options):
    """Ejecuta una suite registrada"""
    if name not in SUITES:
        raise UnknownSuite(f'Suite desconocida: {name}. Disponibles: {", ".join(sorted(SUITES))}')
    logger.info('Ejecutando suite %s', name)
    return SUITES[name](**options)


def _compact(text):
    """Matriz en una línea para los registros"""
    rows = text.strip().splitlines()[1:]
    return '[' + ','.join('[' + ','.join(row.split()) + ']' for row in rows) + ']'


def _golden(name):
    with open(os.path.join(DATA_DIR, name), encoding='utf-8') as handle:
        return handle.read()


def _all_matrices(tower, rows, cols):
    for values in itertools.product(range(tower.order), repeat=rows * cols):
        yield tower.field(np.array(values, dtype=np.int64).reshape(rows, cols))


def _coprime(m):
    return [s for s in range(1, m) if math.gcd(s, m) == 1]


def _key(matrix):
    return matrix.view(np.ndarray).astype(np.int64).tobytes()


# Ejemplos trabajados

@suite('paper-examples', aliases=('worked-examples',))
def worked_examples(report, log_table_limit, **_):
    """Reproduce los dos ejemplos trabajados y los compara con los archivos de referencia"""
    tower = load_field(os.path.join(DATA_DIR, 'f3_6.field'), log_table_limit)
    G = read_matrix(tower, os.path.join(DATA_DIR, 'f3_6_generator.txt'))
    X = CodeHandle(tower, G).require_standard_form()

    for name, matrix in (('f3_6_X', X), ('f3_6_phi', phi_matrix(tower, X, 1))):
        golden = _golden(f'{name}.golden')
        rendered = render_matrix(tower, matrix)
        report.add(name, _compact(golden), _compact(rendered), passed=golden == rendered)
    report.add('f3_6_verdict', 'gabidulin', recognize(tower, G, 1).verdict.value)
    report.add('f3_6_fast', True, is_gabidulin_fast(tower, X, 1))

    tower, params = load_params(os.path.join(DATA_DIR, 'hankel_f2_6.params'), log_table_limit=log_table_limit)
    golden = _golden('hankel_f2_6_X.golden')
    rendered = render_matrix(tower, build(params))
    report.add('hankel_X', _compact(golden), _compact(rendered), passed=golden == rendered)

    hankel = build_hankel(tower, 3, 6, 1, gamma=params.gamma)
    report.add('hankel_construction', _compact(golden), _compact(render_matrix(tower, hankel.X)),
               passed=render_matrix(tower, hankel.X) == golden)

    points = read_key_values(os.path.join(DATA_DIR, 'hankel_f2_6_points.golden'))
    report.add('hankel_ell', int(points.pop('ell')), tower.consecutive_trace_zero_start())
    g = recover_points(params)
    for key, expected in points.items():
        index = int(key.split('_')[1]) - 1
        report.add(key, expected, render_element(tower, g[index]))
    report.add('g_3', 'a^15', render_element(tower, g[2]), informational=True)


# Conteo

@suite('counting', q=2, m=3, n=3, k=1, s=1)
def counting(report, tower, q, m, n, k, s, cap, log_table_limit, **_):
    """Conteo exhaustivo de códigos de Gabidulin frente a la fórmula cerrada"""
    census = enumerate_gabidulin_codes(tower, n, k, s, cap)
    report.add('distinct_codes', count_gabidulin(q, m, n, k, s), census.codes)
    report.add('vectors_per_code', f'({tower.order - 1},)', str(census.vectors_per_code))

    rng = np.random.default_rng(0)
    spec = random_gabidulin_spec(tower, k, n, s, rng)
    scale = tower.field.Random(low=1, seed=rng)
    scaled = GabidulinSpec(tower, scale * spec.g, k, s)
    same = CodeHandle(tower, canonical_generator(spec)).same_code(CodeHandle(tower, canonical_generator(scaled)))
    report.add('scalar_law', True, same)


# Equivalencia de criterios

def _criteria(tower, X, s, cap):
    code = CodeHandle.systematic(tower, X)
    slow = is_mrd(code, cap) and is_gabidulin_given_mrd(tower, X, s)
    fast = is_gabidulin_fast(tower, X, s)
    variant = is_gabidulin_fast(tower, X, s, adjoin_one=True)
    return slow == fast == variant, fast


def _cauchy_matrices(tower, k, r, s):
    """Todas las matrices (q,s)-Cauchy con γ fijo y β_1 = 1"""
    kernel = tower.kernel_T(tower.field(1)).elements()
    found = set()
    for alpha in itertools.product(kernel, repeat=k):
        alpha = tower.field(np.array([int(a) for a in alpha], dtype=np.int64))
        if q_rank(tower, alpha) != k:
            continue
        orthogonal = tower.trace_orthogonal(SubspaceFq.spanned_by(tower, alpha)).elements()
        for tail in itertools.product(orthogonal, repeat=r - 1):
            beta = np.array([1] + [int(b) for b in tail], dtype=np.int64)
            for B in itertools.product(range(tower.q), repeat=k * r):
                params = QCauchyParams(tower, alpha, beta, np.array(B).reshape(k, r), s)
                if not validate(params):
                    found.add(_key(build(params)))
    return found


@suite('criteria-equivalence', q=2, m=3, n=3, s=1, samples=50, exhaustive=True)
def criteria_equivalence(report, tower, q, m, n, s, samples, seed, cap, exhaustive, log_table_limit, **_):
    """El criterio rápido coincide con MRD + rango de Φ_s igual a uno"""
    for k in range(1, n):
        r = n - k
        if not exhaustive or tower.order ** (k * r) > cap:
            continue
        disagreements, recognized = 0, set()
        for X in _all_matrices(tower, k, r):
            agree, fast = _criteria(tower, X, s, cap)
            disagreements += not agree
            if fast:
                recognized.add(_key(X))
        report.add(f'exhaustive_k{k}', 0, disagreements)
        report.add(f'gabidulin_count_k{k}', count_gabidulin(q, m, n), len(recognized))
        report.add(f'cauchy_correspondence_k{k}', True, recognized == _cauchy_matrices(tower, k, r, s))

    rng = np.random.default_rng(seed)
    disagreements = 0
    for i in range(samples):
        k = 1 + i % (n - 1)
        if i % 3 == 0:
            X = build(random_params(tower, k, n, s, rng))
        elif i % 3 == 1:
            X = build(random_params(tower, k, n, s, rng))
            X[rng.integers(k), rng.integers(n - k)] += tower.field.Random(low=1, seed=rng)
        else:
            X = tower.field.Random((k, n - k), seed=rng)
        agree, _ = _criteria(tower, X, s, cap)
        disagreements += not agree
    report.add('random_samples', 0, disagreements)


# Propiedad MRD

@suite('mrd', q=2, m=4, n=4, k=2, s=1, samples=20)
def mrd(report, tower, q, m, n, k, s, samples, seed, cap, distance_cap, log_table_limit, **_):
    """Distancia mínima, dualidad y superregularidad de códigos de Gabidulin"""
    rng = np.random.default_rng(seed)
    distance_ok = dual_ok = superregular_ok = 0
    for _ in range(samples):
        spec = random_gabidulin_spec(tower, k, n, s, rng)
        code = CodeHandle(tower, canonical_generator(spec))
        distance_ok += min_rank_distance(code, distance_cap) == n - k + 1
        dual_ok += recognize(tower, dual_code(code).generator, s).verdict is Verdict.GABIDULIN
        superregular_ok += mrd_superregular_check(tower, code.require_standard_form(), cap)
    report.add('min_distance', samples, distance_ok)
    report.add('dual_recognized', samples, dual_ok)
    report.add('superregular', samples, superregular_ok)

    agreement = 0
    for _ in range(samples):
        X = tower.field.Random((k, n - k), seed=rng)
        code = CodeHandle.systematic(tower, X)
        agreement += is_mrd(code, cap) == mrd_superregular_check(tower, X, cap)
    report.add('superregular_agreement', samples, agreement)


# Construcciones estructuradas

@suite('structured', q=2, m=4)
def structured(report, tower, q, m, log_table_limit, **_):
    """Hankel y Toeplitz para todo 0 < k < n <= m y todo s coprimo con m"""
    total = hankel_ok = toeplitz_ok = 0
    for n in range(2, m + 1):
        for k in range(1, n):
            for s in _coprime(m):
                total += 1
                hankel = build_hankel(tower, k, n, s)
                G = np.hstack((tower.field.Identity(k), hankel.X))
                hankel_ok += is_hankel(hankel.X) and recognize(tower, G, s).verdict is Verdict.GABIDULIN
                toeplitz = build_toeplitz(tower, k, n, s)
                G = np.hstack((tower.field.Identity(k), toeplitz.X))
                toeplitz_ok += is_toeplitz(toeplitz.X) and recognize(tower, G, s).verdict is Verdict.GABIDULIN
    report.add('hankel', total, hankel_ok)
    report.add('toeplitz', total, toeplitz_ok)


# Circulantes

@suite('circulant', q=2, m=4, n=4, samples=100)
def circulant(report, tower, q, m, n, samples, seed, distance_cap, log_table_limit, **_):
    """Los códigos con parte no sistemática circulante y k = n/2 no son MRD"""
    rng = np.random.default_rng(seed)
    k = n // 2
    witnesses = distances = 0
    for _ in range(samples):
        X = random_circulant(tower, k, rng)
        witness = circulant_demo(tower, X)
        witnesses += witness.weight <= 2 and witness.not_mrd
        distances += min_rank_distance(CodeHandle.systematic(tower, X), distance_cap) <= 2
    report.add('witness_weight', samples, witnesses)
    report.add('min_distance', samples, distances)


# Teoría de cuerpos

@suite('field-theory', q=2, m=4, samples=500)
def field_theory(report, tower, q, m, samples, seed, log_table_limit, **_):
    """Traza, φ_s, π_s, espacios traza-ortogonales y bases duales"""
    rng = np.random.default_rng(seed)
    elements = tower.elements()
    traces = tower.trace(elements)
    kernel = {int(x) for x, t in zip(elements, traces) if t == 0}

    report.add('trace_surjective', tower.q, len(set(int(t) for t in traces)))
    report.add('trace_in_base', True, bool(np.all(tower.in_base(traces))))
    report.add('kernel_size', tower.q ** (m - 1), len(kernel))

    linear = 0
    for _ in range(samples):
        x, y = tower.field.Random(2, seed=rng)
        c = tower.embed(rng.integers(tower.q))
        linear += bool(tower.trace(x + c * y) == tower.trace(x) + c * tower.trace(y))
    report.add('trace_linear', samples, linear)

    for s in _coprime(m):
        images = tower.phi(elements, s)
        report.add(f'image_phi_s{s}', True, {int(x) for x in images} == kernel)
        sizes = sorted(set(Counter(int(x) for x in images).values()))
        report.add(f'preimage_sizes_s{s}', [tower.q], sizes)
        alphas = tower.field(np.array(sorted(kernel), dtype=np.int64))
        report.add(f'pi_roundtrip_s{s}', True, bool(np.array_equal(tower.phi(tower.pi(alphas, s), s), alphas)))

    orthogonal = 0
    for dim in range(m + 1):
        S = SubspaceFq.spanned_by(tower, random_full_rank_points(tower, dim, rng) if dim else [])
        complement = tower.trace_orthogonal(S)
        members = complement.elements()
        killed = all(np.all(tower.trace(b * members) == 0) for b in S.basis)
        orthogonal += complement.dim == m - dim and killed
    report.add('orthogonal_dimension', m + 1, orthogonal)

    duals = 0
    for _ in range(samples):
        basis = random_full_rank_points(tower, m, rng)
        dual = tower.dual_basis(basis)
        duals += bool(np.array_equal(tower.dual_basis(dual), basis))
    report.add('dual_of_dual', samples, duals)

    preindip = dim_t = 0
    for _ in range(samples):
        k = int(rng.integers(1, m))
        beta = tower.field.Random(k, seed=rng)
        alpha = tower.phi(beta, 1)
        left = q_rank(tower, alpha) == k
        right = q_rank(tower, np.concatenate([tower.field.Ones(1), beta])) == k + 1
        preindip += left == right

        S = SubspaceFq.spanned_by(tower, tower.field.Random(k, seed=rng))
        if rng.integers(2) and S.dim:
            candidate = tower.embed(rng.integers(tower.q, size=S.dim)) @ S.basis
        else:
            candidate = tower.field.Random(seed=rng)
        complement = tower.trace_orthogonal(S).basis
        contained = bool(np.all(tower.trace(candidate * complement) == 0))
        dim_t += contained == S.contains(candidate)
    report.add('independence_equivalence', samples, preindip)
    report.add('kernel_containment', samples, dim_t)


# Ida y vuelta

@suite('round-trips', q=2, m=4, n=4, k=2, s=1, samples=200)
def round_trips(report, tower, q, m, n, k, s, samples, seed, log_table_limit, **_):
    """build, recover_params, recover_points e inverse_moore_factor son coherentes"""
    rng = np.random.default_rng(seed)
    other_gamma = next(x for x in tower.elements()[1:]
                       if tower.trace(x) != 0 and x != tower.default_gamma)
    recovered = rebuilt = points = routes = gamma_shift = encodings = bases = 0
    for _ in range(samples):
        params = random_params(tower, k, n, s, rng)
        X = build(params)
        back = recover_params(tower, X, s, params.gamma)
        recovered += (np.array_equal(back.alpha, params.alpha) and np.array_equal(back.beta, params.beta)
                      and np.array_equal(back.B, params.B))
        rebuilt += bool(np.array_equal(build(back), X))

        g = recover_points(params)
        factor = inverse_moore_factor(tower, g, k, s)
        reduced, _, _ = rref(canonical_generator(GabidulinSpec(tower, g, k, s)))
        points += bool(np.array_equal(factor, X))
        routes += bool(np.array_equal(reduced[:, k:], factor))

        shifted = build(params.with_gamma(other_gamma))
        gamma_shift += bool(np.all(tower.in_base(shifted - X)))

        spec = random_gabidulin_spec(tower, k, n, s, rng)
        message = tower.field.Random(k, seed=rng)
        encodings += bool(np.array_equal(encode(spec, message), encode_by_evaluation(spec, message)))
        basis = systematic_basis(spec)
        bases += bool(np.array_equal(evaluation_matrix(basis, spec.g), rref(canonical_generator(spec))[0]))

    report.add('recover_params', samples, int(recovered))
    report.add('build_recover', samples, rebuilt)
    report.add('inverse_moore', samples, points)
    report.add('rref_route', samples, routes)
    report.add('gamma_independence', samples, gamma_shift)
    report.add('encode_routes', samples, encodings)
    report.add('systematic_basis', samples, bases)

    rejected = 0
    for _ in range(samples):
        X = tower.field.Random((k, n - k), seed=rng)
        try:
            recover_params(tower, X, s)
        except GabidulinError:
            rejected += 1
        else:
            rejected += is_gabidulin_fast(tower, X, s)
    report.add('random_rejected', samples, rejected)
