import math

import pytest

from gabidulin.errors import UnknownSuite
from gabidulin.utils.suites import SUITES, Check, SuiteReport, run_suite


class TestReport:
    """Pruebas para los informes de las suites"""

    def test_check_status(self):
        """Prueba pass, fail e info"""
        assert Check('a', 1, 1).status == 'pass'
        assert Check('b', 1, 2).status == 'fail'
        assert Check('c', 'a^15', 'a^16', informational=True).status == 'info'

    def test_informational_checks_do_not_fail(self):
        """Prueba que una comprobación informativa no cuenta como fallo"""
        report = SuiteReport('demo')
        report.add('x', 1, 1)
        report.add('y', 2, 3, informational=True)
        assert report.passed
        assert report.to_records()[-1] == 'suite=demo checks=2 failed=0 pass'

    def test_failure_record(self):
        """Prueba el formato de una comprobación fallida"""
        report = SuiteReport('demo')
        report.add('x', 1, 2)
        assert not report.passed
        assert report.to_records()[0] == 'suite=demo check=x expected=1 found=2 fail'
        assert report.to_dict()['passed'] is False

    def test_registered_suites(self):
        """Prueba que todas las suites están registradas"""
        assert set(SUITES) == {
            'paper-examples', 'worked-examples', 'counting', 'criteria-equivalence', 'mrd',
            'structured', 'circulant', 'field-theory', 'round-trips',
        }

    def test_alias_runs_same_suite(self):
        """Prueba que worked-examples es otro nombre de paper-examples"""
        assert SUITES['worked-examples'] is SUITES['paper-examples']
        assert run_suite('worked-examples').suite == 'paper-examples'

    def test_unknown_suite(self):
        """Prueba una suite inexistente"""
        with pytest.raises(UnknownSuite):
            run_suite('no-existe')


class TestSuites:
    """Pruebas de ejecución de las suites con parámetros reducidos"""

    def test_worked_examples(self):
        """Prueba los ejemplos trabajados"""
        report = run_suite('paper-examples')
        assert report.passed, report.to_records()
        assert {c.name for c in report.checks if c.informational} == {'g_3'}

    def test_structured(self):
        """Prueba Hankel y Toeplitz sobre F_16"""
        report = run_suite('structured')
        assert report.passed, report.to_records()

    def test_field_theory(self):
        """Prueba la suite de teoría de cuerpos con pocas muestras"""
        report = run_suite('field-theory', samples=10)
        assert report.passed, report.to_records()

    def test_field_theory_odd_characteristic(self):
        """Prueba la suite de teoría de cuerpos sobre F_27"""
        report = run_suite('field-theory', q=3, m=3, samples=10)
        assert report.passed, report.to_records()

    def test_round_trips(self):
        """Prueba las idas y vueltas con pocas muestras"""
        report = run_suite('round-trips', samples=5)
        assert report.passed, report.to_records()

    def test_round_trips_non_prime_base(self, f4_2):
        """Prueba las idas y vueltas con q = 4"""
        report = run_suite('round-trips', tower=f4_2, n=2, k=1, samples=5)
        assert report.passed, report.to_records()

    def test_circulant(self):
        """Prueba el testigo circulante con pocas muestras"""
        report = run_suite('circulant', samples=5)
        assert report.passed, report.to_records()

    @pytest.mark.slow
    def test_counting(self):
        """Prueba el conteo exhaustivo sobre F_8"""
        report = run_suite('counting')
        assert report.passed, report.to_records()

    @pytest.mark.slow
    def test_criteria_equivalence(self):
        """Prueba la equivalencia de criterios sobre F_8 con n = 3"""
        report = run_suite('criteria-equivalence', samples=20)
        assert report.passed, report.to_records()

    @pytest.mark.slow
    def test_mrd(self):
        """Prueba distancia, dualidad y superregularidad sobre F_16"""
        report = run_suite('mrd', samples=5)
        assert report.passed, report.to_records()


GRID = [(2, 4), (2, 6), (3, 4), (3, 6)]


@pytest.mark.slow
class TestAcceptanceGrid:
    """Suites sobre q ∈ {2, 3} y m ∈ {4, 6} con los tamaños de muestra por defecto"""

    @pytest.mark.parametrize('q, m', GRID)
    def test_structured(self, q, m):
        """Prueba Hankel y Toeplitz para todo 0 < k < n <= m"""
        report = run_suite('structured', q=q, m=m)
        assert report.passed, report.to_records()
        pairs = m * (m - 1) // 2
        assert report.checks[0].expected == pairs * len([s for s in range(1, m) if math.gcd(s, m) == 1])

    @pytest.mark.parametrize('q, m', GRID)
    def test_criteria_equivalence_random(self, q, m):
        """Prueba 250 matrices aleatorias por cuerpo, 1000 en total"""
        report = run_suite('criteria-equivalence', q=q, m=m, samples=250, exhaustive=False)
        assert report.passed, report.to_records()
        assert [c.name for c in report.checks] == ['random_samples']

    @pytest.mark.parametrize('q, m', GRID)
    def test_round_trips(self, q, m):
        """Prueba 200 parámetros aleatorios por cuerpo"""
        report = run_suite('round-trips', q=q, m=m)
        assert report.passed, report.to_records()
        assert report.options['samples'] == 200

    @pytest.mark.parametrize('q, m', GRID)
    def test_field_theory(self, q, m):
        """Prueba 500 muestras por cuerpo"""
        report = run_suite('field-theory', q=q, m=m)
        assert report.passed, report.to_records()
        assert report.options['samples'] == 500
