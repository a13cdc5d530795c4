import numpy as np
import pytest

from gabidulin.errors import (
    BadGamma,
    BadParameterS,
    NotABasis,
    NotInKernel,
    NotIrreducible,
    NotPrimitive,
    ZeroFunctional,
)
from gabidulin.models.field_tower import SubspaceFq, standard_tower, tower_build


class TestTowerConstruction:
    """Pruebas para la construcción y validación de torres"""

    def test_standard_tower_parameters(self, f16):
        """Prueba los parámetros de la torre estándar F_2 ⊂ F_16"""
        assert (f16.p, f16.e, f16.q, f16.m, f16.order) == (2, 1, 2, 4, 16)
        assert f16.ext_modulus == (1, 1, 0, 0, 1)

    def test_tower_over_non_prime_base(self, f4_2):
        """Prueba una torre con base F_4"""
        assert (f4_2.q, f4_2.m, f4_2.order) == (4, 2, 16)
        assert f4_2.base.order == 4

    def test_reducible_extension_rejected(self):
        """Prueba que un módulo reducible se rechaza"""
        with pytest.raises(NotIrreducible):
            tower_build(2, 1, [0, 1], 3, [1, 0, 0, 1])

    def test_non_monic_extension_rejected(self):
        """Prueba que un módulo no mónico se rechaza"""
        with pytest.raises(NotIrreducible):
            tower_build(3, 1, [0, 1], 2, [1, 0, 2])

    def test_composite_characteristic_rejected(self):
        """Prueba que p debe ser primo"""
        with pytest.raises(NotIrreducible):
            tower_build(4, 1, [0, 1], 2, [1, 1, 1])

    def test_standard_tower_requires_prime_power(self):
        """Prueba que q debe ser potencia de primo"""
        with pytest.raises(NotIrreducible):
            standard_tower(6, 2)

    def test_to_dict(self, f64):
        """Prueba la descripción de la torre"""
        data = f64.to_dict()
        assert data['q'] == 2
        assert data['m'] == 6
        assert data['ext_modulus'] == [1, 1, 0, 1, 1, 0, 1]
        assert data['log_table'] is True


class TestArithmetic:
    """Pruebas para coordenadas y aritmética de referencia"""

    @pytest.mark.parametrize('name', ['f16', 'f27', 'f4_2', 'f64'])
    def test_multiplication_matches_polynomial_arithmetic(self, name, request, rng):
        """Prueba que el producto del cuerpo coincide con el producto módulo ext_modulus"""
        tower = request.getfixturevalue(name)
        xs = tower.field.Random(20, seed=rng)
        ys = tower.field.Random(20, seed=rng)
        for x, y in zip(xs, ys):
            assert tower.poly_multiply(x, y) == x * y
            assert tower.poly_add(x, y) == x + y

    def test_power_basis_coordinates(self, f27):
        """Prueba que a^i tiene como coordenadas el vector canónico e_i"""
        coeffs = f27.coefficients(f27.power_basis)
        assert np.array_equal(coeffs, f27.base.Identity(3))

    def test_coordinates_of_tower_elements(self, f4_2):
        """Prueba element y coefficients sobre una base no prima"""
        coeffs = np.array([[3, 2], [1, 0], [0, 1]])
        elements = f4_2.element(coeffs)
        assert np.array_equal(f4_2.coefficients(elements).view(np.ndarray), coeffs)

    def test_primitive_element_order(self, f64):
        """Prueba que el elemento primitivo genera el grupo multiplicativo"""
        assert f64.primitive.multiplicative_order() == 63
        assert len({int(x) for x in f64.elements()}) == 64

    def test_embed_lands_in_base(self, f4_2):
        """Prueba la inmersión de F_q en F_{q^m}"""
        embedded = f4_2.embed(np.arange(4))
        assert np.all(f4_2.in_base(embedded))
        assert np.array_equal(f4_2.to_base(embedded).view(np.ndarray), np.arange(4))

    def test_to_base_rejects_extension_elements(self, f16):
        """Prueba que to_base solo acepta elementos de F_q"""
        with pytest.raises(ValueError):
            f16.to_base(f16.primitive)

    def test_discrete_log(self, f729):
        """Prueba el logaritmo discreto con tabla"""
        assert f729.discrete_log(f729.primitive ** 591) == 591
        with pytest.raises(ArithmeticError):
            f729.discrete_log(f729.field(0))

    def test_discrete_log_without_table(self):
        """Prueba el logaritmo discreto por encima del límite de tablas"""
        tower = standard_tower(2, 3, log_table_limit=4)
        assert tower.log_table is None
        assert tower.discrete_log(tower.primitive ** 5) == 5


class TestTrace:
    """Pruebas para Frobenius, traza, φ_s y π_s"""

    def test_trace_of_one(self, f8, f16, f27):
        """Prueba Tr(1) = m en F_q"""
        assert f8.trace(f8.field(1)) == 1
        assert f16.trace(f16.field(1)) == 0
        assert f27.trace(f27.field(1)) == 0

    def test_trace_is_surjective_onto_base(self, f4_2):
        """Prueba que la traza toma todos los valores de F_q"""
        traces = f4_2.trace(f4_2.elements())
        assert np.all(f4_2.in_base(traces))
        assert len({int(t) for t in traces}) == 4

    def test_frobenius_reduces_s_mod_m(self, f16, rng):
        """Prueba que θ^s depende de s módulo m"""
        x = f16.field.Random(8, seed=rng)
        assert np.array_equal(f16.frobenius(x, 5), f16.frobenius(x, 1))
        assert np.array_equal(f16.frobenius(f16.frobenius(x, 1), -1), x)

    def test_bad_s(self, f16):
        """Prueba que s debe ser coprimo con m"""
        with pytest.raises(BadParameterS):
            f16.phi(f16.primitive, 2)

    @pytest.mark.parametrize('s', [1, 3])
    def test_phi_image_is_trace_kernel(self, f16, s):
        """Prueba que la imagen de φ_s es ker(Tr) y π_s es una preimagen"""
        elements = f16.elements()
        images = f16.phi(elements, s)
        kernel = {int(x) for x in elements if f16.trace(x) == 0}
        assert {int(x) for x in images} == kernel
        alphas = f16.field(np.array(sorted(kernel)))
        assert np.array_equal(f16.phi(f16.pi(alphas, s), s), alphas)

    def test_pi_over_non_prime_base(self, f4_2):
        """Prueba π_s cuando q no es primo"""
        kernel = f4_2.kernel_T(f4_2.field(1)).elements()
        assert np.array_equal(f4_2.phi(f4_2.pi(kernel, 1), 1), kernel)

    def test_pi_rejects_nonzero_trace(self, f8):
        """Prueba que π_s solo se define sobre ker(Tr)"""
        with pytest.raises(NotInKernel):
            f8.pi(f8.field(1), 1)

    def test_pi_rejects_bad_gamma(self, f16):
        """Prueba que γ debe tener traza no nula"""
        with pytest.raises(BadGamma):
            f16.pi(f16.field(0), 1, gamma=f16.field(1))

    def test_default_gamma(self, f64):
        """Prueba el γ por defecto en F_64"""
        assert f64.trace(f64.default_gamma) != 0
        assert f64.discrete_log(f64.default_gamma) == 3

    def test_consecutive_trace_zero_start(self, f64):
        """Prueba ℓ para el elemento primitivo de F_64"""
        ell = f64.consecutive_trace_zero_start()
        assert ell == 14
        powers = f64.primitive ** np.arange(ell, ell + 5)
        assert np.all(f64.trace(powers) == 0)

    def test_consecutive_trace_zero_start_needs_primitive(self, f16):
        """Prueba que ℓ requiere un elemento primitivo"""
        with pytest.raises(NotPrimitive):
            f16.consecutive_trace_zero_start(f16.field(1))


class TestDuality:
    """Pruebas para espacios traza-ortogonales y bases duales"""

    def test_kernel_of_functional(self, f16):
        """Prueba dim ker(T_α) = m - 1"""
        kernel = f16.kernel_T(f16.primitive)
        assert kernel.dim == 3
        assert np.all(f16.trace(f16.primitive * kernel.elements()) == 0)

    def test_zero_functional(self, f16):
        """Prueba que T_0 no define un hiperplano"""
        with pytest.raises(ZeroFunctional):
            f16.kernel_T(f16.field(0))

    def test_trace_orthogonal_dimension(self, f27):
        """Prueba dim S^× = m - dim S"""
        S = SubspaceFq.spanned_by(f27, f27.power_basis[:2])
        complement = f27.trace_orthogonal(S)
        assert complement.dim == 1
        assert f27.trace_orthogonal(SubspaceFq.zero(f27)).dim == 3

    def test_dual_basis(self, f4_2):
        """Prueba tr(a_i, b_j) = δ_ij"""
        basis = f4_2.power_basis
        dual = f4_2.dual_basis(basis)
        gram = f4_2.trace(basis[:, np.newaxis] * dual[np.newaxis, :])
        assert np.array_equal(gram, f4_2.field.Identity(2))

    def test_dual_basis_requires_basis(self, f16):
        """Prueba que elementos dependientes no forman base"""
        with pytest.raises(NotABasis):
            f16.dual_basis(f16.field([1, 1, 2, 4]))

    @pytest.mark.parametrize('name', ['f16', 'f27', 'f4_2'])
    def test_trace_form_is_symmetric(self, name, request, rng):
        """Prueba tr(x, y) = tr(y, x) y que el valor está en F_q"""
        tower = request.getfixturevalue(name)
        x = tower.field.Random(20, seed=rng)
        y = tower.field.Random(20, seed=rng)
        assert np.array_equal(tower.trace_form(x, y), tower.trace_form(y, x))
        assert np.all(tower.in_base(tower.trace_form(x, y)))

    def test_trace_form_is_non_degenerate(self, f16):
        """Prueba que solo 0 es ortogonal a todo F_q^m"""
        elements = f16.elements()
        gram = f16.trace_form(elements[:, np.newaxis], elements[np.newaxis, :])
        assert np.all(gram[0] == 0)
        assert all(np.any(row != 0) for row in gram[1:])


class TestSubspace:
    """Pruebas para subespacios sobre F_q"""

    def test_spanned_by_reduces_generators(self, f16):
        """Prueba que los generadores dependientes no aumentan la dimensión"""
        a = f16.primitive
        S = SubspaceFq.spanned_by(f16, [1, int(a), int(a + f16.field(1))])
        assert S.dim == 2
        assert S.contains(a + f16.field(1))
        assert not S.contains(a ** 2)
        assert len(S.elements()) == 4

    def test_same_space(self, f16):
        """Prueba la igualdad de subespacios con generadores distintos"""
        a = f16.primitive
        S = SubspaceFq.spanned_by(f16, [1, int(a)])
        T = SubspaceFq.spanned_by(f16, [int(a + f16.field(1)), int(a)])
        assert S.same_space(T)
        assert SubspaceFq.zero(f16).is_subspace_of(S)


class TestFourElementField:
    """Pruebas sobre F_4 = F_2(a) con a^2 + a + 1 = 0"""

    @pytest.fixture
    def f4(self):
        return tower_build(2, 1, [0, 1], 2, [1, 1, 1])

    def test_primitive(self, f4):
        """Prueba |F_4^*| = 3 y que a es primitivo"""
        a = f4.element([0, 1])
        assert f4.order == 4
        assert a.multiplicative_order() == 3
        assert f4.primitive == a

    def test_frobenius(self, f4):
        """Prueba θ(a) = a^2 = a + 1"""
        a = f4.element([0, 1])
        assert f4.frobenius(a, 1) == a ** 2
        assert f4.frobenius(a, 1) == f4.element([1, 1])

    def test_trace(self, f4):
        """Prueba Tr(a) = a + a^2 = 1 y ker(T_1) = {0, 1}"""
        a = f4.element([0, 1])
        assert f4.trace(a) == 1
        assert {int(x) for x in f4.kernel_T(f4.field(1)).elements()} == {0, 1}

    def test_phi_and_pi(self, f4):
        """Prueba φ_1(a) = 1 y π_1(1) = a^2 con γ = a"""
        a = f4.element([0, 1])
        assert f4.phi(a, 1) == 1
        assert f4.pi(f4.field(1), 1, gamma=a) == a ** 2
        assert f4.phi(a ** 2, 1) == 1
