"""
Jerarquía de errores de la biblioteca.

Cada error lleva un ``code`` estable que los comandos imprimen como
``error=<code>`` en el formato de registros.
"""


class GabidulinError(Exception):
    """Error base de la biblioteca"""
    code = 'gabidulin_error'

    def __init__(self, message='', **details):
        super().__init__(message or self.__class__.__doc__)
        self.message = message or self.__class__.__doc__
        self.details = details

    def to_dict(self):
        """Convierte el error a diccionario"""
        return {'error': self.code, 'message': self.message, **self.details}


# Cuerpos finitos

class NotIrreducible(GabidulinError):
    """El módulo no es irreducible"""
    code = 'not_irreducible'


class NoPrimitiveFound(GabidulinError):
    """No se encontró elemento primitivo"""
    code = 'no_primitive_found'


class BadParameterS(GabidulinError):
    """El parámetro s no es coprimo con m"""
    code = 'bad_parameter_s'


class ZeroFunctional(GabidulinError):
    """El funcional de traza T_0 es idénticamente nulo"""
    code = 'zero_functional'


class NotABasis(GabidulinError):
    """Los elementos no forman una base de F_{q^m} sobre F_q"""
    code = 'not_a_basis'


class NotInKernel(GabidulinError):
    """El elemento no pertenece al núcleo de la traza"""
    code = 'not_in_kernel'


class BadGamma(GabidulinError):
    """gamma tiene traza nula"""
    code = 'bad_gamma'


class NotPrimitive(GabidulinError):
    """El elemento no es primitivo"""
    code = 'not_primitive'


# Álgebra lineal y enumeraciones

class TooLarge(GabidulinError):
    """Matriz demasiado grande para enumerar menores"""
    code = 'too_large'


class CapExceeded(GabidulinError):
    """La enumeración supera el límite configurado"""
    code = 'cap_exceeded'


class DimensionError(GabidulinError):
    """Dimensiones inválidas para un código (se requiere 0 < k < n)"""
    code = 'dimension_error'


# Códigos

class DependentPoints(GabidulinError):
    """Los puntos son linealmente dependientes sobre F_q"""
    code = 'dependent_points'


class RankDeficient(GabidulinError):
    """La matriz generadora no tiene rango completo por filas"""
    code = 'rank_deficient'


class NoStandardForm(GabidulinError):
    """El código no tiene forma estándar (I_k | X)"""
    code = 'no_standard_form'


class ValidationFailed(GabidulinError):
    """Los parámetros no cumplen las condiciones de validez"""
    code = 'validation_failed'


class NotQCauchy(GabidulinError):
    """La matriz no es una matriz (q,s)-Cauchy"""
    code = 'not_q_cauchy'


class SingularSystem(GabidulinError):
    """El sistema lineal de recuperación es singular"""
    code = 'singular_system'


class VerificationFailed(GabidulinError):
    """Falló una verificación interna"""
    code = 'verification_failed'


class NotCirculant(GabidulinError):
    """La matriz no es circulante"""
    code = 'not_circulant'


# Interfaz de línea de comandos

class UnknownSuite(GabidulinError):
    """Suite de verificación desconocida"""
    code = 'unknown_suite'


class ParseError(GabidulinError):
    """Archivo de entrada mal formado"""
    code = 'parse_error'
