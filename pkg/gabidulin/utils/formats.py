"""
Formatos de texto: especificaciones de cuerpo, código y parámetros
(``clave = valor``), elementos en notación de potencias y matrices.
"""

import logging
import os
import re

import numpy as np
from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load, validate

from gabidulin.errors import ParseError
from gabidulin.models.codes import GabidulinSpec
from gabidulin.models.field_tower import tower_build
from gabidulin.models.q_cauchy import QCauchyParams

logger = logging.getLogger(__name__)

POWER = re.compile(r'^a(?:\^\{?(-?\d+)\}?)?$')


# Lectura de clave = valor

def split_top_level(text, separator=','):
    """Divide por el separador ignorando lo que está entre corchetes"""
    parts, depth, current = [], 0, []
    for char in text:
        if char == '[':
            depth += 1
        elif char == ']':
            depth -= 1
            if depth < 0:
                raise ParseError(f'Corchetes desbalanceados en {text!r}')
        if depth == 0 and (char == separator or (separator is None and char.isspace())):
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise ParseError(f'Corchetes desbalanceados en {text!r}')
    parts.append(''.join(current))
    return [part.strip() for part in parts if part.strip()]


def parse_value(text):
    """Valor escalar (cadena) o lista anidada de valores"""
    text = text.strip()
    if text.startswith('['):
        if not text.endswith(']'):
            raise ParseError(f'Lista mal cerrada: {text!r}')
        return [parse_value(part) for part in split_top_level(text[1:-1])]
    return text


def parse_key_values(text):
    """Interpreta líneas ``clave = valor``; ``#`` inicia un comentario"""
    data = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ParseError(f'Línea {number}: se esperaba "clave = valor"')
        key, value = line.split('=', 1)
        data[key.strip()] = parse_value(value)
    return data


def read_key_values(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return parse_key_values(handle.read())
    except OSError as error:
        raise ParseError(f'No se puede leer {path}: {error.strerror}')


# Esquemas

class FieldSpecSchema(Schema):
    """Especificación de la torre F_p ⊂ F_q ⊂ F_{q^m}"""
    class Meta:
        unknown = EXCLUDE

    p = fields.Integer(required=True, validate=validate.Range(min=2))
    e = fields.Integer(load_default=1, validate=validate.Range(min=1))
    base_modulus = fields.List(fields.Integer(), load_default=None)
    m = fields.Integer(required=True, validate=validate.Range(min=2))
    ext_modulus = fields.List(fields.Raw(), required=True)

    @post_load
    def normalize(self, data, **kwargs):
        if data['base_modulus'] is None:
            if data['e'] != 1:
                raise ValidationError('base_modulus es obligatorio si e > 1', 'base_modulus')
            data['base_modulus'] = [0, 1]
        data['ext_modulus'] = [_int_or_list(c) for c in data['ext_modulus']]
        return data


class CodeSpecSchema(Schema):
    """Código G_{k,s}(g) sobre un cuerpo referenciado"""
    class Meta:
        unknown = EXCLUDE

    field = fields.String(required=True)
    g = fields.List(fields.Raw(), required=True)
    k = fields.Integer(required=True, validate=validate.Range(min=1))
    s = fields.Integer(load_default=1)


class ParamsSchema(Schema):
    """Parámetros (α, β, B, s, γ) de una matriz (q,s)-Cauchy"""
    class Meta:
        unknown = EXCLUDE

    field = fields.String(load_default=None)
    alpha = fields.List(fields.Raw(), required=True)
    beta = fields.List(fields.Raw(), required=True)
    B = fields.List(fields.List(fields.Integer()), load_default=None)
    s = fields.Integer(load_default=1)
    gamma = fields.Raw(load_default=None)


def _int_or_list(value):
    if isinstance(value, list):
        return [int(c) for c in value]
    return int(value)


def _load(schema, data, source):
    try:
        return schema.load(data)
    except (ValidationError, ValueError) as error:
        messages = getattr(error, 'messages', str(error))
        raise ParseError(f'{source}: {messages}', source=str(source))


def _resolve(reference, source):
    if os.path.isabs(reference):
        return reference
    return os.path.join(os.path.dirname(os.path.abspath(source)), reference)


# Elementos y matrices

def parse_element(tower, token):
    """Elemento en notación ``0``, ``1``, ``a``, ``a^k`` o lista de coeficientes"""
    if isinstance(token, list):
        coeffs = [tower.base_int(c if not isinstance(c, list) else [int(x) for x in c]) for c in token]
        if len(coeffs) != tower.m:
            raise ParseError(f'Se esperaban {tower.m} coeficientes en {token}')
        return tower.element(coeffs)
    token = str(token).strip().replace(' ', '')
    if token.startswith('['):
        return parse_element(tower, parse_value(token))
    if token == '0':
        return tower.field(0)
    if token == '1':
        return tower.field(1)
    match = POWER.match(token)
    if not match:
        raise ParseError(f'Elemento inválido: {token!r}')
    exponent = int(match.group(1)) if match.group(1) is not None else 1
    return tower.primitive ** (exponent % (tower.order - 1))


def parse_vector(tower, tokens):
    return tower.field(np.array([int(parse_element(tower, t)) for t in tokens], dtype=np.int64))


def render_element(tower, x):
    """Notación de potencias del elemento primitivo"""
    if x == 0:
        return '0'
    power = tower.discrete_log(x)
    if power == 0:
        return '1'
    if power == 1:
        return 'a'
    return f'a^{power}'


def render_vector(tower, v):
    return '[' + ', '.join(render_element(tower, x) for x in v) + ']'


def parse_matrix(tower, text):
    """Matriz: primera línea ``filas columnas`` y una fila por línea"""
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ParseError('Matriz vacía')
    try:
        rows, cols = (int(v) for v in lines[0].split())
    except ValueError:
        raise ParseError(f'Cabecera inválida: {lines[0]!r}')
    if len(lines) - 1 != rows:
        raise ParseError(f'Se esperaban {rows} filas, hay {len(lines) - 1}')
    entries = []
    for line in lines[1:]:
        tokens = split_top_level(line, separator=None)
        if len(tokens) != cols:
            raise ParseError(f'Se esperaban {cols} columnas en {line!r}')
        entries.append([int(parse_element(tower, token)) for token in tokens])
    return tower.field(np.array(entries, dtype=np.int64).reshape(rows, cols))


def read_matrix(tower, path):
    try:
        with open(path, encoding='utf-8') as handle:
            return parse_matrix(tower, handle.read())
    except OSError as error:
        raise ParseError(f'No se puede leer {path}: {error.strerror}')


def render_matrix(tower, matrix):
    rows, cols = matrix.shape
    lines = [f'{rows} {cols}']
    lines += [' '.join(render_element(tower, x) for x in row) for row in matrix]
    return '\n'.join(lines) + '\n'


# Cargadores

def load_field(path, log_table_limit=None):
    """Construye la torre descrita en un archivo de cuerpo"""
    spec = _load(FieldSpecSchema(), read_key_values(path), path)
    options = {} if log_table_limit is None else {'log_table_limit': log_table_limit}
    logger.debug('Cargando cuerpo %s: %s', path, spec)
    return tower_build(spec['p'], spec['e'], spec['base_modulus'], spec['m'], spec['ext_modulus'], **options)


def load_code(path, tower=None, log_table_limit=None):
    """Lee una especificación de código; devuelve (torre, GabidulinSpec)"""
    spec = _load(CodeSpecSchema(), read_key_values(path), path)
    if tower is None:
        tower = load_field(_resolve(spec['field'], path), log_table_limit)
    return tower, GabidulinSpec(tower, parse_vector(tower, spec['g']), spec['k'], spec['s'])


def load_params(path, tower=None, log_table_limit=None):
    """Lee parámetros (q,s)-Cauchy; devuelve (torre, QCauchyParams)"""
    spec = _load(ParamsSchema(), read_key_values(path), path)
    if tower is None:
        if spec['field'] is None:
            raise ParseError(f'{path}: falta la clave field', source=str(path))
        tower = load_field(_resolve(spec['field'], path), log_table_limit)
    alpha = parse_vector(tower, spec['alpha'])
    beta = parse_vector(tower, spec['beta'])
    B = spec['B'] if spec['B'] is not None else np.zeros((alpha.size, beta.size), dtype=np.int64)
    gamma = None if spec['gamma'] is None else parse_element(tower, spec['gamma'])
    try:
        params = QCauchyParams(tower, alpha, beta, B, spec['s'], gamma)
    except ValueError as error:
        raise ParseError(f'{path}: {error}', source=str(path))
    return tower, params


# Salida

def render_params(tower, params, field=None, ell=None):
    """Bloque ``clave = valor`` con los parámetros y su procedencia"""
    lines = []
    if field is not None:
        lines.append(f'field = {field}')
    lines.append(f's = {params.s}')
    lines.append(f'gamma = {render_element(tower, params.gamma)}')
    if ell is not None:
        lines.append(f'ell = {ell}')
    lines.append(f'alpha = {render_vector(tower, params.alpha)}')
    lines.append(f'beta = {render_vector(tower, params.beta)}')
    rows = ', '.join('[' + ', '.join(str(int(b)) for b in row) + ']' for row in params.B)
    lines.append(f'B = [{rows}]')
    return '\n'.join(lines) + '\n'


def render_code(tower, g, k, s, field=None):
    """Bloque ``clave = valor`` de un código G_{k,s}(g)"""
    lines = [f'field = {field}'] if field is not None else []
    lines += [f'k = {k}', f's = {s}', f'g = {render_vector(tower, g)}']
    return '\n'.join(lines) + '\n'


def format_record(data):
    """Registro de una línea ``clave=valor``"""
    return ' '.join(f'{key}={value}' for key, value in data.items())


def format_human(data):
    """Salida legible: una clave por línea"""
    return '\n'.join(f'{key}: {value}' for key, value in data.items())
