import os

import click
import numpy as np
from flask import Blueprint, current_app

from gabidulin.config import RunConfig
from gabidulin.errors import ParseError, VerificationFailed
from gabidulin.models.codes import Verdict, recognize
from gabidulin.models.q_cauchy import (
    build,
    build_hankel,
    build_toeplitz,
    inverse_moore_factor,
    recover_params,
    recover_points,
    validate,
)
from gabidulin.utils.cli import emit, field_option, format_option, handle_errors
from gabidulin.utils.formats import (
    load_code,
    load_field,
    load_params,
    parse_element,
    render_code,
    render_matrix,
    render_params,
)
from gabidulin.utils.linalg import is_hankel, is_toeplitz

make_bp = Blueprint('make', __name__, cli_group=None)


@make_bp.cli.group('make')
def make_group():
    """Construye matrices (q,s)-Cauchy y sus códigos de Gabidulin"""


def out_option(f):
    return click.option('--out', 'out_dir', type=click.Path(file_okay=False),
                        help='Directorio donde escribir X.txt, params.txt, g.txt y transcript.txt')(f)


def structured_options(f):
    f = click.option('--b-diagonals', default=None,
                     help='Valores sobre F_q de las k+n-k-1 diagonales de B, separados por comas')(f)
    f = click.option('--gamma', default=None, help='Elemento de traza no nula para π_s (p. ej. a^3)')(f)
    f = click.option('--s', 's', type=int, default=1, show_default=True)(f)
    f = click.option('--n', 'n', type=int, required=True)(f)
    f = click.option('--k', 'k', type=int, required=True)(f)
    return f


def _self_check(tower, X, params, g, structure=None):
    """Transcripción de comprobaciones; falla si alguna no se cumple"""
    k = X.shape[0]
    G = np.hstack((tower.field.Identity(k), X))
    recognition = recognize(tower, G, params.s)
    checks = [
        ('recognition', recognition.to_record(), recognition.verdict is Verdict.GABIDULIN),
        ('params', 'valid', not validate(params)),
        ('inverse_moore', 'X = M(g_head)^-1 M(g_tail)',
         bool(np.array_equal(inverse_moore_factor(tower, g, k, params.s), X))),
    ]
    if structure == 'hankel':
        checks.append(('structure', 'hankel', is_hankel(X)))
    elif structure == 'toeplitz':
        checks.append(('structure', 'toeplitz', is_toeplitz(X)))

    lines = [f'check={name} detail="{detail}" {"pass" if ok else "fail"}' for name, detail, ok in checks]
    failed = [name for name, _, ok in checks if not ok]
    if failed:
        raise VerificationFailed(f'Fallaron las comprobaciones: {", ".join(failed)}', checks=failed)
    return recognition, lines


def _write_outputs(tower, field_path, X, params, g, transcript, out_dir, ell=None):
    field_ref = os.path.abspath(field_path)
    files = {
        'X.txt': render_matrix(tower, X),
        'params.txt': render_params(tower, params, field=field_ref, ell=ell),
        'g.txt': render_code(tower, g, params.k, params.s, field=field_ref),
        'transcript.txt': '\n'.join(transcript) + '\n',
    }
    if out_dir is None:
        for name in ('X.txt', 'params.txt', 'g.txt'):
            click.echo(f'# {name}')
            click.echo(files[name], nl=False)
        return
    os.makedirs(out_dir, exist_ok=True)
    for name, content in files.items():
        with open(os.path.join(out_dir, name), 'w', encoding='utf-8') as handle:
            handle.write(content)
    current_app.logger.info('Archivos escritos en %s', out_dir)


def _finish(kind, tower, field_path, X, params, g, out_dir, output_format, ell=None, structure=None):
    recognition, transcript = _self_check(tower, X, params, g, structure)
    _write_outputs(tower, field_path, X, params, g, transcript, out_dir, ell)
    summary = {'command': 'make', 'kind': kind, 'k': params.k, 'n': params.n, 's': params.s}
    if ell is not None:
        summary['ell'] = ell
    summary['verdict'] = recognition.verdict.value
    if out_dir is not None:
        summary['out'] = out_dir
    emit(summary, output_format)


def _structured(kind, builder, field_path, k, n, s, gamma, b_diagonals, out_dir, output_format):
    config = RunConfig.from_app(current_app, 'make', field_path=field_path, s=s, output_format=output_format)
    tower = load_field(field_path, config.log_table_limit)
    gamma = None if gamma is None else parse_element(tower, gamma)
    diagonals = None
    if b_diagonals is not None:
        try:
            diagonals = [int(v) for v in b_diagonals.split(',') if v.strip()]
        except ValueError:
            raise ParseError(f'--b-diagonals debe ser una lista de enteros: {b_diagonals}')
        outside = [v for v in diagonals if not 0 <= v < tower.q]
        if outside:
            raise ParseError(f'--b-diagonals admite valores de F_{tower.q} (0..{tower.q - 1})', values=outside)
        if len(diagonals) != n - 1:
            raise click.UsageError(f'--b-diagonals necesita {n - 1} valores')
    if not 0 < k < n:
        raise click.UsageError(f'Se requiere 0 < k < n (k={k}, n={n})')

    structured = builder(tower, k, n, s, gamma=gamma, b_diagonals=diagonals)
    g = recover_points(structured.params)
    _finish(kind, tower, field_path, structured.X, structured.params, g, out_dir,
            config.output_format, ell=structured.ell, structure=kind)


@make_group.command('hankel')
@field_option
@structured_options
@out_option
@format_option
@handle_errors
def make_hankel(field_path, k, n, s, gamma, b_diagonals, out_dir, output_format):
    """Código de Gabidulin cuya parte no sistemática es de Hankel"""
    _structured('hankel', build_hankel, field_path, k, n, s, gamma, b_diagonals, out_dir, output_format)


@make_group.command('toeplitz')
@field_option
@structured_options
@out_option
@format_option
@handle_errors
def make_toeplitz(field_path, k, n, s, gamma, b_diagonals, out_dir, output_format):
    """Código de Gabidulin cuya parte no sistemática es de Toeplitz"""
    _structured('toeplitz', build_toeplitz, field_path, k, n, s, gamma, b_diagonals, out_dir, output_format)


@make_group.command('from-points')
@field_option
@click.option('--code', 'code_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Especificación del código: g, k y s')
@click.option('--gamma', default=None, help='Elemento de traza no nula para π_s')
@out_option
@format_option
@handle_errors
def make_from_points(field_path, code_path, gamma, out_dir, output_format):
    """Forma estándar y parámetros a partir de los puntos de evaluación g"""
    config = RunConfig.from_app(current_app, 'make', field_path=field_path,
                                inputs=(code_path,), output_format=output_format)
    tower = load_field(field_path, config.log_table_limit)
    _, spec = load_code(code_path, tower=tower)
    gamma = None if gamma is None else parse_element(tower, gamma)

    X = inverse_moore_factor(tower, spec.g, spec.k, spec.s)
    params = recover_params(tower, X, spec.s, gamma)
    g = spec.g / spec.g[0]
    _finish('from-points', tower, field_path, X, params, g, out_dir, config.output_format)


@make_group.command('from-params')
@field_option
@click.option('--params', 'params_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Parámetros alpha, beta, B, s y gamma')
@out_option
@format_option
@handle_errors
def make_from_params(field_path, params_path, out_dir, output_format):
    """Matriz (q,s)-Cauchy y puntos de evaluación a partir de (α, β, B)"""
    config = RunConfig.from_app(current_app, 'make', field_path=field_path,
                                inputs=(params_path,), output_format=output_format)
    tower = load_field(field_path, config.log_table_limit)
    _, params = load_params(params_path, tower=tower)
    X = build(params)
    g = recover_points(params)
    _finish('from-params', tower, field_path, X, params, g, out_dir, config.output_format)
