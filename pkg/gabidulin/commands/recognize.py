import click
from flask import Blueprint, current_app

from gabidulin.config import RunConfig
from gabidulin.models.codes import recognize, recognize_all_s
from gabidulin.utils.cli import emit, field_option, format_option, handle_errors
from gabidulin.utils.formats import load_field, read_matrix

recognize_bp = Blueprint('recognize', __name__, cli_group=None)


@recognize_bp.cli.command('recognize')
@field_option
@click.option('--matrix', 'matrix_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Matriz generadora k x n')
@click.option('--s', 's', type=int, default=1, show_default=True, help='Parámetro s, coprimo con m')
@click.option('--all-s', is_flag=True, help='Probar todos los s coprimos con m')
@format_option
@handle_errors
def recognize_command(field_path, matrix_path, s, all_s, output_format):
    """Reconoce si una matriz generadora define un código de Gabidulin generalizado"""
    config = RunConfig.from_app(current_app, 'recognize', field_path=field_path,
                                inputs=(matrix_path,), s=s, output_format=output_format)
    tower = load_field(field_path, config.log_table_limit)
    G = read_matrix(tower, matrix_path)
    k, n = G.shape
    if not 0 < k < n:
        raise click.UsageError(f'La matriz debe tener 0 < k < n filas (k={k}, n={n})')

    current_app.logger.info('Reconociendo código [%d,%d] sobre F_%d^%d', n, k, tower.q, tower.m)
    results = recognize_all_s(tower, G) if all_s else [recognize(tower, G, s)]
    for result in results:
        emit(result.to_dict(), config.output_format)
