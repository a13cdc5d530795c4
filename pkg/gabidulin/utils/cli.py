from functools import wraps

import click
from flask import current_app

from gabidulin.errors import GabidulinError
from gabidulin.utils.formats import format_human, format_record


def handle_errors(f):
    """Decorador que convierte los errores de la biblioteca en salida error=<code> y código 1"""
    @wraps(f)
    def decorated(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except GabidulinError as error:
            current_app.logger.error('%s: %s', error.code, error.message)
            output_format = kwargs.get('output_format') or current_app.config['GABIDULIN_FORMAT']
            if output_format == 'human':
                click.echo(f'Error ({error.code}): {error.message}')
            else:
                click.echo(format_record({'error': error.code}))
            click.get_current_context().exit(1)
    return decorated


def emit(data, output_format):
    """Escribe un resultado en el formato pedido"""
    if output_format == 'human':
        click.echo(format_human(data))
    else:
        click.echo(format_record(data))


def field_option(f):
    return click.option('--field', 'field_path', required=True,
                        type=click.Path(exists=True, dir_okay=False),
                        help='Archivo de especificación del cuerpo')(f)


def format_option(f):
    return click.option('--format', 'output_format', type=click.Choice(['human', 'records']),
                        default=None, help='Formato de salida')(f)
