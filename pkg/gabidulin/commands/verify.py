import click
from flask import Blueprint, current_app

from gabidulin.config import RunConfig
from gabidulin.utils.cli import format_option, handle_errors
from gabidulin.utils.formats import load_field
from gabidulin.utils.suites import run_suite

verify_bp = Blueprint('verify', __name__, cli_group=None)


@verify_bp.cli.command('verify')
@click.argument('suite_name', metavar='SUITE')
@click.option('--field', 'field_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Cuerpo explícito; sustituye a --q y --m')
@click.option('--q', 'q', type=int, default=None)
@click.option('--m', 'm', type=int, default=None)
@click.option('--n', 'n', type=int, default=None)
@click.option('--k', 'k', type=int, default=None)
@click.option('--s', 's', type=int, default=None)
@click.option('--samples', type=int, default=None, help='Número de muestras aleatorias')
@click.option('--seed', type=int, default=None)
@click.option('--cap', type=int, default=None, help='Límite de enumeración')
@click.option('--exhaustive/--random-only', default=None,
              help='Activa o desactiva la fase exhaustiva de criteria-equivalence')
@format_option
@handle_errors
def verify_command(suite_name, field_path, q, m, n, k, s, samples, seed, cap, exhaustive, output_format):
    """Ejecuta una suite de verificación (paper-examples, counting, criteria-equivalence, ...)"""
    config = RunConfig.from_app(current_app, 'verify', field_path=field_path, s=s, seed=seed,
                                enum_cap=cap, output_format=output_format)
    tower = load_field(field_path, config.log_table_limit) if field_path else None

    report = run_suite(
        suite_name,
        tower=tower, q=q, m=m, n=n, k=k, s=s, samples=samples, exhaustive=exhaustive,
        seed=config.seed, cap=config.enum_cap,
        distance_cap=config.distance_cap, log_table_limit=config.log_table_limit,
    )
    if config.output_format == 'human':
        for check in report.checks:
            click.echo(f'[{check.status}] {check.name}: esperado {check.expected}, obtenido {check.found}')
        click.echo(f'{report.suite}: {len(report.checks)} comprobaciones, {len(report.failures)} fallos')
    else:
        for line in report.to_records():
            click.echo(line)

    if not report.passed:
        current_app.logger.warning('La suite %s tiene %d fallos', suite_name, len(report.failures))
        click.get_current_context().exit(1)
