"""
Valores por defecto y configuración efectiva de una ejecución.
"""

from dataclasses import dataclass, field

DEFAULT_ENUM_CAP = 10 ** 6
DEFAULT_DISTANCE_CAP = 2 ** 24
DEFAULT_LOG_TABLE_LIMIT = 2 ** 22
DEFAULT_SEED = 2021
FORMATS = ('human', 'records')
COMMANDS = ('recognize', 'make', 'verify')


@dataclass(frozen=True)
class RunConfig:
    """Instantánea de la configuración con la que se ejecuta un comando"""
    command: str
    field_path: str = None
    inputs: tuple = field(default_factory=tuple)
    s: int = None
    enum_cap: int = DEFAULT_ENUM_CAP
    distance_cap: int = DEFAULT_DISTANCE_CAP
    log_table_limit: int = DEFAULT_LOG_TABLE_LIMIT
    seed: int = DEFAULT_SEED
    output_format: str = 'records'

    def __post_init__(self):
        errors = self.validate()
        if errors:
            raise ValueError('; '.join(errors))

    def validate(self):
        """Lista de problemas de la configuración (vacía si es válida)"""
        errors = []
        if self.command not in COMMANDS:
            errors.append(f'Comando desconocido: {self.command}')
        for name in ('enum_cap', 'distance_cap', 'log_table_limit'):
            if getattr(self, name) <= 0:
                errors.append(f'{name} debe ser positivo')
        if self.output_format not in FORMATS:
            errors.append(f'Formato inválido. Valores válidos: {", ".join(FORMATS)}')
        return errors

    @classmethod
    def from_app(cls, app, command, **overrides):
        """Construye la configuración desde app.config aplicando las opciones del comando"""
        values = {
            'enum_cap': app.config['GABIDULIN_ENUM_CAP'],
            'distance_cap': app.config['GABIDULIN_DISTANCE_CAP'],
            'log_table_limit': app.config['GABIDULIN_LOG_TABLE_LIMIT'],
            'seed': app.config['GABIDULIN_SEED'],
            'output_format': app.config['GABIDULIN_FORMAT'],
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(command=command, **values)
