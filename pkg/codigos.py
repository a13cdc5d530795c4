from flask.cli import FlaskGroup

from gabidulin import create_app

cli = FlaskGroup(create_app=create_app, add_default_commands=False,
                 help='Códigos de Gabidulin generalizados y matrices (q,s)-Cauchy')

if __name__ == '__main__':
    cli()
