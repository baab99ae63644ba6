"""
Counting commands
`count` and `qcount` print the value of each requested route
"""
import click
from flask import Blueprint
from services.count_service import ALL_ROUTES, CountService
from utils import dims_or_fail, dump_json, fail

# Create blueprint for counting commands
count_bp = Blueprint('count', __name__, cli_group=None)

# Short route names on the command line
ROUTE_NAMES = {'det': 'determinant', 'formula': 'formula', 'oracle': 'oracle', 'all': ALL_ROUTES}


def _echo_table(table, route, fmt):
    if fmt == 'json':
        click.echo(dump_json(table))
    elif route == ALL_ROUTES:
        for name, value in table['routes'].items():
            click.echo(f'{name}: {value if value is not None else "n/a"}')
    else:
        click.echo(table['routes'][route])


@count_bp.cli.command('count')
@click.argument('kind', metavar='CLASS', type=click.Choice(['pp', 'tcpp', 'cspp', 'cstcpp']))
@click.argument('a', type=int)
@click.argument('b', type=int)
@click.argument('c', type=int)
@click.option('--route', type=click.Choice(list(ROUTE_NAMES)), default='det', show_default=True)
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.pass_context
def count(ctx, kind, a, b, c, route, fmt):
    """Count the plane partitions of CLASS in an A x B x C box"""
    dims = dims_or_fail(ctx, a, b, c)
    route = ROUTE_NAMES[route]

    success, result = CountService().count(kind, dims, route)

    if success:
        _echo_table(result, route, fmt)
    else:
        if 'table' in result:
            _echo_table(result['table'], ALL_ROUTES, fmt)
        fail(ctx, result)


@count_bp.cli.command('qcount')
@click.argument('a', type=int)
@click.argument('b', type=int)
@click.argument('c', type=int)
@click.option('--route', type=click.Choice(list(ROUTE_NAMES)), default='det', show_default=True)
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text', show_default=True)
@click.pass_context
def qcount(ctx, a, b, c, route, fmt):
    """q-count of the plane partitions in an A x B x C box"""
    dims = dims_or_fail(ctx, a, b, c)
    route = ROUTE_NAMES[route]

    success, result = CountService().qcount(dims, route)

    if success:
        _echo_table(result, route, fmt)
    else:
        if 'table' in result:
            _echo_table(result['table'], ALL_ROUTES, fmt)
        fail(ctx, result)
