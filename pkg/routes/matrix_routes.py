"""
Matrix dump command
"""
import click
from flask import Blueprint
from services.matrix_service import MatrixService
from utils import dims_or_fail, fail, parse_tensor

# Create blueprint for the matrix command
matrix_bp = Blueprint('matrix', __name__, cli_group=None)


@matrix_bp.cli.command('matrix')
@click.argument('kind', metavar='CLASS', type=click.Choice(['pp', 'tcpp', 'cspp', 'cstcpp']), required=False)
@click.argument('a', type=int, required=False)
@click.argument('b', type=int, required=False)
@click.argument('c', type=int, required=False)
@click.option('--mode', type=click.Choice(['classical', 'quantum']), default='classical', show_default=True)
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default='json', show_default=True)
@click.option('--tensor', help='Highest weights of an arbitrary tensor product, e.g. "4 3"')
@click.pass_context
def matrix(ctx, kind, a, b, c, mode, fmt, tensor):
    """Dump X restricted to weight -1 for CLASS in an A x B x C box"""
    service = MatrixService()

    if tensor:
        try:
            weights = parse_tensor(tensor)
        except ValueError as e:
            fail(ctx, {'error': str(e), 'exit_code': 2})
        success, result = service.build_tensor(weights, mode)
    else:
        if kind is None or None in (a, b, c):
            fail(ctx, {'error': 'Pass CLASS A B C or --tensor', 'exit_code': 2})
        success, result = service.build(kind, dims_or_fail(ctx, a, b, c), mode)

    if not success:
        fail(ctx, result)

    success, text = service.export(result, fmt)
    if not success:
        fail(ctx, text)
    click.echo(text, nl=False if text.endswith('\n') else True)
