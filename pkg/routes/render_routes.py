"""
Render command
"""
import click
from flask import Blueprint
from services.render_service import RenderService
from utils import dims_or_fail, fail

# Create blueprint for the render command
render_bp = Blueprint('render', __name__, cli_group=None)


@render_bp.cli.command('render')
@click.argument('a', type=int)
@click.argument('b', type=int)
@click.argument('c', type=int)
@click.option('--index', type=int, help='Position in the enumeration, 0 is the empty partition')
@click.option('--seed', type=int, help='Grow a random partition from this seed')
@click.option('--full', is_flag=True, help='Render the full box')
@click.option('--output', help='Output SVG path')
@click.pass_context
def render(ctx, a, b, c, index, seed, full, output):
    """Write the lozenge tiling of one plane partition in an A x B x C box as SVG"""
    dims = dims_or_fail(ctx, a, b, c)

    success, result = RenderService().render(dims, index=index, seed=seed, full=full, output=output)

    if success:
        click.echo(result['path'])
    else:
        fail(ctx, result)
