"""
Verification command
"""
import click
from flask import Blueprint
from services.verify_service import VerifyService
from utils import dump_json, fail

# Create blueprint for the verify command
verify_bp = Blueprint('verify', __name__, cli_group=None)


@verify_bp.cli.command('verify')
@click.option('--max', 'max_side', type=int, default=3, show_default=True, help='Largest box side')
@click.option('--class', 'kind', type=click.Choice(['pp', 'tcpp', 'cspp', 'cstcpp']), help='Only this class')
@click.option('--perturb', is_flag=True, help='Double one edge weight to exercise the failure path')
@click.pass_context
def verify(ctx, max_side, kind, perturb):
    """Check route agreement, flatness and term equality on every box up to --max"""
    success, result = VerifyService().run(max_side, kind, perturb)

    report = result if success else result.get('report')
    if report is not None:
        click.echo(dump_json(report))

    if not success:
        fail(ctx, result)
