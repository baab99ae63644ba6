"""
Utility functions for the plane partition engine
"""
import os
import click
from werkzeug.utils import secure_filename
from flask import json
from exceptions import DimensionError, PlanePartitionError
from services.products import BoxDims

# Exit code for usage errors
EXIT_USAGE = 2


def parse_dims(a, b, c):
    """Box dimensions from command arguments; raises DimensionError"""
    return BoxDims(int(a), int(b), int(c))


def parse_tensor(text):
    """Highest weights from a space separated list such as "4 3" """
    try:
        weights = [int(part) for part in text.split()]
    except ValueError:
        raise ValueError(f'Tensor factors must be integers, got {text!r}')
    if not weights or any(n < 0 for n in weights):
        raise ValueError(f'Tensor factors must be non-negative highest weights, got {text!r}')
    return weights


def exit_code_for(error):
    """Stable exit code of a failure"""
    if isinstance(error, PlanePartitionError):
        return error.exit_code
    if isinstance(error, ValueError):
        return EXIT_USAGE
    return 1


def dump_json(data):
    """Indented JSON text with the application's JSON provider"""
    return json.dumps(data, indent=2)


def create_output_directory(path):
    """Create the parent directory of an output file"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    return directory


def secure_output_filename(filename, default_name="tiling.svg"):
    """Ensure output filename is secure and has proper extension"""
    if not filename:
        filename = default_name

    if not filename.endswith('.svg'):
        filename += '.svg'

    return secure_filename(filename)


def validate_class_dims(kind, dims):
    """Reject boxes a class is not defined on; raises DimensionError"""
    a, b, c = dims.as_tuple()
    if kind == 'tcpp' and (a != b or c % 2):
        raise DimensionError(f'tcpp needs a = b and even c, got {dims}')
    if kind == 'cspp' and not a == b == c:
        raise DimensionError(f'cspp needs a = b = c, got {dims}')
    if kind == 'cstcpp' and (not a == b == c or a % 2):
        raise DimensionError(f'cstcpp needs a = b = c and even, got {dims}')
    return dims


def fail(ctx, result):
    """Print a service error to stderr and exit with its code"""
    click.echo(f"Error: {result['error']}", err=True)
    ctx.exit(result.get('exit_code', 1))


def dims_or_fail(ctx, a, b, c):
    """Parsed box dimensions, or a usage exit"""
    try:
        return parse_dims(a, b, c)
    except ValueError as e:
        fail(ctx, {'error': str(e), 'exit_code': exit_code_for(e)})
