"""
Render Service
Draws the lozenge tiling of a plane partition as an SVG file
"""
import os
from itertools import islice
from flask import current_app
from services.hexgraph import build_hexagon, render_tiling_svg
from services.oracle import PlanePartition, enumerate_pp, pp_to_matching, random_pp
from utils import create_output_directory, exit_code_for, secure_output_filename


class RenderService:
    """Service class for writing tiling pictures"""

    def __init__(self):
        self.render_folder = current_app.config['RENDER_FOLDER']
        self.unit = current_app.config['SVG_UNIT']
        self.oracle_budget = current_app.config['ORACLE_MAX_CELLS']

    def render(self, dims, index=None, seed=None, full=False, output=None):
        """
        Render one plane partition of the box

        Args:
            dims: BoxDims
            index: position in the lexicographic enumeration, 0 is empty
            seed: grow a random partition from this seed instead
            full: render the full box
            output: optional output path

        Returns:
            tuple: (success, result_data_or_error)
        """
        try:
            # Exactly one selector
            chosen = [index is not None, seed is not None, bool(full)]
            if sum(chosen) != 1:
                return False, {'error': 'Pass exactly one of --index, --seed or --full', 'exit_code': 2}

            partition = self._select(dims, index, seed, full)
            if partition is None:
                return False, {'error': f'Index {index} is past the last plane partition of {dims}', 'exit_code': 2}

            graph = build_hexagon(dims)
            svg = render_tiling_svg(graph, pp_to_matching(partition, graph), unit=self.unit)

            output_path = self._output_path(output, dims)
            with open(output_path, 'w', encoding='utf-8') as handle:
                handle.write(svg)

            current_app.logger.info(f'Rendered {partition} in {dims} to {output_path}')
            return True, {
                'path': output_path,
                'partition': str(partition),
                'cubes': partition.size,
                'message': 'Tiling rendered successfully!'
            }

        except Exception as e:
            current_app.logger.error(f'Render of {dims} failed: {str(e)}')
            return False, {'error': str(e), 'exit_code': exit_code_for(e)}

    def _select(self, dims, index, seed, full):
        if full:
            return PlanePartition.full(dims)
        if seed is not None:
            return random_pp(dims, seed)
        if index < 0:
            raise ValueError(f'Index must be non-negative, got {index}')
        return next(islice(enumerate_pp(dims, budget=self.oracle_budget), index, None), None)

    def _output_path(self, output, dims):
        """Secure file name inside the requested directory or the render folder"""
        default_name = f'tiling-{dims}.svg'
        if output:
            directory = os.path.dirname(output) or self.render_folder
            filename = secure_output_filename(os.path.basename(output), default_name=default_name)
        else:
            directory = self.render_folder
            filename = secure_output_filename(None, default_name=default_name)
        path = os.path.join(directory, filename)
        create_output_directory(path)
        return path
