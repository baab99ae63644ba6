"""
Count Service
Runs the determinant, formula and oracle routes for one counting job
"""
from flask import current_app
from services.kasteleyn import CLASSES, DETERMINANT, FORMULA, ORACLE, route_table
from services.reptheory import Mode
from utils import exit_code_for, validate_class_dims

ROUTES = (DETERMINANT, FORMULA, ORACLE)
ALL_ROUTES = 'all'
EXIT_DISAGREE = 4


class CountService:
    """Service class for counting plane partitions by each route"""

    def __init__(self):
        self.oracle_budget = current_app.config['ORACLE_MAX_CELLS']

    def count(self, kind, dims, route=ALL_ROUTES):
        """
        Count one symmetry class in a box

        Args:
            kind: pp, tcpp, cspp or cstcpp
            dims: BoxDims
            route: determinant, formula, oracle or all

        Returns:
            tuple: (success, route_table_or_error)
        """
        return self._run(kind, dims, route, Mode.CLASSICAL)

    def qcount(self, dims, route=ALL_ROUTES):
        """q-count of unrestricted plane partitions"""
        return self._run('pp', dims, route, Mode.QUANTUM)

    def _run(self, kind, dims, route, mode):
        try:
            if kind not in CLASSES:
                return False, {'error': f'Unknown class: {kind}', 'exit_code': 2}
            validate_class_dims(kind, dims)
            routes = ROUTES if route == ALL_ROUTES else (route,)
            if any(r not in ROUTES for r in routes):
                return False, {'error': f'Unknown route: {route}', 'exit_code': 2}

            table = route_table(kind, dims, mode, oracle_budget=self.oracle_budget, routes=routes)
            if route != ALL_ROUTES and table['routes'][route] is None:
                return False, {'error': f'No {route} route for {kind}', 'exit_code': 2}

            if not table['agree']:
                current_app.logger.error(f'Routes disagree for {kind} {dims}: {table["routes"]}')
                return False, {'error': f'Routes disagree for {kind} {dims}', 'exit_code': EXIT_DISAGREE,
                               'table': table}

            current_app.logger.info(f'{kind} {dims} ({mode.value}): {table["routes"]}')
            return True, table

        except Exception as e:
            current_app.logger.error(f'Count of {kind} {dims} failed: {str(e)}')
            return False, {'error': str(e), 'exit_code': exit_code_for(e)}
