"""
Verification Service
Sweeps boxes up to a side length and checks that every route agrees, that
every weighting is Kasteleyn-flat and that determinant terms are equal
"""
from itertools import product
from flask import current_app
from exceptions import PlanePartitionError
from services.kasteleyn import (
    CLASSES, class_graph, determinant_via_dmap, route_table, verify_flatness, verify_term_equality, weigh_graph,
)
from services.products import BoxDims
from services.reptheory import Mode
from utils import exit_code_for

EXIT_FAILED = 4
# Largest side for the quantum and D map checks
SMALL_SIDE = 3


class VerifyService:
    """Service class for the agreement sweep"""

    def __init__(self):
        self.oracle_budget = current_app.config['ORACLE_MAX_CELLS']
        self.term_budget = current_app.config['TERM_CHECK_MAX_VERTICES']
        self.matching_budget = current_app.config['MATCHING_MAX_VERTICES']

    def run(self, max_side, kind=None, perturb=False):
        """
        Verify every class (or one) on all boxes with sides up to max_side

        Args:
            max_side: largest box side
            kind: restrict the sweep to one class
            perturb: double one edge weight of each graph first

        Returns:
            tuple: (success, report_or_error)
        """
        try:
            if max_side < 1:
                return False, {'error': f'--max must be at least 1, got {max_side}', 'exit_code': 2}
            if kind is not None and kind not in CLASSES:
                return False, {'error': f'Unknown class: {kind}', 'exit_code': 2}

            jobs = []
            for cls, dims in self._jobs(max_side, kind):
                try:
                    jobs.append(self._verify_job(cls, dims, perturb))
                except PlanePartitionError as e:
                    current_app.logger.error(f'{cls} {dims} raised: {str(e)}')
                    jobs.append({'class': cls, 'dims': list(dims.as_tuple()), 'ok': False, 'error': str(e)})

            report = {
                'max': max_side,
                'perturbed': perturb,
                'jobs': jobs,
                'ok': all(job['ok'] for job in jobs),
            }
            if not report['ok']:
                failed = [f"{job['class']} {'x'.join(map(str, job['dims']))}" for job in jobs if not job['ok']]
                current_app.logger.error(f'Verification failed for {", ".join(failed)}')
                return False, {'error': f'Verification failed for {len(failed)} job(s)', 'exit_code': EXIT_FAILED,
                               'report': report}

            current_app.logger.info(f'Verified {len(jobs)} jobs up to side {max_side}')
            return True, report

        except Exception as e:
            current_app.logger.error(f'Verification failed: {str(e)}')
            return False, {'error': str(e), 'exit_code': exit_code_for(e)}

    def _jobs(self, max_side, kind):
        sides = range(1, max_side + 1)
        for cls in (kind,) if kind else CLASSES:
            if cls == 'pp':
                for a, b, c in product(sides, repeat=3):
                    yield cls, BoxDims(a, b, c)
            elif cls == 'tcpp':
                for a, c in product(sides, repeat=2):
                    yield cls, BoxDims(a, a, c)
            else:
                for a in sides:
                    yield cls, BoxDims(a, a, a)

    def _verify_job(self, kind, dims, perturb):
        """Routes, flatness and term equality for one (class, box)"""
        table = route_table(kind, dims, Mode.CLASSICAL, oracle_budget=self.oracle_budget)
        job = {'class': kind, 'dims': list(dims.as_tuple()), 'routes': table['routes'], 'agree': table['agree']}
        checks = [table['agree']]

        # Empty classes have no graph
        if (kind == 'tcpp' and dims.c % 2) or (kind == 'cstcpp' and dims.a % 2):
            job['ok'] = table['agree']
            return job

        graph = weigh_graph(class_graph(kind, dims))
        if perturb:
            graph = self._perturb(graph)
        flatness = verify_flatness(graph)
        job['flatness'] = {'faces': len(flatness['faces']), 'violations': flatness['violations']}
        checks.append(flatness['ok'])

        if len(graph.black) <= self.term_budget and len(graph.vertices) <= self.matching_budget:
            terms = verify_term_equality(graph, budget=self.term_budget)
            job['terms'] = {'matchings': terms['matchings'], 'normalization': terms['normalization'],
                            'equal': terms['ok']}
            checks.append(terms['ok'])
        else:
            job['terms'] = 'skipped'

        if kind == 'pp' and max(dims.as_tuple()) <= SMALL_SIDE:
            qtable = route_table(kind, dims, Mode.QUANTUM, oracle_budget=self.oracle_budget)
            qflat = verify_flatness(weigh_graph(class_graph(kind, dims), Mode.QUANTUM))
            job['q_routes'] = qtable['routes']
            job['q_flat'] = qflat['ok']
            job['dmap'] = str(determinant_via_dmap(dims))
            checks.extend([qtable['agree'], qflat['ok']])

        job['ok'] = all(checks)
        return job

    def _perturb(self, graph):
        """Double the weight of the first numerator edge of the first face"""
        if not graph.faces:
            target = graph.edges[0].key
        else:
            target = graph.faces[0].positive[0]
        return graph.with_weights(lambda edge: edge.weight * 2 if edge.key == target else edge.weight)
