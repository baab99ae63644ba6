"""
Matrix Service
Builds and exports the X|_(-1) blocks behind the determinant route
"""
from flask import current_app
from services.kasteleyn import CLASSES
from services.reptheory import (
    Mode, TensorRep, X, block, cspp_matrix, cstcpp_matrix, matrix_to_csv, matrix_to_json, pp_matrix, tcpp_matrix,
)
from utils import dump_json, exit_code_for, validate_class_dims

FORMATS = ('json', 'csv')


class MatrixService:
    """Service class for dumping representation matrices"""

    def build(self, kind, dims, mode=Mode.CLASSICAL):
        """
        X|_(-1) for one class

        Args:
            kind: pp, tcpp, cspp or cstcpp
            dims: BoxDims; tcpp needs a = b and even c, the others a cube
            mode: classical, or quantum for pp

        Returns:
            tuple: (success, RepMatrix_or_error)
        """
        try:
            mode = Mode(mode)
            if kind not in CLASSES:
                return False, {'error': f'Unknown class: {kind}', 'exit_code': 2}
            if mode == Mode.QUANTUM and kind != 'pp':
                return False, {'error': 'Quantum matrices exist only for pp', 'exit_code': 2}

            validate_class_dims(kind, dims)
            a, b, c = dims.as_tuple()
            if kind == 'pp':
                return True, pp_matrix(dims, mode)[0]
            if kind == 'tcpp':
                return True, tcpp_matrix(a, c // 2)
            if kind == 'cspp':
                return True, cspp_matrix(a)
            return True, cstcpp_matrix(a // 2)

        except Exception as e:
            current_app.logger.error(f'Matrix for {kind} {dims} failed: {str(e)}')
            return False, {'error': str(e), 'exit_code': exit_code_for(e)}

    def build_tensor(self, highest_weights, mode=Mode.CLASSICAL):
        """X|_(-1) of V_n1 (x) V_n2 (x) ..."""
        try:
            rep = TensorRep.of(highest_weights, mode)
            if sum(highest_weights) % 2 == 0:
                return False, {'error': 'Weight -1 needs an odd sum of highest weights', 'exit_code': 2}
            return True, block(rep, X, -1)

        except Exception as e:
            current_app.logger.error(f'Tensor matrix for {highest_weights} failed: {str(e)}')
            return False, {'error': str(e), 'exit_code': exit_code_for(e)}

    def export(self, matrix, fmt='json'):
        """Serialize a matrix as JSON or CSV text"""
        if fmt not in FORMATS:
            return False, {'error': f'Unknown format: {fmt}', 'exit_code': 2}
        if fmt == 'csv':
            return True, matrix_to_csv(matrix)
        return True, dump_json(matrix_to_json(matrix))
