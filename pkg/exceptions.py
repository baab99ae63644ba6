"""
Exception hierarchy for the plane partition engine
Each failure category maps onto one command exit code
"""


class PlanePartitionError(Exception):
    """Base class for every error raised by the engine"""
    exit_code = 1


class DimensionError(PlanePartitionError, ValueError):
    """Box dimensions are invalid for the requested class or operation"""
    exit_code = 2


class BudgetExceeded(PlanePartitionError):
    """An enumeration was refused because it exceeds the configured budget"""
    exit_code = 3


class InvariantViolation(PlanePartitionError):
    """A check that must hold exactly has failed"""
    exit_code = 4


class InexactDivision(InvariantViolation, ArithmeticError):
    """A ring division left a remainder"""
