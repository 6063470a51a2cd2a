"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: input/shape problems -> 2,
violated operation preconditions -> 3, certification failures -> 4.
"""


class InputError(ValueError):
    """Malformed input document or unparseable rational literal."""


class ShapeError(ValueError):
    """Dimensions of an argument do not match what the operation requires."""


class PreconditionError(ValueError):
    """A documented precondition of an operation is violated."""


class ChartSingularityError(PreconditionError):
    """A chart denominator vanishes at the requested point."""


class CertificationError(RuntimeError):
    """A dimension certification produced an impossible or failing result."""
