# Utils package initialization
from overdurfee.utils.errors import InvariantViolation, OverpartitionParseError, PreconditionError
from overdurfee.utils.logging import get_logger, set_level, setup_logger
from overdurfee.utils.constants import get_max_order


__all__ = [
    'InvariantViolation',
    'OverpartitionParseError',
    'PreconditionError',
    'get_logger',
    'set_level',
    'setup_logger',
    'get_max_order'
]
