# Components package initialization
from overdurfee.components.partition_core import canonicalize, conjugate, add_overlay, sigma
from overdurfee.components.durfee import DurfeeDissection, durfee_order
from overdurfee.components.qseries import QSeries, RefinedQSeries, series_by_name
from overdurfee.components.weighted_maps import Thm21Pair, fibers, weight_literal, verify_weighted_identity
from overdurfee.components.verification import VerificationReport, run_identity

__all__ = [
    'canonicalize',
    'conjugate',
    'add_overlay',
    'sigma',
    'DurfeeDissection',
    'durfee_order',
    'QSeries',
    'RefinedQSeries',
    'series_by_name',
    'Thm21Pair',
    'fibers',
    'weight_literal',
    'verify_weighted_identity',
    'VerificationReport',
    'run_identity'
]
