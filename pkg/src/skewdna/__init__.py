"""Reversible DNA codes from skew cyclic codes over GF(4^(2s))."""

from .codes import SkewCyclicCode, build_code, dual, generator_matrix, minimum_distance
from .dna import DnaTable, build_table, is_reversible_dna_by_generator, is_reversible_dna_code
from .errors import DomainError, GuardError, InvalidModulusError, NotDivisorError, SkewDnaError, UsageError
from .gf import ONE, ZERO, Field, build_field
from .search import DivisorQuery, factor_odd_length, find_right_divisors, sweep_and_classify
from .skewpoly import (
    SkewPoly,
    is_palindromic,
    is_right_divisor,
    is_theta_palindromic,
    left_divmod,
    palindromic_normalize,
    right_divmod,
    skew_mul,
    skew_reciprocal,
)

__version__ = "0.1.0"
