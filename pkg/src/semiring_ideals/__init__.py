"""Ideals of finite commutative semirings: prime, primary, 2-absorbing and friends."""

from .core import (AxiomError, AxiomViolation, CapacityError, FiniteSemiring, MalformedTableError, find_violations,
                   from_tables, is_local, is_semidomain, units, validate_semiring)
from .enumeration import are_isomorphic, canonical_form, enumerate_semirings
from .ideals import (Ideal, all_ideals, classify_semiring, ideal_closure, ideal_intersection, ideal_product,
                     ideal_sum, is_maximal, is_primary, is_prime, is_subtractive_ideal, is_two_absorbing,
                     minimal_primes, minimal_two_absorbing, radical)

__version__ = "0.1.0"
