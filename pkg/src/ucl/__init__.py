"""Exact Bell and derangement polynomials with congruence checkers."""

from .numeric import PrimeModulus, is_prime, mod_inverse, primes_up_to
from .poly import IntPolynomial, ModPolynomial
from .combinat import bell_number, derangement_number, stirling_first, stirling_second
from .bell import bell_polynomial, derangement_polynomial, umbral_eval
from .congruence import SuiteConfig, run_suite, sweep_constant, clear_caches

__version__ = "0.1.0"
