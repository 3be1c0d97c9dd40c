"""Centralizers of 2x2 matrices over factor rings R/I of the UFDs Z, F_p[x], Z[x], F_p[x,y]."""
from .ufd import (ExactDivisionError, PrimeFactorization, Poly, Ring, RingMismatchError,
                  UnsupportedFactorizationError, canonical, divide_exact, divides, factor,
                  format_poly, gcd_many, lcm, multiplicity, parse_poly)
from .ideals import (AnnIdealView, Residue, TermIdeal, UndecidableError,
                     UnsupportedIdealError, build_ideal, ideal_equals, ideal_scale_down,
                     membership, normal_form, solve_congruences)
from .lifting import (IInvertibility, InverseCertificate, InverseResult, IPreImage,
                      PrincipalityReport, SemiDivisorResult, annihilator,
                      classify_principality, divisor_part, geometric_inverse, i_preimage,
                      is_i_invertible, semi_divisor_solve, try_inverse)
from .matrices import (ReducedTriple, ScalarCase, centralizer_generators, commutes, mat,
                       reduce_matrix)
from .classify import BezoutCertificate, IMatrixVerdict, bezout_certificate, classify
from .theorem import (CentralizerDescription, DecompositionCertificate, NotAnIMatrix,
                      NotMember, UnknownMembership, counterexample_44, counterexample_45,
                      decompose, prop_grid, theorem41_description)
from .oracle import (EnumerationReport, FiniteRingSpec, compare, enumerate_centralizer,
                     sample_commuting)

__version__ = "0.1.0"
