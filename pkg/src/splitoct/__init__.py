"""Exact arithmetic for the split octonions, their automorphism group,
and the separating and generating invariant families of several
octonions, with a trace-word normalizer, symbolic identity checks, and
a finite-field brute-force oracle.
"""

from .scalars import GF, QQ, PolynomialRing, Polynomial, coefficients_in_z_half
from .octonion import (Octonion, basis, identity, zero, unit_e, unit_u, unit_v,
                       from_coords, from_basis_coords, q_form)
from .words import (left_normed, evaluate, normalize_trace, multilinear_sign,
                    TraceExpr, DECOMPOSABLE)
from .group import (GroupElement, from_sl3, delta1, delta2, hbar, theta,
                    compose, apply_tuple, is_automorphism, enumerate_group,
                    group_order_formula)
from .invariants import (Descriptor, enumerate_set, eval_descriptor, q_prime,
                         psi, psi_hat, embed_matrix, matrix_invariants,
                         generic_octonion, generic_traceless_octonion)
from .symbolic import (verify_identity, verify_all_identities,
                       verify_skew_symmetrization, decomposability_check,
                       IDENTITY_NAMES)
from .orbits import (rank, algebra_closure, gl_right_action, separate, limit,
                     nonclosedness_witnesses, gram_matrix, orbit_equal_oracle,
                     subalgebra_fingerprint, rebuild_automorphism)

__version__ = "0.1.0"
