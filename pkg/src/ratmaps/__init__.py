"""Degree and birationality of rational maps between multi-projective spaces.

Exact arithmetic over QQ (gmpy2) and GF(p), with a Buchberger engine,
Rees/symmetric algebra tools, the Jacobian dual birationality test,
the lattice test for monomial maps, Sylvester forms for plane maps with a
linear syzygy, and several degree computations cross-checked against a
finite field fiber count.
"""
from .ring import (GREVLEX, NotHomogeneous, ParseError, Poly, Ring, RingError, TermOrder,
                   compare_monomials, format_polynomial, multi_degree)
from .groebner import (GroebnerBasis, Ideal, IdealError, buchberger, colon, eliminate,
                       intersect, normal_form, ring_map_kernel, saturate, saturate_irrelevant,
                       syzygies)
from .hilbert import (Unstabilized, graded_dimension, hilbert_fit, segre_degree,
                      variety_degree_and_dim)
from .maps import MapError, RationalMap
from .blowup import (is_linear_type, rees_ideal, saturated_fiber_table, sym_ideal)
from .birationality import (check_inverse, is_birational_jacdual, jacobian_dual,
                            linear_syzygy_rank, rank_mod_image)
from .monomial import (hermite_normal_form, is_birational_monomial, lattice_certificates,
                       solve_lattice)
from .plane import (hilbert_burch, is_birational_mu1, normalize_mu1, rees_equations_mu1,
                    sylvester_chain)
from .degree import (bound_p1p1, bound_single, criterion_1n, criterion_22, degree,
                     degree_via_formula, degree_via_limit, fiber_oracle, j_multiplicity,
                     p2_formula)

__version__ = "0.1.0"

__all__ = [
    "GREVLEX", "NotHomogeneous", "ParseError", "Poly", "Ring", "RingError", "TermOrder",
    "compare_monomials", "format_polynomial", "multi_degree",
    "GroebnerBasis", "Ideal", "IdealError", "buchberger", "colon", "eliminate", "intersect",
    "normal_form", "ring_map_kernel", "saturate", "saturate_irrelevant", "syzygies",
    "Unstabilized", "graded_dimension", "hilbert_fit", "segre_degree", "variety_degree_and_dim",
    "MapError", "RationalMap",
    "is_linear_type", "rees_ideal", "saturated_fiber_table", "sym_ideal",
    "check_inverse", "is_birational_jacdual", "jacobian_dual", "linear_syzygy_rank",
    "rank_mod_image",
    "hermite_normal_form", "is_birational_monomial", "lattice_certificates", "solve_lattice",
    "hilbert_burch", "is_birational_mu1", "normalize_mu1", "rees_equations_mu1",
    "sylvester_chain",
    "bound_p1p1", "bound_single", "criterion_1n", "criterion_22", "degree",
    "degree_via_formula", "degree_via_limit", "fiber_oracle", "j_multiplicity", "p2_formula",
]
