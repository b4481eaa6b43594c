"""Exact arithmetic for finite-dimensional Hom-Jordan algebras over Q and GF(p)."""

__version__ = "0.1.0"

from .algebra import (Check, HomAlgebra, Verdict, VerificationReport, check_commutative, check_hom_isomorphism_via_induced,
                      check_hom_jordan, check_homomorphism, check_jordan, check_multiplicative, multiply)
from .bimodule import (BimoduleRep, JordanModuleRep, bimodule_to_module, check_bimodule, check_equivariance,
                       check_jordan_module, is_irreducible, kernel_image_analysis, module_to_bimodule,
                       regular_bimodule)
from .classification import (ClassificationSignature, classification_signature, compare_signatures,
                             iso_search_smallfield, lift_ideal_isomorphism)
from .constructions import (direct_sum, family_cyclic, family_dim1, family_dim2, fixture_example_4_4, induced_jordan,
                            quotient, split_idempotent_alpha, yau_twist)
from .exactla import GF, QQ, Matrix, Subspace
from .io import load_algebra, load_bimodule, parse_algebra, serialize_algebra
from .structure import decompose_semisimple, derived_series, ideal_closure, is_semisimple, is_simple, radical

__all__ = [
    "Check", "HomAlgebra", "Verdict", "VerificationReport", "check_commutative", "check_hom_isomorphism_via_induced",
    "check_hom_jordan", "check_homomorphism", "check_jordan", "check_multiplicative", "multiply",
    "BimoduleRep", "JordanModuleRep", "bimodule_to_module", "check_bimodule", "check_equivariance",
    "check_jordan_module", "is_irreducible", "kernel_image_analysis", "module_to_bimodule", "regular_bimodule",
    "ClassificationSignature", "classification_signature", "compare_signatures", "iso_search_smallfield",
    "lift_ideal_isomorphism",
    "direct_sum", "family_cyclic", "family_dim1", "family_dim2", "fixture_example_4_4", "induced_jordan",
    "quotient", "split_idempotent_alpha", "yau_twist",
    "GF", "QQ", "Matrix", "Subspace",
    "load_algebra", "load_bimodule", "parse_algebra", "serialize_algebra",
    "decompose_semisimple", "derived_series", "ideal_closure", "is_semisimple", "is_simple", "radical",
]
