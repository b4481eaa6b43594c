"""Exact linear algebra over Q and GF(p)."""

from .field import GF, QQ, Field, FieldError, PrimeField, Rationals, field_from_json
from .matrix import Matrix, ShapeError, Singular, invert, nullspace_basis, rank, rref, solve
from .subspace import (Subspace, column_space, count_subspaces, enumerate_subspaces, kernel, member,
                       subspace_intersect, subspace_sum)
from .canonical import SimilarityInvariant, charpoly, rational_canonical_form, similarity_invariant

__all__ = [
    "GF", "QQ", "Field", "FieldError", "PrimeField", "Rationals", "field_from_json",
    "Matrix", "ShapeError", "Singular", "invert", "nullspace_basis", "rank", "rref", "solve",
    "Subspace", "column_space", "count_subspaces", "enumerate_subspaces", "kernel", "member",
    "subspace_intersect", "subspace_sum",
    "SimilarityInvariant", "charpoly", "rational_canonical_form", "similarity_invariant",
]
