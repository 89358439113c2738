"""Kronecker coefficients of two-row shapes and their stretching quasipolynomials."""
from .core import KronTriple, Partition, QuasiPolynomial, ShapeDecomposition
from .errors import KronError
from .kron2row import kron_two_row, reduce_by_determinants, ZeroCertificate
from .oracle import kron_oracle, kostka, lr_coeff
from .reduced import kron_from_reduced_2x2, rkron_one_row, rkron_stabilized, ReducedIndex
from .stretch import analyze_triple, fit_quasipolynomial, sample_stretch
from .hunt import SearchBox, hunt_strong_ph2, hunt_strong_sh

__all__ = [
    "KronTriple", "Partition", "QuasiPolynomial", "ShapeDecomposition", "KronError",
    "kron_two_row", "reduce_by_determinants", "ZeroCertificate",
    "kron_oracle", "kostka", "lr_coeff",
    "kron_from_reduced_2x2", "rkron_one_row", "rkron_stabilized", "ReducedIndex",
    "analyze_triple", "fit_quasipolynomial", "sample_stretch",
    "SearchBox", "hunt_strong_ph2", "hunt_strong_sh",
]
