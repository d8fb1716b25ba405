"""Splitting fields and algebraic degrees of n-Cayley digraphs over finite abelian groups."""
from .config import AnalysisConfig
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .ga_matrix import GAMatrix, NCayleySpec, beta_all, delta_matrix
from .galois import ClosureError
from .group_algebra import GroupAlgebraElement, fourier_inverse, fourier_transform
from .groups import FiniteAbelianGroup, make_group
from .spectra import Analysis, CertificationMethod, DegreeReport, analyze, degree_report

__all__ = [
    "AnalysisConfig",
    "Analysis",
    "CertificationMethod",
    "ClosureError",
    "CyclotomicNumber",
    "DegreeReport",
    "FiniteAbelianGroup",
    "GAMatrix",
    "GroupAlgebraElement",
    "NCayleySpec",
    "analyze",
    "beta_all",
    "cyclotomic_polynomial",
    "degree_report",
    "delta_matrix",
    "fourier_inverse",
    "fourier_transform",
    "make_group",
]
