"""Exact computational algebra for categorified Lie theory.

Subpackages cover, bottom up: exact rational linear algebra, two-term
chain complexes, 2-vector spaces with their strict 2-category, two-term
L-infinity structures, semistrict Lie 2-algebras with differential
crossed modules, Lie algebra cohomology with the skeletal
classification, and the Yang-Baxter / Zamolodchikov braiding checks.
"""

from .exactlin import RMatrix, Rational, kron, rank_kernel, solve_linear
from .linfty import TwoTermLInfinity, check_axioms, generalized_jacobi
from .lie2 import SemistrictLie2Algebra, from_linfty, to_linfty
from .twoterm import TwoTermComplex, skeletalize_complex
from .twovect import TwoVectorSpace, functor_S, functor_T, ground_field

__all__ = [
    "RMatrix", "Rational", "kron", "rank_kernel", "solve_linear",
    "TwoTermComplex", "skeletalize_complex",
    "TwoVectorSpace", "functor_S", "functor_T", "ground_field",
    "TwoTermLInfinity", "check_axioms", "generalized_jacobi",
    "SemistrictLie2Algebra", "from_linfty", "to_linfty",
]

__version__ = "0.1.0"
