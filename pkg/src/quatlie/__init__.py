"""Exact quaternionic Lie algebra constructions and checks for sp(k,l)."""

from .scalars import Quaternion, GaussianRational
from .qlinalg import MatrixQ, Subspace
from .liecore import LieAlgebra, NonAssocAlgebra, GradedDecomposition
from .spfactory import Signature, Variant
from .weights import DominantWeight, weyl_dim

__all__ = ["Quaternion", "GaussianRational", "MatrixQ", "Subspace", "LieAlgebra",
           "NonAssocAlgebra", "GradedDecomposition", "Signature", "Variant",
           "DominantWeight", "weyl_dim"]
