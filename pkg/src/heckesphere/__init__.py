"""Exact Hecke-algebra and spherical-module computations for Coxeter systems,
with coset-stroll and light-leaf combinatorics."""

from .coxeter import CoxeterMatrix, CoxeterSystem
from .hecke import HeckeAlgebra, HeckeElt
from .laurent import LaurentPoly
from .spherical import SphericalElt, SphericalModule

__all__ = [
    "CoxeterMatrix",
    "CoxeterSystem",
    "HeckeAlgebra",
    "HeckeElt",
    "LaurentPoly",
    "SphericalElt",
    "SphericalModule",
]

__version__ = "0.1.0"
