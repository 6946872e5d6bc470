"""Artin and Coxeter groups of types A_n and D_n: Davis-complex geometry, Garside
normal forms, the Artin complex and the free-group model of A(D_n)."""

__version__ = "0.1.0"

from .coxeter import CoxeterGroup, CoxeterType, Face, coxeter_group
from .garside import ArtinGroup, GarsideElem, artin_group
from .artin_complex import ArtinComplex, Hexagon, VertexCoset
from .freegrp import FreeWord, SemidirectElem

__all__ = [
    "ArtinComplex", "ArtinGroup", "CoxeterGroup", "CoxeterType", "Face", "FreeWord",
    "GarsideElem", "Hexagon", "SemidirectElem", "VertexCoset", "artin_group", "coxeter_group",
]
