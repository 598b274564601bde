"""Odd arc algebras: construction, centers, Springer cohomology and twisting."""

from .algebra import ArcElement, OddArcAlgebra
from .chronology import ChoiceC, Chronology, canonical_choice
from .diagrams import Matching, enumerate_matchings
from .exterior import ExtElement, Gaussian

__all__ = [
    "ArcElement", "OddArcAlgebra", "ChoiceC", "Chronology", "canonical_choice",
    "Matching", "enumerate_matchings", "ExtElement", "Gaussian",
]
__version__ = "0.1.0"
