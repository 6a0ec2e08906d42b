"""Inverse Chevalley formula for semi-infinite flag manifolds, minuscule weights."""

from .rootsystem import CartanType, Root, RootSystem, RootSystemError, build_root_system, parse_cartan
from .weyl import (AffineWeylElt, MinusculeDatum, UnsupportedWeightError, WeylElt,
                   from_word, identity, longest, minuscule_datum)

__all__ = [
    "CartanType", "Root", "RootSystem", "RootSystemError", "build_root_system", "parse_cartan",
    "AffineWeylElt", "MinusculeDatum", "UnsupportedWeightError", "WeylElt",
    "from_word", "identity", "longest", "minuscule_datum",
]

__version__ = "0.1.0"
