"""Homology of distributive, associative and Yang-Baxter structures, with
knot colorings, state sums and cube homology built on top."""
from .chain import ChainComplex, HomologyGroup
from .magma import FiniteMagma, ParseError, ValidationError, check_axioms

__all__ = ["ChainComplex", "HomologyGroup", "FiniteMagma", "ParseError", "ValidationError",
           "check_axioms"]
__version__ = "0.1.0"
