"""Boundary-weight calculus for the Kuga-Sato families over Picard modular varieties."""

from ._kernels import BACKEND
from .lattice import TorusCharacter, parse_character

__version__ = "0.1.0"
__all__ = ["BACKEND", "TorusCharacter", "parse_character"]
