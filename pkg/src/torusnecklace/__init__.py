"""Torus necklace braids, their link groups, J-braid presentations and circular Garside groups."""

from .words import Word
from .braids import BraidWord
from .presentations import FinitePresentation, Relation

__all__ = ["Word", "BraidWord", "FinitePresentation", "Relation"]
