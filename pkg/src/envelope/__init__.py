"""
Toric Envelope Package
"""

from src.envelope.algorithm import EnvelopeBoundResult, algorithm1
from src.envelope.cone import ConeIdeal, cone_ideal

__all__ = [
    "EnvelopeBoundResult",
    "algorithm1",
    "ConeIdeal",
    "cone_ideal",
]
