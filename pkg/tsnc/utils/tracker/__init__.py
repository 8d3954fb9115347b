"""
This module gathers objects to keep track of values across fixed-point passes
"""

from .delta import DeltaTracker
from .multi_value import MultiValueTracker

__all__ = [
    "DeltaTracker",
    "MultiValueTracker"
]
