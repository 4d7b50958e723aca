"""Exact package: pattern pools and the exhaustive inversion complexity search."""

from .pattern_pool import MonotoneSignals, PatternPool
from .search import ExactResult, ExactSearch, SearchStep

__all__ = [
    "ExactResult",
    "ExactSearch",
    "MonotoneSignals",
    "PatternPool",
    "SearchStep"
]
