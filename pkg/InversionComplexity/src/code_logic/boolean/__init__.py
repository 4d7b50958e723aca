"""Boolean function package: truth tables, systems, chains and decrease.

Exports the value types and the :class:`DecreaseAnalyser` /
:class:`FunctionFile` helpers.
"""

from .truth_table import TruthTable, FunctionSystem, Chain, Point, \
    index_to_point, point_to_index, precedes, projection, projections, constant, \
    negation, conjunction, disjunction, nand, parity
from .decrease import DecreaseAnalyser, DecreaseProfile, DecreaseResult, markov_value
from .function_file import FunctionFile, strip_comment

__all__ = [
    "TruthTable",
    "FunctionSystem",
    "Chain",
    "Point",
    "index_to_point",
    "point_to_index",
    "precedes",
    "projection",
    "projections",
    "constant",
    "negation",
    "conjunction",
    "disjunction",
    "nand",
    "parity",
    "DecreaseAnalyser",
    "DecreaseProfile",
    "DecreaseResult",
    "markov_value",
    "FunctionFile",
    "strip_comment"
]
