"""Circuit package: the circuit representation, its engine and its file codec."""

from .circuit import BasisGate, ChainSplitReport, Circuit, CircuitEngine, \
    CircuitStatistics, Gate, WeightBoundReport, MonotoneGate, SignalKind, SignalRef, \
    SplitResult, ValidationReport, gate_ref, input_ref
from .circuit_file import CircuitFile

__all__ = [
    "BasisGate",
    "ChainSplitReport",
    "Circuit",
    "CircuitEngine",
    "CircuitFile",
    "CircuitStatistics",
    "Gate",
    "WeightBoundReport",
    "MonotoneGate",
    "SignalKind",
    "SignalRef",
    "SplitResult",
    "ValidationReport",
    "gate_ref",
    "input_ref"
]
