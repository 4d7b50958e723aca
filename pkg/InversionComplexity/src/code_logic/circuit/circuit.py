"""Circuit intermediate representation over a basis of weighted generators.

Gates are listed in topological order. A gate argument is a reference to
an input or to a strictly earlier gate. Monotone gates carry their own
table (arity 0 gives the constants) and cost nothing; basis gates name a
generator of the attached :class:`Basis` and cost one unit each.
"""

import dataclasses
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger
from ..boolean import Chain, DecreaseAnalyser, FunctionSystem, TruthTable, \
    projection
from ..basis import Basis


class SignalKind(Enum):
    """What a signal reference points at."""
    INPUT = "input"
    GATE = "gate"


@dataclasses.dataclass(frozen=True)
class SignalRef:
    """A reference to input ``index`` (0-based, x1 is 0) or to gate ``index``."""
    kind: SignalKind
    index: int


def input_ref(index: int) -> SignalRef:
    """Reference to the 0-based input."""
    return SignalRef(SignalKind.INPUT, index)


def gate_ref(index: int) -> SignalRef:
    """Reference to the 0-based gate."""
    return SignalRef(SignalKind.GATE, index)


@dataclasses.dataclass(frozen=True)
class MonotoneGate:
    """A free gate computing a monotone table of its arguments."""
    table: TruthTable
    args: Tuple[SignalRef, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))


@dataclasses.dataclass(frozen=True)
class BasisGate:
    """A weighted gate computing generator ``omega_index`` of the basis."""
    omega_index: int
    args: Tuple[SignalRef, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))


Gate = Union[MonotoneGate, BasisGate]


@dataclasses.dataclass(frozen=True)
class Circuit:
    """A combinational circuit.

    Fields:
        n_inputs (int): Number of inputs x1..xk.
        gates (Tuple[Gate, ...]): Gates in topological order.
        outputs (Tuple[SignalRef, ...]): Output references, duplicates allowed.
    """
    n_inputs: int
    gates: Tuple[Gate, ...]
    outputs: Tuple[SignalRef, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))


class ValidationReport(NamedTuple):
    """Result of :meth:`CircuitEngine.validate`."""
    ok: bool
    gate_index: Optional[int] = None
    reason: str = ""


@dataclasses.dataclass(frozen=True)
class SplitResult:
    """The circuit with its first weighted gate replaced by a new input y.

    Fields:
        reduced (Circuit): Input 0 is y, input j + 1 is the old input j.
        h (TruthTable): The function computed at the removed gate.
        gate_index (int): Index of the removed gate in the original circuit.
    """
    reduced: Circuit
    h: TruthTable
    gate_index: int


class WeightBoundReport(NamedTuple):
    """d(F) <= (2r + 1)(2^I - 1) for the system F realised by a circuit."""
    d: int
    r: int
    weight: int
    bound: int
    holds: bool


class ChainSplitReport(NamedTuple):
    """Chain counting step behind check-lemma1, replayed on a witness chain."""
    chain: Chain
    d_chain: int
    h_changes: int
    h_decrease: int
    d_zero_part: int
    d_one_part: int
    chain_bound: int
    change_bound: int
    holds: bool


class CircuitStatistics(NamedTuple):
    """Gate counts of a circuit."""
    monotone_gates: int
    basis_gates: int
    outputs: int


class CircuitEngine:
    """Validation, evaluation and transformations of circuits.

    Holds a :class:`DecreaseAnalyser` for the monotonicity checks and the
    decrease-based reports.
    """

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, arity_cap: int = CONST.ARITY_CAP, debug: bool = False) -> None:
        """Create the engine.

        Args:
            arity_cap (int): Largest input count for exhaustive evaluation.
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.arity_cap: int = arity_cap
        self.disp.update_disp_debug(self.debug)
        self.analyser: DecreaseAnalyser = DecreaseAnalyser(
            arity_cap, self.debug
        )

    def _reference_error(self, ref: SignalRef, n_inputs: int, limit: int) -> str:
        if ref.kind == SignalKind.INPUT:
            if not 0 <= ref.index < n_inputs:
                return f"unknown input x{ref.index + 1}"
            return ""
        if ref.index < 0:
            return f"invalid gate reference {ref.index}"
        if ref.index >= limit:
            return f"forward reference to gate {ref.index}"
        return ""

    def validate(self, circuit: Circuit, basis: Basis) -> ValidationReport:
        """Check every circuit invariant and report the first failing gate."""
        if circuit.n_inputs < 0:
            return ValidationReport(False, None, "negative input count")
        for index, gate in enumerate(circuit.gates):
            for ref in gate.args:
                error: str = self._reference_error(
                    ref, circuit.n_inputs, index
                )
                if error:
                    return ValidationReport(False, index, error)
            if isinstance(gate, MonotoneGate):
                if len(gate.args) != gate.table.arity:
                    return ValidationReport(
                        False, index,
                        f"arity mismatch: table of arity {gate.table.arity}, {len(gate.args)} arguments"
                    )
                if not self.analyser.is_monotone(gate.table):
                    return ValidationReport(
                        False, index,
                        f"monotone gate holds the non monotone table {gate.table.to_hex()}"
                    )
            else:
                if not 0 <= gate.omega_index < len(basis):
                    return ValidationReport(
                        False, index, f"unknown generator index {gate.omega_index}"
                    )
                expected: int = basis[gate.omega_index].arity
                if len(gate.args) != expected:
                    return ValidationReport(
                        False, index,
                        f"arity mismatch: generator of arity {expected}, {len(gate.args)} arguments"
                    )
        if not circuit.outputs:
            return ValidationReport(False, None, "the circuit has no output")
        for ref in circuit.outputs:
            error = self._reference_error(
                ref, circuit.n_inputs, len(circuit.gates)
            )
            if error:
                return ValidationReport(False, None, error)
        return ValidationReport(True)

    def ensure_valid(self, circuit: Circuit, basis: Basis) -> None:
        """Raise on the first broken invariant.

        Raises:
            CircuitValidationError: The circuit is malformed.
        """
        report: ValidationReport = self.validate(circuit, basis)
        if not report.ok:
            raise CONST.CircuitValidationError(report.gate_index, report.reason)

    def _gate_function(self, gate: Gate, basis: Basis) -> TruthTable:
        if isinstance(gate, MonotoneGate):
            return gate.table
        return basis[gate.omega_index]

    def evaluate(self, circuit: Circuit, basis: Basis, point: Sequence[int]) -> Tuple[int, ...]:
        """Evaluate gate by gate on one input tuple.

        Raises:
            CircuitValidationError: The circuit is malformed.
            ValueError: Wrong tuple length.
        """
        self.ensure_valid(circuit, basis)
        if len(point) != circuit.n_inputs:
            raise ValueError(
                f"Expected {circuit.n_inputs} input values, got {len(point)}."
            )
        values: List[int] = []

        def read(ref: SignalRef) -> int:
            if ref.kind == SignalKind.INPUT:
                return int(point[ref.index])
            return values[ref.index]

        for gate in circuit.gates:
            function: TruthTable = self._gate_function(gate, basis)
            values.append(function.evaluate([read(ref) for ref in gate.args]))
        return tuple(read(ref) for ref in circuit.outputs)

    def signal_tables(self, circuit: Circuit, basis: Basis, stop: Optional[int] = None) -> List[TruthTable]:
        """The table of every gate (up to ``stop`` excluded) as a function of the inputs."""
        arity: int = circuit.n_inputs
        inputs: List[TruthTable] = [projection(arity, j) for j in range(arity)]
        tables: List[TruthTable] = []
        gates = circuit.gates if stop is None else circuit.gates[:stop]
        for gate in gates:
            arguments: List[TruthTable] = [
                inputs[ref.index] if ref.kind == SignalKind.INPUT else tables[ref.index]
                for ref in gate.args
            ]
            tables.append(
                self._gate_function(gate, basis).compose(arguments, arity)
            )
        return tables

    def realized_system(self, circuit: Circuit, basis: Basis) -> FunctionSystem:
        """One table per output, evaluated on every input tuple at once.

        Raises:
            CircuitValidationError: The circuit is malformed.
            ArityCapExceeded: Too many inputs.
        """
        self.ensure_valid(circuit, basis)
        self.analyser.check_arity(circuit.n_inputs)
        tables: List[TruthTable] = self.signal_tables(circuit, basis)
        arity: int = circuit.n_inputs
        members: List[TruthTable] = [
            projection(arity, ref.index) if ref.kind == SignalKind.INPUT else tables[ref.index]
            for ref in circuit.outputs
        ]
        return FunctionSystem(tuple(members))

    def inversion_weight(self, circuit: Circuit) -> int:
        """Number of basis gates."""
        return sum(1 for gate in circuit.gates if isinstance(gate, BasisGate))

    def statistics(self, circuit: Circuit) -> CircuitStatistics:
        """Gate counts by kind."""
        weight: int = self.inversion_weight(circuit)
        return CircuitStatistics(
            len(circuit.gates) - weight, weight, len(circuit.outputs)
        )

    def split_first_nonmonotone(self, circuit: Circuit, basis: Basis) -> SplitResult:
        """Replace the first weighted gate by a new input y.

        The reduced circuit computes g_i with f_i(x) = g_i(h(x), x), y being
        input 0 of the reduced circuit and h the function at the removed gate.

        Raises:
            NoNonMonotoneGateError: The circuit has no weighted gate.
            CircuitValidationError: The circuit is malformed.
        """
        self.ensure_valid(circuit, basis)
        removed: int = -1
        for index, gate in enumerate(circuit.gates):
            if isinstance(gate, BasisGate):
                removed = index
                break
        if removed < 0:
            raise CONST.NoNonMonotoneGateError(
                "The circuit has no weighted gate to split."
            )
        h: TruthTable = self.signal_tables(circuit, basis, removed + 1)[removed]

        def remap(ref: SignalRef) -> SignalRef:
            if ref.kind == SignalKind.INPUT:
                return input_ref(ref.index + 1)
            if ref.index == removed:
                return input_ref(0)
            if ref.index > removed:
                return gate_ref(ref.index - 1)
            return ref

        gates: List[Gate] = []
        for index, gate in enumerate(circuit.gates):
            if index == removed:
                continue
            args = tuple(remap(ref) for ref in gate.args)
            if isinstance(gate, MonotoneGate):
                gates.append(MonotoneGate(gate.table, args))
            else:
                gates.append(BasisGate(gate.omega_index, args))
        reduced = Circuit(
            circuit.n_inputs + 1,
            tuple(gates),
            tuple(remap(ref) for ref in circuit.outputs)
        )
        self.disp.log_debug(
            f"Split gate {removed}, h = {h.to_hex()}, weight {self.inversion_weight(circuit)} -> {self.inversion_weight(reduced)}"
        )
        return SplitResult(reduced, h, removed)

    def composition_holds(self, circuit: Circuit, basis: Basis, split: SplitResult) -> bool:
        """f_i(x) == g_i(h(x), x) on every input tuple."""
        original: FunctionSystem = self.realized_system(circuit, basis)
        reduced: FunctionSystem = self.realized_system(split.reduced, basis)
        for index in range(1 << circuit.n_inputs):
            lifted: int = split.h.value(index) | (index << 1)
            for f_member, g_member in zip(original, reduced):
                if f_member.value(index) != g_member.value(lifted):
                    return False
        return True

    def check_lemma1(self, circuit: Circuit, basis: Basis) -> WeightBoundReport:
        """Compare d(F) with (2r + 1)(2^I - 1) for the realised system F."""
        system: FunctionSystem = self.realized_system(circuit, basis)
        value: int = self.analyser.decrease(system).value
        weight: int = self.inversion_weight(circuit)
        bound: int = (2 * basis.r + 1) * ((1 << weight) - 1)
        report = WeightBoundReport(value, basis.r, weight, bound, value <= bound)
        self.disp.log_debug(f"Weight bound report: {report}")
        return report

    def chain_split_report(self, circuit: Circuit, basis: Basis) -> ChainSplitReport:
        """Replay the chain splitting argument on a witness chain of d(F).

        The witness chain C is lifted to the tuples (h(alpha), alpha) and cut
        into its h = 0 and h = 1 parts, both chains of the extended cube.

        Raises:
            NoNonMonotoneGateError: The circuit has no weighted gate.
        """
        split: SplitResult = self.split_first_nonmonotone(circuit, basis)
        system: FunctionSystem = self.realized_system(circuit, basis)
        reduced: FunctionSystem = self.realized_system(split.reduced, basis)
        chain: Chain = self.analyser.decrease(system).witness
        indices: List[int] = chain.indices()
        h_values: List[int] = [split.h.value(index) for index in indices]
        changes: int = sum(
            1 for first, second in zip(h_values, h_values[1:]) if first != second
        )
        parts: Dict[int, List[Tuple[int, ...]]] = {0: [], 1: []}
        for point, h_value in zip(chain.points, h_values):
            parts[h_value].append((h_value,) + point)
        part_decrease: Dict[int, int] = {}
        for h_value, points in parts.items():
            if points:
                part_decrease[h_value] = self.analyser.decrease_along_chain(
                    reduced, Chain(tuple(points))
                )
            else:
                part_decrease[h_value] = 0
        d_chain: int = self.analyser.decrease_along_chain(system, chain)
        h_decrease: int = self.analyser.decrease(
            FunctionSystem.of(split.h)
        ).value
        chain_bound: int = part_decrease[0] + part_decrease[1] + changes
        change_bound: int = 2 * basis.r + 1
        return ChainSplitReport(
            chain,
            d_chain,
            changes,
            h_decrease,
            part_decrease[0],
            part_decrease[1],
            chain_bound,
            change_bound,
            d_chain <= chain_bound and changes <= change_bound and h_decrease <= basis.r
        )

