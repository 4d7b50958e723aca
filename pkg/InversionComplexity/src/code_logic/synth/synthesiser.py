"""Markov synthesis: circuits using exactly ceil(log2(d(F) + 1)) weighted gates.

Each level splits the system with the monotone separator
m = [nu >= 2^(k - 1)], spends one negation on y = NOT m and carries on with

    g_i(x, y) = (f_i | m)(x) & ((f_i & m)(x) | y)

over the pool extended by y. Since g_i(x, NOT m(x)) = f_i(x), the last
level is a monotone system read back through the negations.
"""

import dataclasses
from typing import Dict, List, NamedTuple, Optional, Tuple

from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger
from ..boolean import DecreaseAnalyser, FunctionSystem, TruthTable, constant, \
    markov_value
from ..basis import Basis, BasisToolkit, NegationGadget, not_basis
from ..circuit import BasisGate, Circuit, CircuitEngine, Gate, MonotoneGate, \
    SignalRef, gate_ref, input_ref


class SynthesisLevel(NamedTuple):
    """One split of the synthesis.

    Fields:
        k (int): ceil(log2(d + 1)) of the system being split.
        threshold (int): 2^(k - 1).
        separator (TruthTable): m over the variable pool of the level.
        transformed (FunctionSystem): G', one variable wider.
        transformed_decrease (int): d(G'), at most threshold - 1.
    """
    k: int
    threshold: int
    separator: TruthTable
    transformed: FunctionSystem
    transformed_decrease: int


@dataclasses.dataclass
class SynthesisTrace:
    """What the synthesiser did, level by level."""
    decrease: int = 0
    levels: List[SynthesisLevel] = dataclasses.field(default_factory=list)

    def render(self) -> List[str]:
        """The trace as comment lines (without the comment character)."""
        lines: List[str] = [
            f"synthesis trace: d(F)={self.decrease} levels={len(self.levels)}"
        ]
        for number, level in enumerate(self.levels, start=1):
            lines.append(
                f"level {number}: k={level.k} threshold={level.threshold} "
                f"separator={level.separator.to_hex()} "
                f"d(G')={level.transformed_decrease}"
            )
        return lines


class MarkovSynthesiser:
    """Builds and self-verifies Markov circuits over any basis."""

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, arity_cap: int = CONST.ARITY_CAP, debug: bool = False) -> None:
        """Create the synthesiser.

        Args:
            arity_cap (int): Cap on n plus the number of levels.
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.arity_cap: int = arity_cap
        self.disp.update_disp_debug(self.debug)
        self.analyser: DecreaseAnalyser = DecreaseAnalyser(
            arity_cap, self.debug
        )
        self.basis_toolkit: BasisToolkit = BasisToolkit(arity_cap, self.debug)
        self.engine: CircuitEngine = CircuitEngine(arity_cap, self.debug)

    def decompose_step(self, system: FunctionSystem, level: int = 1) -> Tuple[TruthTable, FunctionSystem]:
        """One level: the separator m and the transformed system G'.

        y is appended as the new last variable of G'.

        Raises:
            ValueError: d(F) = 0, there is nothing to split.
            SynthesisVerificationError: d(G') is above 2^(k - 1) - 1.
        """
        value: int = self.analyser.decrease(system).value
        if value == 0:
            raise ValueError("A monotone system has no separator.")
        k: int = markov_value(value)
        threshold: int = 1 << (k - 1)
        separator: TruthTable = self.analyser.nu_profile(
            system
        ).threshold_table(threshold)
        if not self.analyser.is_monotone(separator):
            raise CONST.SynthesisVerificationError(
                level, f"separator {separator.to_hex()} is not monotone"
            )
        shift: int = separator.size
        members: List[TruthTable] = []
        for member in system:
            low: int = member.bits & separator.bits
            high: int = member.bits | separator.bits
            members.append(
                TruthTable(system.arity + 1, low | (high << shift))
            )
        transformed = FunctionSystem(tuple(members), system.names)
        remaining: int = self.analyser.decrease(transformed).value
        if remaining > threshold - 1:
            raise CONST.SynthesisVerificationError(
                level, f"d(G') = {remaining} is above {threshold - 1}"
            )
        self.disp.log_debug(
            f"Level {level}: d = {value}, k = {k}, m = {separator.to_hex()}, d(G') = {remaining}"
        )
        return separator, transformed

    def _negation_args(self, gadget: NegationGadget, basis: Basis, source: SignalRef, gates: List[Gate], constants: Dict[int, int]) -> Tuple[SignalRef, ...]:
        values: Dict[int, int] = gadget.constant_map()
        args: List[SignalRef] = []
        for position in range(1, basis[gadget.omega_index].arity + 1):
            if position == gadget.pin:
                args.append(source)
                continue
            value: int = values[position]
            if value not in constants:
                gates.append(MonotoneGate(constant(0, value), ()))
                constants[value] = len(gates) - 1
            args.append(gate_ref(constants[value]))
        return tuple(args)

    def synthesize(self, system: FunctionSystem, basis: Optional[Basis] = None) -> Tuple[Circuit, SynthesisTrace]:
        """Build a circuit realising F with ceil(log2(d(F) + 1)) weighted gates.

        Args:
            system (FunctionSystem): F.
            basis (Optional[Basis]): The basis, the NOT basis when None.

        Returns:
            Tuple[Circuit, SynthesisTrace]: The verified circuit and its trace.

        Raises:
            ArityCapExceeded: n plus the number of levels is above the cap.
            SynthesisVerificationError: A self-check failed.
        """
        if basis is None:
            basis = not_basis()
        self.analyser.check_arity(system.arity)
        value: int = self.analyser.decrease(system).value
        weight: int = markov_value(value)
        self.analyser.check_arity(system.arity + weight)
        trace = SynthesisTrace(value)
        gadget: Optional[NegationGadget] = None
        if weight:
            gadget = self.basis_toolkit.negation_gadget(basis)
        gates: List[Gate] = []
        constants: Dict[int, int] = {}
        pool: List[SignalRef] = [input_ref(j) for j in range(system.arity)]
        current: FunctionSystem = system
        level: int = 1
        while self.analyser.decrease(current).value > 0:
            k: int = self.analyser.markov_complexity(current)
            separator, transformed = self.decompose_step(current, level)
            gates.append(MonotoneGate(separator, tuple(pool)))
            source: SignalRef = gate_ref(len(gates) - 1)
            args = self._negation_args(gadget, basis, source, gates, constants)
            gates.append(BasisGate(gadget.omega_index, args))
            pool.append(gate_ref(len(gates) - 1))
            trace.levels.append(
                SynthesisLevel(
                    k,
                    1 << (k - 1),
                    separator,
                    transformed,
                    self.analyser.decrease(transformed).value
                )
            )
            current = transformed
            level += 1
        outputs: List[SignalRef] = []
        for member in current:
            gates.append(MonotoneGate(member, tuple(pool)))
            outputs.append(gate_ref(len(gates) - 1))
        circuit = Circuit(system.arity, tuple(gates), tuple(outputs))
        self._verify(circuit, basis, system, weight)
        self.disp.log_info(
            f"Synthesised {len(system)} function(s): d = {value}, weight = {weight}"
        )
        return circuit, trace

    def _verify(self, circuit: Circuit, basis: Basis, system: FunctionSystem, weight: int) -> None:
        realized: FunctionSystem = self.engine.realized_system(circuit, basis)
        if not realized.same_functions(system):
            raise CONST.SynthesisVerificationError(
                -1, "the circuit does not realise the system"
            )
        actual: int = self.engine.inversion_weight(circuit)
        if actual != weight:
            raise CONST.SynthesisVerificationError(
                -1, f"weight {actual}, expected {weight}"
            )
