"""Exact inversion complexity by iterative deepening.

Monotone glue is free, so a circuit is summarised by the sequence of its
weighted gate outputs z1..zt: each zj is a generator applied to monotone
functions of the pool holding the projections and z1..z(j-1). F is
realised once every member is monotone over the final pool.

Search states are pattern preorders: two pools with the same preorder
express the same functions, which makes the preorder the memo key.
"""

import dataclasses
import itertools
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger
from ..boolean import DecreaseAnalyser, FunctionSystem, TruthTable
from ..basis import Basis
from ..circuit import BasisGate, Circuit, CircuitEngine, Gate, MonotoneGate, \
    SignalRef, gate_ref, input_ref
from .pattern_pool import MonotoneSignals, PatternPool


class SearchStep(NamedTuple):
    """One weighted gate of a witness: the generator, its feeds and its output."""
    omega_index: int
    feeds: Tuple[TruthTable, ...]
    output: TruthTable


@dataclasses.dataclass
class ExactResult:
    """Outcome of the exact search.

    Fields:
        value (Optional[int]): I_B(F), None when above t_max.
        t_max (int): The largest number of weighted gates tried.
        steps (List[SearchStep]): The weighted gates of an optimal circuit.
        witness (Optional[Circuit]): The rebuilt circuit, when requested.
        nodes (int): Search nodes expanded.
        memo_hits (int): Nodes cut by the memo table.
    """
    value: Optional[int]
    t_max: int
    steps: List[SearchStep] = dataclasses.field(default_factory=list)
    witness: Optional[Circuit] = None
    nodes: int = 0
    memo_hits: int = 0

    @property
    def above_t_max(self) -> bool:
        """True when no circuit with at most t_max weighted gates exists."""
        return self.value is None


@dataclasses.dataclass
class _SearchRun:
    """State of one search call: the failed-depth memo and the counters."""
    failed: Dict[Tuple[int, ...], int] = dataclasses.field(default_factory=dict)
    nodes: int = 0
    memo_hits: int = 0


class ExactSearch:
    """Smallest number of weighted gates realising a system over a basis."""

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, pattern_limit: int = CONST.PATTERN_LIMIT, debug: bool = False) -> None:
        """Create the search.

        Args:
            pattern_limit (int): Most distinct patterns in a pool.
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.arity_limit: int = CONST.EXACT_ARITY_LIMIT
        self.t_max_limit: int = CONST.EXACT_T_MAX_LIMIT
        self.disp.update_disp_debug(self.debug)
        self.signals: MonotoneSignals = MonotoneSignals(
            pattern_limit, self.debug
        )
        self.analyser: DecreaseAnalyser = DecreaseAnalyser(
            CONST.ARITY_CAP, self.debug
        )
        self.engine: CircuitEngine = CircuitEngine(CONST.ARITY_CAP, self.debug)

    def _is_goal(self, system: FunctionSystem, pool: PatternPool) -> bool:
        return all(
            self.signals.monotone_expressible(member, pool) for member in system
        )

    def candidates(self, pool: PatternPool, basis: Basis) -> List[SearchStep]:
        """The next weighted gates worth trying, in a fixed order.

        Outputs already monotone over the pool are dropped, as are outputs
        leading to a preorder met before.
        """
        feeds: List[TruthTable] = self.signals.enumerate_monotone_signals(pool)
        steps: List[SearchStep] = []
        seen_outputs: Set[int] = set()
        seen_keys: Set[Tuple[int, ...]] = set()
        for omega_index, omega in enumerate(basis.omegas):
            for arguments in itertools.product(feeds, repeat=omega.arity):
                output: TruthTable = omega.compose(arguments, pool.arity)
                if output.bits in seen_outputs:
                    continue
                seen_outputs.add(output.bits)
                if self.signals.monotone_expressible(output, pool):
                    continue
                key: Tuple[int, ...] = pool.extended(output).order_key()
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                steps.append(SearchStep(omega_index, tuple(arguments), output))
        return steps

    def _search(self, run: _SearchRun, system: FunctionSystem, basis: Basis, pool: PatternPool, depth: int, path: List[SearchStep]) -> bool:
        run.nodes += 1
        if self._is_goal(system, pool):
            return True
        if depth == 0:
            return False
        key: Tuple[int, ...] = pool.order_key()
        if run.failed.get(key, -1) >= depth:
            run.memo_hits += 1
            return False
        for step in self.candidates(pool, basis):
            path.append(step)
            if self._search(run, system, basis, pool.extended(step.output), depth - 1, path):
                return True
            path.pop()
        run.failed[key] = depth
        return False

    def search(self, system: FunctionSystem, basis: Basis, t_max: Optional[int] = None, witness: bool = False) -> ExactResult:
        """Iterative deepening from 0 weighted gates up to t_max.

        Args:
            system (FunctionSystem): F.
            basis (Basis): The basis.
            t_max (Optional[int]): Deepest level, ceil(log2(d(F) + 1)) when None.
            witness (bool): Rebuild a circuit realising F at the optimum.

        Raises:
            ArityCapExceeded: arity above the exact search limit.
            SearchDepthExceeded: t_max above the exact search limit.
            PatternLimitExceeded: a pool holds too many distinct patterns.
        """
        if system.arity > self.arity_limit:
            raise CONST.ArityCapExceeded(system.arity, self.arity_limit)
        if t_max is None:
            t_max = self.analyser.markov_complexity(system)
        if t_max > self.t_max_limit:
            raise CONST.SearchDepthExceeded(t_max, self.t_max_limit)
        run = _SearchRun()
        start = PatternPool.initial(system.arity)
        result = ExactResult(None, t_max)
        for depth in range(t_max + 1):
            path: List[SearchStep] = []
            if self._search(run, system, basis, start, depth, path):
                result.value = depth
                result.steps = path
                break
            self.disp.log_debug(f"No circuit with {depth} weighted gate(s)")
        result.nodes = run.nodes
        result.memo_hits = run.memo_hits
        if witness and result.value is not None:
            result.witness = self.build_witness(system, basis, result.steps)
        self.disp.log_debug(
            f"Exact search: value = {result.value}, nodes = {result.nodes}, memo hits = {result.memo_hits}"
        )
        return result

    def exact_inversion_complexity(self, system: FunctionSystem, basis: Basis, t_max: Optional[int] = None) -> Optional[int]:
        """I_B(F), or None when above t_max."""
        return self.search(system, basis, t_max).value

    def build_witness(self, system: FunctionSystem, basis: Basis, steps: List[SearchStep]) -> Circuit:
        """Rebuild a circuit from the weighted gate outputs, gluing with monotone extensions.

        Raises:
            CircuitValidationError: The rebuilt circuit is malformed.
            SynthesisVerificationError: The rebuilt circuit does not realise F.
        """
        pool = PatternPool.initial(system.arity)
        refs: List[SignalRef] = [input_ref(j) for j in range(system.arity)]
        gates: List[Gate] = []
        for step in steps:
            args: List[SignalRef] = []
            for feed in step.feeds:
                gates.append(
                    MonotoneGate(
                        self.signals.monotone_extension(feed, pool),
                        tuple(refs)
                    )
                )
                args.append(gate_ref(len(gates) - 1))
            gates.append(BasisGate(step.omega_index, tuple(args)))
            refs.append(gate_ref(len(gates) - 1))
            pool = pool.extended(step.output)
        outputs: List[SignalRef] = []
        for member in system:
            gates.append(
                MonotoneGate(
                    self.signals.monotone_extension(member, pool), tuple(refs)
                )
            )
            outputs.append(gate_ref(len(gates) - 1))
        circuit = Circuit(system.arity, tuple(gates), tuple(outputs))
        if not self.engine.realized_system(circuit, basis).same_functions(system):
            raise CONST.SynthesisVerificationError(
                -1, "the rebuilt witness does not realise the system"
            )
        return circuit
