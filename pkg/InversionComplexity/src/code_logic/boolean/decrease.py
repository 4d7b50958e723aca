"""Chain, jump and decrease combinatorics.

Contains :class:`DecreaseAnalyser` which answers monotonicity and jump
queries, computes the decrease d(F) of a system with a witness chain, the
per-terminal profile nu, and Markov's value ceil(log2(d(F) + 1)).

The decrease is computed over covering edges only. A jump (alpha, beta)
with alpha < gamma < beta is always a jump on (alpha, gamma) or on
(gamma, beta), so some covering chain reaches the maximum. The general
comparability DAG is kept as an oracle.
"""

import dataclasses
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

import networkx as nx
from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger
from .truth_table import Chain, FunctionSystem, Point, TruthTable, \
    index_to_point, low_mask, point_to_index, precedes, table_size


class DecreaseResult(NamedTuple):
    """d(F) and a chain attaining it."""
    value: int
    witness: Chain


@dataclasses.dataclass(frozen=True)
class DecreaseProfile:
    """nu(beta): the largest jump count over chains ending at beta.

    Fields:
        arity (int): n.
        nu (Tuple[int, ...]): One entry per table index.
    """
    arity: int
    nu: Tuple[int, ...]

    def at(self, point: Sequence[int]) -> int:
        """nu at the tuple (x1, ..., xn)."""
        return self.nu[point_to_index(point)]

    @property
    def max_value(self) -> int:
        """max over all tuples, equal to d(F)."""
        return max(self.nu)

    def as_dict(self) -> Dict[Point, int]:
        """The profile keyed by tuples."""
        return {
            index_to_point(index, self.arity): value
            for index, value in enumerate(self.nu)
        }

    def threshold_table(self, threshold: int) -> TruthTable:
        """The table of [nu(x) >= threshold], monotone because nu is."""
        bits: int = 0
        for index, value in enumerate(self.nu):
            if value >= threshold:
                bits |= 1 << index
        return TruthTable(self.arity, bits)


def markov_value(decrease_value: int) -> int:
    """ceil(log2(d + 1)), computed exactly on integers."""
    if decrease_value < 0:
        raise ValueError("A decrease is never negative.")
    return decrease_value.bit_length()


class DecreaseAnalyser:
    """Monotonicity, jumps and decrease of Boolean function systems.

    Every method is a pure function of its arguments.
    """

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, arity_cap: int = CONST.ARITY_CAP, debug: bool = False) -> None:
        """Create the analyser.

        Args:
            arity_cap (int): Largest arity accepted by the decrease computations.
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.arity_cap: int = arity_cap
        self.chain_enumeration_cap: int = CONST.CHAIN_ENUMERATION_CAP
        self.oracle_chain_check_arity: int = CONST.ORACLE_CHAIN_CHECK_ARITY
        self.disp.update_disp_debug(self.debug)

    def check_arity(self, arity: int) -> None:
        """Raise when the arity is above the cap.

        Raises:
            ArityCapExceeded: arity > cap.
        """
        if arity > self.arity_cap:
            raise CONST.ArityCapExceeded(arity, self.arity_cap)

    def is_monotone(self, function: TruthTable) -> bool:
        """True iff f(alpha) <= f(beta) on every covering pair alpha < beta."""
        bits: int = function.bits
        for variable in range(function.arity):
            raised: int = bits >> (1 << variable)
            if bits & low_mask(function.arity, variable) & ~raised:
                return False
        return True

    def covering_jump_masks(self, system: FunctionSystem) -> List[int]:
        """For each variable j, the rows alpha (x_j = 0) where raising x_j is a jump.

        Args:
            system (FunctionSystem): The system F.

        Returns:
            List[int]: One bit vector per variable.
        """
        masks: List[int] = []
        for variable in range(system.arity):
            shift: int = 1 << variable
            low: int = low_mask(system.arity, variable)
            mask: int = 0
            for member in system:
                mask |= member.bits & low & ~(member.bits >> shift)
            masks.append(mask)
        return masks

    def _jump_on_indices(self, system: FunctionSystem, alpha: int, beta: int) -> bool:
        for member in system:
            if member.value(alpha) and not member.value(beta):
                return True
        return False

    def is_jump(self, system: FunctionSystem, alpha: Sequence[int], beta: Sequence[int]) -> bool:
        """True iff some member falls from 1 to 0 between alpha and beta.

        Raises:
            InvalidChainError: alpha, beta are not an ordered pair alpha <= beta, alpha != beta.
        """
        alpha = tuple(alpha)
        beta = tuple(beta)
        if len(alpha) != system.arity or len(beta) != system.arity:
            raise CONST.InvalidChainError(
                f"Expected {system.arity}-bit tuples, got {alpha} and {beta}."
            )
        if alpha == beta or not precedes(alpha, beta):
            raise CONST.InvalidChainError(
                f"{alpha} -> {beta} is not an ordered pair of distinct comparable tuples."
            )
        return self._jump_on_indices(
            system, point_to_index(alpha), point_to_index(beta)
        )

    def nu_profile(self, system: FunctionSystem) -> DecreaseProfile:
        """Compute nu by dynamic programming over covering edges.

        Raises:
            ArityCapExceeded: arity above the cap.
        """
        self.check_arity(system.arity)
        arity: int = system.arity
        masks: List[int] = self.covering_jump_masks(system)
        nu: List[int] = [0] * table_size(arity)
        for beta in range(table_size(arity)):
            best: int = 0
            for variable in range(arity):
                bit: int = 1 << variable
                if not beta & bit:
                    continue
                alpha: int = beta ^ bit
                candidate: int = nu[alpha] + ((masks[variable] >> alpha) & 1)
                if candidate > best:
                    best = candidate
            nu[beta] = best
        return DecreaseProfile(arity, tuple(nu))

    def _suffix_profile(self, system: FunctionSystem, masks: List[int]) -> List[int]:
        """rest(alpha): the largest jump count over chains starting at alpha."""
        arity: int = system.arity
        rest: List[int] = [0] * table_size(arity)
        for alpha in range(table_size(arity) - 1, -1, -1):
            best: int = 0
            for variable in range(arity):
                bit: int = 1 << variable
                if alpha & bit:
                    continue
                candidate: int = ((masks[variable] >> alpha) & 1) + \
                    rest[alpha | bit]
                if candidate > best:
                    best = candidate
            rest[alpha] = best
        return rest

    def decrease(self, system: FunctionSystem) -> DecreaseResult:
        """d(F) and a witness chain.

        The witness starts at 0^n, moves along covering edges, stops right
        after the last jump and picks the lexicographically smallest tuple
        whenever several steps keep the maximum reachable.

        Raises:
            ArityCapExceeded: arity above the cap.
        """
        self.check_arity(system.arity)
        arity: int = system.arity
        masks: List[int] = self.covering_jump_masks(system)
        rest: List[int] = self._suffix_profile(system, masks)
        value: int = rest[0]
        current: int = 0
        path: List[int] = [current]
        while rest[current] > 0:
            chosen: int = -1
            for variable in range(arity):
                bit: int = 1 << variable
                if current & bit:
                    continue
                step: int = (masks[variable] >> current) & 1
                if step + rest[current | bit] != rest[current]:
                    continue
                candidate: int = current | bit
                if chosen < 0 or index_to_point(candidate, arity) < index_to_point(chosen, arity):
                    chosen = candidate
            current = chosen
            path.append(current)
        self.disp.log_debug(f"d(F) = {value}, witness indices = {path}")
        return DecreaseResult(value, Chain.from_indices(path, arity))

    def decrease_along_chain(self, system: FunctionSystem, chain: Chain) -> int:
        """d_C(F): the number of consecutive pairs of the chain that are jumps.

        Raises:
            InvalidChainError: chain of the wrong arity.
        """
        if chain.arity != system.arity:
            raise CONST.InvalidChainError(
                f"The chain has arity {chain.arity}, the system {system.arity}."
            )
        indices: List[int] = chain.indices()
        return sum(
            1 for alpha, beta in zip(indices, indices[1:])
            if self._jump_on_indices(system, alpha, beta)
        )

    def comparability_graph(self, system: FunctionSystem) -> nx.DiGraph:
        """The DAG with an edge alpha -> beta for every alpha < beta, weighted by is_jump."""
        arity: int = system.arity
        graph = nx.DiGraph()
        graph.add_nodes_from(range(table_size(arity)))
        full: int = table_size(arity) - 1
        for alpha in range(table_size(arity)):
            free: int = full & ~alpha
            extra: int = free
            while extra:
                beta: int = alpha | extra
                graph.add_edge(
                    alpha,
                    beta,
                    weight=int(self._jump_on_indices(system, alpha, beta))
                )
                extra = (extra - 1) & free
        return graph

    def enumerate_chains(self, arity: int) -> Iterator[Chain]:
        """Every increasing chain of the n-cube, any length, any initial tuple.

        Raises:
            ArityCapExceeded: arity above the literal enumeration cap.
        """
        if arity > self.chain_enumeration_cap:
            raise CONST.ArityCapExceeded(arity, self.chain_enumeration_cap)
        full: int = table_size(arity) - 1

        def extend(path: List[int]) -> Iterator[List[int]]:
            yield path
            last: int = path[-1]
            free: int = full & ~last
            extra: int = free
            while extra:
                yield from extend(path + [last | extra])
                extra = (extra - 1) & free

        for start in range(table_size(arity)):
            for path in extend([start]):
                yield Chain.from_indices(path, arity)

    def decrease_by_enumeration(self, system: FunctionSystem) -> int:
        """max of d_C(F) over the literal list of all chains."""
        return max(
            self.decrease_along_chain(system, chain)
            for chain in self.enumerate_chains(system.arity)
        )

    def decrease_oracle(self, system: FunctionSystem) -> int:
        """d(F) as a longest weighted path over the full comparability DAG.

        Small arities are additionally checked against the literal
        enumeration of all chains.

        Raises:
            ArityCapExceeded: arity above the cap.
            RuntimeError: the two independent computations disagree.
        """
        self.check_arity(system.arity)
        graph: nx.DiGraph = self.comparability_graph(system)
        value: int = int(
            nx.dag_longest_path_length(
                graph, weight="weight", default_weight=0
            )
        )
        if system.arity <= self.oracle_chain_check_arity:
            enumerated: int = self.decrease_by_enumeration(system)
            if enumerated != value:
                raise RuntimeError(
                    f"{CONST.CRITICAL_COLOUR}Comparability DAG gives {value}, chain enumeration gives {enumerated}.{CONST.RESET_COLOUR}"
                )
        self.disp.log_debug(f"oracle d(F) = {value}")
        return value

    def markov_complexity(self, system: FunctionSystem) -> int:
        """ceil(log2(d(F) + 1)), the inversion complexity over the NOT basis."""
        return markov_value(self.decrease(system).value)
