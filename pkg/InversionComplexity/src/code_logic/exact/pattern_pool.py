"""Pattern pools: the signals available to free monotone glue.

Every function a circuit can compute before its next weighted gate is a
monotone function of the signals already present. With pattern(alpha) the
bit vector of all signal values at alpha, g is such a function exactly
when pattern(alpha) <= pattern(beta) implies g(alpha) <= g(beta).
"""

import dataclasses
from typing import List, Set, Tuple

import networkx as nx
from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger
from ..boolean import TruthTable, projections


@dataclasses.dataclass(frozen=True)
class PatternPool:
    """Signals over the n original variables.

    Fields:
        arity (int): n.
        signals (Tuple[TruthTable, ...]): The projections first, then the
            outputs of the weighted gates in order.
    """
    arity: int
    signals: Tuple[TruthTable, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "signals", tuple(self.signals))
        for signal in self.signals:
            if signal.arity != self.arity:
                raise ValueError(
                    f"Pool signals must have arity {self.arity}, got {signal.arity}."
                )

    @classmethod
    def initial(cls, arity: int) -> "PatternPool":
        """The pool of the n projections."""
        return cls(arity, tuple(projections(arity)))

    def extended(self, signal: TruthTable) -> "PatternPool":
        """The pool with one more signal."""
        return PatternPool(self.arity, self.signals + (signal,))

    def pattern(self, index: int) -> int:
        """The signal values at a table index, bit s for signal s."""
        pattern: int = 0
        for position, signal in enumerate(self.signals):
            pattern |= signal.value(index) << position
        return pattern

    def patterns(self) -> List[int]:
        """pattern(alpha) for every table index alpha."""
        return [self.pattern(index) for index in range(1 << self.arity)]

    def distinct_patterns(self) -> List[int]:
        """The patterns that occur, sorted."""
        return sorted(set(self.patterns()))

    def up_masks(self) -> Tuple[int, ...]:
        """For each alpha, the indices beta with pattern(alpha) <= pattern(beta)."""
        patterns: List[int] = self.patterns()
        masks: List[int] = []
        for low in patterns:
            mask: int = 0
            for index, high in enumerate(patterns):
                if low & ~high == 0:
                    mask |= 1 << index
            masks.append(mask)
        return tuple(masks)

    def order_key(self) -> Tuple[int, ...]:
        """The preorder induced on the indices; pools with equal keys express the same functions."""
        return self.up_masks()


class MonotoneSignals:
    """Which functions free monotone glue can build from a pattern pool."""

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, pattern_limit: int = CONST.PATTERN_LIMIT, debug: bool = False) -> None:
        """Create the helper.

        Args:
            pattern_limit (int): Most distinct patterns accepted by the enumeration.
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.pattern_limit: int = pattern_limit
        self.disp.update_disp_debug(self.debug)

    def _check_arity(self, function: TruthTable, pool: PatternPool) -> None:
        if function.arity != pool.arity:
            raise ValueError(
                f"The function has arity {function.arity}, the pool {pool.arity}."
            )

    def monotone_expressible(self, function: TruthTable, pool: PatternPool) -> bool:
        """True iff the function respects the pattern preorder of the pool."""
        self._check_arity(function, pool)
        for index, mask in enumerate(pool.up_masks()):
            if function.value(index) and mask & ~function.bits:
                return False
        return True

    def monotone_extension(self, function: TruthTable, pool: PatternPool) -> TruthTable:
        """The smallest monotone gate table T on the pool signals with T(pattern(alpha)) = g(alpha).

        Raises:
            ValueError: The function is not monotone over the pool.
        """
        if not self.monotone_expressible(function, pool):
            raise ValueError(
                f"{function.to_hex()} is not a monotone function of the pool signals."
            )
        width: int = len(pool.signals)
        minimal: List[int] = sorted({
            pool.pattern(index)
            for index in range(function.size)
            if function.value(index)
        })
        bits: int = 0
        for row in range(1 << width):
            if any(low & ~row == 0 for low in minimal):
                bits |= 1 << row
        return TruthTable(width, bits)

    def pattern_poset(self, pool: PatternPool) -> nx.DiGraph:
        """The distinct patterns ordered by inclusion.

        Raises:
            PatternLimitExceeded: Too many distinct patterns.
        """
        distinct: List[int] = pool.distinct_patterns()
        if len(distinct) > self.pattern_limit:
            raise CONST.PatternLimitExceeded(len(distinct), self.pattern_limit)
        graph = nx.DiGraph()
        graph.add_nodes_from(distinct)
        for low in distinct:
            for high in distinct:
                if low != high and low & ~high == 0:
                    graph.add_edge(low, high)
        return graph

    def enumerate_monotone_signals(self, pool: PatternPool) -> List[TruthTable]:
        """Every function over the n variables that monotone glue builds from the pool.

        Each up-set of the pattern poset is generated by one antichain, its
        minimal elements. Results are deduplicated and sorted by bit vector.

        Raises:
            PatternLimitExceeded: Too many distinct patterns.
        """
        graph: nx.DiGraph = self.pattern_poset(pool)
        patterns: List[int] = pool.patterns()
        seen: Set[int] = set()
        for antichain in nx.antichains(graph):
            bits: int = 0
            for index, pattern in enumerate(patterns):
                if any(low & ~pattern == 0 for low in antichain):
                    bits |= 1 << index
            seen.add(bits)
        self.disp.log_debug(
            f"{graph.number_of_nodes()} distinct patterns, {len(seen)} monotone signals"
        )
        return [TruthTable(pool.arity, bits) for bits in sorted(seen)]
