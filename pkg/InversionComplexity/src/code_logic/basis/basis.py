"""Bases made of every monotone function plus weighted generators.

A basis B = M + {w1, ..., wp} charges nothing for monotone gates and one unit
per generator gate. Only the generators are stored, M is implicit.
"""

import math
import dataclasses
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger, read_text_file
from ..boolean import DecreaseAnalyser, FunctionFile, FunctionSystem, TruthTable, \
    constant, index_to_point, markov_value, negation, projection


def gap_constant(r_value: int) -> float:
    """c = log2(2r + 1) + 1."""
    return math.log2(2 * r_value + 1) + 1


@dataclasses.dataclass(frozen=True)
class Basis:
    """The non monotone generators of a basis, with r(B) and c(B).

    Fields:
        omegas (Tuple[TruthTable, ...]): The generators, none of them monotone.
        names (Tuple[str, ...]): Display names, one per generator (optional).
        r (int): max_i d({w_i}), derived.
        c (float): log2(2r + 1) + 1, derived.
    """
    omegas: Tuple[TruthTable, ...]
    names: Tuple[str, ...] = ()
    r: int = dataclasses.field(init=False)
    c: float = dataclasses.field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "omegas", tuple(self.omegas))
        object.__setattr__(self, "names", tuple(self.names))
        if not self.omegas:
            raise CONST.InvalidBasisError(
                "A basis needs at least one non monotone generator."
            )
        if self.names and len(self.names) != len(self.omegas):
            raise CONST.InvalidBasisError("One name is needed per generator.")
        analyser = DecreaseAnalyser(CONST.HARD_ARITY_CAP)
        decreases: List[int] = []
        for index, omega in enumerate(self.omegas):
            if analyser.is_monotone(omega):
                raise CONST.InvalidBasisError(
                    f"Generator {index} ({omega.to_hex()}) is monotone, monotone functions are already free."
                )
            decreases.append(
                analyser.decrease(FunctionSystem.of(omega)).value
            )
        object.__setattr__(self, "r", max(decreases))
        object.__setattr__(self, "c", gap_constant(self.r))

    def __len__(self) -> int:
        return len(self.omegas)

    def __getitem__(self, index: int) -> TruthTable:
        return self.omegas[index]

    def generator_names(self) -> List[str]:
        """The names, generated as w1..wp when none were given."""
        if self.names:
            return list(self.names)
        return [f"w{i + 1}" for i in range(len(self.omegas))]


def not_basis() -> Basis:
    """B0: the single NOT generator."""
    return Basis((negation(),), ("not",))


@dataclasses.dataclass(frozen=True)
class NegationGadget:
    """NOT obtained from a generator by substituting constants.

    Fields:
        omega_index (int): 0-based index of the generator.
        pin (int): 1-based input position carrying the variable.
        constants (Tuple[Tuple[int, int], ...]): (1-based position, value)
            for every other input position.
    """
    omega_index: int
    pin: int
    constants: Tuple[Tuple[int, int], ...]

    def constant_map(self) -> Dict[int, int]:
        """position -> constant value."""
        return dict(self.constants)

    def table(self, basis: Basis) -> TruthTable:
        """The one-variable function obtained from the generator."""
        omega: TruthTable = basis[self.omega_index]
        values = self.constant_map()
        arguments: List[TruthTable] = []
        for position in range(1, omega.arity + 1):
            if position == self.pin:
                arguments.append(projection(1, 0))
            else:
                arguments.append(constant(1, values[position]))
        return omega.compose(arguments)


class Bounds(NamedTuple):
    """lower <= I_B(F) <= upper."""
    lower: int
    upper: int


class GapWitness(NamedTuple):
    """A generator on which Markov's equality fails over the basis."""
    omega_index: int
    decrease: int
    markov: int


class BasisToolkit:
    """Builds bases and answers the questions that only depend on them.

    Holds a :class:`DecreaseAnalyser` for the system side of the bounds.
    """

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, arity_cap: int = CONST.ARITY_CAP, debug: bool = False) -> None:
        """Create the toolkit.

        Args:
            arity_cap (int): Cap forwarded to the decrease computations.
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.disp.update_disp_debug(self.debug)
        self.analyser: DecreaseAnalyser = DecreaseAnalyser(
            arity_cap, self.debug
        )
        self.function_file: FunctionFile = FunctionFile(self.debug)

    def make_basis(self, omegas: Sequence[TruthTable], names: Sequence[str] = ()) -> Basis:
        """Build a basis from its generators.

        Raises:
            InvalidBasisError: Empty list or a monotone generator.
            ArityCapExceeded: A generator wider than the cap.
        """
        for omega in omegas:
            self.analyser.check_arity(omega.arity)
        basis = Basis(tuple(omegas), tuple(names))
        self.disp.log_debug(
            f"Basis with {len(basis)} generators, r = {basis.r}, c = {basis.c:.4f}"
        )
        return basis

    def parse_basis(self, text: str) -> Basis:
        """Parse a basis file (function line format, one generator per line).

        Raises:
            FormatParseError: Syntax errors or an empty file.
            InvalidBasisError: A monotone generator.
        """
        entries = self.function_file.parse_entries(text)
        if not entries:
            raise CONST.FormatParseError(0, "the basis declares no generator")
        return self.make_basis(
            [table for _, table in entries],
            [name for name, _ in entries]
        )

    def load_basis(self, path: Optional[str] = None) -> Basis:
        """Read a basis file, the NOT basis when no path is given."""
        if path is None:
            return self.parse_basis(CONST.DEFAULT_BASIS_TEXT)
        return self.parse_basis(read_text_file(path))

    def negation_gadget(self, basis: Basis) -> NegationGadget:
        """Find NOT inside a generator.

        Tie-break: smallest generator index, then the lexicographically
        smallest tuple gamma, then the smallest pin.
        """
        for omega_index, omega in enumerate(basis.omegas):
            points = sorted(
                range(omega.size),
                key=lambda index, arity=omega.arity: index_to_point(index, arity)
            )
            for gamma in points:
                if not omega.value(gamma):
                    continue
                for variable in range(omega.arity):
                    bit: int = 1 << variable
                    if gamma & bit or omega.value(gamma | bit):
                        continue
                    gamma_point = index_to_point(gamma, omega.arity)
                    gadget = NegationGadget(
                        omega_index,
                        variable + 1,
                        tuple(
                            (position + 1, value)
                            for position, value in enumerate(gamma_point)
                            if position != variable
                        )
                    )
                    self.disp.log_debug(f"Negation gadget: {gadget}")
                    return gadget
        raise RuntimeError(
            f"{CONST.CRITICAL_COLOUR}No covering jump found in a non monotone generator.{CONST.RESET_COLOUR}"
        )

    def bounds(self, system: FunctionSystem, basis: Basis) -> Bounds:
        """The two-sided bound of I_B(F).

        upper = ceil(log2(d + 1)); lower = max(0, ceil(upper - c(B))).
        """
        return self.bounds_for_decrease(
            self.analyser.decrease(system).value, basis
        )

    def bounds_for_decrease(self, value: int, basis: Basis) -> Bounds:
        """The same bound computed from d(F) alone."""
        upper: int = markov_value(value)
        lower: int = max(0, math.ceil(upper - basis.c))
        return Bounds(lower, upper)

    def is_markov_tight(self, basis: Basis) -> bool:
        """True iff every generator has decrease 1, then I_B(F) = ceil(log2(d + 1))."""
        return basis.r == 1

    def tight_bounds(self, system: FunctionSystem, basis: Basis) -> Bounds:
        """The bounds with the best lower bound available for this basis.

        Tight bases get lower == upper. Otherwise the lower bound is the
        smallest I with (2r + 1)(2^I - 1) >= d, which never falls below
        :meth:`bounds`.
        """
        plain: Bounds = self.bounds(system, basis)
        if self.is_markov_tight(basis):
            return Bounds(plain.upper, plain.upper)
        value: int = self.analyser.decrease(system).value
        lower: int = 0
        while (2 * basis.r + 1) * ((1 << lower) - 1) < value:
            lower += 1
        return Bounds(max(lower, plain.lower), plain.upper)

    def markov_gap_witness(self, basis: Basis) -> Optional[GapWitness]:
        """The first generator with decrease above 1, None for tight bases.

        The system {w_j} costs one weighted gate while its Markov value is at least 2.
        """
        for omega_index, omega in enumerate(basis.omegas):
            value: int = self.analyser.decrease(
                FunctionSystem.of(omega)
            ).value
            if value > 1:
                return GapWitness(omega_index, value, markov_value(value))
        return None
