"""Truth-table representation of Boolean functions and systems.

A function of arity ``n`` is stored as an integer bit vector of ``2^n`` bits.
Bit ``i`` holds ``f(alpha)`` where ``alpha_j = (i >> (j - 1)) & 1``, so
``x1`` is the least significant bit of the index. Every module relies on
this convention, including the file formats.
"""

import dataclasses
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..program_globals import constants as CONST

Point = Tuple[int, ...]


def index_to_point(index: int, arity: int) -> Point:
    """Convert a table index into the tuple (x1, ..., xn)."""
    return tuple((index >> j) & 1 for j in range(arity))


def point_to_index(point: Sequence[int]) -> int:
    """Convert a tuple (x1, ..., xn) into its table index."""
    index: int = 0
    for j, value in enumerate(point):
        if value not in (0, 1):
            raise ValueError(f"Tuple entries must be 0 or 1, got {value}.")
        index |= value << j
    return index


def table_size(arity: int) -> int:
    """Number of rows of a table of the given arity."""
    return 1 << arity


@lru_cache(maxsize=None)
def full_mask(arity: int) -> int:
    """Bit vector with every row set."""
    return (1 << table_size(arity)) - 1


@lru_cache(maxsize=None)
def variable_mask(arity: int, variable: int) -> int:
    """Rows where the (0-based) variable equals 1, i.e. the projection table."""
    mask: int = 0
    for index in range(table_size(arity)):
        if (index >> variable) & 1:
            mask |= 1 << index
    return mask


@lru_cache(maxsize=None)
def low_mask(arity: int, variable: int) -> int:
    """Rows where the (0-based) variable equals 0."""
    return full_mask(arity) & ~variable_mask(arity, variable)


@dataclasses.dataclass(frozen=True)
class TruthTable:
    """A Boolean function of ``arity`` variables.

    Fields:
        arity (int): Number of variables, n >= 0.
        bits (int): The 2^n bit vector, bit i is the value at index i.
    """
    arity: int
    bits: int

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError(f"Arity must be non negative, got {self.arity}.")
        if self.bits < 0 or self.bits > full_mask(self.arity):
            raise ValueError(
                f"A table of arity {self.arity} holds {table_size(self.arity)} bits, got {hex(self.bits)}."
            )

    @property
    def size(self) -> int:
        """Number of rows."""
        return table_size(self.arity)

    def value(self, index: int) -> int:
        """Value of the function at a table index."""
        return (self.bits >> index) & 1

    def evaluate(self, point: Sequence[int]) -> int:
        """Value of the function at the tuple (x1, ..., xn)."""
        if len(point) != self.arity:
            raise ValueError(
                f"Expected a tuple of length {self.arity}, got {len(point)}."
            )
        return self.value(point_to_index(point))

    def __call__(self, *point: int) -> int:
        return self.evaluate(point)

    def values(self) -> List[int]:
        """The bit vector as a list, index 0 first."""
        return [self.value(index) for index in range(self.size)]

    def bit_string(self) -> str:
        """The bit vector as text, index 0 first (AND2 is '0001')."""
        return "".join(str(bit) for bit in self.values())

    def to_hex(self) -> str:
        """The bit vector in the file format hex notation."""
        return f"{CONST.HEX_PREFIX}{self.bits:x}"

    def __invert__(self) -> "TruthTable":
        return TruthTable(self.arity, full_mask(self.arity) & ~self.bits)

    def __and__(self, other: "TruthTable") -> "TruthTable":
        self._check_same_arity(other)
        return TruthTable(self.arity, self.bits & other.bits)

    def __or__(self, other: "TruthTable") -> "TruthTable":
        self._check_same_arity(other)
        return TruthTable(self.arity, self.bits | other.bits)

    def _check_same_arity(self, other: "TruthTable") -> None:
        if self.arity != other.arity:
            raise ValueError(
                f"Arity mismatch: {self.arity} and {other.arity}."
            )

    def is_constant(self) -> bool:
        """True for the constant 0 and 1 functions."""
        return self.bits in (0, full_mask(self.arity))

    def compose(self, arguments: Sequence["TruthTable"], arity: Optional[int] = None) -> "TruthTable":
        """Substitute functions for the variables of this table.

        Args:
            arguments (Sequence[TruthTable]): One table per variable, all of the same arity.
            arity (Optional[int]): Result arity, only needed when this table has arity 0.

        Returns:
            TruthTable: The table of ``self(arguments[0](x), ..., arguments[a-1](x))``.
        """
        if len(arguments) != self.arity:
            raise ValueError(
                f"Expected {self.arity} arguments, got {len(arguments)}."
            )
        if arguments:
            target: int = arguments[0].arity
            for argument in arguments:
                if argument.arity != target:
                    raise ValueError("Composed arguments differ in arity.")
        elif arity is None:
            raise ValueError(
                "The result arity is needed to compose a constant."
            )
        else:
            target = arity
        mask: int = full_mask(target)
        result: int = 0
        for row in range(self.size):
            if not self.value(row):
                continue
            term: int = mask
            for position, argument in enumerate(arguments):
                if (row >> position) & 1:
                    term &= argument.bits
                else:
                    term &= mask & ~argument.bits
                if term == 0:
                    break
            result |= term
        return TruthTable(target, result)

    def extend(self, arity: int) -> "TruthTable":
        """The same function seen as a function of more (ignored) variables."""
        if arity < self.arity:
            raise ValueError("Cannot shrink a table.")
        return self.compose(
            [projection(arity, j) for j in range(self.arity)],
            arity
        )

    @classmethod
    def from_function(cls, arity: int, function: Callable[..., int]) -> "TruthTable":
        """Tabulate a Python callable taking the n variable values."""
        bits: int = 0
        for index in range(table_size(arity)):
            if function(*index_to_point(index, arity)):
                bits |= 1 << index
        return cls(arity, bits)

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "TruthTable":
        """Build a table from the list of values, index 0 first."""
        arity: int = max(len(values) - 1, 0).bit_length()
        if table_size(arity) != len(values):
            raise ValueError(
                f"A value list must have a power of two length, got {len(values)}."
            )
        bits: int = 0
        for index, value in enumerate(values):
            if value:
                bits |= 1 << index
        return cls(arity, bits)

    @classmethod
    def from_bit_string(cls, text: str) -> "TruthTable":
        """Inverse of :meth:`bit_string`."""
        return cls.from_values([int(char) for char in text])

    @classmethod
    def from_hex(cls, arity: int, text: str) -> "TruthTable":
        """Parse the file format hex notation.

        Raises:
            ValueError: On a malformed literal or a value too wide for the arity.
        """
        if not text.lower().startswith(CONST.HEX_PREFIX):
            raise ValueError(
                f"Tables are written as {CONST.HEX_PREFIX}<hex>, got '{text}'."
            )
        return cls(arity, int(text[len(CONST.HEX_PREFIX):], 16))


def constant(arity: int, value: int) -> TruthTable:
    """The constant function."""
    return TruthTable(arity, full_mask(arity) if value else 0)


def projection(arity: int, variable: int) -> TruthTable:
    """The function x_{variable+1} of ``arity`` variables."""
    if not 0 <= variable < arity:
        raise ValueError(f"No variable {variable} in arity {arity}.")
    return TruthTable(arity, variable_mask(arity, variable))


def projections(arity: int) -> List[TruthTable]:
    """x1, ..., xn."""
    return [projection(arity, j) for j in range(arity)]


def negation() -> TruthTable:
    """NOT, bits 10."""
    return TruthTable(1, 0b01)


def conjunction(arity: int = 2) -> TruthTable:
    """AND of ``arity`` variables."""
    return TruthTable(arity, 1 << (table_size(arity) - 1))


def disjunction(arity: int = 2) -> TruthTable:
    """OR of ``arity`` variables."""
    return TruthTable(arity, full_mask(arity) & ~1)


def nand() -> TruthTable:
    """NAND of two variables."""
    return ~conjunction(2)


def parity(arity: int, complemented: bool = False) -> TruthTable:
    """x1 xor ... xor xn, optionally xor 1."""
    return TruthTable.from_function(
        arity,
        lambda *point: (sum(point) + int(complemented)) % 2
    )


@dataclasses.dataclass(frozen=True)
class FunctionSystem:
    """The system F = {f1, ..., fm}: a nonempty ordered list of same-arity tables.

    Fields:
        members (Tuple[TruthTable, ...]): The functions.
        names (Tuple[str, ...]): Optional display names, one per member.
    """
    members: Tuple[TruthTable, ...]
    names: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "names", tuple(self.names))
        if not self.members:
            raise ValueError("A function system must not be empty.")
        arity: int = self.members[0].arity
        for member in self.members:
            if member.arity != arity:
                raise ValueError(
                    f"All members must share arity {arity}, got {member.arity}."
                )
        if self.names and len(self.names) != len(self.members):
            raise ValueError("One name is needed per member.")

    @property
    def arity(self) -> int:
        """Arity shared by the members."""
        return self.members[0].arity

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[TruthTable]:
        return iter(self.members)

    def __getitem__(self, index: int) -> TruthTable:
        return self.members[index]

    def member_names(self) -> List[str]:
        """The names, generated as f1..fm when none were given."""
        if self.names:
            return list(self.names)
        return [f"f{i + 1}" for i in range(len(self.members))]

    def same_functions(self, other: "FunctionSystem") -> bool:
        """True when both systems list the same tables in the same order."""
        return self.members == other.members

    @classmethod
    def of(cls, *members: TruthTable) -> "FunctionSystem":
        """Shorthand constructor."""
        return cls(tuple(members))


@dataclasses.dataclass(frozen=True)
class Chain:
    """An increasing chain of n-bit tuples.

    Fields:
        points (Tuple[Point, ...]): Pairwise distinct tuples, componentwise
            non decreasing from one to the next.
    """
    points: Tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "points", tuple(tuple(point) for point in self.points)
        )
        if not self.points:
            raise CONST.InvalidChainError("A chain holds at least one tuple.")
        arity: int = len(self.points[0])
        for point in self.points:
            if len(point) != arity or any(value not in (0, 1) for value in point):
                raise CONST.InvalidChainError(
                    f"Tuple {point} is not a {arity}-bit tuple."
                )
        for first, second in zip(self.points, self.points[1:]):
            if first == second or not precedes(first, second):
                raise CONST.InvalidChainError(
                    f"{first} -> {second} is not an increasing step."
                )

    @property
    def arity(self) -> int:
        """Length of the tuples."""
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    def indices(self) -> List[int]:
        """The table indices of the points."""
        return [point_to_index(point) for point in self.points]

    @classmethod
    def from_indices(cls, indices: Sequence[int], arity: int) -> "Chain":
        """Build a chain from table indices."""
        return cls(tuple(index_to_point(index, arity) for index in indices))

    def render(self) -> str:
        """Points written as bit strings x1..xn, comma separated."""
        return ",".join("".join(str(v) for v in point) for point in self.points)


def precedes(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """alpha <= beta componentwise."""
    return all(a <= b for a, b in zip(alpha, beta))
