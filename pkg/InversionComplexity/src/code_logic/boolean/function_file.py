"""Reader and writer of the line-oriented function file format.

Each non blank line reads ``name <arity> 0x<hex>``; ``#`` starts a comment.
The hex literal is the table bit vector, bit i being the value at index i.
Basis files use the same format, one generator per line.
"""

from typing import List, Set, Tuple

from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger, read_text_file
from .truth_table import FunctionSystem, TruthTable


def strip_comment(line: str) -> str:
    """Remove a trailing comment and surrounding whitespace."""
    return line.split(CONST.COMMENT_CHAR, 1)[0].strip()


class FunctionFile:
    """Parse and serialise function files."""

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, debug: bool = False) -> None:
        """Create the codec.

        Args:
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.disp.update_disp_debug(self.debug)

    def _parse_lines(self, text: str) -> List[Tuple[int, str, TruthTable]]:
        entries: List[Tuple[int, str, TruthTable]] = []
        seen: Set[str] = set()
        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line: str = strip_comment(raw_line)
            if not line:
                continue
            fields: List[str] = line.split()
            if len(fields) != 3:
                raise CONST.FormatParseError(
                    line_number, f"expected 'name <arity> 0x<hex>', got '{line}'"
                )
            name, raw_arity, raw_table = fields
            if name in seen:
                raise CONST.FormatParseError(
                    line_number, f"duplicate function name '{name}'"
                )
            try:
                arity: int = int(raw_arity)
            except ValueError as e:
                raise CONST.FormatParseError(
                    line_number, f"arity '{raw_arity}' is not an integer"
                ) from e
            if arity < 0:
                raise CONST.FormatParseError(
                    line_number, f"arity {arity} is negative"
                )
            if arity > CONST.HARD_ARITY_CAP:
                raise CONST.ArityCapExceeded(arity, CONST.HARD_ARITY_CAP)
            try:
                table: TruthTable = TruthTable.from_hex(arity, raw_table)
            except ValueError as e:
                raise CONST.FormatParseError(line_number, str(e)) from e
            seen.add(name)
            entries.append((line_number, name, table))
        self.disp.log_debug(f"Parsed {len(entries)} tables")
        return entries

    def parse_entries(self, text: str) -> List[Tuple[str, TruthTable]]:
        """Parse the named tables of a function or basis file.

        Raises:
            FormatParseError: Syntax error, bad hex literal, duplicate name.
            ArityCapExceeded: An arity above the hard cap.
        """
        return [(name, table) for _, name, table in self._parse_lines(text)]

    def parse(self, text: str) -> FunctionSystem:
        """Parse a function file into a system.

        Raises:
            FormatParseError: Syntax errors, an empty file or mixed arities.
            ArityCapExceeded: An arity above the hard cap.
        """
        entries = self._parse_lines(text)
        if not entries:
            raise CONST.FormatParseError(0, "the file declares no function")
        arity: int = entries[0][2].arity
        for line_number, name, table in entries:
            if table.arity != arity:
                raise CONST.FormatParseError(
                    line_number, f"'{name}' has arity {table.arity}, the system has arity {arity}"
                )
        return FunctionSystem(
            tuple(table for _, _, table in entries),
            tuple(name for _, name, _ in entries)
        )

    def load(self, path: str) -> FunctionSystem:
        """Read and parse a function file."""
        self.disp.log_debug(f"Loading function file '{path}'")
        return self.parse(read_text_file(path))

    def serialize(self, system: FunctionSystem) -> str:
        """Write a system in the function file format."""
        lines: List[str] = [
            f"{name} {table.arity} {table.to_hex()}"
            for name, table in zip(system.member_names(), system)
        ]
        return "\n".join(lines) + "\n"
