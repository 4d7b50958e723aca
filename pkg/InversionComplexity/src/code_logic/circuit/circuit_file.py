"""Reader and writer of the circuit file format.

Line forms (``#`` starts a comment)::

    inputs <k>
    gate <name> mono <arity> 0x<hex> <arg1> ... <argA>
    gate <name> basis <omega_index> <arg1> ... <argA>
    outputs <name1> ... <nameM>

Arguments are ``x<i>`` (1-based inputs), earlier gate names, or the
predeclared ``const0`` / ``const1`` signals. A constant is materialised
as an arity-0 monotone gate the first time it is used.
"""

import re
from typing import Dict, List, Optional, Sequence, Tuple

from display_tty import Disp

from ..program_globals import constants as CONST
from ..program_globals.helpers import initialise_logger, read_text_file
from ..boolean import TruthTable, constant, strip_comment
from .circuit import BasisGate, Circuit, Gate, MonotoneGate, SignalKind, SignalRef, \
    gate_ref, input_ref

INPUT_NAME = re.compile(rf"^{CONST.INPUT_PREFIX}([0-9]+)$")


class CircuitFile:
    """Parse and serialise circuit files."""

    disp: Disp = initialise_logger(__qualname__, False)

    def __init__(self, debug: bool = False) -> None:
        """Create the codec.

        Args:
            debug (bool): Enable debug logging.
        """
        self.debug: bool = debug
        self.disp.update_disp_debug(self.debug)

    def _resolve(self, token: str, line_number: int, n_inputs: int, names: Dict[str, int], gates: List[Gate]) -> SignalRef:
        match = INPUT_NAME.match(token)
        if match:
            position: int = int(match.group(1))
            if not 1 <= position <= n_inputs:
                raise CONST.FormatParseError(
                    line_number, f"unknown input '{token}'"
                )
            return input_ref(position - 1)
        if token in (CONST.KW_CONST0, CONST.KW_CONST1) and token not in names:
            value: int = 1 if token == CONST.KW_CONST1 else 0
            gates.append(MonotoneGate(constant(0, value), ()))
            names[token] = len(gates) - 1
        if token not in names:
            raise CONST.FormatParseError(
                line_number, f"unknown signal '{token}'"
            )
        return gate_ref(names[token])

    def _parse_gate(self, fields: List[str], line_number: int, n_inputs: int, names: Dict[str, int], gates: List[Gate]) -> None:
        if len(fields) < 4:
            raise CONST.FormatParseError(line_number, "truncated gate line")
        name: str = fields[1]
        kind: str = fields[2]
        if name in names or name in (CONST.KW_CONST0, CONST.KW_CONST1) or INPUT_NAME.match(name):
            raise CONST.FormatParseError(
                line_number, f"gate name '{name}' is taken or reserved"
            )
        if kind == CONST.KW_MONO:
            if len(fields) < 5:
                raise CONST.FormatParseError(
                    line_number, "a monotone gate needs an arity and a table"
                )
            try:
                arity: int = int(fields[3])
            except ValueError as e:
                raise CONST.FormatParseError(
                    line_number, f"gate arity '{fields[3]}' is not an integer"
                ) from e
            if arity < 0 or arity > CONST.HARD_ARITY_CAP:
                raise CONST.FormatParseError(
                    line_number, f"gate arity {arity} is outside [0, {CONST.HARD_ARITY_CAP}]"
                )
            try:
                table: TruthTable = TruthTable.from_hex(arity, fields[4])
            except ValueError as e:
                raise CONST.FormatParseError(line_number, str(e)) from e
            tokens: List[str] = fields[5:]
            args = tuple(
                self._resolve(token, line_number, n_inputs, names, gates)
                for token in tokens
            )
            gate: Gate = MonotoneGate(table, args)
        elif kind == CONST.KW_BASIS:
            try:
                omega_index: int = int(fields[3])
            except ValueError as e:
                raise CONST.FormatParseError(
                    line_number, f"generator index '{fields[3]}' is not an integer"
                ) from e
            args = tuple(
                self._resolve(token, line_number, n_inputs, names, gates)
                for token in fields[4:]
            )
            gate = BasisGate(omega_index, args)
        else:
            raise CONST.FormatParseError(
                line_number, f"unknown gate kind '{kind}'"
            )
        gates.append(gate)
        names[name] = len(gates) - 1

    def parse(self, text: str) -> Circuit:
        """Parse a circuit file.

        The structural checks (monotone tables, generator arities) are left
        to :meth:`CircuitEngine.ensure_valid` since they need the basis.

        Raises:
            FormatParseError: Syntax errors, unknown names, missing sections.
        """
        n_inputs: Optional[int] = None
        outputs: Optional[Tuple[SignalRef, ...]] = None
        names: Dict[str, int] = {}
        gates: List[Gate] = []
        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line: str = strip_comment(raw_line)
            if not line:
                continue
            fields: List[str] = line.split()
            keyword: str = fields[0]
            if keyword == CONST.KW_INPUTS:
                if n_inputs is not None or gates:
                    raise CONST.FormatParseError(
                        line_number, "'inputs' must come once, before the gates"
                    )
                if len(fields) != 2 or not fields[1].isdigit():
                    raise CONST.FormatParseError(
                        line_number, "expected 'inputs <k>'"
                    )
                n_inputs = int(fields[1])
                continue
            if n_inputs is None:
                raise CONST.FormatParseError(
                    line_number, "'inputs' must be declared first"
                )
            if outputs is not None:
                raise CONST.FormatParseError(
                    line_number, "nothing may follow 'outputs'"
                )
            if keyword == CONST.KW_GATE:
                self._parse_gate(fields, line_number, n_inputs, names, gates)
            elif keyword == CONST.KW_OUTPUTS:
                if len(fields) < 2:
                    raise CONST.FormatParseError(
                        line_number, "'outputs' needs at least one signal"
                    )
                outputs = tuple(
                    self._resolve(token, line_number, n_inputs, names, gates)
                    for token in fields[1:]
                )
            else:
                raise CONST.FormatParseError(
                    line_number, f"unknown keyword '{keyword}'"
                )
        if n_inputs is None:
            raise CONST.FormatParseError(0, "missing 'inputs' line")
        if outputs is None:
            raise CONST.FormatParseError(0, "missing 'outputs' line")
        self.disp.log_debug(
            f"Parsed a circuit with {n_inputs} inputs and {len(gates)} gates"
        )
        return Circuit(n_inputs, tuple(gates), outputs)

    def load(self, path: str) -> Circuit:
        """Read and parse a circuit file."""
        self.disp.log_debug(f"Loading circuit file '{path}'")
        return self.parse(read_text_file(path))

    def serialize(self, circuit: Circuit, comments: Sequence[str] = ()) -> str:
        """Write a circuit, gates named g1..gN in order.

        Args:
            circuit (Circuit): The circuit to write.
            comments (Sequence[str]): Lines written first as ``#`` comments.
        """

        def name(ref: SignalRef) -> str:
            if ref.kind == SignalKind.INPUT:
                return f"{CONST.INPUT_PREFIX}{ref.index + 1}"
            return f"{CONST.GATE_PREFIX}{ref.index + 1}"

        lines: List[str] = [
            f"{CONST.COMMENT_CHAR} {comment}".rstrip() for comment in comments
        ]
        lines.append(f"{CONST.KW_INPUTS} {circuit.n_inputs}")
        for index, gate in enumerate(circuit.gates):
            fields: List[str] = [
                CONST.KW_GATE, f"{CONST.GATE_PREFIX}{index + 1}"
            ]
            if isinstance(gate, MonotoneGate):
                fields += [
                    CONST.KW_MONO, str(gate.table.arity), gate.table.to_hex()
                ]
            else:
                fields += [CONST.KW_BASIS, str(gate.omega_index)]
            fields += [name(ref) for ref in gate.args]
            lines.append(" ".join(fields))
        lines.append(
            " ".join([CONST.KW_OUTPUTS] + [name(ref) for ref in circuit.outputs])
        )
        return "\n".join(lines) + "\n"
