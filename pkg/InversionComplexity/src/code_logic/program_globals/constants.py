"""Program-wide constants.

Contains fixed values (exit codes, hard limits, file format keywords,
output modes and the toolkit exceptions) used across the application.
"""
import dataclasses
from typing import List, Optional, Tuple, Type

from enum import Enum

from .config import \
    ARITY_CAP, CHAIN_ENUMERATION_CAP, ORACLE_CHAIN_CHECK_ARITY, \
    PATTERN_LIMIT, EXACT_ARITY_LIMIT, EXACT_T_MAX_LIMIT, \
    DEFAULT_BASIS_TEXT

# Program status codes
SUCCESS: int = 0
ERROR: int = 1
MISMATCH: int = 2
PARSE_ERROR: int = 3
RESOURCE_ERROR: int = 4

# Program versions and author
VERSION: str = "1.0.0"
AUTHOR: str = "(c) Henry Letellier"

# Hard limits, the configurable caps are clamped to these
HARD_ARITY_CAP: int = 16
HARD_PATTERN_LIMIT: int = 20

# Env searched keys
DEBUG_TOKEN: str = "DEBUG"
ARITY_CAP_KEY: str = "ARITY_CAP"
PATTERN_LIMIT_KEY: str = "PATTERN_LIMIT"
OUTPUT_MODE_KEY: str = "OUTPUT_MODE"
ENV_BOOL_CHECK: Tuple[str, ...] = ("1", "true", "yes")

# message colour
BOLD_TEXT: str = "\033[1m"
RESET_COLOUR: str = "\033[0m"
BACKGROUND_COLOUR: str = "\033[48;5;232m"  # black
CRITICAL_COLOUR: str = BOLD_TEXT + BACKGROUND_COLOUR + "\033[38;5;9m"  # red
ERROR_COLOUR: str = BOLD_TEXT + BACKGROUND_COLOUR + \
    "\033[38;5;124m"  # darker shade of red
WARNING_COLOUR: str = BACKGROUND_COLOUR + "\033[38;5;11m"  # yellow
INFO_COLOUR: str = BACKGROUND_COLOUR + \
    "\033[38;5;10m"  # lime green (close enough)

# Output mode

OUTPUT_HUMAN: str = "human"
OUTPUT_MACHINE: str = "machine"


class OutputMode(Enum):
    """The enum containing the format of the command output.

    Args:
        Enum (str): The enum item of the class.
    """
    HUMAN = OUTPUT_HUMAN
    MACHINE = OUTPUT_MACHINE


OM: Type[OutputMode] = OutputMode


@dataclasses.dataclass
class RunConfig:
    """Dataclass representing one command line invocation.

    Fields:
        command (str): The sub command to run (one of ``COMMANDS``).
        funcs_path (Optional[str]): Function file (--funcs).
        basis_path (Optional[str]): Basis file (--basis), None for the NOT basis.
        circuit_path (Optional[str]): Circuit file (--circuit).
        out_path (Optional[str]): Output file (--out), None prints to stdout.
        t_max (Optional[int]): Depth limit of the exact search.
        arity_cap (int): Arity cap of the decrease computations.
        pattern_limit (int): Pattern limit of the exact search.
        output_mode (OutputMode): Human or machine-readable records.
        trace (bool): Emit the synthesis trace as comments.
        witness (bool): Emit the exact search witness circuit.
        debug (bool): Enable debug logging.
    """
    command: str = ""
    funcs_path: Optional[str] = None
    basis_path: Optional[str] = None
    circuit_path: Optional[str] = None
    out_path: Optional[str] = None
    t_max: Optional[int] = None
    arity_cap: int = ARITY_CAP
    pattern_limit: int = PATTERN_LIMIT
    output_mode: OutputMode = OutputMode.HUMAN
    trace: bool = False
    witness: bool = False
    debug: bool = False


# Function / basis / circuit file keywords
COMMENT_CHAR: str = "#"
HEX_PREFIX: str = "0x"
KW_INPUTS: str = "inputs"
KW_GATE: str = "gate"
KW_MONO: str = "mono"
KW_BASIS: str = "basis"
KW_OUTPUTS: str = "outputs"
KW_CONST0: str = "const0"
KW_CONST1: str = "const1"
INPUT_PREFIX: str = "x"
GATE_PREFIX: str = "g"

# Command names
CMD_DECREASE: str = "decrease"
CMD_SYNTH: str = "synth"
CMD_VERIFY: str = "verify"
CMD_BOUNDS: str = "bounds"
CMD_EXACT: str = "exact"
CMD_SPLIT: str = "split"
CMD_CHECK_LEMMA1: str = "check-lemma1"
CMD_TIGHTNESS: str = "tightness"
COMMANDS: List[str] = [
    CMD_DECREASE,
    CMD_SYNTH,
    CMD_VERIFY,
    CMD_BOUNDS,
    CMD_EXACT,
    CMD_SPLIT,
    CMD_CHECK_LEMMA1,
    CMD_TIGHTNESS
]


class InversionToolkitError(ValueError):
    """Base class of the toolkit errors.

    Attributes:
        error (str): The human readable description of the error.
    """

    exit_code: int = ERROR

    def __init__(self, error: str = "", *args: object) -> None:
        """Initialize the error.

        Args:
            error (str): Description of the failure.
        """
        super().__init__(error, *args)
        self.error: str = error

    def __str__(self) -> str:
        """Return a human-readable error message.

        Returns:
            str: Formatted error message.
        """
        return f"{self.error}"


class ArityCapExceeded(InversionToolkitError):
    """Raised when an arity goes above the configured cap."""

    exit_code: int = RESOURCE_ERROR

    def __init__(self, arity: int = 0, cap: int = 0, *args: object) -> None:
        super().__init__(
            f"Arity {arity} is above the configured cap ({cap}).", *args
        )
        self.arity: int = arity
        self.cap: int = cap


class PatternLimitExceeded(InversionToolkitError):
    """Raised when a pattern pool holds too many distinct patterns."""

    exit_code: int = RESOURCE_ERROR

    def __init__(self, count: int = 0, limit: int = 0, *args: object) -> None:
        super().__init__(
            f"The pattern pool has {count} distinct patterns, the limit is {limit}.",
            *args
        )
        self.count: int = count
        self.limit: int = limit


class FormatParseError(InversionToolkitError):
    """Raised when a function, basis or circuit file cannot be parsed.

    Attributes:
        line_number (int): 1-based line of the failure (0 when unknown).
        reason (str): What was wrong on that line.
    """

    exit_code: int = PARSE_ERROR

    def __init__(self, line_number: int = 0, reason: str = "", *args: object) -> None:
        super().__init__(f"line {line_number}: {reason}", *args)
        self.line_number: int = line_number
        self.reason: str = reason


class CircuitValidationError(InversionToolkitError):
    """Raised when a circuit breaks one of its structural invariants.

    Attributes:
        gate_index (Optional[int]): The first failing gate, None for output errors.
        reason (str): The broken invariant.
    """

    exit_code: int = PARSE_ERROR

    def __init__(self, gate_index: Optional[int] = None, reason: str = "", *args: object) -> None:
        location: str = "outputs" if gate_index is None else f"gate {gate_index}"
        super().__init__(f"{location}: {reason}", *args)
        self.gate_index: Optional[int] = gate_index
        self.reason: str = reason


class SearchDepthExceeded(InversionToolkitError):
    """Raised when the exact search is asked for more weighted gates than allowed."""

    exit_code: int = RESOURCE_ERROR

    def __init__(self, depth: int = 0, limit: int = 0, *args: object) -> None:
        super().__init__(
            f"Search depth {depth} is above the limit ({limit}).", *args
        )
        self.depth: int = depth
        self.limit: int = limit


class InvalidBasisError(InversionToolkitError):
    """Raised for an empty basis or a monotone generator."""


class InvalidChainError(InversionToolkitError):
    """Raised when tuples do not form an increasing chain or an ordered pair."""


class NoNonMonotoneGateError(InversionToolkitError):
    """Raised when a split is requested on a circuit without weighted gates."""

    exit_code: int = MISMATCH


class SynthesisVerificationError(InversionToolkitError):
    """Raised when a synthesis self-check fails, this is always a bug.

    Attributes:
        level (int): The recursion level that failed (-1 for the final check).
    """

    exit_code: int = MISMATCH

    def __init__(self, level: int = -1, reason: str = "", *args: object) -> None:
        super().__init__(f"synthesis level {level}: {reason}", *args)
        self.level: int = level
        self.reason: str = reason


# Important error messages set in a way that is eye catchy
MSG_CRITICAL_UNHANDLED_ERROR: str = "An unhandled error has been caught."
MSG_ERROR_MISSING_FUNCS: str = ERROR_COLOUR + \
    "This command needs a function file (--funcs)."+RESET_COLOUR
MSG_ERROR_MISSING_CIRCUIT: str = ERROR_COLOUR + \
    "This command needs a circuit file (--circuit)."+RESET_COLOUR
MSG_ERROR_FILE_NOT_FOUND: str = ERROR_COLOUR + \
    "Input file not found"+RESET_COLOUR

__all__: List[str] = [
    "ARITY_CAP",
    "CHAIN_ENUMERATION_CAP",
    "ORACLE_CHAIN_CHECK_ARITY",
    "PATTERN_LIMIT",
    "EXACT_ARITY_LIMIT",
    "EXACT_T_MAX_LIMIT",
    "DEFAULT_BASIS_TEXT",
    "SUCCESS",
    "ERROR",
    "MISMATCH",
    "PARSE_ERROR",
    "RESOURCE_ERROR",
    "VERSION",
    "AUTHOR",
    "HARD_ARITY_CAP",
    "HARD_PATTERN_LIMIT",
    "DEBUG_TOKEN",
    "ARITY_CAP_KEY",
    "PATTERN_LIMIT_KEY",
    "OUTPUT_MODE_KEY",
    "ENV_BOOL_CHECK",
    "BOLD_TEXT",
    "RESET_COLOUR",
    "BACKGROUND_COLOUR",
    "CRITICAL_COLOUR",
    "ERROR_COLOUR",
    "WARNING_COLOUR",
    "INFO_COLOUR",
    "OUTPUT_HUMAN",
    "OUTPUT_MACHINE",
    "OutputMode",
    "OM",
    "RunConfig",
    "COMMENT_CHAR",
    "HEX_PREFIX",
    "KW_INPUTS",
    "KW_GATE",
    "KW_MONO",
    "KW_BASIS",
    "KW_OUTPUTS",
    "KW_CONST0",
    "KW_CONST1",
    "INPUT_PREFIX",
    "GATE_PREFIX",
    "CMD_DECREASE",
    "CMD_SYNTH",
    "CMD_VERIFY",
    "CMD_BOUNDS",
    "CMD_EXACT",
    "CMD_SPLIT",
    "CMD_CHECK_LEMMA1",
    "CMD_TIGHTNESS",
    "COMMANDS",
    "InversionToolkitError",
    "ArityCapExceeded",
    "PatternLimitExceeded",
    "SearchDepthExceeded",
    "FormatParseError",
    "CircuitValidationError",
    "InvalidBasisError",
    "InvalidChainError",
    "NoNonMonotoneGateError",
    "SynthesisVerificationError",
    "MSG_CRITICAL_UNHANDLED_ERROR",
    "MSG_ERROR_MISSING_FUNCS",
    "MSG_ERROR_MISSING_CIRCUIT",
    "MSG_ERROR_FILE_NOT_FOUND"
]
