"""File containing general functions that aim to help th basic program logic."""
import os
import re
import sys
import pathlib
import argparse
from typing import List, Optional, Sequence, Union

from colorama import just_fix_windows_console
from display_tty import Disp, TOML_CONF, SAVE_TO_FILE, FILE_NAME

from . import constants as CONST

# All the crappy little windows display bugs that could occur
just_fix_windows_console()


def initialise_logger(class_name: str, debug: bool = False) -> Disp:
    """Function to create the Logger library

    Args:
        class_name (str): The name of the class impacted by the logger
        debug (bool, optional): Whether the logger should display debug levels or not. Defaults to False.

    Returns:
        Disp: The initialised instance
    """
    return Disp(
        TOML_CONF,
        SAVE_TO_FILE,
        FILE_NAME,
        debug=debug,
        logger=class_name
    )


DISP: Disp = initialise_logger(
    f"<no_class, file: {os.path.basename(__file__)}>",
    False
)


def load_dotenv_if_present(cwd: str = "") -> None:
    """Check for a .env or ../.env file and inject variables into os.environ if present.

    Args:
        cwd (str, optional): The base path to look for the environement file. Defaults to "".
    """
    if cwd == "":
        cwd = __file__
    env_paths = [
        pathlib.Path(cwd) / ".env",
        pathlib.Path(cwd).parent / ".env",
        pathlib.Path(cwd).parent.parent / ".env"
    ]
    DISP.log_debug(f"Environment search paths: {env_paths}")
    for env_path in env_paths:
        if env_path.is_file():
            with env_path.open("r", encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    # Match KEY=VALUE, allowing for spaces around =
                    match = re.match(
                        r'^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$',
                        line
                    )
                    if match:
                        key, value = match.groups()
                        # Remove optional surrounding quotes
                        if (value.startswith('"') and value.endswith('"')) or (value.startswith("'") and value.endswith("'")):
                            value = value[1:-1]
                        os.environ.setdefault(key, value)
            DISP.log_debug(f"environement file ({env_path}) loaded.")
            return  # Only load the first found .env file
    DISP.log_debug("No environement files loaded")


def get_environement_variable(var_name: str) -> str:
    """Get the environement variable from the system environement

    Args:
        var_name (str): The name to look for

    Raises:
        ValueError: The error raised when the variable is not present.

    Returns:
        str: The value of the variable.
    """
    if var_name not in os.environ:
        raise ValueError(
            f"The expected environement variable {var_name} is missing."
        )
    return os.environ[var_name]


def get_environement_int(var_name: str, default: int, hard_limit: int) -> int:
    """Read a positive integer from the environement, clamped to a hard limit.

    Args:
        var_name (str): The name to look for.
        default (int): Value used when the variable is absent or invalid.
        hard_limit (int): Largest accepted value.

    Returns:
        int: The value to use.
    """
    try:
        raw: str = get_environement_variable(var_name)
    except ValueError:
        return default
    try:
        value: int = int(raw)
    except ValueError as e:
        DISP.log_warning(
            f"{CONST.WARNING_COLOUR}{var_name} is not a number, ignoring, (info) error: {e}{CONST.RESET_COLOUR}"
        )
        return default
    return clamp_cap(value, hard_limit, var_name)


def clamp_cap(value: int, hard_limit: int, name: str = "cap") -> int:
    """Clamp a user supplied cap into [0, hard_limit].

    Args:
        value (int): The requested value.
        hard_limit (int): The module hard limit.
        name (str): Name used in the warning.

    Returns:
        int: The clamped value.
    """
    if value < 0:
        DISP.log_warning(
            f"{CONST.WARNING_COLOUR}Negative {name} not supported, converting to positive{CONST.RESET_COLOUR}"
        )
        value *= -1
    if value > hard_limit:
        DISP.log_warning(
            f"{CONST.WARNING_COLOUR}{name} ({value}) is above the hard limit, defaulting to {hard_limit}{CONST.RESET_COLOUR}"
        )
        value = hard_limit
    return value


def read_text_file(path: str) -> str:
    """Read a whole text file.

    Args:
        path (str): The file to read.

    Raises:
        FileNotFoundError: If the path is not a file.

    Returns:
        str: The file content.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"{CONST.MSG_ERROR_FILE_NOT_FOUND}: '{path}'")
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def write_text_file(path: str, content: str) -> None:
    """Write a text file, creating the parent folders if they are missing.

    Args:
        path (str): Destination path.
        content (str): Content to write.

    Raises:
        RuntimeError: If the parent path exists and is not a folder.
    """
    folders: str = str(pathlib.Path(path).parent)
    if os.path.exists(folders) and not os.path.isdir(folders):
        raise RuntimeError(
            f"The destination path '({folders})' exists and is not a folder, please move it to another location or remove it yourself."
        )
    if not os.path.isdir(folders):
        DISP.log_info(f"Creating output folders ({folders})")
        os.makedirs(folders, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)


def display_version() -> None:
    """Function in charge of displaying the version of the program.
    """
    print("VERSION:")
    print(f"The version of this program is: {CONST.VERSION}")


def display_author() -> None:
    """Function in charge of displaying the author of the program.
    """
    print("AUTHOR:")
    print(f"This program was written by {CONST.AUTHOR}")


def build_argument_parser() -> argparse.ArgumentParser:
    """Create the command line parser.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    parser = argparse.ArgumentParser(
        prog="InversionComplexity",
        description="Decrease, Markov synthesis, bounds and exact inversion complexity of Boolean systems."
    )
    parser.add_argument(
        "command",
        nargs="?",
        choices=CONST.COMMANDS,
        help="The operation to run."
    )
    parser.add_argument("--funcs", dest="funcs_path", default=None)
    parser.add_argument("--basis", dest="basis_path", default=None)
    parser.add_argument("--circuit", dest="circuit_path", default=None)
    parser.add_argument("--out", dest="out_path", default=None)
    parser.add_argument("--t-max", dest="t_max", type=int, default=None)
    parser.add_argument("--arity-cap", dest="arity_cap",
                        type=int, default=None)
    parser.add_argument("--pattern-limit", dest="pattern_limit",
                        type=int, default=None)
    parser.add_argument("--machine", action="store_true",
                        help="Print one key=value record per line.")
    parser.add_argument("--trace", action="store_true",
                        help="Annotate synthesised circuits with the trace.")
    parser.add_argument("--witness", action="store_true",
                        help="Emit a circuit realising the exact optimum.")
    parser.add_argument("-d", "--debug", action="store_true")
    parser.add_argument("-v", "--version", action="store_true")
    parser.add_argument("-a", "--author", action="store_true")
    return parser


def check_input_args(argv: Optional[Sequence[str]] = None) -> Union[int, CONST.RunConfig]:
    """Function to check the arguments that were provided by the user.

    Args:
        argv (Optional[Sequence[str]]): The arguments, sys.argv[1:] when None.

    Returns:
        Union[int, CONST.RunConfig]: An exit status when the program should stop, the run configuration otherwise.
    """
    load_dotenv_if_present(os.getcwd())
    _argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    DISP.log_debug(f"argv={_argv}")
    parser = build_argument_parser()
    try:
        args = parser.parse_args(_argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else CONST.ERROR
    if args.version:
        display_version()
        return CONST.SUCCESS
    if args.author:
        display_author()
        return CONST.SUCCESS
    if not args.command:
        parser.print_help()
        return CONST.ERROR
    _debug: bool = args.debug or os.environ.get(
        CONST.DEBUG_TOKEN,
        ""
    ).lower() in CONST.ENV_BOOL_CHECK
    DISP.update_disp_debug(_debug)
    _output_mode: CONST.OutputMode = CONST.OM.HUMAN
    if args.machine:
        _output_mode = CONST.OM.MACHINE
    elif os.environ.get(CONST.OUTPUT_MODE_KEY, "").lower() == CONST.OUTPUT_MACHINE:
        _output_mode = CONST.OM.MACHINE
    if args.arity_cap is None:
        _arity_cap: int = get_environement_int(
            CONST.ARITY_CAP_KEY, CONST.ARITY_CAP, CONST.HARD_ARITY_CAP
        )
    else:
        _arity_cap = clamp_cap(
            args.arity_cap, CONST.HARD_ARITY_CAP, "arity cap"
        )
    if args.pattern_limit is None:
        _pattern_limit: int = get_environement_int(
            CONST.PATTERN_LIMIT_KEY, CONST.PATTERN_LIMIT, CONST.HARD_PATTERN_LIMIT
        )
    else:
        _pattern_limit = clamp_cap(
            args.pattern_limit, CONST.HARD_PATTERN_LIMIT, "pattern limit"
        )
    _t_max: Optional[int] = args.t_max
    if _t_max is not None:
        _t_max = clamp_cap(_t_max, CONST.EXACT_T_MAX_LIMIT, "t-max")
    config = CONST.RunConfig(
        command=args.command,
        funcs_path=args.funcs_path,
        basis_path=args.basis_path,
        circuit_path=args.circuit_path,
        out_path=args.out_path,
        t_max=_t_max,
        arity_cap=_arity_cap,
        pattern_limit=_pattern_limit,
        output_mode=_output_mode,
        trace=args.trace,
        witness=args.witness,
        debug=_debug
    )
    DISP.log_debug(f"config = {config}")
    return config
