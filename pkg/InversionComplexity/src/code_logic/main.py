"""Program entrypoint helpers.

Provides the :class:`Main` class which loads the input files named by a
:class:`RunConfig`, runs one toolkit command and prints its report. Use
this module to start the application from the command line or as a
package entrypoint.
"""
import sys

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .program_globals import constants as CONST
from .program_globals import helpers as HLP

from .boolean import DecreaseAnalyser, FunctionFile, FunctionSystem, \
    index_to_point
from .basis import Basis, BasisToolkit
from .circuit import Circuit, CircuitEngine, CircuitFile
from .synth import MarkovSynthesiser
from .exact import ExactSearch

Record = Tuple[str, Any]


class Main:
    """The main class of the program.

    Runs the command of a :class:`RunConfig` and maps toolkit errors to
    exit codes.
    """

    disp: HLP.Disp = HLP.initialise_logger(__qualname__, False)

    def __init__(self, config: CONST.RunConfig) -> None:
        """Create a Main controller instance.

        Args:
            config (CONST.RunConfig): The parsed invocation.
        """
        self.config: CONST.RunConfig = config
        self.debug: bool = config.debug
        self.disp.update_disp_debug(self.debug)
        self.analyser = DecreaseAnalyser(config.arity_cap, self.debug)
        self.function_file = FunctionFile(self.debug)
        self.circuit_file = CircuitFile(self.debug)
        self.basis_toolkit = BasisToolkit(config.arity_cap, self.debug)
        self.engine = CircuitEngine(config.arity_cap, self.debug)
        self.commands: Dict[str, Callable[[], int]] = {
            CONST.CMD_DECREASE: self.cmd_decrease,
            CONST.CMD_SYNTH: self.cmd_synth,
            CONST.CMD_VERIFY: self.cmd_verify,
            CONST.CMD_BOUNDS: self.cmd_bounds,
            CONST.CMD_EXACT: self.cmd_exact,
            CONST.CMD_SPLIT: self.cmd_split,
            CONST.CMD_CHECK_LEMMA1: self.cmd_check_lemma1,
            CONST.CMD_TIGHTNESS: self.cmd_tightness
        }

    def __call__(self) -> int:
        """Function in charge of making the class callable as if it were a function.

        Returns:
            int: The execution status of the function.
        """
        return self.main()

    def _report(self, title: str, records: Sequence[Record]) -> None:
        """Print the records, one key=value line each in machine mode."""
        if self.config.output_mode == CONST.OM.MACHINE:
            for key, value in records:
                print(f"{key}={value}")
            return
        print(title)
        for key, value in records:
            print(f"  {key}: {value}")

    def _emit_text(self, text: str) -> None:
        """Write a produced file to --out, or to stdout without it."""
        if self.config.out_path:
            HLP.write_text_file(self.config.out_path, text)
            self.disp.log_info(f"Written '{self.config.out_path}'")
        else:
            print(text, end="")

    def _load_system(self) -> FunctionSystem:
        if not self.config.funcs_path:
            raise RuntimeError(CONST.MSG_ERROR_MISSING_FUNCS)
        return self.function_file.load(self.config.funcs_path)

    def _load_circuit(self) -> Circuit:
        if not self.config.circuit_path:
            raise RuntimeError(CONST.MSG_ERROR_MISSING_CIRCUIT)
        return self.circuit_file.load(self.config.circuit_path)

    def _load_basis(self) -> Basis:
        return self.basis_toolkit.load_basis(self.config.basis_path)

    def cmd_decrease(self) -> int:
        """d(F) and its witness chain."""
        system: FunctionSystem = self._load_system()
        result = self.analyser.decrease(system)
        self._report("Decrease", [
            ("d", result.value),
            ("markov", self.analyser.markov_complexity(system)),
            ("witness", result.witness.render())
        ])
        return CONST.SUCCESS

    def cmd_synth(self) -> int:
        """Markov synthesis, the circuit goes to --out or stdout."""
        system: FunctionSystem = self._load_system()
        basis: Basis = self._load_basis()
        synthesiser = MarkovSynthesiser(self.config.arity_cap, self.debug)
        circuit, trace = synthesiser.synthesize(system, basis)
        comments: List[str] = trace.render() if self.config.trace else []
        self._emit_text(self.circuit_file.serialize(circuit, comments))
        stats = self.engine.statistics(circuit)
        self._report("Synthesis", [
            ("d", trace.decrease),
            ("weight", self.engine.inversion_weight(circuit)),
            ("monotone_gates", stats.monotone_gates),
            ("basis_gates", stats.basis_gates),
            ("verified", "yes")
        ])
        return CONST.SUCCESS

    def cmd_verify(self) -> int:
        """Check that a circuit realises a system."""
        circuit: Circuit = self._load_circuit()
        system: FunctionSystem = self._load_system()
        basis: Basis = self._load_basis()
        self.engine.ensure_valid(circuit, basis)
        weight: int = self.engine.inversion_weight(circuit)
        if circuit.n_inputs != system.arity or len(circuit.outputs) != len(system):
            self._report("Verification", [
                ("status", "mismatch"),
                ("reason", f"circuit has {circuit.n_inputs} inputs and {len(circuit.outputs)} outputs, the system has arity {system.arity} and {len(system)} members"),
                ("weight", weight)
            ])
            return CONST.MISMATCH
        realized: FunctionSystem = self.engine.realized_system(circuit, basis)
        for index in range(1 << system.arity):
            expected = [member.value(index) for member in system]
            actual = [member.value(index) for member in realized]
            if expected != actual:
                point = index_to_point(index, system.arity)
                self._report("Verification", [
                    ("status", "mismatch"),
                    ("counterexample", "".join(str(v) for v in point)),
                    ("expected", "".join(str(v) for v in expected)),
                    ("actual", "".join(str(v) for v in actual)),
                    ("weight", weight)
                ])
                return CONST.MISMATCH
        self._report("Verification", [("status", "ok"), ("weight", weight)])
        return CONST.SUCCESS

    def cmd_bounds(self) -> int:
        """The two-sided bound on I_B(F)."""
        system: FunctionSystem = self._load_system()
        basis: Basis = self._load_basis()
        bounds = self.basis_toolkit.bounds(system, basis)
        tight = self.basis_toolkit.tight_bounds(system, basis)
        self._report("Bounds", [
            ("d", self.analyser.decrease(system).value),
            ("r", basis.r),
            ("c", f"{basis.c:.6f}"),
            ("lower", bounds.lower),
            ("upper", bounds.upper),
            ("tight_lower", tight.lower)
        ])
        return CONST.SUCCESS

    def cmd_exact(self) -> int:
        """Exhaustive I_B(F), with the optimal circuit under --witness."""
        system: FunctionSystem = self._load_system()
        basis: Basis = self._load_basis()
        search = ExactSearch(self.config.pattern_limit, self.debug)
        result = search.search(
            system, basis, self.config.t_max, self.config.witness
        )
        if result.witness is not None:
            self._emit_text(self.circuit_file.serialize(result.witness))
        bounds = self.basis_toolkit.bounds(system, basis)
        value: str = "above" if result.above_t_max else str(result.value)
        self._report("Exact inversion complexity", [
            ("I", value),
            ("t_max", result.t_max),
            ("lower", bounds.lower),
            ("upper", bounds.upper),
            ("nodes", result.nodes),
            ("memo_hits", result.memo_hits)
        ])
        return CONST.SUCCESS

    def cmd_split(self) -> int:
        """Remove the first weighted gate, the reduced circuit goes to --out or stdout."""
        circuit: Circuit = self._load_circuit()
        basis: Basis = self._load_basis()
        split = self.engine.split_first_nonmonotone(circuit, basis)
        holds: bool = self.engine.composition_holds(circuit, basis, split)
        chain = self.engine.chain_split_report(circuit, basis)
        self._emit_text(self.circuit_file.serialize(split.reduced))
        self._report("Split", [
            ("gate_index", split.gate_index),
            ("h", split.h.to_hex()),
            ("weight_before", self.engine.inversion_weight(circuit)),
            ("weight_after", self.engine.inversion_weight(split.reduced)),
            ("composition", "ok" if holds else "broken"),
            ("chain", chain.chain.render()),
            ("d_chain", chain.d_chain),
            ("h_changes", chain.h_changes),
            ("d_zero_part", chain.d_zero_part),
            ("d_one_part", chain.d_one_part),
            ("chain_bound", chain.chain_bound),
            ("change_bound", chain.change_bound),
            ("chain_split", "ok" if chain.holds else "broken")
        ])
        if holds and chain.holds:
            return CONST.SUCCESS
        return CONST.MISMATCH

    def cmd_check_lemma1(self) -> int:
        """d(F) against (2r + 1)(2^I - 1) for the circuit."""
        circuit: Circuit = self._load_circuit()
        basis: Basis = self._load_basis()
        report = self.engine.check_lemma1(circuit, basis)
        self._report("Weight bound", [
            ("d", report.d),
            ("r", report.r),
            ("I", report.weight),
            ("bound", report.bound),
            ("holds", "yes" if report.holds else "no")
        ])
        return CONST.SUCCESS if report.holds else CONST.MISMATCH

    def cmd_tightness(self) -> int:
        """r(B), c(B), Markov tightness and the negation gadget of a basis."""
        basis: Basis = self._load_basis()
        gap = self.basis_toolkit.markov_gap_witness(basis)
        gadget = self.basis_toolkit.negation_gadget(basis)
        records: List[Record] = [
            ("generators", len(basis)),
            ("r", basis.r),
            ("c", f"{basis.c:.6f}"),
            ("markov_tight", "yes" if self.basis_toolkit.is_markov_tight(basis) else "no"),
            ("gap_witness", "none" if gap is None else gap.omega_index)
        ]
        if gap is not None:
            records += [("gap_decrease", gap.decrease), ("gap_markov", gap.markov)]
        records += [
            ("gadget_omega", gadget.omega_index),
            ("gadget_pin", gadget.pin),
            ("gadget_constants", ",".join(
                f"{position}:{value}" for position, value in gadget.constants
            ) or "none")
        ]
        self._report("Basis", records)
        return CONST.SUCCESS

    def _main(self) -> int:
        """Run the configured command.

        Returns:
            int: The exit status of the command.
        """
        self.disp.log_debug(f"Running '{self.config.command}'")
        command: Optional[Callable[[], int]] = self.commands.get(
            self.config.command
        )
        if command is None:
            self.disp.log_error(f"Unknown command '{self.config.command}'")
            return CONST.ERROR
        return command()

    def main(self) -> int:
        """Function in charge of catching the toolkit errors and mapping them to exit codes.

        Returns:
            int: The exit status.
        """
        try:
            return self._main()
        except KeyboardInterrupt:
            self.disp.log_info(
                CONST.INFO_COLOUR+"CTRL+C caught, stopping"+CONST.RESET_COLOUR
            )
            return CONST.ERROR
        except CONST.InversionToolkitError as e:
            self.disp.log_error(
                f"{CONST.ERROR_COLOUR}{type(e).__name__}: {e}{CONST.RESET_COLOUR}"
            )
            return e.exit_code
        except (FileNotFoundError, RuntimeError) as e:
            self.disp.log_error(f"{e}")
            return CONST.ERROR
        except Exception as e:
            self.disp.log_critical(
                f"{CONST.CRITICAL_COLOUR}{CONST.MSG_CRITICAL_UNHANDLED_ERROR}{CONST.RESET_COLOUR}"
            )
            self.disp.log_critical(
                f"{CONST.CRITICAL_COLOUR}Error name: {type(e).__name__}{CONST.RESET_COLOUR}"
            )
            self.disp.log_critical(
                f"{CONST.CRITICAL_COLOUR}Error content: {str(e)}{CONST.RESET_COLOUR}"
            )
            raise RuntimeError(
                f"{CONST.CRITICAL_COLOUR}Critical program error '{type(e).__name__}'{CONST.RESET_COLOUR}"
            ) from e


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the arguments and run the command.

    Args:
        argv (Optional[Sequence[str]]): The arguments, sys.argv[1:] when None.

    Returns:
        int: The exit status.
    """
    data = HLP.check_input_args(argv)
    if isinstance(data, int):
        return data
    HLP.DISP.log_debug(f"DATA={data}")
    return Main(data).main()


def start_wrapper() -> None:
    """Function in charge or providing an easy way of starting the program.
    """
    sys.exit(run())


if __name__ == "__main__":
    start_wrapper()
