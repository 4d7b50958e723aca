import re
from pathlib import Path
from typing import Dict

import pytest

from InversionComplexity.src.code_logic.program_globals import constants as CONST
from InversionComplexity.src.code_logic.main import Main, run

RECORD = re.compile(r"^([A-Za-z_]+)=(.*)$")


def records(text: str) -> Dict[str, str]:
    found: Dict[str, str] = {}
    for line in text.splitlines():
        match = RECORD.match(line.strip())
        if match:
            found[match.group(1)] = match.group(2)
    return found


def machine(capsys, *argv: str):
    status = run([*argv, "--machine"])
    return status, records(capsys.readouterr().out)


def test_decrease_command(capsys, data_dir):
    status, out = machine(capsys, "decrease", "--funcs", str(data_dir / "f1.funcs"))
    assert status == CONST.SUCCESS
    assert out["d"] == "2"
    assert out["markov"] == "2"
    assert out["witness"] == "000,001,011,111"
    status, out = machine(capsys, "decrease", "--funcs", str(data_dir / "f2.funcs"))
    assert status == CONST.SUCCESS
    assert out["d"] == "2"


def test_human_output(capsys, data_dir):
    assert run(["decrease", "--funcs", str(data_dir / "f1.funcs")]) == CONST.SUCCESS
    out = capsys.readouterr().out
    assert "Decrease" in out
    assert "  d: 2" in out


def test_synth_then_verify(capsys, data_dir, tmp_path):
    target: Path = tmp_path / "out" / "f1.circuit"
    status, out = machine(
        capsys, "synth", "--funcs", str(data_dir / "f1.funcs"),
        "--out", str(target), "--trace"
    )
    assert status == CONST.SUCCESS
    assert out["weight"] == "2"
    assert out["verified"] == "yes"
    assert out["basis_gates"] == "2"
    text = target.read_text(encoding="utf-8")
    assert text.startswith("# synthesis trace: d(F)=2 levels=2")
    status, out = machine(
        capsys, "verify", "--circuit", str(target),
        "--funcs", str(data_dir / "f1.funcs")
    )
    assert status == CONST.SUCCESS
    assert out["status"] == "ok"
    assert out["weight"] == "2"


def test_synth_prints_the_circuit_without_out(capsys, data_dir):
    assert run(["synth", "--funcs", str(data_dir / "f2.funcs")]) == CONST.SUCCESS
    out = capsys.readouterr().out
    assert "inputs 2\n" in out
    assert "outputs" in out


@pytest.mark.parametrize("circuit, funcs, weight", [
    ("f1_xnor3.circuit", "f1.funcs", "1"),
    ("f2_xnor3.circuit", "f2.funcs", "2"),
])
def test_verify_golden_circuits(capsys, data_dir, circuit, funcs, weight):
    status, out = machine(
        capsys, "verify", "--circuit", str(data_dir / circuit),
        "--funcs", str(data_dir / funcs), "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.SUCCESS
    assert out["status"] == "ok"
    assert out["weight"] == weight


def test_verify_reports_a_counterexample(capsys, data_dir, tmp_path):
    funcs = tmp_path / "xor3.funcs"
    funcs.write_text("f1 3 0x96\n", encoding="utf-8")
    status, out = machine(
        capsys, "verify", "--circuit", str(data_dir / "f1_xnor3.circuit"),
        "--funcs", str(funcs), "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.MISMATCH
    assert out["status"] == "mismatch"
    assert out["counterexample"] == "000"
    assert out["expected"] == "0"
    assert out["actual"] == "1"


def test_verify_shape_mismatch(capsys, data_dir):
    status, out = machine(
        capsys, "verify", "--circuit", str(data_dir / "f1_xnor3.circuit"),
        "--funcs", str(data_dir / "f2.funcs"), "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.MISMATCH
    assert out["status"] == "mismatch"
    assert "reason" in out


@pytest.mark.parametrize("funcs, value", [("f1.funcs", "1"), ("f2.funcs", "2")])
def test_exact_command(capsys, data_dir, funcs, value):
    status, out = machine(
        capsys, "exact", "--funcs", str(data_dir / funcs),
        "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.SUCCESS
    assert out["I"] == value
    assert int(out["lower"]) <= int(value) <= int(out["upper"])


def test_exact_above_t_max(capsys, data_dir):
    status, out = machine(
        capsys, "exact", "--funcs", str(data_dir / "f2.funcs"),
        "--basis", str(data_dir / "xnor3.basis"), "--t-max", "1"
    )
    assert status == CONST.SUCCESS
    assert out["I"] == "above"
    assert out["t_max"] == "1"


def test_exact_witness(capsys, data_dir, tmp_path):
    target = tmp_path / "witness.circuit"
    status, out = machine(
        capsys, "exact", "--funcs", str(data_dir / "f2.funcs"),
        "--basis", str(data_dir / "xnor3.basis"), "--witness", "--out", str(target)
    )
    assert status == CONST.SUCCESS
    assert out["I"] == "2"
    status, out = machine(
        capsys, "verify", "--circuit", str(target),
        "--funcs", str(data_dir / "f2.funcs"), "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.SUCCESS
    assert out["weight"] == "2"


def test_bounds_command(capsys, data_dir):
    status, out = machine(
        capsys, "bounds", "--funcs", str(data_dir / "f1.funcs"),
        "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.SUCCESS
    assert out["d"] == "2"
    assert out["r"] == "2"
    assert out["upper"] == "2"
    assert int(out["lower"]) <= 1
    assert re.fullmatch(r"\d+\.\d{6}", out["c"])
    status, out = machine(capsys, "bounds", "--funcs", str(data_dir / "f1.funcs"))
    assert out["r"] == "1"
    assert out["tight_lower"] == "2"


def test_split_command(capsys, data_dir, tmp_path):
    target = tmp_path / "reduced.circuit"
    status, out = machine(
        capsys, "split", "--circuit", str(data_dir / "f1_xnor3.circuit"),
        "--basis", str(data_dir / "xnor3.basis"), "--out", str(target)
    )
    assert status == CONST.SUCCESS
    assert out["gate_index"] == "0"
    assert out["weight_before"] == "1"
    assert out["weight_after"] == "0"
    assert out["composition"] == "ok"
    assert out["chain_split"] == "ok"
    assert target.read_text(encoding="utf-8").startswith("inputs 4")


def test_split_without_weighted_gate(capsys, tmp_path):
    circuit = tmp_path / "mono.circuit"
    circuit.write_text("inputs 2\ngate g1 mono 2 0x8 x1 x2\noutputs g1\n", encoding="utf-8")
    assert run(["split", "--circuit", str(circuit)]) == CONST.MISMATCH


def test_check_lemma1_command(capsys, data_dir):
    status, out = machine(
        capsys, "check-lemma1", "--circuit", str(data_dir / "f2_xnor3.circuit"),
        "--basis", str(data_dir / "xnor3.basis")
    )
    assert status == CONST.SUCCESS
    assert out["d"] == "2"
    assert out["r"] == "2"
    assert out["I"] == "2"
    assert out["bound"] == "15"
    assert out["holds"] == "yes"


def test_tightness_command(capsys, data_dir):
    status, out = machine(capsys, "tightness", "--basis", str(data_dir / "xnor3.basis"))
    assert status == CONST.SUCCESS
    assert out["r"] == "2"
    assert out["markov_tight"] == "no"
    assert out["gap_witness"] == "0"
    assert out["gadget_pin"] == "1"
    assert out["gadget_constants"] == "2:0,3:0"
    status, out = machine(capsys, "tightness")
    assert out["markov_tight"] == "yes"
    assert out["gap_witness"] == "none"
    assert out["gadget_constants"] == "none"


def test_parse_errors_exit_3(capsys, data_dir, tmp_path):
    funcs = tmp_path / "broken.funcs"
    funcs.write_text("f1 3 0xzz\n", encoding="utf-8")
    assert run(["decrease", "--funcs", str(funcs)]) == CONST.PARSE_ERROR
    circuit = tmp_path / "broken.circuit"
    circuit.write_text("gate g1 mono 0x8 x1 x2\n", encoding="utf-8")
    assert run(["check-lemma1", "--circuit", str(circuit)]) == CONST.PARSE_ERROR
    wide = tmp_path / "wide.circuit"
    wide.write_text("inputs 1\ngate a mono 64 0x1\noutputs a\n", encoding="utf-8")
    assert run([
        "verify", "--circuit", str(wide), "--funcs", str(data_dir / "f1.funcs")
    ]) == CONST.PARSE_ERROR


def test_resource_caps_exit_4(capsys, data_dir, tmp_path):
    assert run([
        "decrease", "--funcs", str(data_dir / "f1.funcs"), "--arity-cap", "2"
    ]) == CONST.RESOURCE_ERROR
    funcs = tmp_path / "wide.funcs"
    funcs.write_text("f1 5 0x1\n", encoding="utf-8")
    assert run(["exact", "--funcs", str(funcs)]) == CONST.RESOURCE_ERROR
    huge = tmp_path / "huge.funcs"
    huge.write_text("f 17 0x1\n", encoding="utf-8")
    assert run(["decrease", "--funcs", str(huge)]) == CONST.RESOURCE_ERROR


def test_missing_inputs_exit_1(capsys, data_dir, tmp_path):
    assert run(["decrease"]) == CONST.ERROR
    assert run(["decrease", "--funcs", str(tmp_path / "nope.funcs")]) == CONST.ERROR
    assert run(["verify", "--funcs", str(data_dir / "f1.funcs")]) == CONST.ERROR


def test_version_author_and_help(capsys):
    assert run(["--version"]) == CONST.SUCCESS
    assert CONST.VERSION in capsys.readouterr().out
    assert run(["--author"]) == CONST.SUCCESS
    assert CONST.AUTHOR in capsys.readouterr().out
    assert run([]) == CONST.ERROR


def test_main_is_callable(capsys, data_dir):
    config = CONST.RunConfig(
        command=CONST.CMD_DECREASE,
        funcs_path=str(data_dir / "f2.funcs"),
        output_mode=CONST.OM.MACHINE
    )
    assert Main(config)() == CONST.SUCCESS
    assert records(capsys.readouterr().out)["d"] == "2"
