import itertools

import pytest

from conftest import XNOR3, random_basis, random_circuit
from InversionComplexity.src.code_logic.program_globals import constants as CONST
from InversionComplexity.src.code_logic.boolean import DecreaseAnalyser, FunctionSystem, \
    conjunction, constant, negation, projection, projections
from InversionComplexity.src.code_logic.circuit import BasisGate, Circuit, MonotoneGate, \
    SignalKind, gate_ref, input_ref


def single_gate_circuit() -> Circuit:
    return Circuit(
        3, (BasisGate(0, (input_ref(0), input_ref(1), input_ref(2))),), (gate_ref(0),)
    )


def gadget_circuit() -> Circuit:
    """NOT x built from w(x, 0, 0)."""
    return Circuit(
        1,
        (
            MonotoneGate(constant(0, 0), ()),
            BasisGate(0, (input_ref(0), gate_ref(0), gate_ref(0))),
        ),
        (gate_ref(1),)
    )


def test_validate_accepts_a_two_gate_circuit(engine, b0):
    circuit = Circuit(
        2,
        (
            MonotoneGate(conjunction(2), (input_ref(0), input_ref(1))),
            BasisGate(0, (gate_ref(0),)),
        ),
        (gate_ref(1),)
    )
    assert engine.validate(circuit, b0).ok


def test_validate_reports_forward_references(engine, b0):
    circuit = Circuit(
        1,
        (BasisGate(0, (gate_ref(1),)), MonotoneGate(constant(0, 1), ())),
        (gate_ref(0),)
    )
    report = engine.validate(circuit, b0)
    assert not report.ok
    assert report.gate_index == 0
    assert "forward" in report.reason


def test_validate_rejects_a_non_monotone_table(engine, b0):
    circuit = Circuit(1, (MonotoneGate(negation(), (input_ref(0),)),), (gate_ref(0),))
    report = engine.validate(circuit, b0)
    assert not report.ok
    assert "monotone" in report.reason
    with pytest.raises(CONST.CircuitValidationError) as error:
        engine.ensure_valid(circuit, b0)
    assert error.value.gate_index == 0
    assert error.value.exit_code == CONST.PARSE_ERROR


@pytest.mark.parametrize("circuit", [
    Circuit(1, (BasisGate(1, (input_ref(0),)),), (gate_ref(0),)),
    Circuit(1, (BasisGate(0, (input_ref(0), input_ref(0))),), (gate_ref(0),)),
    Circuit(1, (MonotoneGate(conjunction(2), (input_ref(0),)),), (gate_ref(0),)),
    Circuit(1, (BasisGate(0, (input_ref(3),)),), (gate_ref(0),)),
    Circuit(1, (), ()),
    Circuit(1, (), (gate_ref(0),)),
])
def test_validate_rejects_broken_circuits(engine, b0, circuit):
    assert not engine.validate(circuit, b0).ok


def test_evaluate(engine, b2):
    assert engine.evaluate(single_gate_circuit(), b2, (0, 0, 0)) == (1,)
    assert engine.evaluate(gadget_circuit(), b2, (1,)) == (0,)
    passthrough = Circuit(2, (), (input_ref(1), input_ref(0)))
    for point in itertools.product((0, 1), repeat=2):
        assert engine.evaluate(passthrough, b2, point) == (point[1], point[0])


def test_realized_system(engine, b2):
    assert engine.realized_system(single_gate_circuit(), b2) == FunctionSystem.of(XNOR3)
    passthrough = Circuit(3, (), (input_ref(0), input_ref(1), input_ref(2)))
    assert engine.realized_system(passthrough, b2).members == tuple(projections(3))
    assert engine.realized_system(gadget_circuit(), b2) == FunctionSystem.of(negation())


def test_realized_system_matches_pointwise_evaluation(engine, rng):
    for _ in range(50):
        basis = random_basis(rng)
        circuit = random_circuit(rng, basis, rng.randint(1, 3), rng.randint(1, 5))
        system = engine.realized_system(circuit, basis)
        for index in range(1 << circuit.n_inputs):
            point = tuple((index >> j) & 1 for j in range(circuit.n_inputs))
            assert engine.evaluate(circuit, basis, point) == \
                tuple(member.value(index) for member in system)


def test_inversion_weight_and_statistics(engine):
    assert engine.inversion_weight(single_gate_circuit()) == 1
    monotone = Circuit(2, (MonotoneGate(conjunction(2), (input_ref(0), input_ref(1))),), (gate_ref(0),))
    assert engine.inversion_weight(monotone) == 0
    stats = engine.statistics(gadget_circuit())
    assert (stats.monotone_gates, stats.basis_gates, stats.outputs) == (1, 1, 1)


def test_split_of_the_single_gate_circuit(engine, b2):
    split = engine.split_first_nonmonotone(single_gate_circuit(), b2)
    assert split.gate_index == 0
    assert split.h == XNOR3
    assert engine.inversion_weight(split.reduced) == 0
    assert split.reduced.n_inputs == 4
    assert split.reduced.outputs == (input_ref(0),)
    reduced = engine.realized_system(split.reduced, b2)
    assert reduced[0] == projection(4, 0)
    assert engine.composition_holds(single_gate_circuit(), b2, split)


def test_split_needs_a_weighted_gate(engine, b2):
    monotone = Circuit(1, (), (input_ref(0),))
    with pytest.raises(CONST.NoNonMonotoneGateError):
        engine.split_first_nonmonotone(monotone, b2)


def test_split_keeps_the_composition_identity(engine, rng):
    for _ in range(100):
        basis = random_basis(rng)
        circuit = random_circuit(rng, basis, rng.randint(1, 3), rng.randint(1, 5))
        weight = engine.inversion_weight(circuit)
        if weight == 0:
            continue
        split = engine.split_first_nonmonotone(circuit, basis)
        assert engine.inversion_weight(split.reduced) == weight - 1
        assert engine.composition_holds(circuit, basis, split)
        for ref in split.reduced.outputs:
            if ref.kind == SignalKind.INPUT:
                assert ref.index < split.reduced.n_inputs


def test_check_lemma1_examples(engine, b2):
    report = engine.check_lemma1(single_gate_circuit(), b2)
    assert (report.d, report.r, report.weight, report.bound, report.holds) == (2, 2, 1, 5, True)
    monotone = Circuit(2, (MonotoneGate(conjunction(2), (input_ref(0), input_ref(1))),), (gate_ref(0),))
    report = engine.check_lemma1(monotone, b2)
    assert (report.d, report.bound, report.holds) == (0, 0, True)


def test_lemma1_holds_on_random_circuits(engine, rng):
    for _ in range(500):
        basis = random_basis(rng)
        circuit = random_circuit(rng, basis, rng.randint(1, 4), rng.randint(1, 6))
        assert engine.check_lemma1(circuit, basis).holds


def test_chain_split_report(engine, b2, rng):
    report = engine.chain_split_report(single_gate_circuit(), b2)
    assert report.d_chain == 2
    assert report.h_changes == 3
    assert report.change_bound == 5
    assert report.holds
    analyser = DecreaseAnalyser()
    for _ in range(100):
        basis = random_basis(rng)
        circuit = random_circuit(rng, basis, rng.randint(1, 4), rng.randint(1, 6))
        if engine.inversion_weight(circuit) == 0:
            continue
        report = engine.chain_split_report(circuit, basis)
        assert report.holds
        assert report.h_decrease <= basis.r
        assert report.d_chain == analyser.decrease(engine.realized_system(circuit, basis)).value
