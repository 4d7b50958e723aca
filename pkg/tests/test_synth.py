import pytest

from conftest import XNOR3, random_system
from InversionComplexity.src.code_logic.program_globals import constants as CONST
from InversionComplexity.src.code_logic.boolean import DecreaseAnalyser, FunctionSystem, \
    TruthTable, conjunction, disjunction, markov_value, negation, projection
from InversionComplexity.src.code_logic.circuit import BasisGate, MonotoneGate
from InversionComplexity.src.code_logic.synth import MarkovSynthesiser


@pytest.fixture
def synthesiser() -> MarkovSynthesiser:
    return MarkovSynthesiser()


def reconstruction_holds(system: FunctionSystem, separator: TruthTable, transformed: FunctionSystem) -> bool:
    size = 1 << system.arity
    for index in range(size):
        lifted = index | ((1 - separator.value(index)) * size)
        for member, image in zip(system, transformed):
            if member.value(index) != image.value(lifted):
                return False
    return True


def test_decompose_step_on_xnor3(synthesiser, f1):
    separator, transformed = synthesiser.decompose_step(f1)
    assert separator == conjunction(3)
    assert synthesiser.analyser.decrease(transformed).value == 1
    assert reconstruction_holds(f1, separator, transformed)


def test_decompose_step_on_not(synthesiser):
    system = FunctionSystem.of(negation())
    separator, transformed = synthesiser.decompose_step(system)
    assert separator == projection(1, 0)
    assert transformed[0] == projection(2, 1)
    assert reconstruction_holds(system, separator, transformed)


def test_decrease_one_leaves_a_monotone_system(synthesiser):
    analyser = DecreaseAnalyser()
    for bits in range(16):
        system = FunctionSystem.of(TruthTable(2, bits))
        if analyser.decrease(system).value != 1:
            continue
        _, transformed = synthesiser.decompose_step(system)
        assert analyser.decrease(transformed).value == 0


def test_decompose_step_needs_a_non_monotone_system(synthesiser):
    with pytest.raises(ValueError):
        synthesiser.decompose_step(FunctionSystem.of(disjunction(2)))


def test_synthesize_xnor3_over_not(synthesiser, f1, b0):
    circuit, trace = synthesiser.synthesize(f1, b0)
    assert synthesiser.engine.inversion_weight(circuit) == 2
    assert len(trace.levels) == 2
    assert trace.levels[0].separator == conjunction(3)
    assert trace.levels[0].threshold == 2
    assert synthesiser.engine.realized_system(circuit, b0) == f1


def test_synthesize_monotone_system(synthesiser, b0):
    system = FunctionSystem.of(conjunction(2), disjunction(2))
    circuit, trace = synthesiser.synthesize(system, b0)
    assert synthesiser.engine.inversion_weight(circuit) == 0
    assert len(circuit.gates) == 2
    assert all(isinstance(gate, MonotoneGate) for gate in circuit.gates)
    assert trace.levels == []


def test_synthesize_over_the_xnor3_basis(synthesiser, f2, b2):
    circuit, _ = synthesiser.synthesize(f2, b2)
    weighted = [gate for gate in circuit.gates if isinstance(gate, BasisGate)]
    assert len(weighted) == 2
    assert all(len(gate.args) == XNOR3.arity for gate in weighted)
    assert synthesiser.engine.realized_system(circuit, b2) == f2


def test_synthesize_defaults_to_the_not_basis(synthesiser, f2):
    circuit, _ = synthesiser.synthesize(f2)
    assert synthesiser.engine.inversion_weight(circuit) == 2


def test_trace_rendering(synthesiser, f1):
    _, trace = synthesiser.synthesize(f1)
    lines = trace.render()
    assert lines[0] == "synthesis trace: d(F)=2 levels=2"
    assert lines[1] == "level 1: k=2 threshold=2 separator=0x80 d(G')=1"
    assert lines[2].startswith("level 2: k=1 threshold=1 ")
    assert lines[2].endswith("d(G')=0")


def test_arity_cap_counts_the_pseudo_inputs(f1):
    with pytest.raises(CONST.ArityCapExceeded):
        MarkovSynthesiser(arity_cap=3).synthesize(f1)


def test_random_systems_are_synthesised_exactly(synthesiser, rng, b0, b2):
    analyser = synthesiser.analyser
    engine = synthesiser.engine
    for round_index in range(500):
        system = random_system(rng, rng.randint(1, 4), rng.randint(1, 3))
        basis = b2 if round_index % 5 == 0 else b0
        circuit, trace = synthesiser.synthesize(system, basis)
        value = analyser.decrease(system).value
        assert engine.realized_system(circuit, basis) == FunctionSystem(system.members)
        assert engine.inversion_weight(circuit) == markov_value(value)
        assert len(trace.levels) == markov_value(value)
        for level in trace.levels:
            assert analyser.is_monotone(level.separator)
            assert level.transformed_decrease <= level.threshold - 1
        if engine.inversion_weight(circuit) == 0:
            continue
        split = engine.split_first_nonmonotone(circuit, basis)
        assert engine.inversion_weight(split.reduced) == engine.inversion_weight(circuit) - 1
        assert engine.composition_holds(circuit, basis, split)
