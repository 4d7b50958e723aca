"""Shared fixtures: the usual bases and systems, seeded randomness, random circuits."""

import random
from pathlib import Path
from typing import List

import pytest

from InversionComplexity.src.code_logic.boolean import DecreaseAnalyser, FunctionSystem, \
    TruthTable, conjunction, constant, disjunction, nand, negation, parity
from InversionComplexity.src.code_logic.basis import Basis, BasisToolkit, not_basis
from InversionComplexity.src.code_logic.circuit import BasisGate, Circuit, CircuitEngine, \
    MonotoneGate, SignalRef, gate_ref, input_ref

DATA_DIR = Path(__file__).parent / "data"

XNOR3 = parity(3, complemented=True)
XOR2 = parity(2)
MAJORITY3 = TruthTable(3, 0xE8)
MONOTONE_GATES: List[TruthTable] = [
    conjunction(2), disjunction(2), MAJORITY3, constant(0, 0), constant(0, 1)
]
GENERATOR_POOL: List[TruthTable] = [negation(), nand(), XOR2, XNOR3]


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def analyser() -> DecreaseAnalyser:
    return DecreaseAnalyser()


@pytest.fixture
def toolkit() -> BasisToolkit:
    return BasisToolkit()


@pytest.fixture
def engine() -> CircuitEngine:
    return CircuitEngine()


@pytest.fixture
def b0() -> Basis:
    return not_basis()


@pytest.fixture
def b2() -> Basis:
    return Basis((XNOR3,), ("xnor3",))


@pytest.fixture
def f1() -> FunctionSystem:
    return FunctionSystem.of(XNOR3)


@pytest.fixture
def f2() -> FunctionSystem:
    return FunctionSystem.of(TruthTable(2, 0x5), TruthTable(2, 0x3))


def random_table(rng: random.Random, arity: int) -> TruthTable:
    return TruthTable(arity, rng.getrandbits(1 << arity))


def random_system(rng: random.Random, arity: int, members: int) -> FunctionSystem:
    return FunctionSystem(tuple(random_table(rng, arity) for _ in range(members)))


def random_basis(rng: random.Random) -> Basis:
    count: int = rng.randint(1, 2)
    return Basis(tuple(rng.sample(GENERATOR_POOL, count)))


def random_circuit(rng: random.Random, basis: Basis, n_inputs: int, n_gates: int) -> Circuit:
    """A valid circuit mixing monotone and weighted gates, wired at random."""
    gates = []
    for index in range(n_gates):
        signals: List[SignalRef] = [input_ref(j) for j in range(n_inputs)]
        signals += [gate_ref(k) for k in range(index)]
        if rng.random() < 0.5:
            omega_index: int = rng.randrange(len(basis))
            args = tuple(
                rng.choice(signals) for _ in range(basis[omega_index].arity)
            )
            gates.append(BasisGate(omega_index, args))
        else:
            table: TruthTable = rng.choice(MONOTONE_GATES)
            args = tuple(rng.choice(signals) for _ in range(table.arity))
            gates.append(MonotoneGate(table, args))
    references: List[SignalRef] = [input_ref(j) for j in range(n_inputs)]
    references += [gate_ref(k) for k in range(n_gates)]
    outputs = tuple(rng.choice(references) for _ in range(rng.randint(1, 3)))
    return Circuit(n_inputs, tuple(gates), outputs)
