import pytest

from InversionComplexity.src.code_logic.program_globals import constants as CONST
from InversionComplexity.src.code_logic.boolean import Chain, FunctionSystem, TruthTable, \
    conjunction, constant, disjunction, index_to_point, nand, negation, parity, \
    point_to_index, precedes, projection


def test_index_convention_x1_is_least_significant():
    assert index_to_point(1, 3) == (1, 0, 0)
    assert index_to_point(4, 3) == (0, 0, 1)
    assert point_to_index((0, 1, 1)) == 6


def test_named_tables():
    assert negation().bits == 0x1
    assert conjunction(2).bit_string() == "0001"
    assert disjunction(2).to_hex() == "0xe"
    assert nand().to_hex() == "0x7"
    assert parity(3, complemented=True).to_hex() == "0x69"
    assert parity(3).bit_string() == "01101001"


def test_evaluate_by_tuple():
    xnor3 = parity(3, complemented=True)
    assert xnor3(0, 0, 0) == 1
    assert xnor3(1, 0, 0) == 0
    assert xnor3(1, 1, 0) == 1
    with pytest.raises(ValueError):
        xnor3.evaluate((1, 0))


def test_from_hex_and_width_check():
    assert TruthTable.from_hex(3, "0x96") == parity(3)
    with pytest.raises(ValueError):
        TruthTable.from_hex(1, "0x7")
    with pytest.raises(ValueError):
        TruthTable.from_hex(2, "12")


def test_from_function_matches_operators():
    x = projection(2, 0)
    y = projection(2, 1)
    assert (x & y) == conjunction(2)
    assert (x | y) == disjunction(2)
    assert ~(x & y) == nand()
    assert TruthTable.from_function(2, lambda a, b: a ^ b) == parity(2)


def test_compose_substitutes_constants():
    xnor3 = parity(3, complemented=True)
    result = xnor3.compose(
        [projection(1, 0), constant(1, 0), constant(1, 0)]
    )
    assert result == negation()


def test_compose_of_constant_needs_arity():
    assert constant(0, 1).compose([], 2) == constant(2, 1)
    with pytest.raises(ValueError):
        constant(0, 1).compose([])


def test_function_system_rejects_mixed_arities():
    with pytest.raises(ValueError):
        FunctionSystem.of(negation(), conjunction(2))
    with pytest.raises(ValueError):
        FunctionSystem(())
    assert FunctionSystem.of(conjunction(2), nand()).member_names() == ["f1", "f2"]


def test_chain_validation():
    chain = Chain(((0, 0, 0), (1, 0, 0), (1, 1, 1)))
    assert chain.indices() == [0, 1, 7]
    assert chain.render() == "000,100,111"
    assert len(Chain(((0, 1),))) == 1
    with pytest.raises(CONST.InvalidChainError):
        Chain(((1, 0), (0, 1)))
    with pytest.raises(CONST.InvalidChainError):
        Chain(((1, 0), (1, 0)))
    with pytest.raises(CONST.InvalidChainError):
        Chain(())


def test_precedes():
    assert precedes((0, 1), (1, 1))
    assert not precedes((1, 0), (0, 1))
