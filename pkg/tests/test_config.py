import pytest

from InversionComplexity.src.code_logic.program_globals import constants as CONST
from InversionComplexity.src.code_logic.program_globals import helpers as HLP


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for key in (CONST.DEBUG_TOKEN, CONST.ARITY_CAP_KEY, CONST.PATTERN_LIMIT_KEY, CONST.OUTPUT_MODE_KEY):
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)


def test_defaults():
    config = HLP.check_input_args(["decrease", "--funcs", "a.funcs"])
    assert isinstance(config, CONST.RunConfig)
    assert config.command == CONST.CMD_DECREASE
    assert config.funcs_path == "a.funcs"
    assert config.basis_path is None
    assert config.arity_cap == CONST.ARITY_CAP
    assert config.pattern_limit == CONST.PATTERN_LIMIT
    assert config.output_mode == CONST.OM.HUMAN
    assert config.t_max is None
    assert not config.debug


def test_flags():
    config = HLP.check_input_args([
        "exact", "--funcs", "a", "--basis", "b", "--t-max", "2",
        "--machine", "--witness", "--out", "w.circuit", "-d"
    ])
    assert config.t_max == 2
    assert config.output_mode == CONST.OM.MACHINE
    assert config.witness
    assert config.out_path == "w.circuit"
    assert config.debug


def test_caps_are_clamped():
    config = HLP.check_input_args([
        "exact", "--arity-cap", "99", "--pattern-limit", "-5", "--t-max", "9"
    ])
    assert config.arity_cap == CONST.HARD_ARITY_CAP
    assert config.pattern_limit == 5
    assert config.t_max == CONST.EXACT_T_MAX_LIMIT


def test_environment(monkeypatch):
    monkeypatch.setenv(CONST.ARITY_CAP_KEY, "6")
    monkeypatch.setenv(CONST.PATTERN_LIMIT_KEY, "not a number")
    monkeypatch.setenv(CONST.OUTPUT_MODE_KEY, "machine")
    monkeypatch.setenv(CONST.DEBUG_TOKEN, "yes")
    config = HLP.check_input_args(["bounds"])
    assert config.arity_cap == 6
    assert config.pattern_limit == CONST.PATTERN_LIMIT
    assert config.output_mode == CONST.OM.MACHINE
    assert config.debug


def test_flags_win_over_environment(monkeypatch):
    monkeypatch.setenv(CONST.ARITY_CAP_KEY, "6")
    assert HLP.check_input_args(["bounds", "--arity-cap", "8"]).arity_cap == 8


def test_dotenv_file(tmp_path):
    (tmp_path / ".env").write_text(f"{CONST.ARITY_CAP_KEY} = '7'\n", encoding="utf-8")
    assert HLP.check_input_args(["bounds"]).arity_cap == 7


def test_unknown_command_exits_with_argparse_status():
    assert HLP.check_input_args(["fly"]) == 2


def test_clamp_cap():
    assert HLP.clamp_cap(5, 10) == 5
    assert HLP.clamp_cap(-5, 10) == 5
    assert HLP.clamp_cap(50, 10) == 10


def test_text_files(tmp_path):
    target = tmp_path / "deep" / "file.txt"
    HLP.write_text_file(str(target), "content")
    assert HLP.read_text_file(str(target)) == "content"
    with pytest.raises(FileNotFoundError):
        HLP.read_text_file(str(tmp_path / "missing"))


def test_clamp_warnings_are_coloured(monkeypatch):
    messages = []
    monkeypatch.setattr(HLP.DISP, "log_warning", messages.append)
    HLP.clamp_cap(-3, 10, "pattern limit")
    HLP.clamp_cap(30, 10, "pattern limit")
    assert len(messages) == 2
    for message in messages:
        assert message.startswith(CONST.WARNING_COLOUR)
        assert message.endswith(CONST.RESET_COLOUR)
        assert "pattern limit" in message
