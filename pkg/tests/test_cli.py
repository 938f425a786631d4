import json

import pytest

from regsym.cli import build_parser, run
from regsym.models.options import Tolerances
from regsym.models.types import format_float
from regsym.utils.arguments import options_from_args


@pytest.mark.parametrize(
    ("symbol", "code"),
    [
        ("xi^2 + x^2", 0),
        ("xi - x + 1", 1),
        ("xi", 1),
        ("(xi - x)^2", 2),
    ],
)
def test_analyze_exit_codes(symbol, code, capsys):
    assert run(["analyze", symbol]) == code
    assert "decision:" in capsys.readouterr().out


def test_analyze_json(capsys):
    assert run(["analyze", "xi - x + i", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "regsym/1"
    assert data["verdict"]["decision"] == "Regular"
    assert data["verdict"]["path"] == "TheoremGeneral"


def test_single_direction_flag(capsys):
    assert run(["analyze", "xi - x + i", "--direction", "plus"]) == 2
    assert "both directions" in capsys.readouterr().out


def test_left_quantization_flag(capsys):
    assert run(["analyze", "xi^2 + x*xi + x^2 - 1/2*i", "--quantization", "left"]) == 0
    assert "left quantization" in capsys.readouterr().out


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["analyze"],
        ["analyze", "xi", "--direction", "sideways"],
        ["analyze", "xi", "--depth", "one"],
        ["unknown"],
    ],
)
def test_usage_errors(args):
    assert run(args) == 3


@pytest.mark.parametrize(
    ("args", "message"),
    [
        (["analyze", "2x"], "error: "),
        (["analyze", "xi", "--depth", "-1/2"], "depth must be <= -1"),
        (["fixtures", "/nonexistent/fixtures.json"], "cannot read"),
        (["selftest", "--cases", "-1"], "--cases"),
    ],
)
def test_engine_errors(args, message, capsys):
    assert run(args) == 3
    assert message in capsys.readouterr().err


def test_fixtures_command(capsys):
    assert run(["fixtures"]) == 0
    assert "15 run, 15 passed, 0 failed" in capsys.readouterr().out


def test_selftest_command(capsys):
    assert run(["selftest", "--cases", "2", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "case digest:" in out
    assert "all properties hold" in out


def test_parser_has_three_commands():
    parser = build_parser()
    assert parser.prog == "regsym"
    assert parser.parse_args(["selftest"]).command == "selftest"
    assert parser.parse_args(["fixtures"]).path is None


@pytest.mark.parametrize(("depth", "expected"), [("-5/2", "-5/2"), ("-3", "-3/1"), ("-9/4", "-9/4")])
def test_depth_accepts_negative_rationals_as_separate_values(depth, expected, capsys):
    assert run(["analyze", "xi", "--depth", depth, "--json"]) == 1
    assert json.loads(capsys.readouterr().out)["depth"] == expected


def test_depth_with_equals_sign():
    assert run(["analyze", "xi", "--depth=-5/2"]) == 1


@pytest.mark.parametrize(
    ("flag", "field", "value"),
    [
        ("--precision", "precision", 1e-10),
        ("--im-tol", "im_tol", 1e-7),
        ("--lambda-tol", "lambda_tol", 1e-6),
        ("--cluster-tol", "cluster_tol", 1e-6),
        ("--zero-tol", "zero_tol", 1e-9),
        ("--residual-slack", "residual_slack", 0.5),
        ("--slope-cap", "slope_cap", 80.0),
    ],
)
def test_tolerance_flags_reach_engine_options(flag, field, value):
    parsed = build_parser().parse_args(["analyze", "xi", flag, str(value)])
    tolerances = options_from_args(parsed).tolerances
    assert getattr(tolerances, field) == value
    defaults = Tolerances()
    others = [name for name in Tolerances.model_fields if name != field]
    assert all(getattr(tolerances, name) == getattr(defaults, name) for name in others)


def test_tolerance_flags_are_echoed_in_the_report(capsys):
    assert run(["analyze", "xi - x + i", "--cluster-tol", "1e-6", "--slope-cap", "80", "--json"]) == 0
    tolerances = json.loads(capsys.readouterr().out)["tolerances"]
    assert tolerances["cluster_tol"] == format_float(1e-6)
    assert tolerances["slope_cap"] == format_float(80.0)
    assert tolerances["lambda_tol"] == format_float(1e-8)


def test_zero_symbol_is_an_engine_error(capsys):
    assert run(["analyze", "x*xi - xi*x"]) == 3
    assert "the symbol is zero" in capsys.readouterr().err
