"""Tests for run configuration."""

from fractions import Fraction

import pytest
from returns.result import Failure, Success

from qflag.harness.config import MAX_N_ENV, QFlagConfig, load_config, parse_q


def test_defaults():
    config = load_config({}).unwrap()
    assert config == QFlagConfig()
    assert config.max_n == 7
    assert config.q0 == Fraction(2)
    assert config.seed == 42
    assert config.samples == 100
    assert not config.parallel


def test_environment_raises_the_cap():
    config = load_config({MAX_N_ENV: "9"}).unwrap()
    assert config.max_n == 9


@pytest.mark.parametrize("raw", ["many", "1", "-3"])
def test_bad_environment_cap(raw):
    assert isinstance(load_config({MAX_N_ENV: raw}), Failure)


def test_overrides_skip_unset_values():
    config = load_config({}, {"q0": "3/2", "seed": None, "workers": 4, "bogus": 1}).unwrap()
    assert config.q0 == Fraction(3, 2)
    assert config.seed == 42
    assert config.workers == 4
    assert config.parallel


@pytest.mark.parametrize(
    "overrides", [{"q0": "1"}, {"q0": "x"}, {"samples": 0}, {"workers": 0}, {"q0": "1/0"}]
)
def test_bad_overrides(overrides):
    assert isinstance(load_config({}, overrides), Failure)


@pytest.mark.parametrize(("text", "value"), [("2", Fraction(2)), (" -3/4 ", Fraction(-3, 4))])
def test_parse_q(text, value):
    assert parse_q(text) == Success(value)


@pytest.mark.parametrize("text", ["0", "-1", "q"])
def test_parse_q_rejects(text):
    assert isinstance(parse_q(text), Failure)


def test_heavy_threshold():
    config = QFlagConfig()
    assert not config.algebraic_heavy(5)
    assert config.algebraic_heavy(6)


def test_dict_encoding():
    config = QFlagConfig(q0=Fraction(-5, 3), workers=2)
    data = config.to_dict()
    assert data["q0"] == "-5/3"
    assert QFlagConfig.from_dict(data) == config
