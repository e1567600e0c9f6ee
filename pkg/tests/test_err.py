"""Errors and warnings."""


import click
import pytest

from qsphere.errors import (
    ConfigFileError, DivisionByZero, NegativeWordPower, PolySyntaxError,
    QSphereError, UnknownGenerator)
from qsphere.parser import parse_poly


def test_syntax_error_attributes():
    err = PolySyntaxError("Unexpected '*'", "z0 + * z1", 5)
    assert err.text == "z0 + * z1"
    assert err.offset == 5
    assert str(err) == "Unexpected '*' (at position 5)"


def test_parser_errors_share_a_base():
    assert issubclass(UnknownGenerator, PolySyntaxError)
    assert issubclass(NegativeWordPower, PolySyntaxError)
    with pytest.raises(QSphereError):
        parse_poly("z9")


def test_division_by_zero_is_zero_division():
    assert issubclass(DivisionByZero, ZeroDivisionError)
    assert issubclass(DivisionByZero, QSphereError)


def test_config_file_error():
    err = ConfigFileError('qs.json', "Not a JSON object")
    assert isinstance(err, click.FileError)
    assert err.exit_code == 2
    assert "Not a JSON object" in err.format_message()
