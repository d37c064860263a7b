"""Error handler chains and exit codes"""

import pytest

from tomkit.error_handler import (
    EXIT_FAIL,
    EXIT_USAGE,
    build_error_handler_chain,
    exit_code_for,
)
from tomkit.exceptions import (
    CatalogSyntaxError,
    InputError,
    MarksFormatError,
    UnknownGroup,
    VerificationFailed,
)


def test_empty_chain_is_none():
    assert build_error_handler_chain([]) is None


def test_chain_runs_in_registration_order():
    calls = []

    def first(error):
        calls.append("first")
        raise InputError(f"first [{error}]")

    def second(error):
        calls.append("second")
        return str(error)

    chain = build_error_handler_chain([first, second])
    assert chain is not None
    assert chain(UnknownGroup("x")) == "first [x]"
    assert calls == ["first", "second"]


def test_last_handler_reraise_escapes():
    def passthrough(error):
        raise error

    chain = build_error_handler_chain([passthrough, passthrough])
    assert chain is not None
    with pytest.raises(UnknownGroup):
        chain(UnknownGroup("x"))


@pytest.mark.parametrize(
    "error, code",
    [
        (VerificationFailed("G1 and G2", pair=(1, 2)), EXIT_FAIL),
        (UnknownGroup("missing"), EXIT_USAGE),
        (CatalogSyntaxError("bad token", 3), EXIT_USAGE),
        (MarksFormatError("empty"), EXIT_USAGE),
        (FileNotFoundError("order_64.txt"), EXIT_USAGE),
        (ValueError("bad value"), EXIT_USAGE),
    ],
)
def test_exit_code_for(error, code):
    assert exit_code_for(error) == code


def test_exit_code_for_reraises_programming_errors():
    with pytest.raises(KeyError):
        exit_code_for(KeyError("bug"))


def test_catalog_syntax_error_carries_line_number():
    error = CatalogSyntaxError("bad token", 7)
    assert error.line_number == 7
    assert str(error) == "line 7: bad token"
