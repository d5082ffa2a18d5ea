from fractions import Fraction

import pytest

from wittalg.parsing import ParseError, parse_expression, tokenize


def ev(text, env=None):
    env = env or {"x": 3, "y": Fraction(1, 2)}
    return parse_expression(text, env.__getitem__, env.__contains__)


def test_precedence_and_rationals():
    assert ev("1 + 2*3^2") == 19
    assert ev("-x^2") == -9
    assert ev("2/4") == Fraction(1, 2)
    assert ev("(x - 1)*(y + 1)") == 3


def test_witt_token():
    kinds = [tok for kind, tok in tokenize("e-1*e2 - e0") if kind == "name"]
    assert kinds == ["e-1", "e2", "e0"]


def test_negative_exponent():
    assert ev("y^-2") == 4


@pytest.mark.parametrize("bad", ["", "x +", "2 x", "(x", "x)", "x^y", "q", "1 $ 2"])
def test_errors(bad):
    with pytest.raises(ParseError):
        ev(bad)
