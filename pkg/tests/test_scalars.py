from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wittalg.scalars import (RATIONALS, DomainError, FieldMismatch, RatFunc, format_rational,
                             nullspace, parametric_obstruction, parse_rational, rank,
                             ratfunc_eval, ratfunc_field, solve, split_rational_roots)

from .strategies import nonzero, ratfuncs, rationals

QA = ratfunc_field("a")


@settings(max_examples=1000, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms_ratfunc(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1


@settings(max_examples=1000, deadline=None)
@given(rationals, rationals)
def test_rational_text_round_trip(p, q):
    for x in (p, q, p * q):
        assert parse_rational(format_rational(x)) == x


@given(ratfuncs(), ratfuncs())
def test_ratfunc_hash_matches_equality(x, y):
    if x == y:
        assert hash(x) == hash(y)


@given(ratfuncs(), rationals)
def test_evaluation_is_a_homomorphism(x, a0):
    y = x * x + x
    try:
        vx = ratfunc_eval(x, a0)
    except ArithmeticError:
        return
    assert ratfunc_eval(y, a0) == vx * vx + vx


def test_canonical_form():
    r = RatFunc((2, 2), (4, 4))
    assert r == Fraction(1, 2) and r.num == (1,) and r.den == (2,)
    assert str(RatFunc((0, 1), (2,))) == "a/2"
    assert RatFunc.constant(Fraction(3, 4)).constant_value() == Fraction(3, 4)


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(DomainError):
        parse_rational("1/0")
    assert parse_rational("-6/4") == Fraction(-3, 2)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        RatFunc.variable("a") + RatFunc.variable("b")


def test_pole_on_evaluation():
    with pytest.raises(ArithmeticError):
        ratfunc_eval(RatFunc((1,), (-1, 1)), 1)


def test_nullspace_and_solve():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    basis, _ = nullspace(rows, 3)
    assert len(basis) == 1
    for v in basis:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in rows)
    assert solve(rows, [1, 2, 1]) is not None
    assert solve(rows, [1, 3, 1]) is None
    assert rank(rows) == 2


def test_rank_drops_at_special_parameter():
    a = QA.gen()
    rows = [[1, a], [a, 1]]
    assert rank(rows, QA) == 2
    spec = [[ratfunc_eval(QA.coerce(x), 1) for x in r] for r in rows]
    assert rank(spec) == 1


def test_parametric_obstruction_finds_solvable_values():
    a = QA.gen()
    # x = 1 together with 0 = (a - 2)(a - 3)
    rows = [[QA.coerce(1)], [QA.coerce(0)]]
    rhs = [QA.coerce(1), (a - 2) * (a - 3)]
    ob, _ = parametric_obstruction(rows, rhs, QA)
    roots, rest = split_rational_roots(ob)
    assert sorted(roots) == [2, 3] and rest == (1,)
    ob2, _ = parametric_obstruction(rows, [QA.coerce(1), QA.coerce(0)], QA)
    assert ob2 == ()


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_nullspace_vectors_are_killed(rows):
    basis, _ = nullspace(rows, 4)
    assert len(basis) + rank(rows) == 4
    for v in basis:
        for r in rows:
            assert sum(Fraction(x) * y for x, y in zip(r, v)) == 0
