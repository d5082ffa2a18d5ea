import pytest
from hypothesis import given, settings, strategies as st

from wittalg.envelope import (WITT, WPLUS, EnvElement, ModeError, ad_power, bracket, env_basis,
                              env_gen, env_mul, env_vector, free_gen, free_reduce_and_project,
                              parse_env, parse_free, partition_count, straighten)
from wittalg.scalars import ratfunc_field

from .strategies import env_elements, nonzero, small_ints, words


@settings(max_examples=1000, deadline=None)
@given(words(WPLUS, 6))
def test_straightening_confluent_wplus(w):
    assert straighten(w, WPLUS, "left") == straighten(w, WPLUS, "right")


@settings(max_examples=1000, deadline=None)
@given(words(WITT, 5))
def test_straightening_confluent_witt(w):
    assert straighten(w, WITT, "left") == straighten(w, WITT, "right")


@settings(max_examples=1000, deadline=None)
@given(env_elements(), env_elements(), env_elements())
def test_multiplication_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@settings(max_examples=300, deadline=None)
@given(env_elements(WITT), env_elements(WITT), env_elements(WITT))
def test_jacobi(x, y, z):
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert not total


@settings(max_examples=1000, deadline=None)
@given(env_elements(WITT))
def test_env_round_trip(f):
    assert parse_env(str(f), WITT) == f


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(1, 2), max_size=5), nonzero(small_ints)),
                max_size=4))
def test_free_round_trip(terms):
    f = free_gen(1) * 0
    for word, c in terms:
        m = free_gen(1) ** 0
        for i in word:
            m = m * free_gen(i)
        f = f + m * c
    assert parse_free(str(f)) == f


def test_bracket_of_generators():
    for n in range(-1, 4):
        for m in range(-1, 4):
            lhs = bracket(env_gen(n, WITT), env_gen(m, WITT))
            assert lhs == env_gen(n + m, WITT) * (m - n)


def test_basis_is_partitions():
    assert [partition_count(n) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    for n in range(1, 9):
        assert len(env_basis(n)) == partition_count(n)


def test_vector_round_trip():
    f = parse_env("e1*e5 - 4*e2*e4 + 3*e3^2 + 2*e6")
    basis = env_basis(6)
    v = env_vector(f, basis)
    assert sum(1 for x in v if x) == 4


def test_mode_errors():
    with pytest.raises(ModeError):
        straighten([0, 1], WPLUS)
    with pytest.raises(ModeError):
        env_gen(1, WPLUS) * env_gen(1, WITT)
    assert straighten([-2, 5], WITT)


def test_parametric_coefficients():
    f = parse_env("(1 + 2*a)*e1*e4 - a*e5", WPLUS, ratfunc_field("a"))
    assert parse_env(str(f), WPLUS, ratfunc_field("a")) == f
    assert f.specialize(1) == parse_env("3*e1*e4 - e5")


def test_e_minus_one_token():
    f = parse_env("e-1*e2 - e0", WITT)
    assert f == env_gen(-1, WITT) * env_gen(2, WITT) - env_gen(0, WITT)


def test_known_witt_identities():
    g4 = parse_env("e1*e3 - e2^2 - e4", WITT)
    out = ad_power(env_gen(-1, WITT), 3, g4)
    assert str(out) == "12*e-1*e2 - 12*e0*e1 - 12*e1"
    g = parse_env("e1*e5 - 4*e2*e4 + 3*e3^2 + 2*e6", WITT)
    assert ad_power(env_gen(-1, WITT), 4, g) == \
        parse_env("24*e-1*e3 - 96*e0*e2 + 72*e1^2 + 48*e2", WITT)


def test_free_relations_project_to_zero():
    t1, t2 = free_gen(1), free_gen(2)
    q = parse_free("t1^2*t2 - t2*t1^2 - 2*t2^2")
    assert free_reduce_and_project(q) == parse_env("e1*e3 - e2^2 - e4") * 2
    comm = t1 * t2 - t2 * t1
    assert free_reduce_and_project(comm) == env_gen(3)


def test_env_mul_strategy_independent():
    f = parse_env("e3*e1 + e2^2")
    g = parse_env("e4*e1 - e1")
    assert env_mul(f, g, "left") == env_mul(f, g, "right")
