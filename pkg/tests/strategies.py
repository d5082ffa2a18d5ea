"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from wittalg.envelope import WITT, WPLUS, EnvElement
from wittalg.scalars import RatFunc

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))


@st.composite
def ratfuncs(draw, max_deg=2):
    num = draw(st.lists(small_ints, min_size=0, max_size=max_deg + 1))
    den = draw(st.lists(small_ints, min_size=1, max_size=max_deg + 1))
    if not any(den):
        den = [1]
    return RatFunc(tuple(num), tuple(den))


def nonzero(s):
    return s.filter(bool)


@st.composite
def poly_terms(draw, nvars, max_exp=3, max_terms=4):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        m = tuple(draw(st.integers(0, max_exp)) for _ in range(nvars))
        terms[m] = draw(rationals)
    return terms


@st.composite
def homogeneous_terms(draw, nvars, degree, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        cuts = sorted(draw(st.integers(0, degree)) for _ in range(nvars - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
        terms[tuple(parts)] = draw(nonzero(small_ints))
    return terms


def words(mode=WPLUS, max_len=5):
    lo = -1 if mode == WITT else 1
    return st.lists(st.integers(lo, 4), min_size=0, max_size=max_len)


@st.composite
def env_elements(draw, mode=WPLUS, max_terms=3, max_len=3):
    out = EnvElement(mode, {})
    for _ in range(draw(st.integers(0, max_terms))):
        w = draw(words(mode, max_len))
        c = draw(nonzero(small_ints))
        from wittalg.envelope import straighten
        out = out + straighten(w, mode).scale(c)
    return out
