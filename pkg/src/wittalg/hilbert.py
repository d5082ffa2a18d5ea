"""Hilbert series: closed forms as rational functions in t, truncated
expansions, and dimensions measured from the algebras themselves.

A closed form is written in the shared expression grammar, for example
``t^5/((1-t)^2*(1-t^2))``.  Measured families are built from the twisted
algebras and the homomorphisms out of U(W+)::

    B       image of phi, generated by u and (u - w)v inside S
    A0, A1  images of lambda_0 and lambda_1 inside R
    Aa      image of lambda_a over Q(a)
    Q, R, S the polynomial-type algebras themselves
    I       the kernel of B -> A(0), z -> 0
    M       uB  intersected with  (u - w)vB
    Mprime  b5 B + b6 B + b7 B
    ker     (ker lambda_a)_n for a given parameter
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .envelope import parse_env
from .morphlab import GENERIC, LAMBDA, PHI, EnvMorphism, kernel_at_degree
from .parsing import parse_expression
from .scalars import RATIONALS, canon_q, nullspace, rref
from .twisted import (AlgElement, GradedSpan, algebra_Q, algebra_R, algebra_S, full_piece,
                      graded_intersection, module_piece, span_generated, span_of, times_span)


class SeriesError(ValueError):
    """The series has no power-series expansion at t = 0."""


class UnknownFamily(KeyError):
    pass


# ---------------------------------------------------------------------------
# rational series

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _scale(a, c):
    return _trim(x * c for x in a)


def _fmt_tpoly(c) -> str:
    parts = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if not x:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(x)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not parts:
            parts.append(("-" if x < 0 else "") + body)
        else:
            parts.append((" - " if x < 0 else " + ") + body)
    return "".join(parts) or "0"


class RationalSeries:
    """num(t)/den(t) with den(0) = 1 once normalised.

    Coefficient tuples run from low to high degree.  Common powers of t are
    cancelled; a denominator that still vanishes at 0 is rejected only when
    an expansion is requested.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _trim(canon_q(Fraction(x)) for x in num)
        den = _trim(canon_q(Fraction(x)) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        while num and den and num[0] == 0 and den[0] == 0:
            num, den = num[1:], den[1:]
        if not num:
            den = (1,)
        elif den[0] != 0 and den[0] != 1:
            c = den[0]
            num = tuple(canon_q(Fraction(x) / c) for x in num)
            den = tuple(canon_q(Fraction(x) / c) for x in den)
        self.num = num
        self.den = den

    # arithmetic ------------------------------------------------------
    @classmethod
    def coerce(cls, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return cls((other,))
        raise TypeError(f"cannot use {other!r} as a series")

    def __add__(self, other):
        o = RationalSeries.coerce(other)
        return RationalSeries(_add(_mul(self.num, o.den), _mul(o.num, self.den)),
                              _mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(_scale(self.num, -1), self.den)

    def __sub__(self, other):
        return self + (-RationalSeries.coerce(other))

    def __rsub__(self, other):
        return RationalSeries.coerce(other) - self

    def __mul__(self, other):
        o = RationalSeries.coerce(other)
        return RationalSeries(_mul(self.num, o.num), _mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalSeries.coerce(other)
        if not o.num:
            raise ZeroDivisionError("division by the zero series")
        return RationalSeries(_mul(self.num, o.den), _mul(self.den, o.num))

    def __rtruediv__(self, other):
        return RationalSeries.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalSeries((1,)) / (self ** -k)
        out = RationalSeries((1,))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = RationalSeries.coerce(other)
        except TypeError:
            return NotImplemented
        return _mul(self.num, o.den) == _mul(o.num, self.den)

    def __hash__(self):
        return hash(tuple(self.expand(12))) if self.den[0] else hash((self.num, self.den))

    def __str__(self):
        num = _fmt_tpoly(self.num)
        if self.den == (1,):
            return num
        return f"({num})/({_fmt_tpoly(self.den)})"

    def __repr__(self):
        return f"RationalSeries({self})"

    def expand(self, N: int) -> list:
        return series_expand(self, N)

    @classmethod
    def parse(cls, text: str) -> "RationalSeries":
        t = cls((0, 1))
        value = parse_expression(text, lambda name: t, lambda name: name == "t")
        return cls.coerce(value)


def series_expand(s: RationalSeries, N: int) -> list:
    """First N + 1 coefficients of s by exact power-series division."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    if not s.den or s.den[0] == 0:
        raise SeriesError(f"denominator of {s} vanishes at t = 0")
    d0 = Fraction(s.den[0])
    out = []
    for n in range(N + 1):
        acc = Fraction(s.num[n]) if n < len(s.num) else Fraction(0)
        for k in range(1, min(n, len(s.den) - 1) + 1):
            acc -= s.den[k] * out[n - k]
        out.append(canon_q(acc / d0))
    return out


# ---------------------------------------------------------------------------
# measured series and comparison

@dataclass(frozen=True)
class MeasuredSeries:
    label: str
    start: int
    coefficients: tuple

    def at(self, n: int) -> int:
        return self.coefficients[n - self.start]

    def __str__(self):
        body = ",".join(str(c) for c in self.coefficients)
        return f"{self.label}: {body} (from degree {self.start})"


@dataclass(frozen=True)
class Verdict:
    match: bool
    first_mismatch: int | None
    measured: tuple
    expected: tuple

    def __bool__(self):
        return self.match


def compare(measured: MeasuredSeries, closed: RationalSeries, offset: int = 0) -> Verdict:
    """Compare measured dimensions with a closed form over the measured range.

    ``offset`` shifts the closed form: measured degree n is compared with
    the coefficient of t^(n - offset).
    """
    top = measured.start + len(measured.coefficients) - 1
    coeffs = series_expand(closed, max(top - offset, 0))
    expected = []
    for n in range(measured.start, top + 1):
        k = n - offset
        expected.append(coeffs[k] if 0 <= k < len(coeffs) else 0)
    first = None
    for i, (m, e) in enumerate(zip(measured.coefficients, expected)):
        if m != e:
            first = measured.start + i
            break
    return Verdict(first is None, first, tuple(measured.coefficients), tuple(expected))


# ---------------------------------------------------------------------------
# the graded families

def _S():
    return algebra_S(RATIONALS)


def b_generators() -> list:
    """u and (u - w)v, the images of e1 and e2 under phi."""
    S = _S()
    return [S.parse("u"), S.parse("(u - w)*v")]


def B_piece(n: int) -> GradedSpan:
    return span_generated(_S(), b_generators(), n)


def A_piece(a, n: int) -> GradedSpan:
    """Degree-n piece of the image of lambda_a (``a`` rational or "generic")."""
    m = EnvMorphism(LAMBDA, a)
    return span_generated(m.target, [m.generator_image(1), m.generator_image(2)], n)


def Q_piece(n: int) -> GradedSpan:
    Q = algebra_Q(RATIONALS)
    return span_generated(Q, [Q.parse("x"), Q.parse("y"), Q.parse("y*z")], n)


def I_piece(n: int) -> GradedSpan:
    """B_n intersected with the kernel of z -> 0."""
    S = _S()
    b = B_piece(n)
    coords = b.monomials
    iz = S.carrier.index("z")
    keep = [i for i, m in enumerate(coords) if m[iz] == 0]
    if not b.basis:
        return b
    if not keep:
        return b
    # combinations of basis rows whose z-free part vanishes
    proj = [[row[i] for row in b.basis] for i in keep]
    ker, _ = nullspace(proj, len(b.basis), RATIONALS)
    zero = RATIONALS.zero
    rows = []
    for vec in ker:
        row = [zero] * len(coords)
        for c, brow in zip(vec, b.basis):
            if c:
                row = [r + c * x for r, x in zip(row, brow)]
        rows.append(row)
    return GradedSpan(S, n, coords, rref(rows, RATIONALS).rows)


@lru_cache(maxsize=None)
def b567() -> tuple:
    """phi(r5), phi(r6), phi(r7)."""
    phi = EnvMorphism(PHI)
    rs = ["e2*(e1^3 - 6*e2*e1 + 12*e1*e2)",
          "e2*(-48*e4 - 36*e1*e3 + e1^4)",
          "e2*(e1^5 - 40*(e2^2*e1 - 3*e2*e1*e2 + 3*e1*e2^2))"]
    return tuple(phi(parse_env(r)) for r in rs)


def _b_span_shifted(g: AlgElement, n: int) -> GradedSpan:
    d = g.degree()
    if n - d < 0:
        return GradedSpan(_S(), n, tuple(_S().basis(n)), [])
    return times_span(g, B_piece(n - d), tuple(_S().basis(n)))


def M_piece(n: int) -> GradedSpan:
    """(uB intersected with (u - w)vB)_n."""
    u, g2 = b_generators()
    return graded_intersection(_b_span_shifted(u, n), _b_span_shifted(g2, n))


def Mprime_piece(n: int) -> GradedSpan:
    return module_piece(_S(), [(b, "right") for b in b567()], b_generators(), n)


def _kernel_dim(a, n: int) -> int:
    if a == PHI:
        return kernel_at_degree(EnvMorphism(PHI), n).dimension
    return kernel_at_degree(EnvMorphism(LAMBDA, a), n).dimension


FAMILIES = ("B", "A0", "A1", "Aa", "Q", "R", "S", "I", "M", "Mprime", "ker")

_STARTS = {"I": 4, "M": 5, "Mprime": 5, "ker": 1}


def measure(label: str, N: int, a=GENERIC) -> MeasuredSeries:
    """Graded dimensions of a named family in degrees start..N.

    ``a`` selects the parameter for ``ker`` (a rational, "generic" or "phi").
    """
    if N < 0:
        raise ValueError("order must be nonnegative")
    if label not in FAMILIES:
        raise UnknownFamily(label)
    start = _STARTS.get(label, 0)
    dims = []
    for n in range(start, N + 1):
        if label == "B":
            d = B_piece(n).dim
        elif label in ("A0", "A1"):
            d = A_piece(int(label[1]), n).dim
        elif label == "Aa":
            d = A_piece(GENERIC, n).dim
        elif label == "Q":
            d = Q_piece(n).dim
        elif label == "R":
            d = full_piece(algebra_R(RATIONALS), n).dim
        elif label == "S":
            d = full_piece(_S(), n).dim
        elif label == "I":
            d = I_piece(n).dim
        elif label == "M":
            d = M_piece(n).dim
        elif label == "Mprime":
            d = Mprime_piece(n).dim
        else:
            d = _kernel_dim(a, n)
        dims.append(d)
    return MeasuredSeries(label, start, tuple(dims))


CLOSED_FORMS = {
    "B": "(1 - t + t^3)/((1 - t)^2*(1 - t^2))",
    "Q": "1/((1 - t)^2*(1 - t^2))",
    "A0": "(1 - t + t^2)/(1 - t)^2",
    "A1": "(1 - t + t^2)/(1 - t)^2",
    "R": "1/(1 - t)^2",
    "S": "1/(1 - t)^3",
    "I": "t^4/((1 - t)^2*(1 - t^2))",
    "M": "t^5/((1 - t)^2*(1 - t^2))",
    "Mprime": "t^5/((1 - t)^2*(1 - t^2))",
}


def closed_form(label: str) -> RationalSeries:
    try:
        return RationalSeries.parse(CLOSED_FORMS[label])
    except KeyError:
        raise UnknownFamily(label) from None


__all__ = [
    "RationalSeries", "SeriesError", "series_expand", "MeasuredSeries", "Verdict", "compare",
    "measure", "closed_form", "CLOSED_FORMS", "FAMILIES", "UnknownFamily",
    "B_piece", "A_piece", "Q_piece", "I_piece", "M_piece", "Mprime_piece", "b567", "b_generators",
]
