"""Exact scalars and dense exact linear algebra.

Two coefficient fields are supported:

* the rationals, realised by Python's ``int`` / ``fractions.Fraction``
  (integral values are kept as ``int`` for speed);
* ``QQ(a)``, rational functions in one parameter, realised by :class:`RatFunc`.

Row reduction is Gauss-Jordan over whichever field is in use.  Over ``QQ(a)``
the pivot chosen in each column is a constant whenever one is available; every
non-constant pivot is recorded, since the computation is only valid at
specialisations where those pivots do not vanish.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

try:  # optional accelerator for large matrices over QQ
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None


class DomainError(ZeroDivisionError):
    """Division by zero in a scalar field."""


class FieldMismatch(TypeError):
    """Operands live in different scalar fields."""


class PoleError(ArithmeticError):
    """A rational function was evaluated at a pole."""

    def __init__(self, point):
        super().__init__(f"pole at a = {point}")
        self.point = point


# ---------------------------------------------------------------------------
# rationals

def canon_q(x):
    """Return ``x`` as an int when integral, else as a Fraction."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return canon_q(Fraction(x.numerator, x.denominator))
    raise FieldMismatch(f"{x!r} is not a rational number")


def parse_rational(text: str):
    """Parse ``p`` or ``p/q``; a zero denominator raises DomainError."""
    text = text.strip()
    if "/" in text:
        p, q = text.split("/", 1)
        q = int(q)
        if q == 0:
            raise DomainError(f"zero denominator in {text!r}")
        return canon_q(Fraction(int(p), q))
    return int(text)


def format_rational(x) -> str:
    x = canon_q(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# dense univariate integer polynomials, coefficient tuples low -> high

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _psub(p, q):
    return _padd(p, _pneg(q))


def _pmul(p, q):
    if not p or not q:
        return ()
    if len(q) == 1:
        c = q[0]
        return tuple(a * c for a in p)
    if len(p) == 1:
        c = p[0]
        return tuple(c * b for b in q)
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _content(p):
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def _primitive(p):
    """Primitive part with positive leading coefficient."""
    if not p:
        return ()
    c = _content(p)
    if p[-1] < 0:
        c = -c
    return tuple(a // c for a in p)


def _prem(f, g):
    """Pseudo-remainder of f by g."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lg for c in r]
        for i, c in enumerate(g):
            r[i + shift] -= lr * c
        r = list(_trim(r))
    return tuple(r)


def _pgcd(f, g):
    """Primitive gcd (positive leading coefficient) of integer polynomials."""
    if not f:
        return _primitive(g) if g else ()
    if not g:
        return _primitive(f)
    if len(f) == 1 or len(g) == 1:
        return (1,)
    f, g = _primitive(f), _primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, (_primitive(r) if r else ())
    return _primitive(f)


def _pdiv_exact(f, g):
    """f / g over ZZ, assuming g primitive and g | f in QQ[a]."""
    if len(g) == 1:
        c = g[0]
        out = []
        for a in f:
            q, rem = divmod(a, c)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            out.append(q)
        return tuple(out)
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    q = [0] * max(len(f) - dg, 0)
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        coef, rem = divmod(r[-1], lg)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = coef
        for i, c in enumerate(g):
            r[i + shift] -= coef * c
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _pderiv(p):
    return _trim(tuple(i * c for i, c in enumerate(p))[1:])


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pformat(p, var: str) -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def squarefree_part(p):
    """Squarefree part of an integer polynomial, primitive, positive lead."""
    p = _primitive(_trim(p))
    if len(p) <= 1:
        return (1,)
    g = _pgcd(p, _pderiv(p))
    return _primitive(_pdiv_exact(p, g))


def _divisors(n):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def rational_roots(p) -> list:
    """Distinct rational roots of an integer polynomial, ascending."""
    p = _trim(p)
    roots = set()
    if not p:
        raise ValueError("zero polynomial has every root")
    while p and p[0] == 0:
        roots.add(0)
        p = p[1:]
    if len(p) > 1:
        for num in _divisors(p[0]):
            for den in _divisors(p[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if _peval(p, cand) == 0:
                        roots.add(canon_q(cand))
    return sorted(roots)


def split_rational_roots(p):
    """Return (rational roots, remaining primitive cofactor) of squarefree p."""
    p = squarefree_part(p)
    roots = rational_roots(p)
    rest = p
    for r in roots:
        r = Fraction(r)
        rest = _pdiv_exact(rest, _primitive((-r.numerator, r.denominator)))
    return roots, _primitive(rest)


# ---------------------------------------------------------------------------
# QQ(a)

class RatFunc:
    """Element of QQ(a), stored as a reduced quotient of integer polynomials.

    Canonical form: gcd(num, den) = 1 over QQ[a]; den has positive leading
    coefficient; the integer contents of num and den are coprime.  Zero is 0/1.
    """

    __slots__ = ("num", "den", "param", "_hash")

    def __init__(self, num=(), den=(1,), param: str = "a", _canonical: bool = False):
        num = tuple(num)
        den = tuple(den)
        if not _canonical:
            num, den = _normalize(_trim(num), _trim(den))
        self.num = num
        self.den = den
        self.param = param
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c, param: str = "a") -> "RatFunc":
        c = Fraction(c)
        return cls((c.numerator,), (c.denominator,), param)

    @classmethod
    def variable(cls, param: str = "a") -> "RatFunc":
        return cls((0, 1), (1,), param, _canonical=True)

    @classmethod
    def from_poly(cls, coeffs: Sequence, param: str = "a") -> "RatFunc":
        """Build from rational coefficients listed low -> high."""
        fr = [Fraction(c) for c in coeffs]
        lcm = 1
        for c in fr:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return cls(tuple(int(c * lcm) for c in fr), (lcm,), param)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.param != self.param:
                raise FieldMismatch(f"QQ({self.param}) vs QQ({other.param})")
            return other
        if isinstance(other, int):
            return RatFunc((other,) if other else (), (1,), self.param, _canonical=True)
        if isinstance(other, Rational):
            return RatFunc.constant(other, self.param)
        return NotImplemented

    # predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if not self.num:
            return 0
        return canon_q(Fraction(self.num[0], self.den[0]))

    def degree(self) -> int:
        """Sum of numerator and denominator degrees (a complexity measure)."""
        return max(len(self.num) - 1, 0) + len(self.den) - 1

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == (1,) and other.den == (1,):
            return RatFunc(_padd(self.num, other.num), (1,), self.param, _canonical=True)
        if self.den == other.den:
            return RatFunc(_padd(self.num, other.num), self.den, self.param)
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
            self.param,
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, self.param, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc((), (1,), self.param, _canonical=True)
        if self.den == (1,) and other.den == (1,):
            return RatFunc(_pmul(self.num, other.num), (1,), self.param, _canonical=True)
        # cross-cancel before multiplying keeps the gcds small
        g1 = _pgcd(self.num, other.den) if len(other.den) > 1 else (1,)
        g2 = _pgcd(other.num, self.den) if len(self.den) > 1 else (1,)
        n1 = _pdiv_exact(self.num, g1) if g1 != (1,) else self.num
        d2 = _pdiv_exact(other.den, g1) if g1 != (1,) else other.den
        n2 = _pdiv_exact(other.num, g2) if g2 != (1,) else other.num
        d1 = _pdiv_exact(self.den, g2) if g2 != (1,) else self.den
        return RatFunc(_pmul(n1, n2), _pmul(d1, d2), self.param)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DomainError("inverse of zero in QQ(%s)" % self.param)
        return RatFunc(self.den, self.num, self.param)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc((1,), (1,), self.param, _canonical=True)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.param == other.param and self.num == other.num and self.den == other.den
        if isinstance(other, Rational):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den, self.param))
        return self._hash

    # evaluation / display ----------------------------------------------
    def evaluate(self, a0):
        """Exact value at the rational point ``a0``; PoleError at a pole."""
        a0 = Fraction(a0)
        d = _peval(self.den, a0)
        if d == 0:
            raise PoleError(canon_q(a0))
        return canon_q(Fraction(_peval(self.num, a0)) / d)

    def __str__(self):
        num = _pformat(self.num, self.param)
        if self.den == (1,):
            return num
        if len(self.den) == 1:
            if len(self.num) <= 1:
                return format_rational(self.constant_value())
            single = sum(1 for c in self.num if c) == 1
            return f"{num}/{self.den[0]}" if single else f"({num})/{self.den[0]}"
        wrap = num if len([c for c in self.num if c]) == 1 and self.num[-1] > 0 else f"({num})"
        return f"{wrap}/({_pformat(self.den, self.param)})"

    def __repr__(self):
        return f"RatFunc({self})"

    def needs_parens(self) -> bool:
        """True when printing as a coefficient needs surrounding parentheses."""
        if self.is_constant():
            return False
        return len(self.den) > 1 or sum(1 for c in self.num if c) > 1


def _normalize(num, den):
    if not den:
        raise DomainError("zero denominator")
    if not num:
        return (), (1,)
    if len(den) > 1 and len(num) > 1:
        g = _pgcd(num, den)
        if g != (1,):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
    elif len(den) > 1 and len(num) == 1:
        pass
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    c = math.gcd(_content(num), _content(den))
    if c > 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


def ratfunc_eval(r, a0):
    """Evaluate a scalar at ``a = a0``; rationals pass through unchanged."""
    if isinstance(r, RatFunc):
        return r.evaluate(a0)
    return canon_q(r)


# ---------------------------------------------------------------------------
# fields

@dataclass(frozen=True)
class ScalarField:
    """Either the rationals (``param is None``) or QQ(param)."""

    param: str | None = None

    @property
    def is_parametric(self) -> bool:
        return self.param is not None

    @property
    def zero(self):
        return RatFunc((), (1,), self.param, _canonical=True) if self.param else 0

    @property
    def one(self):
        return RatFunc((1,), (1,), self.param, _canonical=True) if self.param else 1

    def gen(self) -> RatFunc:
        if not self.param:
            raise FieldMismatch("QQ has no parameter")
        return RatFunc.variable(self.param)

    def coerce(self, x):
        if self.param is None:
            if isinstance(x, RatFunc):
                if x.is_constant():
                    return x.constant_value()
                raise FieldMismatch(f"{x} is not in QQ")
            return canon_q(x)
        if isinstance(x, RatFunc):
            if x.param != self.param:
                raise FieldMismatch(f"QQ({x.param}) vs QQ({self.param})")
            return x
        return RatFunc.constant(canon_q(x), self.param)

    def contains(self, x) -> bool:
        if isinstance(x, RatFunc):
            return x.param == self.param or (self.param is None and x.is_constant())
        return isinstance(x, Rational)

    def is_constant(self, x) -> bool:
        return not isinstance(x, RatFunc) or x.is_constant()

    def complexity(self, x) -> int:
        if isinstance(x, RatFunc):
            return x.degree()
        return 0

    def inv(self, x):
        return self.coerce(_inv(self.coerce(x)))

    def div(self, x, y):
        return self.coerce(self.coerce(x) * _inv(self.coerce(y)))

    def specialize(self, x, a0):
        return ratfunc_eval(x, a0)

    def format(self, x) -> str:
        if isinstance(x, RatFunc):
            return str(x)
        return format_rational(x)

    def __str__(self):
        return "QQ" if self.param is None else f"QQ({self.param})"


RATIONALS = ScalarField()


def ratfunc_field(param: str = "a") -> ScalarField:
    return ScalarField(param)


def field_of(*values) -> ScalarField:
    """The smallest supported field containing all ``values``."""
    param = None
    for v in values:
        if isinstance(v, RatFunc) and not v.is_constant():
            if param is not None and v.param != param:
                raise FieldMismatch(f"QQ({param}) vs QQ({v.param})")
            param = v.param
    return ScalarField(param)


def scalar_arith(op: str, x, y=None):
    """Apply ``op`` in {add, mul, neg, inv, eq} to scalars of one field."""
    fld = field_of(x) if y is None else field_of(x, y)
    x = fld.coerce(x)
    if y is not None:
        y = fld.coerce(y)
    if op == "add":
        return fld.coerce(x + y)
    if op == "mul":
        return fld.coerce(x * y)
    if op == "neg":
        return fld.coerce(-x)
    if op == "inv":
        if not x:
            raise DomainError("inverse of zero")
        return fld.coerce(x.inverse() if isinstance(x, RatFunc) else Fraction(1) / x)
    if op == "eq":
        return x == y
    raise ValueError(f"unknown scalar operation {op!r}")


def _inv(x):
    if isinstance(x, RatFunc):
        return x.inverse()
    if x == 0:
        raise DomainError("inverse of zero")
    return canon_q(Fraction(1) / x) if isinstance(x, int) else canon_q(1 / x)


# ---------------------------------------------------------------------------
# matrices and row reduction

@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple
    field: ScalarField = RATIONALS

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: ScalarField | None = None,
                  cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if field is None:
            field = field_of(*(x for r in rows for x in r))
        ncols = len(rows[0]) if rows else (cols or 0)
        entries = tuple(field.coerce(x) for r in rows for x in r)
        return cls(len(rows), ncols, entries, field)

    def to_rows(self) -> list[list]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        rows = self.to_rows()
        return ExactMatrix.from_rows([list(col) for col in zip(*rows)] if rows else [],
                                     self.field, cols=self.rows)

    def specialize(self, a0) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols,
                           tuple(ratfunc_eval(x, a0) for x in self.entries), RATIONALS)

    def rank(self) -> int:
        return len(rref(self.to_rows(), self.field).pivot_cols)

    def __matmul__(self, vec):
        rows = self.to_rows()
        return [sum((a * b for a, b in zip(r, vec)), self.field.zero) for r in rows]


@dataclass
class RowReduction:
    rows: list            # nonzero rows of the reduced echelon form
    pivot_cols: list
    pivot_values: list = dc_field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


FLINT_THRESHOLD = 600


def rref(rows: Sequence[Sequence], field: ScalarField = RATIONALS, *,
         pivot_limit: int | None = None, accelerate: bool = True) -> RowReduction:
    """Reduced row echelon form.

    Pivots are only taken in the first ``pivot_limit`` columns (all columns by
    default); later columns are carried along as augmented data.  Over QQ,
    sufficiently large matrices are reduced with python-flint when available;
    pivot values are not reported on that path.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return RowReduction([], [], [])
    ncols = len(rows[0])
    limit = ncols if pivot_limit is None else pivot_limit
    if (accelerate and flint is not None and not field.is_parametric
            and limit == ncols and len(rows) * ncols >= FLINT_THRESHOLD):
        return _rref_flint(rows, ncols)
    return _rref_python(rows, ncols, limit, field)


def _rref_python(rows, ncols, limit, field):
    parametric = field.is_parametric
    pivot_cols, pivot_values = [], []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r == nrows:
            break
        best = None
        best_key = None
        for i in range(r, nrows):
            x = rows[i][c]
            if x:
                if not parametric:
                    best = i
                    break
                key = field.complexity(x)
                if best is None or key < best_key:
                    best, best_key = i, key
                    if key == 0:
                        break
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        pivot_values.append(piv)
        pivot_cols.append(c)
        if piv != 1:
            inv = _inv(piv)
            rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        r += 1
    out = [row for row in rows[:r]]
    if not parametric:
        out = [[canon_q(x) for x in row] for row in out]
    return RowReduction(out, pivot_cols, pivot_values)


def _to_fmpq(x):
    if isinstance(x, int):
        return flint.fmpq(x)
    return flint.fmpq(x.numerator, x.denominator)


def _from_fmpq(e):
    p, q = int(e.p), int(e.q)
    return p if q == 1 else Fraction(p, q)


def _rref_flint(rows, ncols):
    m = flint.fmpq_mat(len(rows), ncols, [_to_fmpq(x) for row in rows for x in row])
    red, rank = m.rref()
    out, pivots = [], []
    for i in range(rank):
        row = [_from_fmpq(red[i, j]) for j in range(ncols)]
        pivots.append(next(j for j, x in enumerate(row) if x))
        out.append(row)
    return RowReduction(out, pivots, [])


def row_space(rows: Sequence[Sequence], field: ScalarField = RATIONALS) -> list:
    """Reduced echelon basis of the span of ``rows``."""
    return rref(rows, field).rows


def rank(rows: Sequence[Sequence], field: ScalarField = RATIONALS) -> int:
    return rref(rows, field).rank


def nullspace(rows: Sequence[Sequence], ncols: int, field: ScalarField = RATIONALS,
              *, accelerate: bool = True):
    """Right nullspace basis of the matrix ``rows`` with ``ncols`` columns.

    Returns (basis, reduction); the basis is itself in reduced echelon form.
    """
    red = rref(rows, field, accelerate=accelerate) if rows else RowReduction([], [], [])
    pivset = set(red.pivot_cols)
    raw = []
    for f in range(ncols):
        if f in pivset:
            continue
        vec = [field.zero] * ncols
        vec[f] = field.one
        for row, pc in zip(red.rows, red.pivot_cols):
            if row[f]:
                vec[pc] = -row[f]
        raw.append(vec)
    basis = rref(raw, field, accelerate=accelerate).rows if raw else []
    return basis, red


@dataclass
class NullspaceResult:
    basis: list
    pivots: list
    rank: int
    excluded: list       # squarefree integer polynomials (coefficients low -> high)

    def excluded_roots(self) -> list:
        roots = set()
        for f in self.excluded:
            roots.update(rational_roots(f))
        return sorted(roots)

    def excluded_strings(self, param: str = "a") -> list:
        return [_pformat(f, param) for f in self.excluded]


def _merge_factor(factors: list, poly) -> None:
    """Add the squarefree factors of ``poly`` not already present; rational
    linear factors are split off individually."""
    p = squarefree_part(poly)
    if len(p) <= 1:
        return
    roots, rest = split_rational_roots(p)
    pieces = [_primitive((-Fraction(r).numerator, Fraction(r).denominator)) for r in roots]
    if len(rest) > 1:
        pieces.append(rest)
    for piece in pieces:
        for f in factors:
            g = _pgcd(piece, f)
            if len(g) > 1:
                piece = _primitive(_pdiv_exact(piece, g))
                if len(piece) <= 1:
                    break
        if len(piece) > 1:
            factors.append(piece)


def exceptional_factors(values: Iterable) -> list:
    """Squarefree factors whose roots make some of ``values`` vanish or blow up."""
    factors: list = []
    for x in values:
        if isinstance(x, RatFunc) and not x.is_constant():
            _merge_factor(factors, x.num)
            _merge_factor(factors, x.den)
    return sorted(factors, key=lambda f: (len(f), f))


def exact_nullspace(m: ExactMatrix) -> NullspaceResult:
    """Right nullspace of ``m`` with pivot bookkeeping.

    Over QQ(a) the ``excluded`` list holds the squarefree polynomial factors
    at whose roots a pivot vanishes (or an input entry has a pole); outside
    those roots the reported basis specialises correctly.
    """
    rows = m.to_rows()
    basis, red = nullspace(rows, m.cols, m.field, accelerate=False)
    excluded = []
    if m.field.is_parametric:
        poles = [RatFunc((1,), x.den, x.param) for x in m.entries
                 if isinstance(x, RatFunc) and len(x.den) > 1]
        excluded = exceptional_factors(list(red.pivot_values) + poles)
    return NullspaceResult(basis, list(red.pivot_values), red.rank, excluded)


def solve(rows: Sequence[Sequence], rhs: Sequence, field: ScalarField = RATIONALS):
    """A solution x of ``rows @ x = rhs`` with free variables set to 0, or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [[field.coerce(x) for x in r] + [field.coerce(b)] for r, b in zip(rows, rhs)]
    work, pivots, _ = _eliminate_all(aug, ncols, field)
    if any(row[ncols] for row in work[len(pivots):]):
        return None
    x = [field.zero] * ncols
    for row, pc in zip(work, pivots):
        x[pc] = row[ncols]
    return x


def parametric_obstruction(rows: Sequence[Sequence], rhs: Sequence, field: ScalarField):
    """Analyse solvability of ``rows @ x = rhs`` over QQ(a).

    Returns (obstruction, pivot_factors): ``obstruction`` is the primitive gcd
    of the numerators of the residual right-hand side after eliminating, so the
    system is solvable at a specialisation a0 avoiding the pivot factors iff
    a0 is a root of ``obstruction``.  An obstruction of ``()`` means the system
    is solvable generically.
    """
    ncols = len(rows[0])
    aug = [[field.coerce(x) for x in r] + [field.coerce(b)] for r, b in zip(rows, rhs)]
    work, pivots, values = _eliminate_all(aug, ncols, field)
    g = ()
    for row in work[len(pivots):]:
        x = row[ncols]
        if x:
            num = x.num if isinstance(x, RatFunc) else (Fraction(x).numerator,)
            g = _pgcd(g, num) if g else _primitive(num)
    return g, exceptional_factors(values)


def _eliminate_all(aug, ncols, field):
    """Gauss-Jordan on the first ``ncols`` columns, keeping zero rows.

    Returns (rows, pivot_cols, pivot_values).
    """
    rows = [list(r) for r in aug]
    nrows = len(rows)
    pivots, values = [], []
    r = 0
    for c in range(ncols):
        best, best_key = None, None
        for i in range(r, nrows):
            x = rows[i][c]
            if x:
                key = field.complexity(x)
                if best is None or key < best_key:
                    best, best_key = i, key
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        values.append(rows[r][c])
        inv = _inv(rows[r][c])
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots, values


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], field: ScalarField = RATIONALS) -> list:
    """Matrix product of row lists; uses python-flint over QQ when sizeable."""
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    if (flint is not None and not field.is_parametric
            and len(a) * inner * ncols >= 20000):
        ma = flint.fmpq_mat(len(a), inner, [_to_fmpq(x) for row in a for x in row])
        mb = flint.fmpq_mat(inner, ncols, [_to_fmpq(x) for row in b for x in row])
        prod = ma * mb
        return [[_from_fmpq(prod[i, j]) for j in range(ncols)] for i in range(len(a))]
    zero = field.zero
    out = []
    for row in a:
        acc = [zero] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def format_poly_in_param(p, param: str = "a") -> str:
    return _pformat(p, param)
