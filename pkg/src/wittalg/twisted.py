"""Zhang-twisted graded algebras and their finite-dimensional graded subspaces.

A :class:`TwistedAlgebra` is a commutative polynomial ring ``L`` together with
a graded automorphism ``mu``; its product is ``f * g = f . mu^i(g)`` for ``f``
homogeneous of degree ``i``.  The algebras used throughout the package are
built by the factories at the bottom of the module:

* ``S = k[x,y,z]^mu`` with ``mu: x -> x - y``, fixing ``y`` and ``z``;
* ``R = k[x,y]^nu`` with ``nu: x -> x - y``, fixing ``y``;
* ``Q = k[x,y,yz]^mu``, stored inside ``k[x,y,z]`` with a membership predicate;
* ``S_hat`` and ``R_hat``, the same twists with ``y`` inverted.

The generators ``u, v, w`` of these algebras correspond to ``x, y, z``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

from .commpoly import (MonomialSubring, Poly, PolyRing, RingMap, graded_component_basis,
                       identity_map)
from .parsing import ParseError, parse_expression
from .scalars import RATIONALS, ScalarField, matmul, nullspace, rref, solve


class AlgebraMismatch(TypeError):
    """Elements from different twisted algebras were combined."""


class NotInAlgebra(ValueError):
    """A polynomial lies outside the restricted subring."""


class TwistedAlgebra:
    def __init__(self, name: str, carrier: PolyRing, twist: RingMap,
                 inverse: RingMap | None = None,
                 restriction: MonomialSubring | None = None,
                 generators: Sequence[str] = (),
                 letters: dict | None = None):
        if twist.source != carrier or twist.target != carrier:
            raise ValueError("twist must be an endomorphism of the carrier")
        for v, img in zip(carrier.variables, twist.images):
            if not img.is_homogeneous() or img.degree() != 1:
                raise ValueError(f"twist is not degree preserving at {v}")
        if inverse is not None:
            for v in carrier.variables:
                if twist(inverse(carrier.gen(v))) != carrier.gen(v):
                    raise ValueError("supplied inverse does not invert the twist")
        if restriction is not None:
            for g in restriction.generators:
                img = twist.apply_monomial(g)
                if not restriction.contains(img):
                    raise ValueError("twist does not preserve the restricted subring")
        self.name = name
        self.carrier = carrier
        self.field = carrier.field
        self.twist = twist
        self.inverse = inverse
        self.restriction = restriction
        self.generators = tuple(carrier.parse(g) if isinstance(g, str) else g for g in generators)
        self.letters = dict(letters or {})
        self._powers = {0: identity_map(carrier), 1: twist}
        self._lock = threading.RLock()
        self._span_cache: dict = {}

    def __repr__(self):
        return f"TwistedAlgebra({self.name} over {self.field})"

    @property
    def is_laurent(self) -> bool:
        return bool(self.carrier.laurent)

    # twisting ----------------------------------------------------------
    def twist_power(self, k: int) -> RingMap:
        hit = self._powers.get(k)
        if hit is not None:
            return hit
        with self._lock:
            if k > 0:
                prev = self.twist_power(k - 1)
                m = RingMap(self.carrier, self.carrier,
                            [self.twist(img) for img in prev.images], name=f"mu^{k}")
            else:
                if self.inverse is None:
                    raise ValueError("negative twist power needs an inverse")
                prev = self.twist_power(k + 1)
                m = RingMap(self.carrier, self.carrier,
                            [self.inverse(img) for img in prev.images], name=f"mu^{k}")
            self._powers[k] = m
        return m

    def twist_apply(self, f: Poly, k: int) -> Poly:
        return f if k == 0 else self.twist_power(k)(f)

    # elements ------------------------------------------------------------
    def element(self, value, check: bool = True) -> "AlgElement":
        if isinstance(value, AlgElement):
            value = value.value
        if isinstance(value, str):
            return self.parse(value)
        poly = self.carrier.coerce(value)
        if check and self.restriction is not None and not self.restriction.contains(poly):
            raise NotInAlgebra(f"{poly} is not in {self.name}")
        return AlgElement(self, poly)

    def one(self) -> "AlgElement":
        return AlgElement(self, self.carrier.one())

    def zero(self) -> "AlgElement":
        return AlgElement(self, self.carrier.zero())

    def letter(self, name: str) -> "AlgElement":
        return AlgElement(self, self.carrier.gen(self.letters[name]))

    def parse(self, text: str) -> "AlgElement":
        """Parse text in the letters u, v, w (twisted products) or in the
        carrier variables x, y, z (commutative products), not both."""
        from .parsing import tokenize
        names = {t for kind, t in tokenize(text) if kind == "name"}
        carrier_names = names & set(self.carrier.variables)
        letter_names = names & set(self.letters)
        if carrier_names and letter_names:
            raise ParseError("mix of twisted letters and carrier variables")
        if letter_names:
            ns = {k: AlgElement(self, self.carrier.gen(v)) for k, v in self.letters.items()}
            if self.field.is_parametric:
                ns[self.field.param] = self.field.gen()
            val = parse_expression(text, ns.__getitem__, ns.__contains__)
            if not isinstance(val, AlgElement):
                val = AlgElement(self, self.carrier.constant(val))
            return self.element(val.value)
        return self.element(self.carrier.parse(text))

    def basis(self, n: int) -> list:
        """Monomials spanning the degree-n piece (finite pieces only)."""
        if self.is_laurent:
            raise ValueError(f"graded pieces of {self.name} are infinite")
        return graded_component_basis(self.carrier, n, self.restriction)

    def basis_elements(self, n: int) -> list["AlgElement"]:
        one = self.field.one
        return [AlgElement(self, Poly(self.carrier, {m: one}, _clean=True)) for m in self.basis(n)]


class AlgElement:
    """An element of a twisted algebra; ``*`` is the twisted product."""

    __slots__ = ("algebra", "value")

    def __init__(self, algebra: TwistedAlgebra, value: Poly):
        self.algebra = algebra
        self.value = value

    def _same(self, other):
        if isinstance(other, AlgElement):
            if other.algebra is not self.algebra:
                raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")
            return other
        return AlgElement(self.algebra, self.algebra.carrier.constant(other))

    def __add__(self, other):
        return AlgElement(self.algebra, self.value + self._same(other).value)

    __radd__ = __add__

    def __sub__(self, other):
        return AlgElement(self.algebra, self.value - self._same(other).value)

    def __rsub__(self, other):
        return AlgElement(self.algebra, self._same(other).value - self.value)

    def __neg__(self):
        return AlgElement(self.algebra, -self.value)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return twisted_mul(self, other)
        return AlgElement(self.algebra, self.value * other)

    def __rmul__(self, other):
        return AlgElement(self.algebra, self.value * other)

    def __truediv__(self, other):
        if isinstance(other, AlgElement):
            raise TypeError("division by an algebra element")
        return AlgElement(self.algebra, self.value / other)

    def __pow__(self, k: int):
        if k < 0:
            if not self.value.is_monomial():
                raise ValueError("negative power of a non-monomial element")
            inv = self._monomial_inverse()
            return inv ** (-k)
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def _monomial_inverse(self):
        """Two-sided inverse of an invertible monomial: m * c = 1 forces
        c = mu^(-d)(m^-1) for m of degree d."""
        alg = self.algebra
        cand = AlgElement(alg, alg.twist_apply(self.value ** -1, -self.degree()))
        if (self * cand).value != 1 or (cand * self).value != 1:
            raise ValueError("monomial is not invertible under the twisted product")
        return cand

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra is other.algebra and self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash((self.algebra.name, self.value))

    def __bool__(self):
        return bool(self.value)

    def degree(self) -> int:
        return self.value.degree()

    def is_homogeneous(self) -> bool:
        return self.value.is_homogeneous()

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"AlgElement[{self.algebra.name}]({self.value})"


def twisted_mul(f: AlgElement, g: AlgElement) -> AlgElement:
    """f * g = sum over homogeneous parts f_i of f_i . mu^i(g)."""
    if f.algebra is not g.algebra:
        raise AlgebraMismatch(f"{f.algebra.name} vs {g.algebra.name}")
    alg = f.algebra
    if not f.value or not g.value:
        return alg.zero()
    out = alg.carrier.zero()
    for d, part in f.value.homogeneous_components().items():
        out = out + part * alg.twist_apply(g.value, d)
    return AlgElement(alg, out)


def product_chain(algebra: TwistedAlgebra, factors: Sequence[AlgElement]) -> AlgElement:
    out = algebra.one()
    for fac in factors:
        out = out * fac
    return out


# ---------------------------------------------------------------------------
# graded spans

@dataclass
class GradedSpan:
    """A subspace of one graded piece, as a reduced echelon basis over ``monomials``."""

    algebra: TwistedAlgebra
    degree: int
    monomials: tuple
    basis: list = dc_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def elements(self) -> list[AlgElement]:
        ring = self.algebra.carrier
        out = []
        for row in self.basis:
            out.append(AlgElement(self.algebra, Poly(
                ring, {m: c for m, c in zip(self.monomials, row) if c}, _clean=True)))
        return out

    def contains(self, f: AlgElement | Poly) -> bool:
        return membership(f, self)

    def __str__(self):
        body = ", ".join(str(e) for e in self.elements())
        return f"<deg {self.degree}, dim {self.dim}: {body}>"


def _as_poly(f) -> Poly:
    return f.value if isinstance(f, AlgElement) else f


def _coords_for(algebra: TwistedAlgebra, degree: int, polys: Iterable[Poly]) -> tuple:
    if not algebra.is_laurent:
        return tuple(algebra.basis(degree))
    monos = set()
    for p in polys:
        monos.update(p.terms)
    return tuple(sorted(monos, key=algebra.carrier.sort_key, reverse=True))


def span_of(algebra: TwistedAlgebra, degree: int, elements: Iterable, monomials=None) -> GradedSpan:
    """The span of homogeneous degree-``degree`` elements."""
    polys = [_as_poly(e) for e in elements]
    polys = [p for p in polys if p]
    for p in polys:
        if p.degrees() != {degree}:
            raise ValueError(f"{p} is not homogeneous of degree {degree}")
    coords = tuple(monomials) if monomials is not None else _coords_for(algebra, degree, polys)
    index = {m: i for i, m in enumerate(coords)}
    zero = algebra.field.zero
    rows = []
    for p in polys:
        row = [zero] * len(coords)
        for m, c in p.terms.items():
            if m not in index:
                raise ValueError(f"monomial {algebra.carrier.format_monomial(m)} outside the coordinate space")
            row[index[m]] = c
        rows.append(row)
    return GradedSpan(algebra, degree, coords, rref(rows, algebra.field).rows)


def _realign(span: GradedSpan, coords: tuple) -> list:
    if span.monomials == coords:
        return span.basis
    index = {m: i for i, m in enumerate(coords)}
    zero = span.algebra.field.zero
    out = []
    for row in span.basis:
        new = [zero] * len(coords)
        for m, c in zip(span.monomials, row):
            if c:
                new[index[m]] = c
        out.append(new)
    return out


def _common_coords(spans: Sequence[GradedSpan]) -> tuple:
    first = spans[0]
    if all(s.monomials == first.monomials for s in spans):
        return first.monomials
    monos = set()
    for s in spans:
        monos.update(s.monomials)
    return tuple(sorted(monos, key=first.algebra.carrier.sort_key, reverse=True))


def _check_compatible(spans: Sequence[GradedSpan]) -> None:
    for s in spans[1:]:
        if s.algebra is not spans[0].algebra:
            raise AlgebraMismatch("spans live in different algebras")
        if s.degree != spans[0].degree:
            raise ValueError(f"degree mismatch: {spans[0].degree} vs {s.degree}")


def span_sum(*spans: GradedSpan) -> GradedSpan:
    _check_compatible(spans)
    coords = _common_coords(spans)
    rows = [r for s in spans for r in _realign(s, coords)]
    alg = spans[0].algebra
    return GradedSpan(alg, spans[0].degree, coords, rref(rows, alg.field).rows)


def graded_intersection(a: GradedSpan, b: GradedSpan) -> GradedSpan:
    _check_compatible([a, b])
    coords = _common_coords([a, b])
    A, B = _realign(a, coords), _realign(b, coords)
    alg = a.algebra
    fld = alg.field
    if not A or not B:
        return GradedSpan(alg, a.degree, coords, [])
    ka = len(A)
    mat = [[A[i][c] for i in range(ka)] + [-B[j][c] for j in range(len(B))]
           for c in range(len(coords))]
    null, _ = nullspace(mat, ka + len(B), fld)
    rows = matmul([v[:ka] for v in null], A, fld) if null else []
    return GradedSpan(alg, a.degree, coords, rref(rows, fld).rows)


def spans_equal(a: GradedSpan, b: GradedSpan) -> bool:
    if a.degree != b.degree or a.algebra is not b.algebra:
        return False
    coords = _common_coords([a, b])
    return _realign(a, coords) == _realign(b, coords)


def membership(f, span: GradedSpan) -> bool:
    """True iff ``f`` lies in ``span`` (exact rank test)."""
    p = _as_poly(f)
    if not p:
        return True
    if p.degrees() != {span.degree}:
        raise ValueError(f"degree mismatch: element has degrees {sorted(p.degrees())}, span {span.degree}")
    index = {m: i for i, m in enumerate(span.monomials)}
    if any(m not in index for m in p.terms):
        return False
    vec = p.vector(span.monomials)
    return rref(span.basis + [vec], span.algebra.field).rank == span.dim


def _right_mult_rows(algebra: TwistedAlgebra, rows: list, coords_in: tuple, g: Poly,
                     coords_out: tuple) -> list:
    """Rows of (element of coords_in) * g expressed over coords_out."""
    if not rows:
        return []
    d = algebra.carrier.degree_of(coords_in[0]) if coords_in else 0
    gt = algebra.twist_apply(g, d)
    index = {m: i for i, m in enumerate(coords_out)}
    fld = algebra.field
    zero = fld.zero
    mat = []
    for mono in coords_in:
        row = [zero] * len(coords_out)
        for m, c in gt.terms.items():
            row[index[tuple(a + b for a, b in zip(mono, m))]] = c
        mat.append(row)
    return matmul(rows, mat, fld)


def span_generated(algebra: TwistedAlgebra, generators: Sequence, n: int) -> GradedSpan:
    """Degree-n piece of the unital subalgebra generated by ``generators``.

    Pieces are built by dynamic programming over the degree,
    ``A_n = sum_g A_{n - deg g} * g``, and memoised per generator set.
    """
    if algebra.is_laurent:
        raise ValueError("span_generated needs finite graded pieces")
    gens = tuple(_as_poly(g) for g in generators)
    for g in gens:
        if not g.is_homogeneous() or g.degree() < 1:
            raise ValueError("generators must be homogeneous of positive degree")
    key = tuple(sorted((str(g) for g in gens)))
    with algebra._lock:
        pieces = algebra._span_cache.setdefault(key, [])
    if n < 0:
        return GradedSpan(algebra, n, (), [])
    while len(pieces) <= n:
        m = len(pieces)
        coords = tuple(algebra.basis(m))
        if m == 0:
            rows = [[algebra.field.one]]
        else:
            rows = []
            for g in gens:
                d = g.degree()
                if d <= m:
                    prev = pieces[m - d]
                    rows.extend(_right_mult_rows(algebra, prev.basis, prev.monomials, g, coords))
        pieces.append(GradedSpan(algebra, m, coords, rref(rows, algebra.field).rows))
    return pieces[n]


def full_piece(algebra: TwistedAlgebra, n: int) -> GradedSpan:
    coords = tuple(algebra.basis(n))
    one, zero = algebra.field.one, algebra.field.zero
    rows = [[one if i == j else zero for j in range(len(coords))] for i in range(len(coords))]
    return GradedSpan(algebra, n, coords, rows)


def span_times(span: GradedSpan, g: AlgElement, coords_out=None) -> GradedSpan:
    """{s * g : s in span}."""
    alg = span.algebra
    gp = _as_poly(g)
    n = span.degree + gp.degree()
    return span_of(alg, n, [(e * AlgElement(alg, gp)).value for e in span.elements()], coords_out)


def times_span(g: AlgElement, span: GradedSpan, coords_out=None) -> GradedSpan:
    """{g * s : s in span}."""
    alg = span.algebra
    gp = _as_poly(g)
    n = span.degree + gp.degree()
    ge = AlgElement(alg, gp)
    return span_of(alg, n, [(ge * e).value for e in span.elements()], coords_out)


def _over_piece(algebra: TwistedAlgebra, over, k: int) -> GradedSpan:
    if over is None:
        return full_piece(algebra, k)
    return span_generated(algebra, over, k)


def module_piece(algebra: TwistedAlgebra, generators: Sequence[tuple], over, n: int) -> GradedSpan:
    """Degree-n piece of a left, right or two-sided module generated by elements.

    ``generators`` holds (element, side) pairs with side in {"left", "right",
    "two-sided"}; ``over`` is a list of subalgebra generators, or None for the
    whole algebra.  A right generator g contributes ``g * over``, a left one
    ``over * g``.
    """
    polys = []
    for elem, side in generators:
        e = elem if isinstance(elem, AlgElement) else AlgElement(algebra, elem)
        d = e.degree()
        if d > n:
            continue
        if side == "right":
            polys += [(e * b).value for b in _over_piece(algebra, over, n - d).elements()]
        elif side == "left":
            polys += [(b * e).value for b in _over_piece(algebra, over, n - d).elements()]
        elif side == "two-sided":
            for i in range(n - d + 1):
                lefts = _over_piece(algebra, over, i).elements()
                rights = _over_piece(algebra, over, n - d - i).elements()
                for b in lefts:
                    be = b * e
                    polys += [(be * c).value for c in rights]
        else:
            raise ValueError(f"unknown side {side!r}")
    return span_of(algebra, n, polys)


# ---------------------------------------------------------------------------
# normality

@dataclass
class NormalityReport:
    normal: bool
    companions: dict
    failed_generator: str | None = None

    def __bool__(self):
        return self.normal


def is_normal(algebra: TwistedAlgebra, h: AlgElement) -> NormalityReport:
    """Solve x * h = h * c for each algebra generator x."""
    hp = _as_poly(h)
    if not hp or not hp.is_homogeneous():
        raise ValueError("normality needs a nonzero homogeneous element")
    he = AlgElement(algebra, hp)
    companions = {}
    for gen in algebra.generators:
        d = gen.degree()
        lhs = (AlgElement(algebra, gen) * he).value
        cands = algebra.basis_elements(d) if not algebra.is_laurent else \
            [AlgElement(algebra, algebra.carrier.monomial(m)) for m in _laurent_candidates(algebra, d)]
        prods = [(he * c).value for c in cands]
        monos = set(lhs.terms)
        for p in prods:
            monos.update(p.terms)
        coords = sorted(monos, key=algebra.carrier.sort_key, reverse=True)
        cols = [p.vector(coords) for p in prods]
        mat = [[col[i] for col in cols] for i in range(len(coords))]
        sol = solve(mat, lhs.vector(coords), algebra.field)
        name = str(gen)
        if sol is None:
            return NormalityReport(False, companions, name)
        comp = algebra.zero()
        for s, c in zip(sol, cands):
            if s:
                comp = comp + c * s
        if (he * comp).value != lhs:
            return NormalityReport(False, companions, name)
        companions[name] = comp
    return NormalityReport(True, companions)


def _laurent_candidates(algebra: TwistedAlgebra, d: int) -> list:
    # monomials of degree d whose non-Laurent exponents are bounded by d
    ring = algebra.carrier
    out = []
    free = [i for i, v in enumerate(ring.variables) if v not in ring.laurent]
    lau = [i for i, v in enumerate(ring.variables) if v in ring.laurent]
    if len(lau) != 1:
        raise ValueError("exactly one Laurent variable is supported")
    from .commpoly import _compositions
    for total in range(0, d + 1):
        for comp in _compositions(total, len(free)):
            m = [0] * ring.nvars
            for i, e in zip(free, comp):
                m[i] = e
            m[lau[0]] = d - total
            out.append(tuple(m))
    return out


# ---------------------------------------------------------------------------
# the algebras

def algebra_S(field: ScalarField = RATIONALS, laurent: bool = False) -> TwistedAlgebra:
    return _algebra_S(field, bool(laurent))


@lru_cache(maxsize=None)
def _algebra_S(field: ScalarField, laurent: bool) -> TwistedAlgebra:
    ring = PolyRing("xyz", field, laurent="y" if laurent else ())
    mu = RingMap(ring, ring, ["x - y", "y", "z"], name="mu", graded=True)
    inv = RingMap(ring, ring, ["x + y", "y", "z"], name="mu^-1", graded=True)
    return TwistedAlgebra("S_hat" if laurent else "S", ring, mu, inv,
                          generators=["x", "y", "z"], letters={"u": "x", "v": "y", "w": "z"})


def algebra_R(field: ScalarField = RATIONALS, laurent: bool = False) -> TwistedAlgebra:
    return _algebra_R(field, bool(laurent))


@lru_cache(maxsize=None)
def _algebra_R(field: ScalarField, laurent: bool) -> TwistedAlgebra:
    ring = PolyRing("xy", field, laurent="y" if laurent else ())
    nu = RingMap(ring, ring, ["x - y", "y"], name="nu", graded=True)
    inv = RingMap(ring, ring, ["x + y", "y"], name="nu^-1", graded=True)
    return TwistedAlgebra("R_hat" if laurent else "R", ring, nu, inv,
                          generators=["x", "y"], letters={"u": "x", "v": "y"})


def algebra_Q(field: ScalarField = RATIONALS) -> TwistedAlgebra:
    return _algebra_Q(field)


@lru_cache(maxsize=None)
def _algebra_Q(field: ScalarField) -> TwistedAlgebra:
    ring = PolyRing("xyz", field)
    mu = RingMap(ring, ring, ["x - y", "y", "z"], name="mu", graded=True)
    inv = RingMap(ring, ring, ["x + y", "y", "z"], name="mu^-1", graded=True)
    sub = MonomialSubring(ring, ["x", "y", "y*z"])
    return TwistedAlgebra("Q", ring, mu, inv, restriction=sub,
                          generators=["x", "y", "y*z"], letters={"u": "x", "v": "y", "w": "z"})


def algebra_S_hat(field: ScalarField = RATIONALS) -> TwistedAlgebra:
    return algebra_S(field, laurent=True)


def algebra_R_hat(field: ScalarField = RATIONALS) -> TwistedAlgebra:
    return algebra_R(field, laurent=True)


def transfer(f: AlgElement, algebra: TwistedAlgebra) -> AlgElement:
    """Reinterpret ``f`` in another algebra on the same carrier (e.g. Q inside S)."""
    return algebra.element(f.value)
