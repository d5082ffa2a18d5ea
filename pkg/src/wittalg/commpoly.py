"""Sparse commutative polynomials, graded pieces and ring maps.

Monomials are exponent tuples aligned with the ring's variables.  Terms are
ordered graded-lexicographically (total weighted degree first, then the
exponent tuple lexicographically in declared variable order), descending.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .scalars import RATIONALS, DomainError, RatFunc, ScalarField, canon_q, format_rational


class RingMismatch(TypeError):
    """Operands belong to different polynomial rings."""


class LaurentViolation(ValueError):
    """A negative exponent appeared on a variable not declared Laurent."""


class PolyRing:
    """Polynomial ring over a scalar field, optionally Laurent in some variables."""

    def __init__(self, variables: Sequence[str], field: ScalarField = RATIONALS,
                 laurent: Iterable[str] = (), weights: Sequence[int] | None = None,
                 name: str | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        laurent = frozenset(laurent)
        if not laurent <= set(variables):
            raise ValueError("Laurent variables must be ring variables")
        self.variables = variables
        self.field = field
        self.laurent = laurent
        self.weights = tuple(weights) if weights else (1,) * len(variables)
        self.nvars = len(variables)
        self._laurent_mask = tuple(v in laurent for v in variables)
        self.name = name or f"{field}[{','.join(variables)}]"
        self._index = {v: i for i, v in enumerate(variables)}
        self._key = (variables, field, laurent, self.weights)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"PolyRing({self.name})"

    # construction ------------------------------------------------------
    def index(self, var: str) -> int:
        return self._index[var]

    def zero(self) -> "Poly":
        return Poly(self, {}, _clean=True)

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self, {self.unit_monomial(): c} if c else {}, _clean=True)

    def unit_monomial(self) -> tuple:
        return (0,) * self.nvars

    def gen(self, var: str) -> "Poly":
        e = [0] * self.nvars
        e[self._index[var]] = 1
        return Poly(self, {tuple(e): self.field.one}, _clean=True)

    def gens(self) -> list["Poly"]:
        return [self.gen(v) for v in self.variables]

    def monomial(self, exps: Mapping[str, int] | Sequence[int], coeff=1) -> "Poly":
        if isinstance(exps, Mapping):
            e = [0] * self.nvars
            for v, k in exps.items():
                e[self._index[v]] = k
            exps = e
        return Poly(self, {tuple(exps): coeff})

    def from_terms(self, terms: Mapping) -> "Poly":
        return Poly(self, dict(terms))

    def check_monomial(self, m: tuple) -> None:
        for e, ok in zip(m, self._laurent_mask):
            if e < 0 and not ok:
                raise LaurentViolation(f"negative exponent in {self.format_monomial(m)}")

    def degree_of(self, m: tuple) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def sort_key(self, m: tuple):
        return (self.degree_of(m), m)

    def format_monomial(self, m: tuple) -> str:
        parts = []
        for v, e in zip(self.variables, m):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    def with_field(self, field: ScalarField) -> "PolyRing":
        return PolyRing(self.variables, field, self.laurent, self.weights)

    def parse(self, text: str) -> "Poly":
        from .parsing import parse_expression
        names = {v: self.gen(v) for v in self.variables}
        if self.field.is_parametric and self.field.param not in names:
            names[self.field.param] = self.constant(self.field.gen())
        value = parse_expression(text, names.__getitem__, names.__contains__)
        return self.coerce(value)

    def coerce(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} vs {self}")
            return value
        return self.constant(value)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to scalars."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, _clean: bool = False):
        if not _clean:
            fld = ring.field
            clean = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != ring.nvars:
                    raise ValueError("monomial length does not match ring")
                ring.check_monomial(m)
                c = fld.coerce(c)
                if c:
                    clean[m] = c
            terms = clean
        self.ring = ring
        self.terms = terms
        self._hash = None

    # basic queries -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list:
        return sorted(self.terms, key=self.ring.sort_key, reverse=True)

    def items(self):
        return [(m, self.terms[m]) for m in self.monomials()]

    def coefficient(self, m) -> object:
        return self.terms.get(tuple(m), self.ring.field.zero)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.ring.degree_of(m) for m in self.terms)

    def degrees(self) -> set:
        return {self.ring.degree_of(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_components(self) -> dict:
        out: dict = {}
        deg = self.ring.degree_of
        for m, c in self.terms.items():
            out.setdefault(deg(m), {})[m] = c
        return {d: Poly(self.ring, t, _clean=True) for d, t in out.items()}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self):
        m = self.monomials()[0]
        return m, self.terms[m]

    # arithmetic ----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        try:
            return self.ring.constant(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = self.ring.field.coerce(c)
        if not c:
            return self.ring.zero()
        if c == 1:
            return self
        return Poly(self.ring, {m: c * x for m, x in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return Poly(self.ring, _mul_terms(self.terms, other.terms), _clean=True)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.is_monomial() and other.terms.get(self.ring.unit_monomial()) is not None:
                other = other.terms[self.ring.unit_monomial()]
            elif other.is_monomial():
                return self * other ** -1
            else:
                raise TypeError("division by a non-monomial polynomial")
        c = self.ring.field.coerce(other)
        if not c:
            raise DomainError("division by zero")
        return self.scale(self.ring.field.inv(c))

    def __rtruediv__(self, other):
        if not self.is_monomial():
            raise TypeError("division by a non-monomial polynomial")
        return self ** -1 * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise LaurentViolation("negative power of a non-monomial")
            (m, c), = self.terms.items()
            inv_m = tuple(-e for e in m)
            self.ring.check_monomial(inv_m)
            inv_c = self.ring.field.inv(c)
            return Poly(self.ring, {inv_m: inv_c}, _clean=True) ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            other = self.ring.constant(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # conversions -------------------------------------------------------
    def map_coefficients(self, fn: Callable, ring: PolyRing | None = None) -> "Poly":
        ring = ring or self.ring
        return Poly(ring, {m: fn(c) for m, c in self.terms.items()})

    def specialize(self, a0) -> "Poly":
        """Evaluate a QQ(a) coefficient polynomial at a rational ``a0``."""
        from .scalars import ratfunc_eval
        return self.map_coefficients(lambda c: ratfunc_eval(c, a0),
                                     self.ring.with_field(RATIONALS))

    def vector(self, monomials: Sequence[tuple]) -> list:
        zero = self.ring.field.zero
        return [self.terms.get(m, zero) for m in monomials]

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"


def _mul_terms(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            s = get(m)
            out[m] = c1 * c2 if s is None else s + c1 * c2
    return {m: c for m, c in out.items() if c}


def _coeff_str(c, field: ScalarField) -> tuple[str, bool]:
    """(text of |c| or parenthesised c, negative?)"""
    if isinstance(c, RatFunc) and not c.is_constant():
        if c.needs_parens():
            return f"({c})", False
        if c.num[-1] < 0:
            return str(-c), True
        return str(c), False
    q = field.coerce(c) if not isinstance(c, RatFunc) else c.constant_value()
    q = canon_q(q)
    return format_rational(abs(q)), q < 0


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    ring = f.ring
    out = []
    for m in f.monomials():
        c = f.terms[m]
        text, neg = _coeff_str(c, ring.field)
        mono = ring.format_monomial(m)
        if mono == "1":
            body = text
        elif text == "1":
            body = mono
        else:
            body = f"{text}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# ring maps

class RingMap:
    """Substitution homomorphism determined by images of the source variables."""

    def __init__(self, source: PolyRing, target: PolyRing, images: Mapping[str, object] | Sequence,
                 name: str = "", graded: bool = False):
        if not isinstance(images, Mapping):
            images = dict(zip(source.variables, images))
        if set(images) != set(source.variables):
            raise ValueError("ring map needs an image for every source variable")
        imgs = []
        for v in source.variables:
            img = images[v]
            if isinstance(img, str):
                img = target.parse(img)
            imgs.append(target.coerce(img))
        self.source = source
        self.target = target
        self.images = tuple(imgs)
        self.name = name
        self._mono_cache: dict = {}
        self._pow_cache: dict = {}
        if graded:
            for v, img, w in zip(source.variables, imgs, source.weights):
                if img and (not img.is_homogeneous() or img.degree() != w):
                    raise ValueError(f"{name or 'map'} is not degree preserving at {v}")

    def __repr__(self):
        pairs = ", ".join(f"{v} -> {img}" for v, img in zip(self.source.variables, self.images))
        return f"RingMap({self.name}: {pairs})"

    def image_of(self, var: str) -> Poly:
        return self.images[self.source.index(var)]

    def _var_power(self, i: int, e: int) -> Poly:
        key = (i, e)
        hit = self._pow_cache.get(key)
        if hit is None:
            hit = self.images[i] ** e
            self._pow_cache[key] = hit
        return hit

    def apply_monomial(self, m: tuple) -> Poly:
        hit = self._mono_cache.get(m)
        if hit is not None:
            return hit
        out = None
        for i, e in enumerate(m):
            if e:
                p = self._var_power(i, e)
                out = p if out is None else out * p
        if out is None:
            out = self.target.one()
        self._mono_cache[m] = out
        return out

    def __call__(self, f: Poly) -> Poly:
        return apply_ring_map(self, f)

    def compose(self, inner: "RingMap") -> "RingMap":
        """The map f -> self(inner(f))."""
        if inner.target != self.source:
            raise RingMismatch("maps are not composable")
        return RingMap(inner.source, self.target,
                       {v: self(img) for v, img in zip(inner.source.variables, inner.images)},
                       name=f"{self.name}.{inner.name}")

    def power(self, k: int) -> "RingMap":
        if self.source != self.target:
            raise RingMismatch("only endomorphisms have powers")
        out = identity_map(self.source)
        for _ in range(k):
            out = self.compose(out)
        return out


def identity_map(ring: PolyRing) -> RingMap:
    return RingMap(ring, ring, {v: ring.gen(v) for v in ring.variables}, name="id")


def apply_ring_map(m: RingMap, f: Poly) -> Poly:
    if f.ring != m.source:
        raise RingMismatch(f"{f.ring} is not the source {m.source}")
    acc: dict = {}
    get = acc.get
    for mono, c in f.terms.items():
        img = m.apply_monomial(mono)
        for tm, tc in img.terms.items():
            s = get(tm)
            acc[tm] = tc * c if s is None else s + tc * c
    return Poly(m.target, {k: v for k, v in acc.items() if v}, _clean=True)


@dataclass(frozen=True)
class KillCheck:
    ok: bool
    witness: Poly | None = None
    image: Poly | None = None

    def __bool__(self):
        return self.ok


def check_map_kills(m: RingMap, relations: Sequence[Poly]) -> KillCheck:
    """True iff every relation maps to zero; otherwise the first offender."""
    for r in relations:
        img = m(r)
        if img:
            return KillCheck(False, r, img)
    return KillCheck(True)


# ---------------------------------------------------------------------------
# graded pieces

class MonomialSubring:
    """The subring generated by finitely many monomials (e.g. x, y, yz)."""

    def __init__(self, ring: PolyRing, generators: Sequence[Poly | str]):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if not g.is_monomial():
                raise ValueError("subring generators must be monomials")
            gens.append(next(iter(g.terms)))
        self.ring = ring
        self.generators = tuple(gens)
        self._memo: dict = {}

    def __eq__(self, other):
        return isinstance(other, MonomialSubring) and (self.ring, self.generators) == (other.ring, other.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def contains_monomial(self, m: tuple) -> bool:
        if any(e < 0 for e in m):
            return False
        hit = self._memo.get(m)
        if hit is not None:
            return hit
        if not any(m):
            res = True
        else:
            res = False
            for g in self.generators:
                rest = tuple(a - b for a, b in zip(m, g))
                if all(e >= 0 for e in rest) and self.contains_monomial(rest):
                    res = True
                    break
        self._memo[m] = res
        return res

    def contains(self, f: Poly) -> bool:
        return all(self.contains_monomial(m) for m in f.terms)

    def describe(self) -> str:
        return "{" + ", ".join(self.ring.format_monomial(g) for g in self.generators) + "}"


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple:
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def graded_component_basis(ring: PolyRing, n: int, restriction: MonomialSubring | None = None) -> list:
    """All degree-n monomials, lexicographically descending.

    Only unit weights are supported; Laurent rings have infinite pieces and are
    rejected.
    """
    if ring.laurent:
        raise ValueError("graded pieces of a Laurent ring are infinite")
    if any(w != 1 for w in ring.weights):
        raise ValueError("graded_component_basis needs unit weights")
    if n < 0:
        return []
    monos = list(_compositions(n, ring.nvars))
    if restriction is not None:
        monos = [m for m in monos if restriction.contains_monomial(m)]
    return monos


def format_monomials(ring: PolyRing, monos: Sequence[tuple]) -> list[str]:
    return [ring.format_monomial(m) for m in monos]
