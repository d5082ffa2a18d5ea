"""The homomorphisms lambda_a and phi out of U(W+), and what can be computed
from them degree by degree: kernels, two-sided ideal pieces, preimages in the
free algebra k<t1, t2>, and relations obtained from syzygies.

``lambda_a(e_n) = (u - (n-1) a v) v^(n-1)`` lands in R = k[x,y]^nu and
``phi(e_n) = (u - (n-1) w) v^(n-1)`` lands in S = k[x,y,z]^mu.  In W mode the
targets are the Laurent extensions in v.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .envelope import (WITT, WPLUS, EnvElement, FreeElement, env_basis, env_from_vector,
                       env_gen, env_vector, free_gen, free_reduce_and_project,
                       free_word_basis)
from .scalars import (RATIONALS, ExactMatrix, RatFunc, ScalarField, canon_q,
                      exact_nullspace, field_of, nullspace, ratfunc_field, rref, solve)
from .twisted import (AlgElement, GradedSpan, algebra_R, algebra_S, membership)

LAMBDA = "lambda"
PHI = "phi"
GENERIC = "generic"


class InvalidSyzygy(ValueError):
    """A supplied pair is not a syzygy."""


class LiftError(ValueError):
    """No preimage exists for a syzygy component."""


class EnvMorphism:
    """lambda_a (parameter rational or ``"generic"``) or phi."""

    def __init__(self, name: str, parameter=None, mode: str = WPLUS):
        if name not in (LAMBDA, PHI):
            raise ValueError(f"unknown morphism {name!r}")
        self.name = name
        self.mode = mode
        laurent = mode == WITT
        if name == LAMBDA:
            if parameter is None:
                raise ValueError("lambda needs a parameter")
            if parameter == GENERIC:
                fld = ratfunc_field("a")
                self.parameter = fld.gen()
            else:
                fld = RATIONALS
                self.parameter = canon_q(parameter)
            self.target = algebra_R(fld, laurent)
        else:
            self.parameter = None
            self.target = algebra_S(RATIONALS, laurent)
        self.field: ScalarField = self.target.field
        self._gen_cache: dict = {}
        self._mono_cache: dict = {(): self.target.one()}

    @property
    def is_generic(self) -> bool:
        return isinstance(self.parameter, RatFunc)

    def label(self) -> str:
        if self.name == PHI:
            return "phi"
        p = "a" if self.is_generic else str(self.parameter)
        return f"lambda_{p}"

    def __repr__(self):
        return f"EnvMorphism({self.label()}, {self.mode})"

    def generator_image(self, n: int) -> AlgElement:
        hit = self._gen_cache.get(n)
        if hit is not None:
            return hit
        if self.mode == WPLUS and n < 1:
            raise ValueError("W+ generators have index >= 1")
        ring = self.target.carrier
        x, y = ring.gen("x"), ring.gen("y")
        if self.name == LAMBDA:
            head = x - y * ((n - 1) * self.parameter)
        else:
            head = x - ring.gen("z") * (n - 1)
        img = AlgElement(self.target, head * y ** (n - 1))
        self._gen_cache[n] = img
        return img

    def monomial_image(self, m: tuple) -> AlgElement:
        hit = self._mono_cache.get(m)
        if hit is not None:
            return hit
        img = self.monomial_image(m[:-1]) * self.generator_image(m[-1])
        self._mono_cache[m] = img
        return img

    def __call__(self, f) -> AlgElement:
        return eval_morphism(self, f)


def eval_morphism(m: EnvMorphism, f) -> AlgElement:
    """Image of an EnvElement, or of a FreeElement routed through pi."""
    if isinstance(f, FreeElement):
        f = free_reduce_and_project(f, m.mode)
    if not isinstance(f, EnvElement):
        raise TypeError("expected an enveloping-algebra or free-algebra element")
    if f.mode != m.mode:
        raise ValueError(f"mode mismatch: {f.mode} vs {m.mode}")
    out = m.target.zero()
    for mono, c in f.terms.items():
        out = out + m.monomial_image(mono) * c
    return out


# ---------------------------------------------------------------------------
# subspaces of U(W+)_n

@dataclass
class EnvSpan:
    """A subspace of U(W+)_n as a reduced echelon basis in PBW coordinates."""

    degree: int
    field: ScalarField
    rows: list = dc_field(default_factory=list)

    @property
    def monomials(self) -> list:
        return env_basis(self.degree)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def elements(self) -> list[EnvElement]:
        return [env_from_vector(r, self.monomials) for r in self.rows]

    def contains(self, f: EnvElement) -> bool:
        if not f:
            return True
        if f.degrees() != {self.degree}:
            return False
        vec = [self.field.coerce(c) for c in env_vector(f, self.monomials)]
        return rref(self.rows + [vec], self.field).rank == self.dim

    def __eq__(self, other):
        if not isinstance(other, EnvSpan) or other.degree != self.degree:
            return NotImplemented
        return self.rows == other.rows


def env_span(elements: Sequence[EnvElement], degree: int, field: ScalarField | None = None) -> EnvSpan:
    elements = [e for e in elements if e]
    if field is None:
        field = field_of(*(c for e in elements for c in e.terms.values()))
    basis = env_basis(degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for e in elements:
        row = [field.zero] * len(basis)
        for m, c in e.terms.items():
            if m not in index:
                raise ValueError(f"element is not homogeneous of degree {degree}")
            row[index[m]] = field.coerce(c)
        rows.append(row)
    return EnvSpan(degree, field, rref(rows, field).rows)


def env_span_intersection(spans: Sequence[EnvSpan]) -> EnvSpan:
    out = spans[0]
    for s in spans[1:]:
        fld = out.field if out.field.is_parametric else s.field
        A = [[fld.coerce(c) for c in r] for r in out.rows]
        B = [[fld.coerce(c) for c in r] for r in s.rows]
        if not A or not B:
            out = EnvSpan(out.degree, fld, [])
            continue
        ncoord = len(out.monomials)
        mat = [[A[i][c] for i in range(len(A))] + [-B[j][c] for j in range(len(B))]
               for c in range(ncoord)]
        null, _ = nullspace(mat, len(A) + len(B), fld)
        rows = []
        for v in null:
            row = [fld.zero] * ncoord
            for coef, r in zip(v[:len(A)], A):
                if coef:
                    row = [x + coef * y for x, y in zip(row, r)]
            rows.append(row)
        out = EnvSpan(out.degree, fld, rref(rows, fld).rows)
    return out


# ---------------------------------------------------------------------------
# kernels

@dataclass
class KernelReport:
    degree: int
    dimension: int
    basis: list
    excluded: list = dc_field(default_factory=list)          # polynomial strings
    excluded_roots: list = dc_field(default_factory=list)    # rational roots
    field: ScalarField = RATIONALS

    def span(self) -> EnvSpan:
        return env_span(self.basis, self.degree, self.field)


def image_matrix(m: EnvMorphism, n: int) -> tuple[list, list]:
    """(rows over target monomials, columns over env_basis(n))."""
    basis = env_basis(n)
    coords = m.target.basis(n)
    index = {mono: i for i, mono in enumerate(coords)}
    zero = m.field.zero
    rows = [[zero] * len(basis) for _ in coords]
    for j, mono in enumerate(basis):
        for t, c in m.monomial_image(mono).value.terms.items():
            rows[index[t]][j] = c
    return rows, basis


def kernel_at_degree(m: EnvMorphism, n: int) -> KernelReport:
    if m.mode != WPLUS:
        raise ValueError("kernels are computed in W+ mode")
    if n < 1:
        raise ValueError("degree must be positive")
    rows, basis = image_matrix(m, n)
    res = exact_nullspace(ExactMatrix.from_rows(rows, m.field, cols=len(basis)))
    elems = [env_from_vector(v, basis) for v in res.basis]
    for e in elems:
        if eval_morphism(m, e):
            raise ArithmeticError(f"kernel vector {e} does not map to zero")
    return KernelReport(n, len(elems), elems, res.excluded_strings(),
                        res.excluded_roots(), m.field)


def image_dimension(m: EnvMorphism, n: int) -> int:
    rows, _ = image_matrix(m, n)
    return rref(rows, m.field).rank


# ---------------------------------------------------------------------------
# two-sided ideals of U(W+)

class IdealPieces:
    """Graded pieces of the two-sided ideal generated by homogeneous elements.

    Uses I_n = G_n + e1 I_(n-1) + e2 I_(n-2), where G is the right ideal
    generated by the same elements, and G_n = g (n = deg g) plus
    G_(n-1) e1 + G_(n-2) e2; e1 and e2 generate U(W+).
    """

    def __init__(self, generators: Sequence[EnvElement], field: ScalarField | None = None):
        gens = [g for g in generators if g]
        for g in gens:
            if not g.is_homogeneous():
                raise ValueError(f"{g} is not homogeneous")
            if g.mode != WPLUS:
                raise ValueError("ideal pieces are computed in W+ mode")
        self.generators = gens
        self.field = field or field_of(*(c for g in gens for c in g.terms.values()))
        self._right: dict = {}
        self._two: dict = {}
        self._e1 = env_gen(1)
        self._e2 = env_gen(2)

    def right(self, n: int) -> EnvSpan:
        hit = self._right.get(n)
        if hit is not None:
            return hit
        elems = [g for g in self.generators if g.degree() == n]
        for k, e in ((1, self._e1), (2, self._e2)):
            if n - k >= 1:
                elems += [b * e for b in self.right(n - k).elements()]
        span = env_span(elems, n, self.field)
        self._right[n] = span
        return span

    def piece(self, n: int) -> EnvSpan:
        hit = self._two.get(n)
        if hit is not None:
            return hit
        elems = list(self.right(n).elements()) if n >= 1 else []
        for k, e in ((1, self._e1), (2, self._e2)):
            if n - k >= 1:
                elems += [e * b for b in self.piece(n - k).elements()]
        span = env_span(elems, n, self.field)
        self._two[n] = span
        return span


def ideal_graded_piece(generators: Sequence[EnvElement], n: int,
                       field: ScalarField | None = None) -> EnvSpan:
    return IdealPieces(generators, field).piece(n)


def spans_agree(a: EnvSpan, b: EnvSpan) -> bool:
    """Exact equality of two subspaces of the same U(W+)_n."""
    if a.degree != b.degree:
        return False
    fld = a.field if a.field.is_parametric else b.field
    if a.field != b.field:
        A = [[fld.coerce(c) for c in r] for r in a.rows]
        B = [[fld.coerce(c) for c in r] for r in b.rows]
        return len(A) == len(B) and rref(A + B, fld).rank == len(A)
    return a.rows == b.rows


# ---------------------------------------------------------------------------
# the free algebra

def free_image(m: EnvMorphism, word: tuple) -> AlgElement:
    return m.monomial_image(()) if not word else eval_morphism(m, FreeElement({word: 1}))


def preimage_lift(m: EnvMorphism, target: AlgElement, n: int) -> FreeElement | None:
    """A degree-n element of k<t1,t2> mapping to ``target``, or None.

    Free variables of the linear system are set to zero in echelon order.
    """
    tp = target.value if isinstance(target, AlgElement) else target
    if tp and tp.degrees() != {n}:
        raise ValueError(f"target is not homogeneous of degree {n}")
    words = free_word_basis(n)
    images = [eval_morphism(m, FreeElement({w: 1})).value for w in words]
    monos = set(tp.terms)
    for p in images:
        monos.update(p.terms)
    coords = sorted(monos, key=m.target.carrier.sort_key, reverse=True)
    cols = [p.vector(coords) for p in images]
    mat = [[col[i] for col in cols] for i in range(len(coords))]
    sol = solve(mat, tp.vector(coords), m.field) if coords else [m.field.zero] * len(words)
    if sol is None:
        return None
    lift = FreeElement({w: c for w, c in zip(words, sol) if c})
    if eval_morphism(m, lift).value != tp:
        raise ArithmeticError("lift does not reproduce its target")
    return lift


def presentation_from_syzygies(m: EnvMorphism, syzygies: Sequence[tuple],
                               lifts: Sequence[tuple] | None = None) -> list[FreeElement]:
    """q_j = t1 * lift(b1_j) + t2 * lift(b2_j) for syzygies (b1_j, b2_j)."""
    u, g2 = m.generator_image(1), m.generator_image(2)
    t1, t2 = free_gen(1), free_gen(2)
    out = []
    for j, (b1, b2) in enumerate(syzygies):
        b1 = m.target.element(b1)
        b2 = m.target.element(b2)
        if (u * b1 + g2 * b2).value:
            raise InvalidSyzygy(f"({b1}, {b2}) is not a syzygy")
        if lifts is not None:
            l1, l2 = lifts[j]
            if eval_morphism(m, l1) != b1 or eval_morphism(m, l2) != b2:
                raise InvalidSyzygy(f"supplied lifts for syzygy {j} do not map correctly")
        else:
            l1 = preimage_lift(m, b1, b1.degree()) if b1 else FreeElement()
            l2 = preimage_lift(m, b2, b2.degree()) if b2 else FreeElement()
            if l1 is None or l2 is None:
                raise LiftError(f"syzygy {j} has a component outside the image")
        out.append(t1 * l1 + t2 * l2)
    return out


# ---------------------------------------------------------------------------
# Laurent identities

def laurent_identity_check(identity: str, n: int, j: int = 0) -> bool:
    """``conj_lambda``: lambda_0(e_n) * u = u * lambda_1(e_n) in R (R_hat for n < 1).
    ``ad_wjp``: [phi_hat(e_n), w^j p] = (j + 4) v^n w^j p in S_hat.
    ``close_wjp``: (phi_hat(e_1) - phi_hat(e_2) v^-1) w^j p = w^(j+1) p in S_hat."""
    if identity == "conj_lambda":
        mode = WPLUS if n >= 1 else WITT
        l0 = EnvMorphism(LAMBDA, 0, mode)
        l1 = EnvMorphism(LAMBDA, 1, mode)
        u = l0.target.letter("u")
        return l0.generator_image(n) * u == u * l1.generator_image(n)
    phi = EnvMorphism(PHI, mode=WITT)
    S = phi.target
    v, w = S.letter("v"), S.letter("w")
    p = S.parse("y^3*z - y^2*z^2")
    wjp = w ** j * p
    if identity == "ad_wjp":
        f = phi.generator_image(n)
        return f * wjp - wjp * f == (v ** n * wjp) * (j + 4)
    if identity == "close_wjp":
        lhs = (phi.generator_image(1) - phi.generator_image(2) * v ** -1) * wjp
        return lhs == w ** (j + 1) * p
    raise ValueError(f"unknown identity {identity!r}")


__all__ = [
    "EnvMorphism", "eval_morphism", "kernel_at_degree", "KernelReport", "EnvSpan",
    "env_span", "env_span_intersection", "IdealPieces", "ideal_graded_piece", "spans_agree",
    "preimage_lift", "presentation_from_syzygies", "membership", "laurent_identity_check",
    "image_dimension", "InvalidSyzygy", "LiftError", "LAMBDA", "PHI", "GENERIC",
    "GradedSpan",
]
