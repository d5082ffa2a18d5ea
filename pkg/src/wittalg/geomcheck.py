"""Commutative geometry behind the kernels: the maps tau, mu, nu, psi_a and
i_a given by coordinate pullbacks, the squares they fit into, and the
pullback of the rational function f.

The parameter a is carried as an ordinary polynomial variable so that every
check is a polynomial identity in Q[x, y, a] (or Q[w, x, y, z, a] on P^3).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .commpoly import Poly, PolyRing, RingMap
from .scalars import RATIONALS, ratfunc_field

TAU, MU, NU, PSI_A, I_A, IDENTITY = "TAU", "MU", "NU", "PSI_A", "I_A", "ID"


class ShapeMismatch(ValueError):
    """Maps whose coordinate rings do not line up."""


@lru_cache(maxsize=None)
def ring_P3() -> PolyRing:
    """Coordinates w, x, y, z of P^3, plus the parameter a."""
    return PolyRing(("w", "x", "y", "z", "a"), RATIONALS, name="P3")


@lru_cache(maxsize=None)
def ring_P2() -> PolyRing:
    return PolyRing(("x", "y", "z", "a"), RATIONALS, name="P2")


@lru_cache(maxsize=None)
def ring_P1() -> PolyRing:
    return PolyRing(("x", "y", "a"), RATIONALS, name="P1")


@dataclass(frozen=True)
class ProjectiveMapSpec:
    """A map between projective spaces, recorded by its coordinate pullback.

    ``source`` holds the coordinates of the domain, ``target`` those of the
    codomain; ``coordinates`` are the images of the target coordinates as
    forms in the source coordinates.  The parameter a is fixed.
    """

    name: str
    source: PolyRing
    target: PolyRing
    coordinates: tuple

    def __post_init__(self):
        coords = [c if isinstance(c, Poly) else self.source.parse(c) for c in self.coordinates]
        object.__setattr__(self, "coordinates", tuple(coords))
        if len(coords) != len(self.target.variables) - 1:
            raise ShapeMismatch(f"{self.name}: expected {len(self.target.variables) - 1} coordinates")
        degs = {self._coord_degree(c) for c in coords if c}
        if len(degs) > 1:
            raise ValueError(f"{self.name}: coordinates are not of a common degree")

    def _coord_degree(self, c: Poly) -> int:
        ia = self.source.index("a")
        ds = {sum(e for i, e in enumerate(m) if i != ia) for m in c.terms}
        if len(ds) != 1:
            raise ValueError(f"{self.name}: coordinate {c} is not homogeneous")
        return ds.pop()

    def pullback(self) -> RingMap:
        images = dict(zip(self.target.variables[:-1], self.coordinates))
        images["a"] = self.source.gen("a")
        return RingMap(self.target, self.source, images, name=f"{self.name}*")

    def rescaled(self, c) -> "ProjectiveMapSpec":
        c = Fraction(c)
        if not c:
            raise ValueError("scale must be nonzero")
        return ProjectiveMapSpec(self.name, self.source, self.target,
                                 tuple(p.scale(c) for p in self.coordinates))


def tau() -> ProjectiveMapSpec:
    return ProjectiveMapSpec(TAU, ring_P3(), ring_P3(),
                             ("w - 2*x + 2*z", "z", "-y - 2*z", "x + 4*y + 4*z"))


def mu() -> ProjectiveMapSpec:
    return ProjectiveMapSpec(MU, ring_P2(), ring_P2(), ("x - y", "y", "z"))


def nu() -> ProjectiveMapSpec:
    return ProjectiveMapSpec(NU, ring_P1(), ring_P1(), ("x - y", "y"))


def psi_a() -> ProjectiveMapSpec:
    return ProjectiveMapSpec(PSI_A, ring_P1(), ring_P3(),
                             ("2*x^2 - 4*x*y - 6*a*y^2", "x^2 - 2*x*y + y^2",
                              "-x^2 + 3*x*y - 2*y^2", "x^2 - 4*x*y + 4*y^2"))


def i_a() -> ProjectiveMapSpec:
    return ProjectiveMapSpec(I_A, ring_P1(), ring_P2(), ("x", "y", "a*y"))


def identity(ring: PolyRing) -> ProjectiveMapSpec:
    return ProjectiveMapSpec(IDENTITY, ring, ring, tuple(ring.gens()[:-1]))


def _composite_pullback(path: Sequence[ProjectiveMapSpec]) -> RingMap:
    """Pullbacks written left to right as in nu* psi_a*: the last is applied first."""
    if not path:
        raise ShapeMismatch("empty path")
    maps = [m.pullback() for m in path]
    out = maps[0]
    for inner in maps[1:]:
        if inner.target != out.source:
            raise ShapeMismatch(f"{inner.name} does not feed {out.name}")
        out = out.compose(inner)
    return out


def _proportional(a: Sequence[Poly], b: Sequence[Poly]) -> bool:
    ratio = None
    for p, q in zip(a, b):
        if not p and not q:
            continue
        if not p or not q:
            return False
        m = next(iter(p.terms))
        if m not in q.terms:
            return False
        r = Fraction(p.terms[m]) / Fraction(q.terms[m])
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
        if p != q.scale(r):
            return False
    return True


def square_commutes(left: Sequence[ProjectiveMapSpec], right: Sequence[ProjectiveMapSpec],
                    generators: Sequence[str] | None = None, up_to_scalar: bool = False) -> dict:
    """Compare two composite pullbacks on coordinate generators.

    Returns {generator: bool}.  By default equality is exact;
    ``up_to_scalar`` accepts one common nonzero factor.
    """
    f = _composite_pullback(left)
    g = _composite_pullback(right)
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("the two paths have different endpoints")
    gens = list(generators) if generators is not None else list(f.source.variables[:-1])
    ring = f.source
    imgs_f = [f(ring.gen(v)) for v in gens]
    imgs_g = [g(ring.gen(v)) for v in gens]
    if up_to_scalar:
        ok = _proportional(imgs_f, imgs_g)
        return {v: ok for v in gens}
    return {v: p == q for v, p, q in zip(gens, imgs_f, imgs_g)}


# ---------------------------------------------------------------------------
# rational functions

def _content(p: Poly) -> Fraction:
    nums = [Fraction(c) for c in p.terms.values()]
    if not nums:
        return Fraction(1)
    n = 0
    d = 1
    for c in nums:
        n = gcd(n, c.numerator)
        d = d * c.denominator // gcd(d, c.denominator)
    return Fraction(n, d)


class RationalExpr:
    """num/den over one polynomial ring, reduced by rational content only."""

    def __init__(self, num: Poly, den: Poly):
        if num.ring != den.ring:
            raise ShapeMismatch("numerator and denominator live in different rings")
        if not den:
            raise ZeroDivisionError("zero denominator")
        # make the denominator primitive with a positive leading coefficient
        cd = _content(den)
        if Fraction(den.leading()[1]) < 0:
            cd = -cd
        num, den = num.scale(1 / cd), den.scale(1 / cd)
        self.num = num
        self.den = den
        self.ring = num.ring

    @classmethod
    def parse(cls, ring: PolyRing, num: str, den: str = "1") -> "RationalExpr":
        return cls(ring.parse(num), ring.parse(den))

    def __eq__(self, other):
        if not isinstance(other, RationalExpr):
            if isinstance(other, (int, Fraction)):
                other = RationalExpr(self.ring.constant(other), self.ring.one())
            else:
                return NotImplemented
        if other.ring != self.ring:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(self.ring)

    def __str__(self):
        if self.den == self.ring.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalExpr({self})"


def pullback_rational(m: ProjectiveMapSpec, e: RationalExpr) -> RationalExpr:
    if e.ring != m.target:
        raise ShapeMismatch(f"{e} does not live on the codomain of {m.name}")
    pb = m.pullback()
    den = pb(e.den)
    if not den:
        raise ZeroDivisionError(f"the denominator of {e} pulls back to zero")
    return RationalExpr(pb(e.num), den)


def f_expr(perturb: bool = False) -> RationalExpr:
    """(w + 12x + 22y + 8z)/(12x + 6y); ``perturb`` changes 22 to 23."""
    c = 23 if perturb else 22
    return RationalExpr.parse(ring_P3(), f"w + 12*x + {c}*y + 8*z", "12*x + 6*y")


def curve_containment(m: ProjectiveMapSpec, curve_eqs: Sequence) -> bool:
    pb = m.pullback()
    eqs = [e if isinstance(e, Poly) else m.target.parse(e) for e in curve_eqs]
    return all(not pb(e) for e in eqs)


def C_a_equations() -> list[Poly]:
    R = ring_P3()
    return [R.parse("w + 6*a*x + (4 + 12*a)*y + (2 + 6*a)*z"), R.parse("x*z - y^2")]


def quadric_X() -> Poly:
    return ring_P3().parse("x*z - y^2")


def gamma_check(generator: int = 2, perturb: bool = False) -> bool:
    """Psi_a rho = gamma lambda_a on e1 or e2.

    For e2 this is psi_a*(f) = lambda_a(e2)/(x(x - y)); for e1 both sides
    are s, so the coefficient is lambda_a(e1)/x = 1.
    """
    R = ring_P1()
    if generator == 1:
        return RationalExpr(R.parse("x"), R.parse("x")) == 1
    if generator == 2:
        lhs = pullback_rational(psi_a(), f_expr(perturb))
        rhs = RationalExpr(R.parse("(x - a*y)*y"), R.parse("x*(x - y)"))
        return lhs == rhs
    raise ValueError("gamma is only checked on the generators e1 and e2")


def inverse_check() -> bool:
    """[2x + y : x + y] undoes psi_a as a rational map on C_a.

    The pullbacks of 2x + y and x + y are x(x - y) and y(x - y), so the
    composite is [x : y] after removing the common factor x - y.
    """
    R3 = ring_P3()
    pb = psi_a().pullback()
    first, second = pb(R3.parse("2*x + y")), pb(R3.parse("x + y"))
    R1 = ring_P1()
    x, y = R1.gen("x"), R1.gen("y")
    return first * y == second * x and bool(first)


def ia_phi_equals_lambda(max_index: int = 6) -> dict:
    """i_a* phi(e_n) = lambda_a(e_n) for n = 1..max_index (a generic)."""
    from .morphlab import EnvMorphism, GENERIC, LAMBDA, PHI
    phi = EnvMorphism(PHI)
    lam = EnvMorphism(LAMBDA, GENERIC)
    fld = ratfunc_field("a")
    src = phi.target.carrier
    dst = lam.target.carrier
    ia = RingMap(src, dst, {"x": dst.gen("x"), "y": dst.gen("y"),
                            "z": dst.gen("y") * fld.gen()}, name="i_a*")
    return {n: ia(phi.generator_image(n).value) == lam.generator_image(n).value
            for n in range(1, max_index + 1)}


def geometry_summary() -> dict:
    """The psi_a square on each coordinate and the pullback of f, as text."""
    sq = square_commutes([nu(), psi_a()], [psi_a(), tau()], ["w", "x", "y", "z"])
    out = {f"square {v}": sq[v] for v in ["w", "x", "y", "z"]}
    out["psi_a*(f)"] = str(pullback_rational(psi_a(), f_expr()))
    return out


__all__ = [
    "ProjectiveMapSpec", "RationalExpr", "ShapeMismatch", "square_commutes", "pullback_rational",
    "curve_containment", "gamma_check", "inverse_check", "ia_phi_equals_lambda", "tau", "mu",
    "nu", "psi_a", "i_a", "identity", "f_expr", "C_a_equations", "quadric_X", "geometry_summary",
    "ring_P1", "ring_P2", "ring_P3",
]
