"""Enveloping algebras of the Witt algebra in PBW normal form.

Elements of U(W+) (indices >= 1) and U(W) (any integer index) are stored as
maps from weakly increasing index tuples to scalars.  A word is brought to
normal form by repeatedly rewriting an adjacent inversion

    e_j e_i  ->  e_i e_j + (i - j) e_{i+j}        (j > i),

which is the relation e_j e_i - e_i e_j = [e_j, e_i].  The free algebra
k<t1, t2> with deg t_i = i is also provided, together with the projection
t_i -> e_i.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .scalars import RATIONALS, RatFunc, ScalarField, canon_q, field_of, format_rational

WPLUS = "wplus"
WITT = "witt"


class ModeError(ValueError):
    """An index or operation is not allowed in the current mode."""


def _check_word(word: Sequence[int], mode: str) -> tuple:
    word = tuple(int(i) for i in word)
    if mode == WPLUS and any(i < 1 for i in word):
        raise ModeError(f"index below 1 in W+ mode: {word}")
    if mode not in (WPLUS, WITT):
        raise ModeError(f"unknown mode {mode!r}")
    return word


# ---------------------------------------------------------------------------
# straightening

_caches = {"left": {}, "right": {}}
_cache_lock = threading.Lock()


def _inversion(word: tuple, strategy: str) -> int:
    rng = range(len(word) - 1) if strategy == "left" else range(len(word) - 2, -1, -1)
    for p in rng:
        if word[p] > word[p + 1]:
            return p
    return -1


def _normal_form(word: tuple, strategy: str = "left") -> dict:
    """Normal form of a word as {sorted tuple: integer coefficient}."""
    cache = _caches[strategy]
    hit = cache.get(word)
    if hit is not None:
        return hit
    # iterative worklist: expand until every pending word is cached
    stack = [word]
    while stack:
        w = stack[-1]
        if w in cache:
            stack.pop()
            continue
        p = _inversion(w, strategy)
        if p < 0:
            cache[w] = {w: 1}
            stack.pop()
            continue
        j, i = w[p], w[p + 1]
        swapped = w[:p] + (i, j) + w[p + 2:]
        merged = w[:p] + (i + j,) + w[p + 2:]
        missing = [x for x in (swapped, merged) if x not in cache]
        if missing:
            stack.extend(missing)
            continue
        out = dict(cache[swapped])
        coef = i - j
        for m, c in cache[merged].items():
            s = out.get(m, 0) + coef * c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        cache[w] = out
        stack.pop()
    return cache[word]


def straighten(word: Sequence[int], mode: str = WPLUS, strategy: str = "left") -> "EnvElement":
    """PBW normal form of the product e_{w1} e_{w2} ... e_{wk}."""
    word = _check_word(word, mode)
    if strategy not in _caches:
        raise ValueError(f"unknown strategy {strategy!r}")
    return EnvElement(mode, dict(_normal_form(word, strategy)))


def clear_caches() -> None:
    with _cache_lock:
        for c in _caches.values():
            c.clear()


# ---------------------------------------------------------------------------
# elements

def _mono_key(m: tuple):
    # printing order: longer monomials first, then index tuples ascending
    return (-len(m), m)


def _format_word(m: tuple, letter: str) -> str:
    if not m:
        return "1"
    parts = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        k = j - i
        parts.append(f"{letter}{m[i]}" + (f"^{k}" if k > 1 else ""))
        i = j
    return "*".join(parts)


def _format_terms(terms: Mapping, letter: str, key) -> str:
    if not terms:
        return "0"
    out = []
    for m in sorted(terms, key=key):
        c = terms[m]
        if isinstance(c, RatFunc) and not c.is_constant():
            if c.needs_parens():
                text, neg = f"({c})", False
            elif c.num[-1] < 0:
                text, neg = str(-c), True
            else:
                text, neg = str(c), False
        else:
            q = canon_q(c.constant_value() if isinstance(c, RatFunc) else c)
            text, neg = format_rational(abs(q)), q < 0
        mono = _format_word(m, letter)
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


def _add_terms(a: dict, b: Mapping, scale=1) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        v = c * scale if scale != 1 else c
        s = v if s is None else s + v
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


class _LinearTerms:
    """Shared arithmetic for sparse linear combinations of words."""

    __slots__ = ("terms",)

    def _new(self, terms):
        raise NotImplementedError

    def _compatible(self, other):
        raise NotImplementedError

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._new(_add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._new(_add_terms(self.terms, other.terms, -1))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c):
        if not c:
            return self._new({})
        return self._new({m: v * c for m, v in self.terms.items() if v * c})

    def __truediv__(self, c):
        from fractions import Fraction
        if isinstance(c, RatFunc):
            return self.scale(c.inverse())
        return self.scale(canon_q(Fraction(1) / Fraction(c)))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self) -> set:
        return {self.word_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero element has no degree")
        return max(self.degrees())

    def field(self) -> ScalarField:
        return field_of(*self.terms.values())

    def coefficient(self, m) -> object:
        return self.terms.get(tuple(m), 0)


class EnvElement(_LinearTerms):
    """Element of U(W+) or U(W) in PBW form."""

    __slots__ = ("mode",)

    def __init__(self, mode: str, terms: Mapping | None = None):
        self.mode = mode
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if list(m) != sorted(m):
                raise ValueError(f"{m} is not a PBW monomial")
            _check_word(m, mode)
            if c:
                clean[m] = c
        self.terms = clean

    @staticmethod
    def word_degree(m: tuple) -> int:
        return sum(m)

    def _new(self, terms):
        out = EnvElement.__new__(EnvElement)
        out.mode = self.mode
        out.terms = terms
        return out

    def _lift(self, other):
        if isinstance(other, EnvElement):
            if other.mode != self.mode:
                raise ModeError(f"{self.mode} vs {other.mode}")
            return other
        if isinstance(other, _LinearTerms):
            return NotImplemented
        return self._new({(): other} if other else {})

    def __mul__(self, other):
        if isinstance(other, EnvElement):
            return env_mul(self, other)
        if isinstance(other, _LinearTerms):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self._new({(): 1})
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        return _format_terms(self.terms, "e", _mono_key)

    def __repr__(self):
        return f"EnvElement({self})"

    def monomials(self) -> list:
        return sorted(self.terms, key=_mono_key)

    def specialize(self, a0) -> "EnvElement":
        from .scalars import ratfunc_eval
        return self._new({m: ratfunc_eval(c, a0) for m, c in self.terms.items()
                          if ratfunc_eval(c, a0)})


def env_gen(n: int, mode: str = WPLUS) -> EnvElement:
    return EnvElement(mode, {(n,): 1})


def env_one(mode: str = WPLUS) -> EnvElement:
    return EnvElement(mode, {(): 1})


def env_from_word(word: Sequence[int], mode: str = WPLUS) -> EnvElement:
    return straighten(word, mode)


def env_mul(f: EnvElement, g: EnvElement, strategy: str = "left") -> EnvElement:
    """PBW form of f g: concatenate monomials and straighten, bilinearly."""
    if f.mode != g.mode:
        raise ModeError(f"{f.mode} vs {g.mode}")
    out: dict = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            c = c1 * c2
            for m, k in _normal_form(m1 + m2, strategy).items():
                s = out.get(m)
                v = c * k
                s = v if s is None else s + v
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
    return f._new(out)


def bracket(x: EnvElement, y: EnvElement) -> EnvElement:
    """[x, y] = xy - yx."""
    return env_mul(x, y) - env_mul(y, x)


def ad_power(x: EnvElement, k: int, y: EnvElement) -> EnvElement:
    """ad(x)^k (y) = [x, [x, ... [x, y]]]."""
    if x.mode != y.mode:
        raise ModeError(f"{x.mode} vs {y.mode}")
    out = y
    for _ in range(k):
        out = bracket(x, out)
    return out


@lru_cache(maxsize=None)
def _partitions_desc(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, min(n, largest) + 1):
        for rest in _partitions_desc(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def env_basis(n: int, mode: str = WPLUS) -> list:
    """PBW monomials of degree n, as weakly increasing tuples.

    Order: the partitions written in decreasing parts, sorted ascending, so
    degree 6 starts e1^6, e1^4*e2, e1^2*e2^2, e2^3, e1^3*e3 and ends e1*e5, e6.
    """
    if mode != WPLUS:
        raise ModeError("graded pieces of U(W) are infinite")
    if n < 0:
        return []
    return [tuple(reversed(p)) for p in sorted(_partitions_desc(n, n))]


def partition_count(n: int) -> int:
    return len(_partitions_desc(n, n)) if n >= 0 else 0


def env_vector(f: EnvElement, basis: Sequence[tuple]) -> list:
    return [f.terms.get(m, 0) for m in basis]


def env_from_vector(vec: Sequence, basis: Sequence[tuple], mode: str = WPLUS) -> EnvElement:
    return EnvElement(mode, {m: c for m, c in zip(basis, vec) if c})


def parse_env(text: str, mode: str = WPLUS, field: ScalarField = RATIONALS) -> EnvElement:
    """Parse text such as ``2*e1*e3 - e2^2 - e4`` (``e-1`` in W mode)."""
    from .parsing import parse_expression

    def known(name):
        return (name.startswith("e") and _is_int(name[1:])) or name == field.param

    def resolve(name):
        if field.param and name == field.param:
            return field.gen()
        return env_gen(int(name[1:]), mode)

    val = parse_expression(text, resolve, known)
    if not isinstance(val, EnvElement):
        val = env_one(mode).scale(val)
    return val


def _is_int(s: str) -> bool:
    try:
        int(s)
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# the free algebra k<t1, t2>

class FreeElement(_LinearTerms):
    """Element of k<t1, t2>; words are tuples over {1, 2}."""

    __slots__ = ()

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if any(i not in (1, 2) for i in m):
                raise ValueError(f"letters must be t1 or t2: {m}")
            if c:
                clean[m] = c
        self.terms = clean

    @staticmethod
    def word_degree(m: tuple) -> int:
        return sum(m)

    def _new(self, terms):
        out = FreeElement.__new__(FreeElement)
        out.terms = terms
        return out

    def _lift(self, other):
        if isinstance(other, FreeElement):
            return other
        if isinstance(other, _LinearTerms):
            return NotImplemented
        return self._new({(): other} if other else {})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 + m2
                    s = out.get(m)
                    v = c1 * c2
                    s = v if s is None else s + v
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return self._new(out)
        if isinstance(other, _LinearTerms):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self._new({(): 1})
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        return _format_terms(self.terms, "t", _mono_key)

    def __repr__(self):
        return f"FreeElement({self})"


def free_gen(i: int) -> FreeElement:
    return FreeElement({(i,): 1})


def free_bracket(x: FreeElement, y: FreeElement) -> FreeElement:
    return x * y - y * x


def free_word_basis(n: int) -> list:
    """Words in t1, t2 of weighted degree n, in ascending lexicographic order."""
    if n < 0:
        return []
    return list(_free_words(n))


@lru_cache(maxsize=None)
def _free_words(n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in (1, 2):
        if first <= n:
            out.extend((first,) + rest for rest in _free_words(n - first))
    return tuple(out)


def free_reduce_and_project(f: FreeElement, mode: str = WPLUS) -> EnvElement:
    """Image under t1 -> e1, t2 -> e2, in PBW form."""
    out: dict = {}
    for word, c in f.terms.items():
        for m, k in _normal_form(word).items():
            s = out.get(m)
            v = c * k
            s = v if s is None else s + v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return _raw_env(mode, out)


def _raw_env(mode: str, terms: dict) -> EnvElement:
    out = EnvElement.__new__(EnvElement)
    out.mode = mode
    out.terms = terms
    return out


def parse_free(text: str, field: ScalarField = RATIONALS) -> FreeElement:
    """Parse text such as ``t1^2*t2 - t2*t1^2 - 2*t2^2``."""
    from .parsing import parse_expression
    names = {"t1": free_gen(1), "t2": free_gen(2)}
    if field.param:
        names[field.param] = field.gen()
    val = parse_expression(text, names.__getitem__, names.__contains__)
    if not isinstance(val, FreeElement):
        val = FreeElement({(): val})
    return val
