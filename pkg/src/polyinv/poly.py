"""Sparse multivariate polynomials over an exact :class:`~polyinv.ring.Domain`.

A polynomial is a map from exponent tuples to nonzero coefficients. Monomials
are plain tuples of non-negative ints, one entry per variable. Instances are
treated as immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from operator import add as _add
from typing import Iterable, Sequence

from .ring import Domain, DomainMismatch

Monomial = tuple  # tuple[int, ...]

NEG_INF = -math.inf  # degree of the zero polynomial


class ArityMismatch(ValueError):
    pass


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(_add, a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


class Polynomial:
    __slots__ = ("domain", "nvars", "terms", "_hash")

    def __init__(self, domain: Domain, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise ArityMismatch(f"bad monomial {m} for {nvars} variables")
            c = domain.convert(c)
            if c:
                c = domain.normalize(clean.get(m, 0) + c)
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self.domain = domain
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, domain, nvars, terms):
        # terms must already be canonical: no zeros, converted coefficients
        obj = cls.__new__(cls)
        obj.domain = domain
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, domain, nvars):
        return cls._raw(domain, nvars, {})

    @classmethod
    def constant(cls, domain, nvars, c):
        c = domain.convert(c)
        return cls._raw(domain, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, domain, nvars, i):
        m = [0] * nvars
        m[i] = 1
        return cls._raw(domain, nvars, {tuple(m): 1})

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def coeff(self, m):
        return self.terms.get(tuple(m), 0)

    def variables_used(self) -> set[int]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.domain == other.domain
                and self.nvars == other.nvars
                and self.terms == other.terms
            )
        if isinstance(other, (int,)) or _is_rational(other):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: self.domain.convert(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        from .parsing import format_poly

        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Polynomial({format_poly(self, names)!r}, {self.domain})"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, int) or _is_rational(other):
            return Polynomial.constant(self.domain, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(other, neg(self))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, self._coerce(other))
        if isinstance(other, int) or _is_rational(other):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial.constant(self.domain, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result


def _is_rational(x):
    from numbers import Rational

    return isinstance(x, Rational)


def _check_pair(f: Polynomial, g: Polynomial):
    if f.domain != g.domain:
        raise DomainMismatch(f"{f.domain} vs {g.domain}")
    if f.nvars != g.nvars:
        raise ArityMismatch(f"{f.nvars} vs {g.nvars} variables")


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_pair(f, g)
    if len(f.terms) < len(g.terms):
        f, g = g, f
    out = dict(f.terms)
    norm = f.domain.normalize
    for m, c in g.terms.items():
        v = out.get(m)
        if v is None:
            out[m] = c
        else:
            v = norm(v + c)
            if v:
                out[m] = v
            else:
                del out[m]
    return Polynomial._raw(f.domain, f.nvars, out)


def neg(f: Polynomial) -> Polynomial:
    norm = f.domain.normalize
    return Polynomial._raw(f.domain, f.nvars, {m: norm(-c) for m, c in f.terms.items()})


def sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return add(f, neg(g))


def scale(f: Polynomial, c) -> Polynomial:
    c = f.domain.convert(c)
    if not c:
        return Polynomial.zero(f.domain, f.nvars)
    norm = f.domain.normalize
    out = {}
    for m, v in f.terms.items():
        v = norm(v * c)
        if v:
            out[m] = v
    return Polynomial._raw(f.domain, f.nvars, out)


def mul(f: Polynomial, g: Polynomial, max_degree=None) -> Polynomial:
    """Product ``f*g``; with ``max_degree`` only terms of total degree <= it are kept."""
    _check_pair(f, g)
    if len(f.terms) > len(g.terms):
        f, g = g, f
    norm = f.domain.normalize
    out: dict = {}
    get = out.get
    if max_degree is None:
        gi = list(g.terms.items())
        for m1, c1 in f.terms.items():
            for m2, c2 in gi:
                m = tuple(map(_add, m1, m2))
                out[m] = get(m, 0) + c1 * c2
    else:
        gi = sorted(((sum(m), m, c) for m, c in g.terms.items()), key=lambda t: t[0])
        for m1, c1 in f.terms.items():
            room = max_degree - sum(m1)
            if room < 0:
                continue
            for d2, m2, c2 in gi:
                if d2 > room:
                    break
                m = tuple(map(_add, m1, m2))
                out[m] = get(m, 0) + c1 * c2
    clean = {}
    for m, c in out.items():
        c = norm(c)
        if c:
            clean[m] = c
    return Polynomial._raw(f.domain, f.nvars, clean)


def mul_term(f: Polynomial, m: Monomial, c) -> Polynomial:
    norm = f.domain.normalize
    out = {}
    for m1, c1 in f.terms.items():
        v = norm(c1 * c)
        if v:
            out[tuple(map(_add, m1, m))] = v
    return Polynomial._raw(f.domain, f.nvars, out)


def degree(f: Polynomial):
    """Total degree; ``-inf`` for the zero polynomial."""
    return f.degree()


def truncate_total_degree(f: Polynomial, d: int) -> Polynomial:
    return Polynomial._raw(
        f.domain, f.nvars, {m: c for m, c in f.terms.items() if sum(m) <= d}
    )


def homogeneous_part(f: Polynomial, d: int) -> Polynomial:
    return Polynomial._raw(
        f.domain, f.nvars, {m: c for m, c in f.terms.items() if sum(m) == d}
    )


def linear_part(f: Polynomial) -> Polynomial:
    return homogeneous_part(f, 1)


def affine_part(f: Polynomial) -> Polynomial:
    return truncate_total_degree(f, 1)


def evaluate(f: Polynomial, point: Sequence):
    """Exact value of ``f`` at ``point``."""
    if len(point) != f.nvars:
        raise ArityMismatch(f"point has {len(point)} coordinates, expected {f.nvars}")
    dom = f.domain
    point = [dom.convert(v) for v in point]
    total = 0
    for m, c in f.terms.items():
        v = c
        for x, e in zip(point, m):
            if e:
                v = v * x**e
        total += v
    return dom.normalize(total) if not dom.p else total % dom.p


def compose(f: Polynomial, args: Sequence[Polynomial], max_degree=None) -> Polynomial:
    """``f(args[0], ..., args[n-1])``.

    Monomial values are memoised: each monomial is one cached monomial times a
    single argument. ``max_degree`` truncates every intermediate product, which
    is exact because truncation is a ring map modulo ``(x_1..x_m)**(max_degree+1)``.
    """
    if len(args) != f.nvars:
        raise ArityMismatch(f"{f.nvars} arguments expected, got {len(args)}")
    if not args:
        raise ArityMismatch("no arguments")
    dom, m_vars = args[0].domain, args[0].nvars
    for a in args:
        if a.domain != dom or a.nvars != m_vars:
            raise ArityMismatch("composition arguments must share domain and arity")
    if f.domain != dom:
        raise DomainMismatch(f"{f.domain} vs {dom}")
    if max_degree is not None:
        args = [truncate_total_degree(a, max_degree) for a in args]
    one = (0,) * f.nvars
    cache = {one: Polynomial.constant(dom, m_vars, 1)}

    def value(m):
        v = cache.get(m)
        if v is None:
            i = max(k for k, e in enumerate(m) if e)
            lower = m[:i] + (m[i] - 1,) + m[i + 1 :]
            v = mul(value(lower), args[i], max_degree)
            cache[m] = v
        return v

    norm = dom.normalize
    out: dict = {}
    get = out.get
    for m, c in sorted(f.terms.items()):
        for mm, cc in value(m).terms.items():
            out[mm] = get(mm, 0) + c * cc
    clean = {}
    for m, c in out.items():
        c = norm(c)
        if c:
            clean[m] = c
    return Polynomial._raw(dom, m_vars, clean)


def from_univariate(domain: Domain, coeffs: Iterable) -> Polynomial:
    """Univariate polynomial from the coefficient list ``[c0, c1, ...]``."""
    return Polynomial(domain, 1, {(k,): c for k, c in enumerate(coeffs)})


def map_coefficients(f: Polynomial, fn, domain: Domain | None = None) -> Polynomial:
    domain = domain or f.domain
    return Polynomial(domain, f.nvars, {m: fn(c) for m, c in f.terms.items()})


def change_domain(f: Polynomial, domain: Domain) -> Polynomial:
    return Polynomial(domain, f.nvars, f.terms)


def embed(f: Polynomial, nvars: int, positions: Sequence[int]) -> Polynomial:
    """Rename variable ``i`` of ``f`` to variable ``positions[i]`` of a larger ring."""
    out = {}
    for m, c in f.terms.items():
        big = [0] * nvars
        for i, e in zip(positions, m):
            big[i] += e
        out[tuple(big)] = c
    return Polynomial._raw(f.domain, nvars, out)


# -- monomial orders ---------------------------------------------------------


def _lex_key(m):
    return m


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


_INNER = {"lex": _lex_key, "grevlex": _grevlex_key}


@dataclass(frozen=True)
class MonomialOrder:
    """Lex, GrevLex, or a block (elimination) order.

    A block order compares the ``high`` variables first with ``inner_high``; ties
    are broken on the ``low`` variables with ``inner_low``. Any monomial that
    involves a high variable therefore beats every monomial in low variables only.
    """

    kind: str  # "lex" | "grevlex" | "block"
    high: tuple = ()
    low: tuple = ()
    inner_high: str = "grevlex"
    inner_low: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if set(self.high) & set(self.low):
                raise ValueError("blocks must be disjoint")
            if self.inner_high not in _INNER or self.inner_low not in _INNER:
                raise ValueError("inner orders must be 'lex' or 'grevlex'")

    def key(self, m: Monomial) -> tuple:
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        hi = tuple(m[i] for i in self.high)
        lo = tuple(m[i] for i in self.low)
        return _INNER[self.inner_high](hi) + _INNER[self.inner_low](lo)

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ArityMismatch("monomials of different length")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(high: Sequence[int], low: Sequence[int], inner: str = "grevlex") -> MonomialOrder:
    return MonomialOrder("block", tuple(high), tuple(low), inner, inner)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder = GREVLEX) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or greater than ``m2``."""
    return order.compare(tuple(m1), tuple(m2))


def sorted_terms(f: Polynomial, order: MonomialOrder = GREVLEX):
    """Terms of ``f`` from the largest monomial down."""
    return sorted(f.terms.items(), key=lambda t: order.key(t[0]), reverse=True)


def leading_term(f: Polynomial, order: MonomialOrder = GREVLEX):
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]
