"""Reduced Gröbner bases (Buchberger) and the elimination-order criteria built on them.

* :func:`gb_inverse` -- elimination criterion: with every ``X`` above every
  ``Y``, the reduced basis of ``(Y_i - F_i(X))`` is ``{X_i - G_i(Y)}`` exactly when
  ``F`` is invertible, and then ``G`` is the inverse.
* :func:`gb_point_preimage` -- the basis of ``(c_i - F_i)`` is ``{X_i - b_i}`` exactly
  when ``F(X) = c`` has the single solution ``b``.
* :func:`gb_curve_preimage` -- the same in ``k[t][X]`` with ``t`` below every ``X``.

Buchberger here is field-only and uses the coprime and chain criteria with the
normal (smallest lcm first) selection strategy.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import Sequence

from . import poly as P
from .endo import Curve, PolyMap, apply_to_curve
from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    block_order,
    embed,
    monomial_divides,
    monomial_lcm,
)
from .ring import QQ, ZZ, DomainMismatch


class _Keys(dict):
    """Memoised order keys, negated so that ``heapq`` pops the largest monomial first."""

    def __init__(self, order):
        super().__init__()
        self.order = order

    def __missing__(self, m):
        k = tuple(-v for v in self.order.key(m))
        self[m] = k
        return k


def _lead(terms, keys):
    return min(terms, key=keys.__getitem__)


def _reduce(terms, basis, keys, norm, full=True):
    """Remainder of ``terms`` modulo ``basis`` (a list of ``(lm, monic terms)``)."""
    p = dict(terms)
    heap = [(keys[m], m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, g in basis:
            if monomial_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    mm = tuple(a + b for a, b in zip(gm, shift))
                    old = p.get(mm)
                    if old is None:
                        p[mm] = norm(-c * gc)
                        heapq.heappush(heap, (keys[mm], mm))
                    else:
                        v = norm(old - c * gc)
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _monic(terms, keys, dom):
    lm = _lead(terms, keys)
    inv = dom.inv(terms[lm])
    if inv == 1:
        return lm, terms
    return lm, {m: dom.normalize(c * inv) for m, c in terms.items()}


def _spoly(f, g, dom):
    (lf, tf), (lg, tg) = f, g
    lcm = monomial_lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for m, c in tf.items():
        out[tuple(a + b for a, b in zip(m, sf))] = c
    for m, c in tg.items():
        mm = tuple(a + b for a, b in zip(m, sg))
        v = dom.normalize(out.get(mm, 0) - c)
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _buchberger(polys, order, dom, nvars):
    keys = _Keys(order)
    norm = dom.normalize
    G = []
    for f in polys:
        if f:
            G.append(_monic(dict(f.terms), keys, dom))
    if not G:
        return []
    pending = set()
    heap = []

    def push(i, j):
        lcm = monomial_lcm(G[i][0], G[j][0])
        pending.add((i, j))
        heapq.heappush(heap, (tuple(-v for v in keys[lcm]), i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = G[i][0], G[j][0]
        if _coprime(li, lj):
            continue
        lcm = monomial_lcm(li, lj)
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not monomial_divides(G[k][0], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(G[i], G[j], dom), G, keys, norm)
        if r:
            G.append(_monic(r, keys, dom))
            new = len(G) - 1
            for k in range(new):
                push(k, new)
    return _interreduce(G, keys, dom)


def _interreduce(G, keys, dom):
    # minimal basis: drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, (lm, g) in enumerate(G):
        dominated = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx or not monomial_divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                dominated = True
                break
        if not dominated:
            minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = {m: c for m, c in g.items() if m != lm}
        r = _reduce(tail, others, keys, dom.normalize)
        r[lm] = 1
        out.append((lm, r))
    out.sort(key=lambda t: keys[t[0]])
    return out


# -- public surface -----------------------------------------------------------


@dataclass
class IdealBasis:
    """Generators in a common ring together with the monomial order to use."""

    generators: list
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        self.generators = list(self.generators)
        if not self.generators:
            raise ValueError("an ideal basis needs at least one generator")
        dom, nv = self.generators[0].domain, self.generators[0].nvars
        for g in self.generators:
            if g.domain != dom or g.nvars != nv:
                raise P.ArityMismatch("generators must share domain and arity")
        if not dom.is_field:
            raise DomainMismatch(f"Buchberger needs a field, got {dom}")

    @property
    def domain(self):
        return self.generators[0].domain

    @property
    def nvars(self):
        return self.generators[0].nvars


class Shape(enum.Enum):
    LINEAR_IN_X = "linear-in-X"
    UNIT = "unit"  # the basis is {1}
    OTHER = "other"


@dataclass
class GroebnerResult:
    basis: list  # reduced, monic, largest leading monomial first
    order: MonomialOrder
    shape: Shape
    solved: dict = field(default_factory=dict)  # X index -> polynomial in the low block

    def leading_monomials(self):
        return [P.leading_term(g, self.order)[0] for g in self.basis]


def _high_vars(order, nvars):
    if order.kind == "block":
        return tuple(order.high)
    return tuple(range(nvars))


def _classify(basis, order, nvars):
    if len(basis) == 1 and basis[0].degree() == 0:
        return Shape.UNIT, {}
    high = _high_vars(order, nvars)
    hs = set(high)
    solved = {}
    for g in basis:
        lm, _ = P.leading_term(g, order)
        lead_vars = [i for i, e in enumerate(lm) if e]
        if sum(lm) != 1 or lead_vars[0] not in hs:
            return Shape.OTHER, {}
        i = lead_vars[0]
        tail = g - Polynomial.variable(g.domain, nvars, i)
        if tail.variables_used() & hs:
            return Shape.OTHER, {}
        solved[i] = -tail
    if set(solved) != hs or len(basis) != len(hs):
        return Shape.OTHER, {}
    return Shape.LINEAR_IN_X, solved


def buchberger_reduced(gens, order: MonomialOrder | None = None) -> GroebnerResult:
    """Reduced Gröbner basis of ``gens`` (an :class:`IdealBasis` or a list of polynomials)."""
    if not isinstance(gens, IdealBasis):
        gens = IdealBasis(gens, order or GREVLEX)
    elif order is not None:
        gens = IdealBasis(gens.generators, order)
    dom, nv, order = gens.domain, gens.nvars, gens.order
    raw = _buchberger(gens.generators, order, dom, nv)
    basis = [Polynomial._raw(dom, nv, g) for _, g in raw]
    shape, solved = _classify(basis, order, nv)
    return GroebnerResult(basis, order, shape, solved)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of ``f`` on division by ``basis``: no remainder term is divisible by a leading term."""
    dom = f.domain
    if not dom.is_field:
        raise DomainMismatch(f"normal_form needs a field, got {dom}")
    keys = _Keys(order)
    G = [_monic(dict(g.terms), keys, dom) for g in basis if g]
    return Polynomial._raw(dom, f.nvars, _reduce(f.terms, G, keys, dom.normalize))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    keys = _Keys(order)
    dom = f.domain
    return Polynomial._raw(
        dom, f.nvars, _spoly(_monic(dict(f.terms), keys, dom), _monic(dict(g.terms), keys, dom), dom)
    )


def _field_map(F: PolyMap):
    if F.domain.is_field:
        return F
    if F.domain == ZZ:
        return PolyMap([P.change_domain(c, QQ) for c in F], F.names)
    raise DomainMismatch(f"unsupported domain {F.domain}")


def essen_basis(F: PolyMap, inner: str = "grevlex") -> GroebnerResult:
    """Reduced basis of ``(Y_i - F_i(X))`` in ``k[X, Y]`` with the X block on top."""
    Fk = _field_map(F)
    n = F.n
    xs, ys = list(range(n)), list(range(n, 2 * n))
    gens = [
        Polynomial.variable(Fk.domain, 2 * n, n + i) - embed(c, 2 * n, xs)
        for i, c in enumerate(Fk)
    ]
    return buchberger_reduced(IdealBasis(gens, block_order(xs, ys, inner)))


def gb_inverse(F: PolyMap, inner: str = "grevlex") -> PolyMap | None:
    """The inverse of ``F`` read off a shape basis, or ``None`` if ``F`` is not invertible.

    Maps over ZZ are computed over QQ; an inverse with non-integral
    coefficients means ``F`` is not invertible over ZZ.
    """
    res = essen_basis(F, inner)
    if res.shape is not Shape.LINEAR_IN_X:
        return None
    n = F.n
    comps = []
    for i in range(n):
        g = res.solved[i]
        # rename Y_i -> X_i
        small = {m[n:]: c for m, c in g.terms.items()}
        if F.domain == ZZ:
            if any(getattr(c, "denominator", 1) != 1 for c in small.values()):
                return None
        comps.append(Polynomial(F.domain, n, small))
    return PolyMap(comps, F.names)


class PointStatus(enum.Enum):
    UNIQUE = "unique"
    NOT_UNIQUE = "not-unique"
    EMPTY = "empty"


@dataclass
class GBPointPreimage:
    status: PointStatus
    point: tuple | None
    basis: GroebnerResult


def gb_point_preimage(F: PolyMap, c, inner: str = "grevlex") -> GBPointPreimage:
    Fk = _field_map(F)
    n = F.n
    c = [Fk.domain.convert(v) for v in c]
    if len(c) != n:
        raise P.ArityMismatch(f"point of length {len(c)} for n={n}")
    gens = [Polynomial.constant(Fk.domain, n, ci) - fi for ci, fi in zip(c, Fk)]
    res = buchberger_reduced(IdealBasis(gens, block_order(range(n), (), inner)))
    if res.shape is Shape.UNIT:
        return GBPointPreimage(PointStatus.EMPTY, None, res)
    if res.shape is Shape.LINEAR_IN_X:
        b = tuple(res.solved[i].constant_term() for i in range(n))
        if F.domain == ZZ and any(getattr(v, "denominator", 1) != 1 for v in b):
            return GBPointPreimage(PointStatus.EMPTY, None, res)
        return GBPointPreimage(PointStatus.UNIQUE, b, res)
    return GBPointPreimage(PointStatus.NOT_UNIQUE, None, res)


class CurveStatus(enum.Enum):
    FOUND = "found"
    SHAPE_BASIS = "shape-basis"  # linear shape whose solution fails F(g) == f; not expected
    EVIDENCE = "no-polynomial-preimage-evidence"


@dataclass
class GBCurvePreimage:
    status: CurveStatus
    curve: Curve | None
    basis: GroebnerResult


def _back_substitute(basis, n, dom):
    """Solve generators of the form ``a*X_i - r(t)`` one variable at a time."""
    known = {}
    t_idx = n
    polys = list(basis)
    progress = True
    while progress and len(known) < n:
        progress = False
        for g in polys:
            sub = g
            if known:
                args = [
                    known.get(i, Polynomial.variable(dom, n + 1, i)) for i in range(n)
                ] + [Polynomial.variable(dom, n + 1, t_idx)]
                sub = P.compose(g, args)
            xs = sub.variables_used() - {t_idx}
            if len(xs) != 1:
                continue
            (i,) = xs
            if i in known:
                continue
            lin = {m: c for m, c in sub.terms.items() if m[i]}
            if any(m[i] != 1 or sum(m) != 1 for m in lin):
                continue
            (a,) = lin.values()
            tail = sub - Polynomial._raw(dom, n + 1, lin)
            known[i] = P.scale(-tail, dom.inv(a))
            progress = True
    if len(known) < n:
        return None
    return [Polynomial(dom, 1, {(m[t_idx],): c for m, c in known[i].terms.items()}) for i in range(n)]


def gb_curve_preimage(F: PolyMap, f: Curve, inner: str = "grevlex") -> GBCurvePreimage:
    """Preimage curve of ``f`` from the reduced basis of ``(F - f)`` in ``k[t][X]``."""
    if F.n != f.n:
        raise P.ArityMismatch(f"map n={F.n}, curve n={f.n}")
    if F.domain != f.domain:
        raise DomainMismatch(f"{F.domain} vs {f.domain}")
    Fk = _field_map(F)
    dom, n = Fk.domain, F.n
    xs = list(range(n))
    gens = [
        embed(fi, n + 1, xs) - embed(P.change_domain(ci, dom), n + 1, [n])
        for fi, ci in zip(Fk, f)
    ]
    res = buchberger_reduced(IdealBasis(gens, block_order(xs, [n], inner)))

    def as_curve(comps):
        comps = [P.change_domain(c, F.domain) if F.domain != dom else c for c in comps]
        return Curve(comps, f.var)

    def verifies(comps):
        if any(c.constant_term() for c in comps):
            return False
        if F.domain == ZZ and any(
            getattr(v, "denominator", 1) != 1 for c in comps for v in c.terms.values()
        ):
            return False
        return apply_to_curve(F, as_curve(comps)) == f

    if res.shape is Shape.LINEAR_IN_X:
        comps = [
            Polynomial(dom, 1, {(m[n],): c for m, c in res.solved[i].terms.items()})
            for i in range(n)
        ]
        if verifies(comps):
            return GBCurvePreimage(CurveStatus.FOUND, as_curve(comps), res)
        return GBCurvePreimage(CurveStatus.SHAPE_BASIS, None, res)
    if res.shape is Shape.OTHER:
        comps = _back_substitute(res.basis, n, dom)
        if comps is not None and verifies(comps):
            return GBCurvePreimage(CurveStatus.FOUND, as_curve(comps), res)
    return GBCurvePreimage(CurveStatus.EVIDENCE, None, res)
