"""Seeded generators of test maps and curves.

Tame automorphisms are built as ``L o E_1 o ... o E_k o L^-1`` with elementary
maps ``E_j`` (one coordinate shifted by a polynomial in the others, no terms
below degree 2) and a unimodular integer matrix ``L``. Conjugating by ``L``
keeps ``F(0) = 0`` and the linear part equal to ``I``, so the result can be fed
directly to the iterative engines, and the inverse is known by construction.
"""

from __future__ import annotations

import itertools
import random

from .endo import Curve, PolyMap, compose_maps
from .poly import Polynomial
from .ring import QQ, Domain


def _monomials(n, degrees, allowed):
    out = []
    for d in degrees:
        for m in itertools.product(range(d + 1), repeat=n):
            if sum(m) == d and all(m[i] == 0 for i in range(n) if i not in allowed):
                out.append(m)
    return out


def _coeff(rng, domain, bound):
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return domain.convert(c)


def random_polynomial(rng, domain, n, min_deg, max_deg, nterms, allowed=None, bound=3):
    allowed = set(range(n)) if allowed is None else set(allowed)
    pool = _monomials(n, range(min_deg, max_deg + 1), allowed)
    if not pool:
        return Polynomial.zero(domain, n)
    picks = rng.sample(pool, min(nterms, len(pool)))
    return Polynomial(domain, n, {m: _coeff(rng, domain, bound) for m in picks})


def elementary(domain, n, i, shift: Polynomial, names=None):
    """``X_i <- X_i + shift`` where ``shift`` does not involve ``X_i``."""
    if i in shift.variables_used():
        raise ValueError("an elementary shift may not involve its own coordinate")
    comps = [Polynomial.variable(domain, n, k) for k in range(n)]
    comps[i] = comps[i] + shift
    return PolyMap(comps, names)


def random_elementary(rng, domain, n, max_deg=3, nterms=2, bound=3):
    i = rng.randrange(n)
    others = [k for k in range(n) if k != i]
    deg = rng.randint(2, max_deg)
    shift = random_polynomial(rng, domain, n, 2, deg, rng.randint(1, nterms), others, bound)
    inverse_shift = -shift
    return elementary(domain, n, i, shift), elementary(domain, n, i, inverse_shift)


def linear_map(domain, matrix, names=None):
    n = len(matrix)
    comps = []
    for row in matrix:
        comps.append(
            Polynomial(domain, n, {tuple(int(k == j) for k in range(n)): a for j, a in enumerate(row)})
        )
    return PolyMap(comps, names)


def random_unimodular(rng, n, steps=3, bound=2):
    """A random integer matrix with determinant +-1 and its integer inverse."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    Minv = [row[:] for row in M]
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        a = rng.randint(-bound, bound)
        # row op r_i += a r_j on M; inverse applies column op c_j -= a c_i
        M[i] = [x + a * y for x, y in zip(M[i], M[j])]
        for row in Minv:
            row[j] -= a * row[i]
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        M[i], M[j] = M[j], M[i]
        for row in Minv:
            row[i], row[j] = row[j], row[i]
    return M, Minv


def random_tame_automorphism(
    rng: random.Random,
    n: int,
    domain: Domain = QQ,
    max_deg: int = 4,
    max_elementary: int = 4,
    elementary_deg: int = 3,
    conjugate: bool = True,
):
    """``(F, F_inverse)`` with ``F`` tame, centered, linear part ``I`` and ``deg F <= max_deg``."""
    F = PolyMap.identity(domain, n)
    Finv = PolyMap.identity(domain, n)
    for _ in range(rng.randint(1, max_elementary)):
        E, Einv = random_elementary(rng, domain, n, min(elementary_deg, max_deg))
        cand = compose_maps(F, E)
        if cand.degree() > max_deg:
            continue
        F, Finv = cand, compose_maps(Einv, Finv)
    if conjugate and n > 1:
        M, Minv = random_unimodular(rng, n)
        L, Linv = linear_map(domain, M), linear_map(domain, Minv)
        F = compose_maps(L, compose_maps(F, Linv))
        Finv = compose_maps(L, compose_maps(Finv, Linv))
    return F, Finv


def random_non_injective(rng: random.Random, n: int, domain: Domain = QQ, max_deg: int = 4):
    """A centered map with linear part ``I`` and non-constant Jacobian determinant.

    The core is ``(x1 + a*x2**2, x2 + b*x1**2, x3, ...)`` with ``a*b != 0``, whose
    Jacobian determinant is ``1 - 4ab*x1*x2``; it is then composed with a tame
    automorphism (when the degree allows) and conjugated by a unimodular matrix.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    a, b = _coeff(rng, domain, 2), _coeff(rng, domain, 2)
    comps = [Polynomial.variable(domain, n, k) for k in range(n)]
    comps[0] = comps[0] + a * Polynomial.variable(domain, n, 1) ** 2
    comps[1] = comps[1] + b * Polynomial.variable(domain, n, 0) ** 2
    F = PolyMap(comps)
    if max_deg >= 4:
        T, _ = random_tame_automorphism(rng, n, domain, max_deg=2, max_elementary=1, conjugate=False)
        cand = compose_maps(F, T) if rng.random() < 0.5 else compose_maps(T, F)
        if cand.degree() <= max_deg:
            F = cand
    M, Minv = random_unimodular(rng, n)
    return compose_maps(linear_map(domain, M), compose_maps(F, linear_map(domain, Minv)))


def random_squared_coordinate(rng: random.Random, n: int, domain: Domain = QQ):
    """``(T_1**2, T_2, ..., T_n)`` for a tame ``T``: two-to-one, linear part singular."""
    T, _ = random_tame_automorphism(rng, n, domain, max_deg=2, max_elementary=2)
    comps = list(T.components)
    comps[0] = comps[0] ** 2
    return PolyMap(comps)


def random_curve(rng: random.Random, domain: Domain, n: int, max_deg: int = 4, bound=3, var="t"):
    """A centered curve with t-degree <= ``max_deg``."""
    comps = []
    for _ in range(n):
        deg = rng.randint(1, max_deg)
        coeffs = [0] + [rng.randint(-bound, bound) if rng.random() < 0.7 else 0 for _ in range(deg)]
        comps.append(Polynomial(domain, 1, {(k,): c for k, c in enumerate(coeffs)}))
    return Curve(comps, var)
