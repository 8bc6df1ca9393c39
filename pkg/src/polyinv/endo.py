"""Polynomial endomorphisms, their ``F = I - H`` normal form, and curves."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import poly as P
from .poly import ArityMismatch, Polynomial
from .ring import Domain, DomainMismatch


class NotCentered(ValueError):
    pass


class LinearPartNotIdentity(ValueError):
    def __init__(self, matrix):
        self.matrix = matrix
        super().__init__(f"linear part is not the identity: {matrix}")


class CurveNotCentered(ValueError):
    pass


def default_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


class PolyMap:
    """An n-tuple of polynomials in n variables, read as a map ``R^n -> R^n``."""

    __slots__ = ("components", "names")

    def __init__(self, components: Sequence[Polynomial], names=None):
        components = tuple(components)
        if not components:
            raise ValueError("a map needs at least one component")
        n = len(components)
        dom = components[0].domain
        for c in components:
            if c.nvars != n:
                raise ArityMismatch(f"component in {c.nvars} variables, map has n={n}")
            if c.domain != dom:
                raise DomainMismatch("components must share one domain")
        names = tuple(names) if names is not None else tuple(default_names(n))
        if len(names) != n:
            raise ArityMismatch(f"{len(names)} variable names for n={n}")
        self.components = components
        self.names = names

    @classmethod
    def identity(cls, domain: Domain, n: int, names=None):
        return cls([Polynomial.variable(domain, n, i) for i in range(n)], names)

    @classmethod
    def zero(cls, domain: Domain, n: int, names=None):
        return cls([Polynomial.zero(domain, n) for _ in range(n)], names)

    @property
    def n(self):
        return len(self.components)

    @property
    def domain(self):
        return self.components[0].domain

    def degree(self):
        return max(c.degree() for c in self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other):
        return PolyMap([a + b for a, b in zip(self, other)], self.names)

    def __sub__(self, other):
        return PolyMap([a - b for a, b in zip(self, other)], self.names)

    def __neg__(self):
        return PolyMap([-a for a in self], self.names)

    def map(self, fn):
        return PolyMap([fn(c) for c in self.components], self.names)

    def is_identity(self):
        return self == PolyMap.identity(self.domain, self.n, self.names)

    def linear_matrix(self):
        """Row ``i`` holds the coefficients of ``x_1..x_n`` in component ``i``."""
        n = self.n
        rows = []
        for c in self.components:
            row = []
            for j in range(n):
                m = [0] * n
                m[j] = 1
                row.append(c.coeff(m))
            rows.append(row)
        return rows

    def text(self):
        from .parsing import format_polys

        return format_polys(self.components, self.names)

    def literal(self):
        from .parsing import format_literal

        return format_literal(self.components, self.domain, self.names)

    def __repr__(self):
        return f"PolyMap({self.literal()!r})"


@dataclass(frozen=True)
class NormalizedMap:
    """``base == I - h_part`` with ``h_part`` free of constant and linear terms."""

    base: PolyMap
    h_part: PolyMap

    def reconstruct(self) -> PolyMap:
        return PolyMap.identity(self.base.domain, self.base.n, self.base.names) - self.h_part


def h_part(F: PolyMap) -> PolyMap:
    """``H := I - F`` with no admissibility checks."""
    return PolyMap.identity(F.domain, F.n, F.names) - F


def normalize(F: PolyMap) -> NormalizedMap:
    if any(c.constant_term() for c in F):
        raise NotCentered("F(0) != 0; translate the map first")
    mat = F.linear_matrix()
    n = F.n
    if any(mat[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
        raise LinearPartNotIdentity(mat)
    return NormalizedMap(F, h_part(F))


def evaluate(F: PolyMap, point: Sequence) -> tuple:
    if len(point) != F.n:
        raise ArityMismatch(f"point of length {len(point)} for n={F.n}")
    return tuple(P.evaluate(c, point) for c in F)


def compose_maps(F: PolyMap, G: PolyMap, max_degree=None) -> PolyMap:
    """``F o G``: substitute ``G`` into every component of ``F``."""
    if F.n != G.n:
        raise ArityMismatch(f"n={F.n} vs n={G.n}")
    if F.domain != G.domain:
        raise DomainMismatch(f"{F.domain} vs {G.domain}")
    args = list(G.components)
    return PolyMap([P.compose(c, args, max_degree) for c in F], G.names)


class Curve:
    """A centered parametrised curve ``t -> (g_1(t), ..., g_n(t))``."""

    __slots__ = ("components", "var")

    def __init__(self, components: Sequence[Polynomial], var="t"):
        components = tuple(components)
        if not components:
            raise ValueError("a curve needs at least one component")
        dom = components[0].domain
        for k, c in enumerate(components):
            if c.nvars != 1:
                raise ArityMismatch("curve components are univariate")
            if c.domain != dom:
                raise DomainMismatch("curve components must share one domain")
            if c.constant_term():
                raise CurveNotCentered(f"component {k + 1} has g(0) != 0")
        self.components = components
        self.var = var

    @classmethod
    def from_coefficients(cls, domain, rows, var="t"):
        """``rows[i][k]`` is the coefficient of ``t**(k+1)`` in component ``i``."""
        return cls([P.from_univariate(domain, [0, *r]) for r in rows], var)

    @classmethod
    def zero(cls, domain, n, var="t"):
        return cls([Polynomial.zero(domain, 1) for _ in range(n)], var)

    @property
    def n(self):
        return len(self.components)

    @property
    def domain(self):
        return self.components[0].domain

    def degree(self):
        return max(c.degree() for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def at(self, tau) -> tuple:
        return tuple(P.evaluate(c, [tau]) for c in self.components)

    def text(self):
        from .parsing import format_polys

        return format_polys(self.components, [self.var])

    def literal(self):
        from .parsing import format_literal

        return format_literal(self.components, self.domain, [self.var])

    def __repr__(self):
        return f"Curve({self.literal()!r})"


def apply_to_curve(F: PolyMap, g: Curve) -> Curve:
    """``t -> F(g(t))``."""
    if F.n != g.n:
        raise ArityMismatch(f"map n={F.n}, curve n={g.n}")
    if F.domain != g.domain:
        raise DomainMismatch(f"{F.domain} vs {g.domain}")
    comps = [P.compose(c, list(g.components)) for c in F]
    if any(c.constant_term() for c in comps):
        raise NotCentered("F(g(0)) != 0: the map is not centered")
    return Curve(comps, g.var)
