"""Preimages of parametrised curves and points under ``F = I - H``.

The curve engine iterates ``K_{d+1} = H(f + K_d) mod t**(d+1)`` from ``K_1 = 0``
and returns ``g = f + K_d`` once ``H(f + K_d) == K_d``. A centered polynomial
preimage is unique when it exists, so a verified answer is *the* answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import poly as P
from .endo import (
    Curve,
    CurveNotCentered,
    NotCentered,
    PolyMap,
    apply_to_curve,
    evaluate,
    h_part,
)
from .poly import ArityMismatch, Polynomial
from .ring import DomainMismatch

DEFAULT_MAX_DEG = 32


class NotAdmissible(ValueError):
    pass


class PreimageStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND_WITHIN_DEGREE = "not-found-within-degree"
    INCONSISTENT = "inconsistent"


@dataclass
class PreimageOutcome:
    status: PreimageStatus
    curve: Curve | None = None
    iterations: int = 0
    max_deg: int = 0
    last_K: Curve | None = None
    trace: dict = field(default_factory=dict, repr=False)  # d -> K_d, from d = 1

    @property
    def found(self):
        return self.status is PreimageStatus.FOUND


def default_max_deg(F: PolyMap, f: Curve) -> int:
    """Large enough to decide the automorphism case, and never below 32."""
    deg_f = max(f.degree(), 1)
    return max(DEFAULT_MAX_DEG, max(F.degree(), 1) ** (F.n - 1) * deg_f)


def _check(F: PolyMap, f: Curve):
    if F.n != f.n:
        raise ArityMismatch(f"map n={F.n}, curve n={f.n}")
    if F.domain != f.domain:
        raise DomainMismatch(f"{F.domain} vs {f.domain}")
    if any(c.constant_term() for c in F):
        raise NotCentered("F(0) != 0")
    H = h_part(F)
    if any(sum(m) < 2 for c in H for m in c.terms):
        raise NotAdmissible("H = I - F must have zero affine part (linear part of F must be I)")
    return H


def _add(f: Curve, K: Curve) -> list:
    return [a + b for a, b in zip(f, K)]


def curve_preimage(F: PolyMap, f: Curve, max_deg: int | None = None) -> PreimageOutcome:
    """The centered curve ``g`` with ``F(g) == f``, if one of t-degree <= ``max_deg`` exists."""
    if not isinstance(f, Curve):
        raise TypeError("f must be a Curve")
    if any(c.constant_term() for c in f):
        raise CurveNotCentered("f(0) != 0")
    H = _check(F, f)
    if max_deg is None:
        max_deg = default_max_deg(F, f)
    if max_deg < 1:
        raise ValueError("max_deg must be positive")

    K_prev = None
    K = Curve.zero(F.domain, F.n, f.var)
    trace = {1: K}
    checked = set()

    def try_candidate(K):
        checked.add(K)
        arg = _add(f, K)
        full = Curve([P.compose(c, arg) for c in H], f.var)
        if full != K:
            return None
        g = Curve(arg, f.var)
        if apply_to_curve(F, g) != f:
            return False
        return g

    # K_d lives at index d; d runs 1 .. max_deg + 1 so K can reach t-degree max_deg
    for d in range(1, max_deg + 2):
        arg = _add(f, K)
        K_next = Curve([P.compose(c, arg, max_degree=d) for c in H], f.var)
        trace[d + 1] = K_next
        if K_next == K and K != K_prev:
            g = try_candidate(K)
            if g is False:
                return PreimageOutcome(PreimageStatus.INCONSISTENT, None, d, max_deg, K, trace)
            if g is not None:
                return PreimageOutcome(PreimageStatus.FOUND, g, d, max_deg, K, trace)
        K_prev, K = K, K_next

    if K not in checked:
        g = try_candidate(K)
        if g:
            return PreimageOutcome(PreimageStatus.FOUND, g, max(trace) - 1, max_deg, K, trace)
    return PreimageOutcome(
        PreimageStatus.NOT_FOUND_WITHIN_DEGREE, None, max(trace) - 1, max_deg, K, trace
    )


class PointNotFound(LookupError):
    def __init__(self, outcome: PreimageOutcome):
        self.outcome = outcome
        super().__init__(f"no preimage along the line c*t ({outcome.status.value})")


def line_through(c, domain, var="t") -> Curve:
    """The curve ``t -> c*t``."""
    return Curve([Polynomial(domain, 1, {(1,): v}) for v in c], var)


def point_preimage(F: PolyMap, c, max_deg: int | None = None) -> tuple:
    """A point ``p`` with ``F(p) == c``, read off the preimage of the line ``c*t`` at ``t = 1``.

    Raises :class:`PointNotFound` when the curve engine does not find a preimage.
    """
    if len(c) != F.n:
        raise ArityMismatch(f"point of length {len(c)} for n={F.n}")
    c = tuple(F.domain.convert(v) for v in c)
    outcome = curve_preimage(F, line_through(c, F.domain), max_deg)
    if not outcome.found:
        raise PointNotFound(outcome)
    p = outcome.curve.at(1)
    if evaluate(F, p) != c:
        raise AssertionError(f"verified curve preimage gave F({p}) != {c}")
    return p
