"""Iterative inversion of ``F = I - H`` over a composition-filtration.

Starting from ``K_0 = 0`` the engine iterates ``K_{d+1} = s_{d+1} pi_{d+1} H(I + K_d)``.
Whenever the sequence stalls (``K_d == K_{d+1}`` after a change) it tests the
fixed-point equation ``H(I + K_d) == K_d``; on success ``I + K_d`` is returned
after checking both ``F o G`` and ``G o F`` against the identity.

For the degree filtration the inverse, if any, has degree at most
``deg(F)**(n-1)``, so the iteration is a decision procedure.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from .endo import NotCentered, PolyMap, compose_maps, h_part
from .filtration import DEGREE, FiltrationSpec, check_h_admissible, project_map

log = logging.getLogger(__name__)

DEFAULT_PADIC_BUDGET = 64


class AdmissibilityError(ValueError):
    pass


class InverseStatus(enum.Enum):
    INVERTED = "inverted"
    NOT_INVERTIBLE_BY_DEGREE_BOUND = "not-invertible-by-degree-bound"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class InverseOutcome:
    status: InverseStatus
    inverse: PolyMap | None = None
    iterations: int = 0
    last_K: PolyMap | None = None
    trace: list = field(default_factory=list, repr=False)  # K_0, K_1, ...

    @property
    def inverted(self) -> bool:
        return self.status is InverseStatus.INVERTED


def degree_bound(F: PolyMap) -> int:
    """Upper bound ``deg(F)**(n-1)`` on the degree of a polynomial inverse."""
    return max(F.degree(), 1) ** (F.n - 1)


def _phi(H: PolyMap, K: PolyMap, max_degree=None) -> PolyMap:
    ident = PolyMap.identity(H.domain, H.n, H.names)
    return compose_maps(H, ident + K, max_degree)


def is_inverse_pair(F: PolyMap, G: PolyMap) -> bool:
    """True iff ``F o G`` and ``G o F`` are both the identity."""
    ident = PolyMap.identity(F.domain, F.n, F.names)
    return compose_maps(F, G) == ident and compose_maps(G, F) == ident


def iterative_inverse(
    F: PolyMap, spec: FiltrationSpec = DEGREE, budget: int | None = None
) -> InverseOutcome:
    """Invert ``F`` by fixed-point iteration along ``spec``.

    ``budget`` caps the number of iterates computed. It defaults to
    ``deg(F)**(n-1) + 1`` for the degree filtration and to 64 otherwise.
    """
    if any(c.constant_term() for c in F):
        raise NotCentered("F(0) != 0")
    H = h_part(F)
    if not check_h_admissible(spec, H):
        if spec.kind == "degree":
            raise AdmissibilityError("H = I - F has terms of degree < 2 (linear part of F is not I)")
        raise AdmissibilityError(f"coefficients of H = I - F are not all divisible by {spec.p}")

    bound = degree_bound(F) if spec.kind == "degree" else None
    if budget is None:
        budget = bound + 1 if bound is not None else DEFAULT_PADIC_BUDGET
    if budget < 1:
        raise ValueError("budget must be positive")

    ident = PolyMap.identity(F.domain, F.n, F.names)
    K_prev = None
    K = PolyMap.zero(F.domain, F.n, F.names)
    trace = [K]
    checked = set()

    def try_candidate(K):
        checked.add(K)
        if _phi(H, K) != K:
            return None
        G = ident + K
        # H(I+K) == K is exactly F o G == I; G o F is checked as well
        if compose_maps(G, F) != ident:
            log.warning("one-sided inverse found; G o F != I")
            return None
        return G

    for d in range(budget):
        cap = d + 1 if spec.kind == "degree" else None
        K_next = project_map(spec, _phi(H, K, cap), d + 1)
        trace.append(K_next)
        log.debug("K_%d = %s", d + 1, K_next.text())
        if K_next == K and K != K_prev:
            G = try_candidate(K)
            if G is not None:
                return InverseOutcome(InverseStatus.INVERTED, G, d + 1, K, trace)
        K_prev, K = K, K_next

    if K not in checked:
        G = try_candidate(K)
        if G is not None:
            return InverseOutcome(InverseStatus.INVERTED, G, len(trace) - 1, K, trace)
    if bound is not None and budget > bound:
        return InverseOutcome(
            InverseStatus.NOT_INVERTIBLE_BY_DEGREE_BOUND, None, len(trace) - 1, K, trace
        )
    return InverseOutcome(InverseStatus.BUDGET_EXHAUSTED, None, len(trace) - 1, K, trace)
