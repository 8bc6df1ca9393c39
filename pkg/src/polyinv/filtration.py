"""Composition-filtrations with canonical-representative sections.

Two filtrations ship:

* ``DEGREE``: ``A_d = (x_1, ..., x_n)**(d+1)``; the class of ``f`` mod ``A_d`` is
  ``f`` truncated to total degree ``<= d``.
* ``padic(p)``: ``A_d = p**d * ZZ[x]``; the class of ``f`` keeps every
  coefficient reduced into the balanced window mod ``p**d``.

Classes are stored as their canonical representatives, so the section
``s_d`` is the identity on canonical input and ``project`` is ``s_d o pi_d``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, truncate_total_degree
from .ring import ZZ, DomainMismatch, balanced_residue, is_prime


class CanonicalityViolation(ValueError):
    pass


@dataclass(frozen=True)
class FiltrationSpec:
    kind: str  # "degree" | "padic"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("degree", "padic"):
            raise ValueError(f"unknown filtration {self.kind!r}")
        if self.kind == "padic" and not is_prime(self.p):
            raise ValueError(f"padic:{self.p}: p must be prime")

    def __str__(self):
        return "degree" if self.kind == "degree" else f"padic:{self.p}"

    @classmethod
    def parse(cls, text: str) -> "FiltrationSpec":
        text = text.strip().lower()
        if text == "degree":
            return DEGREE
        if text.startswith("padic:"):
            try:
                return padic(int(text[6:]))
            except ValueError as exc:
                raise ValueError(f"bad filtration {text!r}: {exc}") from None
        raise ValueError(f"bad filtration {text!r}; use 'degree' or 'padic:<p>'")


DEGREE = FiltrationSpec("degree")


def padic(p: int) -> FiltrationSpec:
    return FiltrationSpec("padic", p)


def _check_domain(spec, f):
    if spec.kind == "padic" and f.domain != ZZ:
        raise DomainMismatch(f"{spec} filtration needs ZZ coefficients, got {f.domain}")


def project(spec: FiltrationSpec, f: Polynomial, d: int) -> Polynomial:
    """Canonical representative of ``f mod A_d``."""
    if d < 0:
        raise ValueError("level must be non-negative")
    _check_domain(spec, f)
    if spec.kind == "degree":
        return truncate_total_degree(f, d)
    out = {}
    for m, c in f.terms.items():
        r = balanced_residue(c, d, spec.p)
        if r:
            out[m] = r
    return Polynomial._raw(f.domain, f.nvars, out)


def is_canonical(spec: FiltrationSpec, f: Polynomial, d: int) -> bool:
    return project(spec, f, d) == f


def section(spec: FiltrationSpec, representative: Polynomial, d: int) -> Polynomial:
    """Embed a level-``d`` class, given by its canonical representative, back into A."""
    if not is_canonical(spec, representative, d):
        raise CanonicalityViolation(f"not a canonical representative at level {d} for {spec}")
    return representative


def project_map(spec, F, d):
    return F.map(lambda c: project(spec, c, d))


def check_h_admissible(spec: FiltrationSpec, H) -> bool:
    """Whether every component of ``H`` lies in ``A_1``."""
    comps = getattr(H, "components", H)
    if spec.kind == "degree":
        return all(sum(m) >= 2 for c in comps for m in c.terms)
    if any(c.domain != ZZ for c in comps):
        return False
    return all(v % spec.p == 0 for c in comps for v in c.terms.values())
