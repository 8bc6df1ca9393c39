import math
import random

import pytest

from polyinv import poly as P
from polyinv.filtration import (
    DEGREE,
    CanonicalityViolation,
    FiltrationSpec,
    check_h_admissible,
    padic,
    project,
    section,
)
from polyinv.parsing import parse_map, parse_polys
from polyinv.poly import Polynomial
from polyinv.ring import QQ, ZZ, DomainMismatch, balanced_residue


def poly(text):
    (p,), _, _ = parse_polys(text)
    return p


def test_project_examples():
    assert project(DEGREE, poly("[x + x^3] over QQ[x]"), 2) == poly("[x] over QQ[x]")
    # 3 -> -1 (mod 4, balanced), 8 -> 0
    f = poly("[3*x + 8*y^2] over ZZ[x,y]")
    expected = Polynomial(ZZ, 2, {m: balanced_residue(c, 2, 2) for m, c in f.terms.items()})
    assert expected == poly("[-x] over ZZ[x,y]")
    assert project(padic(2), f, 2) == expected
    assert project(padic(2), poly("[-2*y] over ZZ[x,y]"), 3) == poly("[-2*y] over ZZ[x,y]")


def test_padic_needs_integers():
    with pytest.raises(DomainMismatch):
        project(padic(2), poly("[x] over QQ[x]"), 1)


def test_section_examples():
    f = poly("[x + y^2] over QQ[x,y]")
    assert section(DEGREE, f, 2) == f
    six = poly("[6] over ZZ[x]")
    assert section(padic(2), project(padic(2), six, 3), 3) == poly("[-2] over ZZ[x]")
    one = poly("[1] over ZZ[x]")
    assert project(padic(2), one, 1) == poly("[-1] over ZZ[x]")
    with pytest.raises(CanonicalityViolation):
        section(padic(2), six, 3)
    with pytest.raises(CanonicalityViolation):
        section(DEGREE, f, 1)


def test_admissibility_examples():
    H = parse_map("[Y^2 + 2*X^2*Y + X^4, X^2] over QQ[X,Y]")
    assert check_h_admissible(DEGREE, H)
    assert check_h_admissible(padic(2), parse_map("[2*y + 4*x^2, 2*x^2] over ZZ[x,y]"))
    assert not check_h_admissible(DEGREE, parse_map("[y, 0] over QQ[x,y]"))
    assert not check_h_admissible(padic(3), parse_map("[2*y, 0] over ZZ[x,y]"))


def test_filtration_parse():
    assert FiltrationSpec.parse("degree") == DEGREE
    assert FiltrationSpec.parse("padic:5") == padic(5)
    assert str(padic(3)) == "padic:3"
    with pytest.raises(ValueError):
        FiltrationSpec.parse("padic:4")
    with pytest.raises(ValueError):
        FiltrationSpec.parse("adic")


def random_poly(rng, dom, n, max_deg=6, bound=200):
    terms = {}
    for _ in range(rng.randint(0, 6)):
        terms[tuple(rng.randint(0, max_deg // n + 1) for _ in range(n))] = rng.randint(-bound, bound)
    return Polynomial(dom, n, terms)


SPECS = [DEGREE, padic(2), padic(3), padic(5)]


@pytest.mark.parametrize("spec", SPECS, ids=str)
@pytest.mark.parametrize("seed", range(10))
def test_projection_then_section_is_identity(spec, seed):
    rng = random.Random(seed)
    f = random_poly(rng, ZZ, rng.randint(1, 3))
    for d in range(13):
        rep = project(spec, f, d)
        assert project(spec, section(spec, rep, d), d) == rep


@pytest.mark.parametrize("spec", SPECS, ids=str)
@pytest.mark.parametrize("seed", range(10))
def test_sections_converge(spec, seed):
    rng = random.Random(50 + seed)
    f = random_poly(rng, ZZ, rng.randint(1, 3))
    if f.is_zero():
        D = 0
    elif spec.kind == "degree":
        D = f.degree()
    else:
        big = max(abs(c) for c in f.terms.values())
        D = math.ceil(math.log(2 * big, spec.p)) + 1
    for d in range(D, D + 10):
        assert project(spec, f, d) == f


def _random_map(rng, dom, n, lo, hi, scale=1):
    comps = []
    for _ in range(n):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            deg = rng.randint(lo, hi)
            m = [0] * n
            for _ in range(deg):
                m[rng.randrange(n)] += 1
            terms[tuple(m)] = scale * rng.randint(-3, 3)
        comps.append(Polynomial(dom, n, terms))
    return comps


@pytest.mark.parametrize("spec", [DEGREE, padic(2), padic(3)], ids=str)
@pytest.mark.parametrize("seed", range(15))
def test_composition_filtration_law(spec, seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(1, 3)
    if spec.kind == "degree":
        H = _random_map(rng, ZZ, n, 2, 3)
        G = _random_map(rng, ZZ, n, 1, 3)
    else:
        H = _random_map(rng, ZZ, n, 0, 2, spec.p)
        G = _random_map(rng, ZZ, n, 0, 2)
    assert check_h_admissible(spec, H)
    d = rng.randint(1, 4)
    # a perturbation lying in A_d
    if spec.kind == "degree":
        pert = _random_map(rng, ZZ, n, d + 1, d + 2)
    else:
        pert = [c * spec.p**d for c in _random_map(rng, ZZ, n, 0, 2)]
    G2 = [a + b for a, b in zip(G, pert)]
    for a, b in zip(G, G2):
        assert project(spec, a, d) == project(spec, b, d)
    for h in H:
        lhs = project(spec, P.compose(h, G2), d + 1)
        rhs = project(spec, P.compose(h, G), d + 1)
        assert lhs == rhs
