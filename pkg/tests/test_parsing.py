import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyinv.endo import PolyMap
from polyinv.parsing import (
    ParseError,
    UnknownVariable,
    WrongArity,
    format_literal,
    format_poly,
    parse_curve,
    parse_map,
    parse_point,
    parse_polys,
)
from polyinv.poly import Polynomial
from polyinv.ring import GF, QQ, ZZ
from fractions import Fraction


def test_two_adic_literal():
    F = parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]")
    assert F.domain == ZZ and F.names == ("x", "y")
    x, y = (Polynomial.variable(ZZ, 2, i) for i in range(2))
    assert F.components == (x + 2 * y + 4 * x * x, y + 2 * x * x)


def test_identity_in_one_variable():
    F = parse_map("[x] over QQ[x]")
    assert F.is_identity() and F.n == 1


def test_curve_literal():
    f = parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]")
    assert f.n == 2
    assert f[0].terms == {(1,): 1, (4,): 4} and f[1].terms == {(2,): 2}


def test_syntax_variants():
    a = parse_map("[2x^2 - (y)(y) + x**3 − 1/2*y, y] over QQ[x,y]")
    b = parse_map("[x^3 + 2*x^2 - y^2 - 1/2*y, y] over QQ[x,y]")
    assert a == b
    c = parse_map("[-x*-2 + y, y] over QQ[x,y]")
    assert c == parse_map("[2*x + y, y] over QQ[x,y]")


def test_error_positions_and_expectations():
    with pytest.raises(ParseError) as err:
        parse_map("[x + , y] over QQ[x,y]")
    assert err.value.line == 1 and err.value.column == 6
    assert "variable" in err.value.expected
    with pytest.raises(ParseError) as err:
        parse_map("[x, y]\nover RR[x,y]")
    assert err.value.line == 2 and err.value.column == 6


def test_unknown_variable_and_arity():
    with pytest.raises(UnknownVariable):
        parse_map("[x + z, y] over QQ[x,y]")
    with pytest.raises(WrongArity):
        parse_map("[x, y, x] over QQ[x,y]")
    with pytest.raises(ParseError):
        parse_curve("[1 + t, t] over QQ[t]")
    with pytest.raises(ParseError):
        parse_map("[x/2, y] over ZZ[x,y]")
    with pytest.raises(ParseError):
        parse_map("[x, y] over GF(4)[x,y]")


def test_points():
    assert parse_point("1,-1", ZZ) == (1, -1)
    assert parse_point("(1/2, 3)", QQ) == (Fraction(1, 2), 3)
    assert parse_point("-1", GF(5)) == (4,)
    with pytest.raises(ParseError):
        parse_point("1/2", ZZ)


def test_printing():
    F = parse_map("[x + 2*y + 4*x^2, y - 2*x^2] over ZZ[x,y]")
    assert F.text() == "[4*x^2 + x + 2*y, -2*x^2 + y]"
    assert format_poly(Polynomial.zero(QQ, 1), ["t"]) == "0"
    (p,), _, _ = parse_polys("[-3/2*x*y^2 + 1] over QQ[x,y]")
    assert format_poly(p, ["x", "y"]) == "-3/2*x*y^2 + 1"


def _random_map(rng, dom, n):
    names = ["a", "b", "c", "d"][:n]
    comps = []
    for _ in range(n):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            m = tuple(rng.randint(0, 3) for _ in range(n))
            num = rng.randint(-9, 9)
            terms[m] = Fraction(num, rng.randint(1, 4)) if dom == QQ else num
        comps.append(Polynomial(dom, n, terms))
    return PolyMap(comps, names)


@given(st.integers(0, 10**6), st.sampled_from([QQ, ZZ, GF(7)]), st.integers(1, 4))
def test_round_trip(seed, dom, n):
    F = _random_map(random.Random(seed), dom, n)
    text = F.literal()
    G = parse_map(text)
    assert G == F
    assert G.literal() == text
