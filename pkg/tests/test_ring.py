from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyinv.ring import GF, QQ, ZZ, Domain, DomainMismatch, balanced_residue


def brute_force_residue(a, d, p):
    m = p**d
    lo, hi = (-m // 2, m // 2 - 1) if p == 2 else (-(m - 1) // 2, (m - 1) // 2)
    hits = [a + k * m for k in range(-abs(a) // m - 2, abs(a) // m + 3) if lo <= a + k * m <= hi]
    assert len(hits) == 1
    return hits[0]


@pytest.mark.parametrize(
    "a, d, p, expected",
    [(3, 2, 2, -1), (-2, 3, 2, -2), (1, 1, 2, -1), (6, 3, 2, -2)],
)
def test_balanced_residue_examples(a, d, p, expected):
    assert balanced_residue(a, d, p) == expected


def test_balanced_residue_fourteen_by_scan():
    # 14 + 8k for k in [-4, 4], keep the one inside [-4, 3]
    scan = [14 + 8 * k for k in range(-4, 5) if -4 <= 14 + 8 * k <= 3]
    assert scan == [-2]
    assert balanced_residue(14, 3, 2) == -2


def test_balanced_residue_rejects_non_integer():
    with pytest.raises(DomainMismatch):
        balanced_residue(Fraction(1, 2), 2, 2)


@given(st.integers(-10**6, 10**6), st.integers(1, 16), st.sampled_from([2, 3, 5, 7]))
def test_balanced_residue_window(a, d, p):
    r = balanced_residue(a, d, p)
    m = p**d
    assert (r - a) % m == 0
    assert r == brute_force_residue(a, d, p)


def test_prime_field_needs_prime():
    with pytest.raises(ValueError):
        GF(91)
    assert GF(101).is_field and not ZZ.is_field


def test_canonical_forms():
    assert QQ.convert(Fraction(4, 2)) == 2 and type(QQ.convert(Fraction(4, 2))) is int
    assert QQ.convert(Fraction(3, -6)) == Fraction(-1, 2)
    assert GF(7).convert(-1) == 6
    assert GF(7).convert(Fraction(1, 2)) == 4
    with pytest.raises(DomainMismatch):
        ZZ.convert(Fraction(1, 3))
    assert QQ.render(Fraction(-5, 2)) == "-5/2"


def _elements(dom):
    if dom == QQ:
        return st.fractions(max_denominator=50).map(dom.convert)
    if dom == ZZ:
        return st.integers(-1000, 1000)
    return st.integers(0, dom.p - 1)


@pytest.mark.parametrize("dom", [QQ, ZZ, GF(101), GF(2)], ids=str)
@given(data=st.data())
def test_ring_axioms(dom, data):
    a, b, c = (data.draw(_elements(dom)) for _ in range(3))
    assert dom.add(dom.add(a, b), c) == dom.add(a, dom.add(b, c))
    assert dom.mul(dom.mul(a, b), c) == dom.mul(a, dom.mul(b, c))
    assert dom.mul(a, dom.add(b, c)) == dom.add(dom.mul(a, b), dom.mul(a, c))
    assert dom.add(a, dom.neg(a)) == 0
    if dom.is_field and a != 0:
        assert dom.mul(a, dom.inv(a)) == 1


def test_domain_kind_validation():
    with pytest.raises(ValueError):
        Domain("RR")
