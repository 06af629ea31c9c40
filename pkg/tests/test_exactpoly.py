from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cubicchar import exactpoly as ep
from cubicchar.exactpoly import (CapMismatchError, Monomial, NonUnitError, Scheme, TruncatedPolynomial,
                                 as_rational, format_rational)
from conftest import SMALL, polys, units

P3 = Scheme.make(["h"], caps={"h": 4})


def hpoly(text):
    return TruncatedPolynomial.parse(P3, text)


def test_rational_normalization():
    assert as_rational(Fraction(4, 2)) == 2 and isinstance(as_rational(Fraction(4, 2)), int)
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_monomial_equality_ignores_order():
    a = Monomial.parse("h^2*e^3")
    assert a == Monomial.of(e=3, h=2)
    assert hash(a) == hash(Monomial.of(e=3, h=2))
    assert a.total_degree == 5
    assert "h" not in Monomial.of(h=0).as_dict()


def test_add_examples():
    x = TruncatedPolynomial.parse(SMALL, "1 + h")
    assert x + TruncatedPolynomial.parse(SMALL, "-1 + h") == TruncatedPolynomial.parse(SMALL, "2 h")
    assert hpoly("1 - 16h") + hpoly("146 h^2") == hpoly("1 - 16h + 146h^2")
    assert x + TruncatedPolynomial.zero(SMALL) == x


def test_add_cap_mismatch():
    with pytest.raises(CapMismatchError):
        ep.add(hpoly("h"), TruncatedPolynomial.parse(SMALL, "h"))


def test_mul_examples():
    h = hpoly("h")
    assert (1 + h) * h ** 3 == h ** 3
    assert (2 + 12 * h) * (2 + 12 * h) == hpoly("4 + 48 h + 144 h^2")
    s = (1 + h) ** 4 * ep.invert_unit((1 + 2 * h) ** 10)
    assert s == hpoly("1 - 16h + 146h^2 - 996h^3")


def test_pow_examples():
    h = hpoly("h")
    assert ((2 + 12 * h) ** 16).constant_term() == 65536
    assert ep.pow(1 + h, 1) == 1 + h
    assert ep.pow(1 + h, 0) == 1
    with pytest.raises(ValueError):
        ep.pow(h, -1)


def test_invert_examples():
    h = hpoly("h")
    assert ep.invert_unit(1 + 3 * h) == hpoly("1 - 3h + 9h^2 - 27h^3")
    s = (1 + h) ** 4 * ep.invert_unit((1 + 3 * h) ** 20)
    assert s.coefficient("h") == -56
    # the h^2 coefficient, checked against a sympy series
    x = sympy.symbols("x")
    series = sympy.series((1 + x) ** 4 / (1 + 3 * x) ** 20, x, 0, 4).removeO()
    for k in range(4):
        assert s.coefficient(Monomial.of(h=k)) == int(series.coeff(x, k))
    assert s.coefficient("h^2") == 1656
    assert ep.invert_unit(TruncatedPolynomial.constant(P3, 2)) == Fraction(1, 2)
    with pytest.raises(NonUnitError):
        ep.invert_unit(h)


def test_coefficient_and_components():
    p = hpoly("1 - 16h + 146h^2")
    assert ep.coefficient(p, Monomial.of(h=2)) == 146
    assert ep.coefficient(p, Monomial.of(h=3)) == 0
    assert ep.coefficient(hpoly("4 + 48h + 144h^2"), Monomial.of(h=1)) == 48
    assert ep.homogeneous_component(hpoly("1 - 16h + 146h^2 - 996h^3"), 5) == 0
    assert ep.homogeneous_component(hpoly("1 - 16h"), 0) == 1
    s4 = Scheme.make(["l", "m", "e", "z"], total_cap=8)
    q = TruncatedPolynomial.parse(s4, "1 + 10l + 30m - 30e - 9z + 45 l^2")
    assert ep.homogeneous_component(q, 1) == TruncatedPolynomial.parse(s4, "10l + 30m - 30e - 9z")


def test_parse_juxtaposed_and_fractions():
    s = Scheme.make(["l", "m", "e", "z"], total_cap=8)
    p = TruncatedPolynomial.parse(s, "3/2 lm^3z^4 - e")
    assert p.coefficient("l*m^3*z^4") == Fraction(3, 2)
    assert p.coefficient("e") == -1
    with pytest.raises(ValueError):
        TruncatedPolynomial.parse(s, "1 + ?")


def test_caps_drop_terms():
    s = Scheme.make(["a", "b"], caps={"a": 2}, total_cap=3)
    p = TruncatedPolynomial.parse(s, "a + b")
    assert (p ** 3).terms.keys() == {(0, 3), (1, 2)}
    assert s.admits((1, 2)) and not s.admits((2, 0)) and not s.admits((0, 4))


def test_json_round_trip():
    p = hpoly("1 - 3/2 h + 7 h^3")
    assert TruncatedPolynomial.from_json(P3, p.to_json()) == p
    assert p.to_json()[1] == {"monomial": "h", "coeff": "-3/2"}


def test_group_caps():
    s = Scheme.make(["h", "x"], caps={"h": 4}, total_cap=8, group_caps=[(("h",), 3)])
    h = TruncatedPolynomial.var(s, "h")
    assert h ** 3 and not h ** 4


# -- properties ---------------------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == 0


@given(units())
def test_inverse_is_exact(p):
    assert ep.invert_unit(p) * p == 1


@given(polys(max_terms=3), st.integers(0, 19))
def test_pow_is_folded_mul(p, k):
    acc = TruncatedPolynomial.one(p.scheme)
    for _ in range(k):
        acc = acc * p
    assert ep.pow(p, k) == acc


@given(polys(), polys())
def test_truncation_is_an_ideal(p, q):
    assert all(SMALL.admits(e) for e in (p * q).terms)
