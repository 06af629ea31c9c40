import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cubicchar.tangency import (BinaryForm, CubicSurface, InvalidCubicError, InvalidLineError, ProjLine,
                                degree_formulas, discriminant, is_tangent, is_through, monomial_indices,
                                restrict_to_line)

E = [tuple(int(i == j) for j in range(4)) for i in range(4)]
L01 = ProjLine(E[0], E[1])


def cubic(**terms):
    # cubic(x011=1) -> a_(0,1,1) = 1
    return CubicSurface(3, {tuple(int(c) for c in k[1:]): v for k, v in terms.items()})


def test_restrict_examples():
    assert restrict_to_line(cubic(x011=1), L01).coeffs == (0, 0, 1, 0)
    assert restrict_to_line(cubic(x222=1), L01).is_zero()
    assert restrict_to_line(cubic(x000=1, x011=-1), L01).coeffs == (1, 0, -1, 0)


def test_invalid_inputs():
    with pytest.raises(InvalidLineError):
        ProjLine((1, 2, 0, 0), (2, 4, 0, 0))
    with pytest.raises(InvalidLineError):
        ProjLine.parse("1,0,0,0")
    with pytest.raises(InvalidCubicError):
        CubicSurface(3, {(0, 0, 0): 0})
    with pytest.raises(InvalidCubicError):
        CubicSurface(3, {(0, 0, 4): 1})


def test_discriminant_examples():
    assert discriminant(BinaryForm(0, 0, 1, 0)) == 0
    assert discriminant(BinaryForm(1, 0, -1, 0)) == 4


def test_discriminant_reproduces_line_condition():
    a001, a011, a111 = sympy.symbols("a001 a011 a111")
    expected = (a001 ** 2 * a011 ** 2 + 18 * a001 * a011 * a111 - 4 * a011 ** 3 - 4 * a001 ** 3 * a111
                - 27 * a111 ** 2)
    assert sympy.expand(discriminant((1, a001, a011, a111)) - expected) == 0


def test_discriminant_via_restriction_matches_line_condition():
    # on the chart a_000 = 1, restricting to x_2 = x_3 = 0 picks out a_001, a_011, a_111
    rng = random.Random(5)
    for _ in range(20):
        coeffs = {idx: Fraction(rng.randint(-9, 9)) for idx in monomial_indices(3)}
        coeffs[(0, 0, 0)] = Fraction(1)
        f = CubicSurface(3, coeffs)
        a001, a011, a111 = coeffs[(0, 0, 1)], coeffs[(0, 1, 1)], coeffs[(1, 1, 1)]
        value = (a001 ** 2 * a011 ** 2 + 18 * a001 * a011 * a111 - 4 * a011 ** 3 - 4 * a001 ** 3 * a111
                 - 27 * a111 ** 2)
        assert discriminant(restrict_to_line(f, L01)) == value


def test_predicates():
    assert is_tangent(cubic(x011=1), L01)
    assert not is_tangent(cubic(x000=1, x011=-1), L01)
    assert is_tangent(cubic(x222=1), L01)  # line inside the surface
    assert is_through(cubic(x011=1), E[2])
    assert not is_through(cubic(x000=1), E[0])


def test_degree_formulas():
    f = degree_formulas(3, 3)
    assert f.line_condition_degree == 4
    assert f.hurwitz_bidegree == (4, 6)
    assert f.hyperplane_condition_degree == 12
    assert f.positive_dim_sing_codim == 6
    assert degree_formulas(2, 2).line_condition_degree == 2


# -- randomized agreement with a gcd oracle ---------------------------------

def _linear_dual(v, w):
    """Linear forms lam, mu on Q^4 with lam(v)=1, lam(w)=0, mu(v)=0, mu(w)=1."""
    # complete (v, w) to a basis and invert
    basis = [list(v), list(w)]
    for e in E:
        if sympy.Matrix(basis + [list(e)]).rank() == len(basis) + 1:
            basis.append(list(e))
        if len(basis) == 4:
            break
    inv = sympy.Matrix(basis).T.inv()
    return list(inv.row(0)), list(inv.row(1))


def _cubic_from_binary(target, v, w):
    """A cubic whose restriction to the line vw is the binary form ``target``."""
    lam, mu = _linear_dual(v, w)
    x = sympy.symbols("x0:4")
    L = sum(c * xi for c, xi in zip(lam, x))
    M = sum(c * xi for c, xi in zip(mu, x))
    A, B, C_, D = target
    g = sympy.Poly(sympy.expand(A * L ** 3 + B * L ** 2 * M + C_ * L * M ** 2 + D * M ** 3), *x)
    out = {}
    for exps, c in g.terms():
        idx = tuple(sorted(sum(([i] * e for i, e in enumerate(exps)), [])))
        out[idx] = Fraction(int(c.p), int(c.q))
    return out


def _gcd_oracle(b: BinaryForm) -> bool:
    """Repeated root over the algebraic closure iff f_s and f_t share a factor."""
    s, t = sympy.symbols("s t")
    A, B, C_, D = (sympy.Rational(x.numerator, x.denominator) for x in b.coeffs)
    f = A * s ** 3 + B * s ** 2 * t + C_ * s * t ** 2 + D * t ** 3
    if f == 0:
        return True
    g = sympy.gcd(sympy.diff(f, s), sympy.diff(f, t))
    return sympy.Poly(g, s, t).total_degree() > 0


def _random_case(rng):
    v = tuple(rng.randint(-4, 4) for _ in range(4))
    w = tuple(rng.randint(-4, 4) for _ in range(4))
    try:
        line = ProjLine(v, w)
    except InvalidLineError:
        return None
    coeffs = {idx: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for idx in monomial_indices(3)}
    coeffs[(0, 0, 0)] = coeffs[(0, 0, 0)] or Fraction(1)
    if rng.random() < 0.5:
        # force a double root: the restriction becomes (p s + q t)^2 (r s + u t)
        p, q, r, u = (rng.randint(-3, 3) for _ in range(4))
        target = (p * p * r, p * p * u + 2 * p * q * r, q * q * r + 2 * p * q * u, q * q * u)
        current = restrict_to_line(CubicSurface(3, coeffs), line)
        diff = tuple(a - b for a, b in zip(target, current.coeffs))
        for idx, c in _cubic_from_binary(diff, v, w).items():
            coeffs[idx] += c
    try:
        return CubicSurface(3, coeffs), line
    except InvalidCubicError:
        return None


def test_randomized_tangency_against_gcd_oracle():
    rng = random.Random(20240601)
    cases, tangent = 0, 0
    while cases < 200:
        case = _random_case(rng)
        if case is None:
            continue
        f, line = case
        b = restrict_to_line(f, line)
        assert is_tangent(f, line) == _gcd_oracle(b)
        cases += 1
        tangent += is_tangent(f, line)
    # both outcomes are exercised
    assert 40 < tangent < 160


small_ints = st.integers(-6, 6)
forms = st.tuples(small_ints, small_ints, small_ints, small_ints).map(lambda c: BinaryForm(*c))


@given(forms, small_ints, small_ints, small_ints, small_ints)
def test_discriminant_transforms_by_det_six(b, p, q, r, s):
    det = p * s - q * r
    assert discriminant(b.compose(p, q, r, s)) == det ** 6 * discriminant(b)


cubics = st.dictionaries(st.sampled_from(monomial_indices(3)), st.integers(-5, 5), min_size=1).filter(
    lambda d: any(d.values()))


@given(cubics, cubics, st.integers(-4, 4))
def test_restriction_is_linear(f, g, c):
    line = ProjLine((1, 2, 0, -1), (0, 1, 3, 1))
    F, G = CubicSurface(3, f), CubicSurface(3, g)
    combined = {k: f.get(k, 0) + c * g.get(k, 0) for k in set(f) | set(g)}
    if not any(combined.values()):
        return
    lhs = restrict_to_line(CubicSurface(3, combined), line)
    assert lhs == restrict_to_line(F, line) + restrict_to_line(G, line).scale(c)
