"""Chern and Segre class calculus on presented Chow rings.

Sign convention for projective bundles: ``P(F)`` parametrizes lines in the
fibers of ``F`` and the new generator is ``xi = c_1(O(-1))``.  Pushforward is

    pi_*(xi^(r-1+i)) = (-1)^(r-1+i) s_i(F),      pi_*(xi^k) = 0 for k < r-1,

with ``s(F) = 1 / c(F)``.  The same convention reproduces all published
intersection tables for the blow-up centers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .chowring import (ChowClass, ChowRingPresentation, IntegrationTable, PresentationError,
                       RewriteRule, integrate, ring_hom)
from .exactpoly import Monomial, Scheme, TruncatedPolynomial


class UnsupportedRankError(ValueError):
    pass


@dataclass(frozen=True)
class BundleClass:
    """A vector bundle remembered through its rank and total Chern class."""

    rank: int
    total_chern: ChowClass

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.total_chern.constant_term() != 1:
            raise ValueError("total Chern class must have constant term 1")

    @property
    def ring(self) -> ChowRingPresentation:
        return self.total_chern.ring

    def c(self, i: int) -> ChowClass:
        return self.total_chern.component(i)

    def chern_classes(self) -> list[ChowClass]:
        return [self.c(i) for i in range(self.ring.dimension + 1)]


def line_bundle(c1: ChowClass) -> BundleClass:
    return BundleClass(1, 1 + c1)


def segre_total(F: BundleClass) -> ChowClass:
    return F.total_chern.inverse()


def twist_chern(F: BundleClass, t: ChowClass) -> BundleClass:
    """Total Chern class of ``F (x) L`` where ``c_1(L) = t``."""
    ring = F.ring
    one_plus_t = 1 + t
    total = ring.zero()
    for i in range(min(F.rank, ring.dimension) + 1):
        total = total + F.c(i) * one_plus_t ** (F.rank - i)
    return BundleClass(F.rank, total)


def quotient(F: BundleClass, S: BundleClass) -> BundleClass:
    """Class of ``F / S`` for a subbundle ``S``."""
    if S.rank > F.rank:
        raise ValueError("subbundle rank exceeds bundle rank")
    return BundleClass(F.rank - S.rank, F.total_chern * segre_total(S))


def direct_sum(*bundles: BundleClass) -> BundleClass:
    total = bundles[0].ring.one()
    for b in bundles:
        total = total * b.total_chern
    return BundleClass(sum(b.rank for b in bundles), total)


@lru_cache(maxsize=None)
def _sym2_in_elementary(r: int) -> TruncatedPolynomial:
    """prod_{i<=j} (1 + x_i + x_j) written in the elementary symmetric e_1..e_r."""
    roots = Scheme.make([f"x{i}" for i in range(1, r + 1)])
    xs = [TruncatedPolynomial.var(roots, f"x{i}") for i in range(1, r + 1)]
    prod = TruncatedPolynomial.one(roots)
    for i in range(r):
        for j in range(i, r):
            prod = prod * (1 + xs[i] + xs[j])
    elem = _elementary(roots, xs)
    target = Scheme.make([f"e{i}" for i in range(1, r + 1)], weights={f"e{i}": i for i in range(1, r + 1)})
    return _symmetric_reduce(prod, elem, target)


def _elementary(scheme, xs):
    out = []
    r = len(xs)
    for k in range(1, r + 1):
        acc = TruncatedPolynomial.zero(scheme)
        for idx in _combinations(r, k):
            term = TruncatedPolynomial.one(scheme)
            for i in idx:
                term = term * xs[i]
            acc = acc + term
        out.append(acc)
    return out


def _combinations(r, k):
    from itertools import combinations
    return combinations(range(r), k)


def _symmetric_reduce(p, elem, target):
    """Fundamental theorem of symmetric polynomials, by leading-term reduction."""
    r = len(elem)
    result = {}
    p = TruncatedPolynomial(p.scheme, p.terms)
    while p.terms:
        lead = max(p.terms)  # lex order on (x1, ..., xr)
        c = p.terms[lead]
        if any(lead[i] < lead[i + 1] for i in range(r - 1)):
            raise ArithmeticError("polynomial is not symmetric")
        powers = tuple(lead[i] - (lead[i + 1] if i + 1 < r else 0) for i in range(r))
        term = TruncatedPolynomial.constant(p.scheme, c)
        for e, k in zip(elem, powers):
            term = term * e ** k
        p = p - term
        result[powers] = result.get(powers, 0) + c
    return TruncatedPolynomial(target, result)


def sym2_chern(F: BundleClass) -> BundleClass:
    """Total Chern class of ``Sym^2 F`` by the splitting principle (rank <= 4)."""
    r = F.rank
    if r > 4:
        raise UnsupportedRankError("Sym^2 is only provided for rank <= 4")
    ring = F.ring
    if r == 0:
        return BundleClass(0, ring.one())
    universal = _sym2_in_elementary(r)
    images = {f"e{i}": F.c(i).value for i in range(1, r + 1)}
    value = universal.substitute(ring.scheme, images)
    return BundleClass(comb(r + 1, 2), ChowClass(ring, value))


def projective_bundle(base: ChowRingPresentation, base_table: IntegrationTable, F: BundleClass,
                      xi: str, name: str | None = None,
                      with_relation: bool = False) -> tuple[ChowRingPresentation, IntegrationTable]:
    """Presentation and integration table of ``P(F)`` over ``base``.

    The new ring keeps the base generators, caps and rewrite rules and adds
    ``xi`` in degree one.  By default no relation on ``xi`` is imposed: the
    table is a linear functional on the free extension and the Grothendieck
    relation lies in its kernel.  ``with_relation=True`` adds the rewrite
    ``xi^r -> -sum_{i>=1} (-1)^i c_i(F) xi^(r-i)``; only use it over a base
    without rewrite rules, where it yields true normal forms.
    """
    if F.ring is not base:
        raise PresentationError("bundle does not live on the base ring")
    r = F.rank
    dim = base.dimension + r - 1
    gens = base.generators + ((xi, 1),)
    groups = base.group_caps + ((base.generator_names, base.dimension),)
    ring = ChowRingPresentation(name or f"P({base.name})", gens, dim, caps=base.caps, rules=base.rules,
                                group_caps=groups)
    if with_relation:
        if base.rules:
            raise PresentationError("Grothendieck rewrite needs a base without rewrite rules")
        lift = ring_hom(base, ring, {g: ring.gen(g) for g in base.generator_names})
        x = ring.gen(xi)
        rhs = ring.zero()
        for i in range(1, r + 1):
            rhs = rhs - (-1) ** i * lift(F.c(i)) * x ** (r - i)
        rule = RewriteRule(Monomial.of({xi: r}), str(rhs))
        ring = ChowRingPresentation(ring.name, gens, dim, caps=base.caps, rules=(rule,),
                                    group_caps=groups)
    segre = segre_total(F)
    s = [segre.component(i) for i in range(base.dimension + 1)]
    xi_idx = ring.scheme.index(xi)
    entries = {}
    for exps in ring.normal_monomials(dim):
        k = exps[xi_idx]
        alpha_exps = exps[:xi_idx] + exps[xi_idx + 1:]
        if k < r - 1:
            entries[exps] = 0
            continue
        i = k - (r - 1)
        alpha = ChowClass(base, TruncatedPolynomial(base.scheme, {alpha_exps: 1}))
        sign = -1 if k % 2 else 1
        entries[exps] = sign * integrate(alpha * s[i], base_table) if i < len(s) else 0
    return ring, IntegrationTable(ring, entries)


def projbundle_integrate(base: ChowRingPresentation, base_table: IntegrationTable, F: BundleClass,
                         xi: str) -> IntegrationTable:
    return projective_bundle(base, base_table, F, xi)[1]
