"""Presented Chow rings: normal forms, integration tables and ring maps.

A :class:`ChowRingPresentation` is a truncated polynomial ring in named
generators together with monomial rewrite rules ``lhs -> rhs``.  Normal forms
are fixed points of the rewrite system.  Integration of a class is a linear
functional on top-degree normal-form monomials, stored in an
:class:`IntegrationTable`.

Rewrite systems here are deliberately small (a single rule for the blow-up of
the diagonal); they do not generate the full ideal of relations.  For genuine
equality of classes use :meth:`ChowRing.canonical`, which works modulo the
kernel of the intersection pairing.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .exactpoly import (Coeff, Monomial, Scheme, TruncatedPolynomial, as_rational,
                        format_rational)
from . import linalg


class PresentationError(ValueError):
    """Malformed presentation or non-terminating rewrite system."""


class IncompleteTableError(KeyError):
    """A top-degree normal-form monomial has no integration entry."""


class DegreeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    """Replace ``lhs`` (a monomial dividing the term) by ``rhs``."""

    lhs: Monomial
    rhs: str  # polynomial text, parsed against the owning presentation


class ChowRingPresentation:
    """Generators with degrees, nilpotency caps, rewrite rules and a dimension."""

    def __init__(self, name: str, generators: Sequence[tuple[str, int]], dimension: int,
                 caps: Mapping[str, int] | None = None,
                 rules: Sequence[RewriteRule] = (), max_steps: int = 10_000,
                 group_caps: Sequence[tuple[Sequence[str], int]] = ()):
        if dimension <= 0:
            raise PresentationError("zero-dimensional presentations are not supported")
        self.name = name
        self.generators = tuple((g, int(d)) for g, d in generators)
        self.dimension = dimension
        self.caps = dict(caps or {})
        self.group_caps = tuple((tuple(names), int(cap)) for names, cap in group_caps)
        names = [g for g, _ in self.generators]
        self.scheme = Scheme.make(names, self.caps, total_cap=dimension,
                                  weights={g: d for g, d in self.generators},
                                  group_caps=self.group_caps)
        self.max_steps = max_steps
        self.rules = tuple(rules)
        self._rules = []
        for rule in self.rules:
            lhs = self.scheme.exps_of(rule.lhs)
            rhs = TruncatedPolynomial.parse(self.scheme, rule.rhs)
            if any(self.scheme.degree(e) != self.scheme.degree(lhs) for e in rhs.terms):
                raise PresentationError(f"rule {rule} is not homogeneous")
            self._rules.append((lhs, rhs))
        self._nf_cache: dict[tuple, TruncatedPolynomial] = {}

    def __repr__(self) -> str:
        gens = ", ".join(g for g, _ in self.generators)
        return f"ChowRingPresentation({self.name!r}: [{gens}], dim={self.dimension})"

    @property
    def generator_names(self) -> tuple:
        return tuple(g for g, _ in self.generators)

    def gen(self, name: str) -> "ChowClass":
        return ChowClass(self, TruncatedPolynomial.var(self.scheme, name))

    def gens(self) -> tuple:
        return tuple(self.gen(g) for g in self.generator_names)

    def one(self) -> "ChowClass":
        return ChowClass(self, TruncatedPolynomial.one(self.scheme))

    def zero(self) -> "ChowClass":
        return ChowClass(self, TruncatedPolynomial.zero(self.scheme))

    def element(self, value) -> "ChowClass":
        """Coerce a string, scalar or polynomial into a normalized class."""
        if isinstance(value, ChowClass):
            if value.ring is not self:
                raise PresentationError("class belongs to another ring")
            return value
        if isinstance(value, str):
            value = TruncatedPolynomial.parse(self.scheme, value)
        elif isinstance(value, (int, Fraction)):
            value = TruncatedPolynomial.constant(self.scheme, value)
        return ChowClass(self, value)

    # -- normal forms -------------------------------------------------------
    def _normal_monomial(self, exps: tuple) -> TruncatedPolynomial:
        cached = self._nf_cache.get(exps)
        if cached is not None:
            return cached
        steps = 0
        pending = TruncatedPolynomial(self.scheme, {exps: 1})
        done: dict = {}
        while pending.terms:
            nxt: dict = {}
            for e, c in pending.terms.items():
                rule = self._first_rule(e)
                if rule is None:
                    done[e] = done.get(e, 0) + c
                    continue
                steps += 1
                if steps > self.max_steps:
                    raise PresentationError(f"rewrite did not terminate from {self.scheme.monomial(exps)}")
                lhs, rhs = rule
                rest = tuple(a - b for a, b in zip(e, lhs))
                for re_, rc in rhs.terms.items():
                    t = tuple(a + b for a, b in zip(rest, re_))
                    if self.scheme.admits(t):
                        nxt[t] = nxt.get(t, 0) + c * rc
            pending = TruncatedPolynomial(self.scheme, nxt)
        result = TruncatedPolynomial(self.scheme, done)
        self._nf_cache[exps] = result
        return result

    def _first_rule(self, exps):
        for lhs, rhs in self._rules:
            if all(a >= b for a, b in zip(exps, lhs)):
                return lhs, rhs
        return None

    def normal_form(self, poly: TruncatedPolynomial) -> TruncatedPolynomial:
        if poly.scheme != self.scheme:
            poly = poly.in_scheme(self.scheme)
        if not self._rules:
            return poly
        out: dict = {}
        for e, c in poly.terms.items():
            for ne, nc in self._normal_monomial(e).terms.items():
                out[ne] = out.get(ne, 0) + c * nc
        return TruncatedPolynomial(self.scheme, out)

    def is_normal(self, exps: tuple) -> bool:
        return self._first_rule(exps) is None

    def monomials(self, degree: int) -> list[tuple]:
        """All cap-admissible exponent vectors of the given weighted degree."""
        out = []
        bounds = []
        for g, w in self.generators:
            cap = self.caps.get(g)
            hi = degree // w
            bounds.append(range(0, (hi if cap is None else min(hi, cap - 1)) + 1))
        for exps in itertools.product(*bounds):
            if self.scheme.degree(exps) == degree and self.scheme.admits(exps):
                out.append(exps)
        out.sort(key=lambda e: tuple(-x for x in e))
        return out

    def normal_monomials(self, degree: int) -> list[tuple]:
        return [e for e in self.monomials(degree) if self.is_normal(e)]

    def check_rewrite_system(self) -> None:
        """Exhaustively normalize every monomial up to the dimension.

        Raises :class:`PresentationError` if a normal form is not a fixed point
        or if rewriting does not terminate.
        """
        for d in range(self.dimension + 1):
            for exps in self.monomials(d):
                nf = self._normal_monomial(exps)
                for e in nf.terms:
                    if not self.is_normal(e):
                        raise PresentationError(f"normal form of {exps} is reducible")


class ChowClass:
    """A class in a presented Chow ring, stored in rewrite normal form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: ChowRingPresentation, value: TruncatedPolynomial):
        self.ring = ring
        self.value = ring.normal_form(value)

    def _other(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            if other.ring is not self.ring:
                raise PresentationError(f"classes from different rings: {self.ring} vs {other.ring}")
            return other
        return self.ring.element(other)

    def __add__(self, other):
        return ChowClass(self.ring, self.value + self._other(other).value)

    __radd__ = __add__

    def __sub__(self, other):
        return ChowClass(self.ring, self.value - self._other(other).value)

    def __rsub__(self, other):
        return ChowClass(self.ring, self._other(other).value - self.value)

    def __neg__(self):
        return ChowClass(self.ring, -self.value)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ring, self.value.scale(other))
        return ChowClass(self.ring, self.value * self._other(other).value)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * self._other(other).inverse()

    def inverse(self) -> "ChowClass":
        """Inverse of a unit, normalizing after every product."""
        c0 = self.value.constant_term()
        if c0 == 0:
            from .exactpoly import NonUnitError
            raise NonUnitError("class has zero degree-0 part")
        q = self.ring.element(Fraction(1) / Fraction(c0))
        correct = 0
        top = self.ring.dimension
        while correct < top:
            correct = min(2 * correct + 1, top)
            pq = self * q
            q = ChowClass(self.ring, (q * (2 - pq)).value.truncate(correct))
        return q

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = self.ring.element(other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ring is other.ring and self.value == other.value

    def __hash__(self):
        return hash((id(self.ring), self.value))

    def component(self, d: int) -> "ChowClass":
        return ChowClass(self.ring, self.value.homogeneous_component(d))

    def truncate(self, d: int) -> "ChowClass":
        return ChowClass(self.ring, self.value.truncate(d))

    def coefficient(self, mono) -> Coeff:
        return self.value.coefficient(mono)

    def constant_term(self) -> Coeff:
        return self.value.constant_term()

    def degree(self) -> int:
        return self.value.degree()

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ChowClass({self.ring.name}: {self.value})"


def normalize(c: ChowClass) -> ChowClass:
    return ChowClass(c.ring, c.value)


@dataclass
class IntegrationTable:
    """Degrees of the top-degree normal-form monomials of a presentation.

    ``entries`` covers every normal-form monomial of degree ``dimension``,
    zero values included, so a missing key signals an incomplete table.
    """

    ring: ChowRingPresentation
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, val in self.entries.items():
            if isinstance(key, str):
                key = self.ring.scheme.exps_of(Monomial.parse(key))
            elif isinstance(key, Monomial):
                key = self.ring.scheme.exps_of(key)
            clean[tuple(key)] = as_rational(val)
        self.entries = clean

    def __getitem__(self, mono) -> Coeff:
        if isinstance(mono, str):
            mono = Monomial.parse(mono)
        exps = self.ring.scheme.exps_of(mono) if isinstance(mono, Monomial) else tuple(mono)
        return self.entries[exps]

    def value(self, mono) -> Coeff:
        """Integral of an arbitrary monomial (normalized first)."""
        if isinstance(mono, str):
            mono = Monomial.parse(mono)
        exps = self.ring.scheme.exps_of(mono) if isinstance(mono, Monomial) else tuple(mono)
        return integrate(ChowClass(self.ring, TruncatedPolynomial(self.ring.scheme, {exps: 1})), self)

    def nonzero(self) -> dict:
        return {self.ring.scheme.monomial(e): v for e, v in self.entries.items() if v}

    def check_complete(self) -> None:
        expected = set(self.ring.normal_monomials(self.ring.dimension))
        missing = expected - set(self.entries)
        extra = set(self.entries) - expected
        if missing:
            raise IncompleteTableError(
                f"missing entries: {[str(self.ring.scheme.monomial(e)) for e in sorted(missing)]}")
        if extra:
            raise PresentationError(
                f"entries for non-normal monomials: {[str(self.ring.scheme.monomial(e)) for e in extra]}")

    def to_dict(self) -> dict:
        order = self.ring.normal_monomials(self.ring.dimension)
        return {str(self.ring.scheme.monomial(e)): format_rational(self.entries.get(e, 0))
                for e in order if e in self.entries}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def integrate(c: ChowClass, table: IntegrationTable) -> Coeff:
    """Sum of top-degree coefficients weighted by the table entries."""
    if c.ring is not table.ring:
        raise PresentationError("class and table belong to different rings")
    dim = c.ring.dimension
    total = 0
    for exps, coeff in c.value.terms.items():
        if c.ring.scheme.degree(exps) != dim:
            continue
        try:
            total += coeff * table.entries[exps]
        except KeyError:
            raise IncompleteTableError(
                f"no entry for {c.ring.scheme.monomial(exps)} in {c.ring.name}") from None
    return as_rational(total)


def ring_hom(src: ChowRingPresentation, target: ChowRingPresentation,
             images: Mapping[str, "ChowClass | str"]) -> Callable[[ChowClass], ChowClass]:
    """The ring map determined by generator images, normalized in the target."""
    imgs = {}
    for g, deg in src.generators:
        img = images[g]
        img = target.element(img)
        if img.value.terms and any(target.scheme.degree(e) != deg for e in img.value.terms):
            raise DegreeMismatchError(f"image of {g} is not homogeneous of degree {deg}")
        imgs[g] = img.value

    def apply(c: ChowClass) -> ChowClass:
        if c.ring is not src:
            raise PresentationError("class is not in the source ring")
        return ChowClass(target, c.value.substitute(target.scheme, imgs))

    return apply


class ChowRing:
    """A presentation with its integration table and the pairing quotient.

    :meth:`canonical` reduces a class modulo the kernel of the intersection
    pairing, which for the smooth projective centers here is rational
    equivalence with rational coefficients.  The basis in each degree is
    chosen greedily from the smallest monomial upwards in lex order on the
    generator registry (the standard monomials of that order).  Candidates
    are all cap-admissible monomials, rewrite-normal or not.
    """

    def __init__(self, presentation: ChowRingPresentation, table: IntegrationTable):
        self.presentation = presentation
        self.table = table
        self._bases: dict[int, tuple] = {}

    @property
    def dimension(self) -> int:
        return self.presentation.dimension

    def integrate(self, c: ChowClass) -> Coeff:
        return integrate(c, self.table)

    def _pair(self, a: tuple, b: tuple) -> Coeff:
        exps = tuple(x + y for x, y in zip(a, b))
        return self.table.value(exps) if self.presentation.scheme.admits(exps) else 0

    def basis(self, d: int):
        """(basis monomials, dual test monomials, inverse Gram matrix) in degree d."""
        if d in self._bases:
            return self._bases[d]
        ring = self.presentation
        rows = sorted(ring.monomials(d))
        cols = sorted(ring.monomials(ring.dimension - d))
        gram = [[self._pair(a, b) for b in cols] for a in rows]
        chosen_rows, chosen_cols = linalg.independent_rows_cols(gram)
        basis = [rows[i] for i in chosen_rows]
        tests = [cols[j] for j in chosen_cols]
        square = [[gram[i][j] for j in chosen_cols] for i in chosen_rows]
        inv = linalg.inverse(square) if square else []
        self._bases[d] = (basis, tests, inv)
        return self._bases[d]

    def rank(self, d: int) -> int:
        return len(self.basis(d)[0])

    def canonical(self, c: "ChowClass | TruncatedPolynomial") -> TruncatedPolynomial:
        """Coordinates of ``c`` in the pairing basis, as a raw polynomial."""
        ring = self.presentation
        value = c.value if isinstance(c, ChowClass) else c
        out: dict = {}
        for d in range(0, ring.dimension + 1):
            part = value.homogeneous_component(d)
            if not part.terms:
                continue
            basis, tests, inv = self.basis(d)
            if not basis:
                continue
            pairings = [integrate(ChowClass(ring, part * TruncatedPolynomial(ring.scheme, {t: 1})),
                                  self.table) for t in tests]
            # x^T G = pairings  ->  x = pairings G^{-1}
            for mono, coeff in zip(basis, linalg.vec_mat(pairings, inv)):
                if coeff:
                    out[mono] = coeff
        return TruncatedPolynomial(ring.scheme, out)

    def is_zero(self, c) -> bool:
        return not self.canonical(c).terms

    def equal(self, a: ChowClass, b: ChowClass) -> bool:
        return self.is_zero(a - b)
