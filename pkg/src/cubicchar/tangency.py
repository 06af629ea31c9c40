"""Point and line incidence for cubic hypersurfaces, in exact arithmetic.

A cubic is stored by its coefficients a_(i,j,k) of x_i x_j x_k with
i <= j <= k.  Restricting to the line through v and w gives a binary cubic
A s^3 + B s^2 t + C s t^2 + D t^3; the line is tangent iff that form has a
repeated root, i.e. its discriminant vanishes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .exactpoly import as_rational, format_rational


class InvalidLineError(ValueError):
    pass


class InvalidCubicError(ValueError):
    pass


def _index(key) -> tuple:
    if isinstance(key, str):
        key = tuple(int(x) for x in key.replace(" ", "").split(","))
    idx = tuple(sorted(int(x) for x in key))
    if len(idx) != 3 or idx[0] < 0:
        raise InvalidCubicError(f"bad multi-index {key!r}")
    return idx


@dataclass(frozen=True)
class CubicSurface:
    """A cubic form in x_0..x_n (a surface when n = 3)."""

    n: int
    coefficients: Mapping[tuple, Fraction]

    def __post_init__(self):
        clean = {}
        for key, value in self.coefficients.items():
            idx = _index(key)
            if idx[2] > self.n:
                raise InvalidCubicError(f"index {idx} out of range for n={self.n}")
            value = as_rational(value)
            if value:
                clean[idx] = clean.get(idx, 0) + value
        clean = {k: v for k, v in clean.items() if v}
        if not clean:
            raise InvalidCubicError("the zero form is not a point of V_0")
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def from_dict(cls, data: Mapping, n: int | None = None) -> "CubicSurface":
        if n is None:
            n = max(max(_index(k)) for k in data) if data else 3
            n = max(n, 3)
        return cls(n, {_index(k): as_rational(v) for k, v in data.items()})

    @classmethod
    def load(cls, path, n: int | None = None) -> "CubicSurface":
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "coefficients" in data:
            return cls.from_dict(data["coefficients"], data.get("n", n))
        return cls.from_dict(data, n)

    def to_dict(self) -> dict:
        return {",".join(map(str, k)): format_rational(v) for k, v in sorted(self.coefficients.items())}

    def __call__(self, point: Sequence) -> Fraction:
        x = [as_rational(c) for c in point]
        if len(x) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coordinates")
        return sum((a * x[i] * x[j] * x[k] for (i, j, k), a in self.coefficients.items()), Fraction(0))


def monomial_indices(n: int) -> list:
    return list(combinations_with_replacement(range(n + 1), 3))


def _rank_at_least_two(v, w) -> bool:
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] * w[j] - v[j] * w[i]:
                return True
    return False


@dataclass(frozen=True)
class ProjLine:
    v: tuple
    w: tuple

    def __post_init__(self):
        v = tuple(as_rational(c) for c in self.v)
        w = tuple(as_rational(c) for c in self.w)
        if len(v) != len(w):
            raise InvalidLineError("points live in different spaces")
        if not _rank_at_least_two(v, w):
            raise InvalidLineError("points are linearly dependent")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    @classmethod
    def parse(cls, text: str) -> "ProjLine":
        """Parse ``"v0,v1,...|w0,w1,..."``."""
        try:
            a, b = text.split("|")
        except ValueError:
            raise InvalidLineError("expected two points separated by '|'") from None
        return cls(tuple(x.strip() for x in a.split(",")), tuple(x.strip() for x in b.split(",")))

    def point(self, s, t) -> tuple:
        return tuple(s * a + t * b for a, b in zip(self.v, self.w))


@dataclass(frozen=True)
class BinaryForm:
    """A s^3 + B s^2 t + C s t^2 + D t^3."""

    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction

    def __post_init__(self):
        for name in "ABCD":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def coeffs(self) -> tuple:
        return (self.A, self.B, self.C, self.D)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "BinaryForm":
        c = as_rational(c)
        return BinaryForm(*(c * a for a in self.coeffs))

    def compose(self, p, q, r, s) -> "BinaryForm":
        """Substitute s -> p s + q t, t -> r s + s_ t (the matrix [[p, q], [r, s_]])."""
        # (p s + q t)^a (r s + s_ t)^(3-a), expanded by hand
        lin1, lin2 = (as_rational(p), as_rational(q)), (as_rational(r), as_rational(s))

        def mul(f, g):
            out = [Fraction(0)] * (len(f) + len(g) - 1)
            for i, a in enumerate(f):
                for j, b in enumerate(g):
                    out[i + j] += a * b
            return out

        total = [Fraction(0)] * 4
        for a, coeff in enumerate(reversed(self.coeffs)):  # coeff of s^a t^(3-a)
            term = [Fraction(1)]
            for _ in range(a):
                term = mul(term, list(lin1))
            for _ in range(3 - a):
                term = mul(term, list(lin2))
            # term is in ascending powers of t, i.e. index = power of t
            for i, c in enumerate(term):
                total[i] += coeff * c
        return BinaryForm(*total)


def restrict_to_line(f: CubicSurface, line: ProjLine) -> BinaryForm:
    """Coefficients of f(s v + t w) as a binary cubic in (s, t)."""
    if len(line.v) != f.n + 1:
        raise InvalidLineError(f"line lives in P^{len(line.v) - 1}, cubic in P^{f.n}")
    out = [Fraction(0)] * 4  # index = power of t
    for (i, j, k), a in f.coefficients.items():
        # product of three linear forms v_x s + w_x t
        poly = [Fraction(1)]
        for x in (i, j, k):
            lin = (line.v[x], line.w[x])
            nxt = [Fraction(0)] * (len(poly) + 1)
            for d, c in enumerate(poly):
                nxt[d] += c * lin[0]
                nxt[d + 1] += c * lin[1]
            poly = nxt
        for d, c in enumerate(poly):
            out[d] += a * c
    return BinaryForm(*out)


def discriminant(b: BinaryForm | Iterable) -> Fraction:
    # plain tuples may hold any commutative ring elements (e.g. symbols)
    A, B, C, D = b.coeffs if isinstance(b, BinaryForm) else tuple(b)
    return B * B * C * C + 18 * A * B * C * D - 4 * A * C ** 3 - 4 * B ** 3 * D - 27 * A * A * D * D


def is_tangent(f: CubicSurface, line: ProjLine) -> bool:
    # a line inside the cubic lies in the closure of every line condition
    return discriminant(restrict_to_line(f, line)) == 0


def is_through(f: CubicSurface, p: Sequence) -> bool:
    return f(p) == 0


@dataclass(frozen=True)
class DegreeFormulas:
    d: int
    n: int
    line_condition_degree: int
    hurwitz_bidegree: tuple
    hyperplane_condition_degree: int
    positive_dim_sing_codim: int

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "line_condition_degree": self.line_condition_degree,
            "hurwitz_bidegree": list(self.hurwitz_bidegree),
            "hyperplane_condition_degree": self.hyperplane_condition_degree,
            "positive_dim_sing_codim": self.positive_dim_sing_codim,
        }


def degree_formulas(d: int, n: int) -> DegreeFormulas:
    if d < 2 or n < 2:
        raise ValueError("need d >= 2 and n >= 2")
    return DegreeFormulas(
        d=d,
        n=n,
        line_condition_degree=2 * (d - 1),
        hurwitz_bidegree=(2 * (d - 1), d * (d - 1)),
        hyperplane_condition_degree=n * (d - 1) ** (n - 1),
        positive_dim_sing_codim=n * (d - 2) + 3,
    )


def line_condition_degree(d: int) -> int:
    return 2 * (d - 1)
