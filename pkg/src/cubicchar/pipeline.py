"""Characteristic numbers of cubic hypersurfaces.

The number of smooth cubics through n_p general points and tangent to
n_l general lines is the Bezout count 4^n_l minus one excess-intersection
correction per blow-up center,

    int_{B_i} (B_i o P)^n_p (B_i o L)^n_l s(N_{B_i} V_i).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .centers import (CenterData, DataInconsistencyError, UnsupportedCaseError, build_center,
                      dim_V0)
from .chowring import integrate
from .tangency import degree_formulas, line_condition_degree

CUBIC = 3

B4_UNAVAILABLE = ("B4 unavailable: for n > 3 the Chern class of E on B3 is only determined up to "
                  "integer multiples of m^k[Delta], so the last correction term is not computed")
CONJECTURE_NOTE = ("conjecture (not a result): for n_p >= n the general-n correction terms are "
                   "expected to give the true characteristic numbers")


class NonIntegralCorrectionError(DataInconsistencyError):
    pass


@dataclass(frozen=True)
class CountQuery:
    n: int
    n_p: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not 0 <= self.n_p <= self.dim_V0:
            raise ValueError(f"n_p must lie in [0, {self.dim_V0}]")

    @property
    def dim_V0(self) -> int:
        return dim_V0(self.n)

    @property
    def n_l(self) -> int:
        return self.dim_V0 - self.n_p


@dataclass(frozen=True)
class CountResult:
    query: CountQuery
    bezout: int
    corrections: tuple  # (center index, value) pairs
    characteristic_number: int | None
    note: str | None = None
    missing: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "n": self.query.n,
            "points": self.query.n_p,
            "lines": self.query.n_l,
            "bezout": str(self.bezout),
            "corrections": [{"center": i, "value": str(v)} for i, v in self.corrections],
            "characteristic_number": None if self.characteristic_number is None else str(self.characteristic_number),
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def correction_term(center: CenterData, q: CountQuery) -> int:
    """Exact excess contribution of one center; must be an integer."""
    if center.n != q.n:
        raise ValueError(f"center built for n={center.n}, query has n={q.n}")
    # BP^n_p vanishes once n_p exceeds the dimension of the center
    if q.n_p > center.dim:
        return 0
    klass = center.classBP ** q.n_p * center.classBL ** q.n_l * center.segre
    value = Fraction(integrate(klass, center.table))
    if value.denominator != 1:
        raise NonIntegralCorrectionError(f"B{center.index} correction {value} is not an integer")
    return int(value)


def available_centers(n: int) -> tuple:
    if n == 3:
        return (0, 1, 2, 3, 4)
    if n == 4:
        return (0, 1, 2, 3)
    raise UnsupportedCaseError(f"centers are only assembled for n = 3 and n = 4, not n={n}")


def characteristic_number(q: CountQuery, parallel: bool = False) -> CountResult:
    idx = available_centers(q.n)
    centers = [build_center(i, q.n) for i in idx]
    if parallel:
        with ThreadPoolExecutor() as pool:
            values = list(pool.map(lambda c: correction_term(c, q), centers))
    else:
        values = [correction_term(c, q) for c in centers]
    corrections = tuple(zip(idx, values))
    bezout = line_condition_degree(CUBIC) ** q.n_l
    if q.n == 3:
        return CountResult(q, bezout, corrections, bezout - sum(values))
    note = B4_UNAVAILABLE
    if q.n_p >= q.n:
        note += "; " + CONJECTURE_NOTE
    return CountResult(q, bezout, corrections, None, note, missing=(4,))


def count_table(n: int = 3) -> dict:
    return {k: characteristic_number(CountQuery(n, k)).characteristic_number for k in range(dim_V0(n) + 1)}


@dataclass(frozen=True)
class Refusal:
    """The hypotheses of the count fail; no number is returned."""

    d: int
    n: int
    n_H: int
    reason: str

    def to_dict(self) -> dict:
        return {"d": self.d, "n": self.n, "tangencies": self.n_H, "refused": True, "reason": self.reason}


def hyperplane_characteristic_number(d: int, n: int, n_H: int):
    """Count of degree-d hypersurfaces tangent to n_H general hyperplanes, or a Refusal."""
    if d < 2 or n < 2:
        raise ValueError("need d >= 2 and n >= 2")
    if n_H < 0:
        raise ValueError("n_H must be non-negative")
    if n_H == 0:
        return 1  # the empty set of conditions
    formulas = degree_formulas(d, n)
    if not (d == 5 or d >= 7 or (d, n) == (3, 3)):
        return Refusal(d, n, n_H, "degree hypothesis: need d = 5, d >= 7 or (d, n) = (3, 3)")
    bound = formulas.positive_dim_sing_codim
    if n_H >= bound:
        return Refusal(d, n, n_H, f"tangency count n_H = {n_H} is not below n(d-2)+3 = {bound}")
    return formulas.hyperplane_condition_degree ** n_H
