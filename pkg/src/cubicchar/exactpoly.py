"""Exact sparse multivariate polynomials with nilpotent truncation.

Every class in the package (Chern classes, Segre classes, products of
condition classes) is carried by a :class:`TruncatedPolynomial`.  A polynomial
lives in a :class:`Scheme`, which fixes the variable order, the weight of each
variable, a nilpotency cap per variable (``x**cap == 0``) and an optional cap
on the weighted total degree.  Terms violating a cap are dropped eagerly.

Coefficients are Python ints where possible and :class:`fractions.Fraction`
otherwise, so arithmetic is exact throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]
Exps = tuple


class CapMismatchError(ValueError):
    """Raised when combining polynomials that live in different schemes."""


class NonUnitError(ZeroDivisionError):
    """Raised when inverting a polynomial with zero constant term."""


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def as_rational(value) -> Coeff:
    """Parse ``3``, ``"-7/2"`` or a Fraction into an exact coefficient."""
    if isinstance(value, str):
        return _norm(Fraction(value.strip()))
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not accepted")
    return _norm(value)


def format_rational(c: Coeff) -> str:
    c = _norm(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True, eq=False)
class Monomial:
    """A power product, stored as ``(name, exponent)`` pairs.

    Zero exponents are never stored, so ``Monomial.parse("1")`` is the
    empty monomial.  Pair order only affects printing; equality and hashing
    ignore it.
    """

    powers: tuple = ()

    def __post_init__(self):
        cleaned = tuple((str(v), int(e)) for v, e in self.powers if int(e) != 0)
        for v, e in cleaned:
            if e < 0:
                raise ValueError(f"negative exponent for {v}")
        if len({v for v, _ in cleaned}) != len(cleaned):
            raise ValueError("repeated variable in monomial")
        object.__setattr__(self, "powers", cleaned)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return dict(self.powers) == dict(other.powers)

    def __hash__(self):
        return hash(frozenset(self.powers))

    @classmethod
    def of(cls, exps: Mapping[str, int] | None = None, **kw) -> "Monomial":
        items = dict(exps or {})
        items.update(kw)
        return cls(tuple(items.items()))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        acc: dict[str, int] = {}
        for factor in text.split("*"):
            match = re.fullmatch(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*", factor)
            if not match:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            name, exp = match.group(1), int(match.group(2) or 1)
            acc[name] = acc.get(name, 0) + exp
        return cls(tuple(acc.items()))

    def as_dict(self) -> dict[str, int]:
        return dict(self.powers)

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.powers)


@dataclass(frozen=True)
class Scheme:
    """Variable registry plus truncation data shared by a family of polynomials.

    ``caps[i]`` is the exclusive exponent bound of ``variables[i]`` (``None``
    for no bound); ``total_cap`` is the largest weighted degree kept.
    ``group_caps`` holds ``(variable indices, max weighted degree)`` pairs,
    e.g. classes pulled back from a base vanish above the base dimension.
    """

    variables: tuple
    caps: tuple = ()
    total_cap: int | None = None
    weights: tuple = ()
    group_caps: tuple = ()

    def __post_init__(self):
        nvar = len(self.variables)
        if len(set(self.variables)) != nvar:
            raise ValueError("duplicate variable names")
        caps = tuple(self.caps) if self.caps else (None,) * nvar
        weights = tuple(self.weights) if self.weights else (1,) * nvar
        if len(caps) != nvar or len(weights) != nvar:
            raise ValueError("caps/weights must match the variable list")
        if any(w <= 0 for w in weights):
            raise ValueError("variable weights must be positive")
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "group_caps",
                           tuple((tuple(idx), int(cap)) for idx, cap in self.group_caps))

    @classmethod
    def make(cls, variables: Iterable[str], caps: Mapping[str, int] | None = None,
             total_cap: int | None = None, weights: Mapping[str, int] | None = None,
             group_caps: Iterable[tuple[Iterable[str], int]] = ()) -> "Scheme":
        variables = tuple(variables)
        caps = caps or {}
        weights = weights or {}
        groups = tuple((tuple(variables.index(v) for v in names), cap) for names, cap in group_caps)
        return cls(variables, tuple(caps.get(v) for v in variables), total_cap,
                   tuple(weights.get(v, 1) for v in variables), groups)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def degree(self, exps: Exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def max_degree(self) -> int:
        """Largest weighted degree a surviving monomial can have."""
        bound = 0
        for w, c in zip(self.weights, self.caps):
            if c is None:
                if self.total_cap is None:
                    raise ValueError("scheme has no finite degree bound")
                return self.total_cap
            bound += w * (c - 1)
        return bound if self.total_cap is None else min(bound, self.total_cap)

    def admits(self, exps: Exps) -> bool:
        for e, c in zip(exps, self.caps):
            if c is not None and e >= c:
                return False
        for idx, cap in self.group_caps:
            if sum(self.weights[i] * exps[i] for i in idx) > cap:
                return False
        return self.total_cap is None or self.degree(exps) <= self.total_cap

    def exps_of(self, mono: Monomial) -> Exps:
        exps = [0] * len(self.variables)
        for name, e in mono.powers:
            exps[self.index(name)] = e
        return tuple(exps)

    def monomial(self, exps: Exps) -> Monomial:
        return Monomial(tuple(zip(self.variables, exps)))

    def with_total_cap(self, total_cap: int | None) -> "Scheme":
        return Scheme(self.variables, self.caps, total_cap, self.weights, self.group_caps)


class TruncatedPolynomial:
    """Immutable sparse polynomial in a :class:`Scheme`.

    Supports ``+ - *`` with polynomials and scalars, ``**`` with non-negative
    integer exponents, and ``/`` by unit polynomials.
    """

    __slots__ = ("scheme", "terms", "_hash")

    def __init__(self, scheme: Scheme, terms: Mapping[Exps, Coeff] | None = None):
        self.scheme = scheme
        clean: dict[Exps, Coeff] = {}
        nvar = len(scheme.variables)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvar:
                raise ValueError("exponent vector has wrong length")
            c = _norm(c)
            if c and scheme.admits(exps):
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def zero(cls, scheme: Scheme) -> "TruncatedPolynomial":
        return cls(scheme)

    @classmethod
    def constant(cls, scheme: Scheme, c) -> "TruncatedPolynomial":
        return cls(scheme, {(0,) * len(scheme.variables): as_rational(c)})

    @classmethod
    def one(cls, scheme: Scheme) -> "TruncatedPolynomial":
        return cls.constant(scheme, 1)

    @classmethod
    def var(cls, scheme: Scheme, name: str) -> "TruncatedPolynomial":
        exps = [0] * len(scheme.variables)
        exps[scheme.index(name)] = 1
        return cls(scheme, {tuple(exps): 1})

    @classmethod
    def from_terms(cls, scheme: Scheme, terms: Mapping) -> "TruncatedPolynomial":
        """Build from ``{Monomial | str: coefficient}``."""
        out: dict[Exps, Coeff] = {}
        for mono, c in terms.items():
            if isinstance(mono, str):
                mono = Monomial.parse(mono)
            exps = scheme.exps_of(mono)
            out[exps] = out.get(exps, 0) + as_rational(c)
        return cls(scheme, out)

    @classmethod
    def parse(cls, scheme: Scheme, text: str) -> "TruncatedPolynomial":
        """Parse sums of signed terms like ``"1 - 16*h + 146 h^2 - 3/2 h^3"``."""
        cleaned = text.replace("\n", " ").replace("−", "-")
        cleaned = re.sub(r"\s+", " ", cleaned).strip()
        terms: dict[Exps, Coeff] = {}
        pattern = re.compile(
            r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:[A-Za-z_][A-Za-z_0-9]*(?:\s*\^\s*\d+)?\s*\*?\s*)*)")
        pos = 0
        while pos < len(cleaned):
            match = pattern.match(cleaned, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot parse polynomial near {cleaned[pos:pos + 20]!r}")
            sign, num, body = match.groups()
            pos = match.end()
            while pos < len(cleaned) and cleaned[pos] == " ":
                pos += 1
            if not num and not body.strip():
                raise ValueError(f"empty term in {text!r}")
            c = Fraction(num) if num else Fraction(1)
            if sign == "-":
                c = -c
            factors = re.findall(r"([A-Za-z_][A-Za-z_0-9]*)(?:\s*\^\s*(\d+))?", body)
            pairs = []
            for word, e in factors:
                names = _split_word(word, scheme.variables)
                pairs.extend((name, 1) for name in names[:-1])
                pairs.append((names[-1], int(e or 1)))
            mono = Monomial(_accumulate(pairs))
            exps = scheme.exps_of(mono)
            terms[exps] = terms.get(exps, 0) + c
        return cls(scheme, terms)

    # -- inspection ---------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedPolynomial):
            return self.scheme == other.scheme and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == TruncatedPolynomial.constant(self.scheme, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.scheme, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, mono: Monomial | str | Exps) -> Coeff:
        if isinstance(mono, str):
            mono = Monomial.parse(mono)
        exps = self.scheme.exps_of(mono) if isinstance(mono, Monomial) else tuple(mono)
        return self.terms.get(exps, 0)

    def constant_term(self) -> Coeff:
        return self.terms.get((0,) * len(self.scheme.variables), 0)

    def degree(self) -> int:
        """Highest weighted degree present (-1 for the zero polynomial)."""
        return max((self.scheme.degree(e) for e in self.terms), default=-1)

    def homogeneous_component(self, d: int) -> "TruncatedPolynomial":
        deg = self.scheme.degree
        return TruncatedPolynomial(self.scheme, {e: c for e, c in self.terms.items() if deg(e) == d})

    def components(self) -> list["TruncatedPolynomial"]:
        return [self.homogeneous_component(d) for d in range(self.degree() + 1)]

    def truncate(self, d: int) -> "TruncatedPolynomial":
        """Drop every term of weighted degree above ``d``."""
        deg = self.scheme.degree
        return TruncatedPolynomial(self.scheme, {e: c for e, c in self.terms.items() if deg(e) <= d})

    def items(self):
        """``(Monomial, coefficient)`` pairs in canonical order."""
        for exps in sorted(self.terms, key=self._order_key):
            yield self.scheme.monomial(exps), self.terms[exps]

    def _order_key(self, exps: Exps):
        # degree ascending, then lexicographic on the registry (larger leading exponent first)
        return (self.scheme.degree(exps), tuple(-e for e in exps))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def in_scheme(self, scheme: Scheme) -> "TruncatedPolynomial":
        """Re-home the polynomial in another scheme with a superset of variables."""
        idx = [scheme.index(v) for v in self.scheme.variables]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(scheme.variables)
            for i, e in zip(idx, exps):
                new[i] = e
            out[tuple(new)] = c
        return TruncatedPolynomial(scheme, out)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "TruncatedPolynomial":
        if isinstance(other, TruncatedPolynomial):
            if other.scheme != self.scheme:
                raise CapMismatchError(
                    f"schemes differ: {self.scheme.variables}/{self.scheme.caps} vs "
                    f"{other.scheme.variables}/{other.scheme.caps}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedPolynomial.constant(self.scheme, other)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedPolynomial(self.scheme, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPolynomial(self.scheme, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "TruncatedPolynomial":
        c = as_rational(c)
        return TruncatedPolynomial(self.scheme, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        return _multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = TruncatedPolynomial.one(self.scheme)
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
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / other)
        return self * invert_unit(self._coerce(other))

    def __rtruediv__(self, other):
        return self._coerce(other) * invert_unit(self)

    def substitute(self, target: Scheme, images: Mapping[str, "TruncatedPolynomial"]) -> "TruncatedPolynomial":
        """Apply the ring map sending each variable to ``images[var]`` in ``target``."""
        result = TruncatedPolynomial.zero(target)
        powers: dict[tuple, TruncatedPolynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[self.scheme.variables[i]] ** e
            return powers[key]

        for exps, c in self.terms.items():
            term = TruncatedPolynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    # -- output -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            c = _norm(c)
            neg = c < 0
            mag = -c if neg else c
            mono_s = str(mono)
            if mono_s == "1":
                body = format_rational(mag)
            elif mag == 1:
                body = mono_s
            else:
                body = f"{format_rational(mag)}*{mono_s}"
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"monomial": str(m), "coeff": format_rational(c)} for m, c in self.items()]

    @classmethod
    def from_json(cls, scheme: Scheme, data: list[dict]) -> "TruncatedPolynomial":
        return cls.from_terms(scheme, {entry["monomial"]: entry["coeff"] for entry in data})


def _split_word(word: str, names) -> list[str]:
    """Split juxtaposed variables such as ``"lm"`` by greedy longest match."""
    if word in names:
        return [word]
    out = []
    pos = 0
    ordered = sorted(names, key=len, reverse=True)
    while pos < len(word):
        for name in ordered:
            if word.startswith(name, pos):
                out.append(name)
                pos += len(name)
                break
        else:
            raise KeyError(f"unknown variable in {word!r}")
    return out


def _accumulate(pairs):
    acc: dict[str, int] = {}
    for name, e in pairs:
        acc[name] = acc.get(name, 0) + e
    return tuple(acc.items())


def _multiply(p: TruncatedPolynomial, q: TruncatedPolynomial) -> TruncatedPolynomial:
    scheme = p.scheme
    if not p.terms or not q.terms:
        return TruncatedPolynomial(scheme)
    deg = scheme.degree
    caps = scheme.caps
    top = scheme.total_cap
    w = scheme.weights
    groups = scheme.group_caps
    gcaps = tuple(cap for _, cap in groups)

    def gdeg(e):
        return tuple(sum(w[i] * e[i] for i in idx) for idx, _ in groups)

    bs = sorted(((deg(e), gdeg(e), e, c) for e, c in q.terms.items()), key=lambda t: t[0])
    capped = [i for i, c in enumerate(caps) if c is not None]
    out: dict[Exps, Coeff] = {}
    get = out.get
    for ea, ca in p.terms.items():
        da = deg(ea)
        ga = gdeg(ea)
        for db, gb, eb, cb in bs:
            if top is not None and da + db > top:
                break
            if groups and any(x + y > c for x, y, c in zip(ga, gb, gcaps)):
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(e[i] >= caps[i] for i in capped):
                continue
            out[e] = get(e, 0) + ca * cb
    result = TruncatedPolynomial.__new__(TruncatedPolynomial)
    result.scheme = scheme
    result.terms = {e: _norm(c) for e, c in out.items() if c}
    result._hash = None
    return result


def add(p: TruncatedPolynomial, q: TruncatedPolynomial) -> TruncatedPolynomial:
    return p + q


def mul(p: TruncatedPolynomial, q: TruncatedPolynomial) -> TruncatedPolynomial:
    return p * q


def pow(p: TruncatedPolynomial, k: int) -> TruncatedPolynomial:  # noqa: A001
    return p ** k


def coefficient(p: TruncatedPolynomial, mono) -> Coeff:
    return p.coefficient(mono)


def homogeneous_component(p: TruncatedPolynomial, d: int) -> TruncatedPolynomial:
    return p.homogeneous_component(d)


def invert_unit(p: TruncatedPolynomial) -> TruncatedPolynomial:
    """Inverse of ``p`` under truncation, by Newton iteration.

    Each step ``q <- q (2 - p q)`` doubles the degree up to which ``q`` is
    correct, so ``log2(max degree)`` steps suffice.
    """
    c0 = p.constant_term()
    if c0 == 0:
        raise NonUnitError("constant term is zero; polynomial is not a unit")
    scheme = p.scheme
    top = scheme.max_degree()
    q = TruncatedPolynomial.constant(scheme, Fraction(1) / Fraction(c0))
    correct = 0  # q agrees with 1/p in all degrees <= correct
    while correct < top:
        correct = min(2 * correct + 1, top)
        pq = (p.truncate(correct) * q).truncate(correct)
        q = (q * (2 - pq)).truncate(correct)
    return q
