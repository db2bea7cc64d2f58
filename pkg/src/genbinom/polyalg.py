"""Exact polynomials and truncated power series over the rationals.

A :class:`MultiPoly` is a dict ``exponent tuple -> Fraction`` over an ordered
tuple of variable names.  Binary operations between polynomials declared
over different variable tuples first align both on the union of their
variables (left operand's order first).  :class:`UniPoly` is the special
case of the single variable ``X``.

:class:`TruncatedSeries` carries per-variable exponent caps; every product
drops monomials above a cap as it goes, so ``trunc(a*b)`` is computed
without ever forming the full product.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from numbers import Rational
from operator import add
from typing import Callable, Iterable, Mapping

from .combinat import compositions, stirling_unsigned

__all__ = [
    "MultiPoly",
    "UniPoly",
    "TruncatedSeries",
    "binom_of",
    "falling_poly",
    "rising_poly",
    "binom_poly",
    "binom_poly_shifted",
    "h_one_power",
    "h_poly",
    "series_exp",
    "theorem9_lhs",
    "theorem9_rhs",
    "theorem9_binomial_route",
]

NEG_INF = float("-inf")

_chunks = re.compile(r"\d+|\D+")


def natural_key(name: str):
    """Sort key that puts X_2 before X_10."""
    return tuple((1, int(c)) if c.isdigit() else (0, c) for c in _chunks.findall(name))


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _build(variables: tuple[str, ...], terms: dict) -> "MultiPoly":
    # Trusted constructor: terms already hold nonzero Fractions.
    cls = UniPoly if variables == ("X",) else MultiPoly
    p = object.__new__(cls)
    p.variables = variables
    p.terms = terms
    return p


def _add_into(acc: dict, key, value) -> None:
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables in {variables}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables) or min(exps, default=0) < 0:
                raise ValueError(f"bad exponent vector {exps} for {variables}")
            c = Fraction(c)
            if c:
                _add_into(clean, exps, c)
        self.variables = variables
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        c = Fraction(c)
        return _build(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        exps = tuple(int(v == name) for v in variables)
        return _build(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, variables: Iterable[str], coeff=1, **exps: int) -> "MultiPoly":
        variables = tuple(variables)
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        key = tuple(exps.get(v, 0) for v in variables)
        return MultiPoly(variables, {key: coeff})

    # -- alignment --------------------------------------------------------

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-embed into another variable tuple; dropped variables must be unused."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        for k, v in enumerate(self.variables):
            if v not in pos and any(e[k] for e in self.terms):
                raise ValueError(f"variable {v} is in use and cannot be dropped")
        index = [(pos[v], k) for k, v in enumerate(self.variables) if v in pos]
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for i, k in index:
                new[i] = exps[k]
            terms[tuple(new)] = c
        return _build(variables, terms)

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Rational)):
            return MultiPoly.constant(other, self.variables)
        return None

    def _aligned(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        union = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return union, self.with_variables(union).terms, other.with_variables(union).terms

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables, a, b = self._aligned(other)
        terms = dict(a)
        for k, c in b.items():
            _add_into(terms, k, c)
        return _build(variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return _build(self.variables, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, MultiPoly):
            c = Fraction(other)
            if not c:
                return _build(self.variables, {})
            return _build(self.variables, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        variables, a, b = self._aligned(other)
        return _build(variables, _mul_terms(a, b, ()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, MultiPoly):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        _, a, b = self._aligned(other)
        return a == b

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: str | None = None):
        """Total degree, or degree in ``var``; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.variables:
            return 0
        k = self.variables.index(var)
        return max(e[k] for e in self.terms)

    def coefficient(self, **exps: int) -> Fraction:
        """Coefficient of one monomial, e.g. ``p.coefficient(x=1, y=2)``."""
        if any(v not in self.variables and e for v, e in exps.items()):
            return Fraction(0)
        key = tuple(exps.get(v, 0) for v in self.variables)
        return self.terms.get(key, Fraction(0))

    def coeff_in(self, var: str, k: int) -> "MultiPoly":
        """The polynomial coefficient of ``var**k``; ``var`` stays declared."""
        if var not in self.variables:
            return self if k == 0 else _build(self.variables, {})
        i = self.variables.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == k:
                terms[e[:i] + (0,) + e[i + 1:]] = c
        return _build(self.variables, terms)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for k, v in enumerate(self.variables) if any(e[k] for e in self.terms))

    # -- substitution -----------------------------------------------------

    def map_powers(self, var: str, f: Callable[[int], object]) -> "MultiPoly":
        """Replace every ``var**k`` by the scalar ``f(k)``."""
        if var not in self.variables:
            return self
        i = self.variables.index(var)
        terms: dict = {}
        cache: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in cache:
                cache[k] = Fraction(f(k))
            if cache[k]:
                _add_into(terms, e[:i] + (0,) + e[i + 1:], c * cache[k])
        return _build(self.variables, terms)

    def substitute(self, var: str, value) -> "MultiPoly":
        """Replace ``var`` by a polynomial or scalar ``value``."""
        if var not in self.variables:
            return self
        if not isinstance(value, MultiPoly):
            return self.map_powers(var, lambda k: Fraction(value) ** k)
        i = self.variables.index(var)
        by_power: dict[int, dict] = {}
        for e, c in self.terms.items():
            by_power.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        result = MultiPoly.constant(0, self.variables)
        # Horner in var, highest power first.
        powers = sorted(by_power, reverse=True)
        for idx, k in enumerate(powers):
            result = result + _build(self.variables, by_power[k])
            nxt = powers[idx + 1] if idx + 1 < len(powers) else 0
            if k > nxt:
                result = result * value ** (k - nxt)
        return result

    def evaluate(self, values: Mapping[str, object]):
        """Substitute scalars; returns a Fraction once no variable remains in use."""
        p = self
        for v, x in values.items():
            p = p.substitute(v, x)
        if not p.used_variables():
            return p.terms.get((0,) * len(p.variables), Fraction(0))
        return p

    def truncate(self, caps: Mapping[str, int]) -> "MultiPoly":
        idx = [(self.variables.index(v), m) for v, m in caps.items() if v in self.variables]
        terms = {e: c for e, c in self.terms.items() if all(e[i] <= m for i, m in idx)}
        return _build(self.variables, terms)

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[dict[str, int], Fraction]]:
        """Monomials in canonical order: total degree descending, then
        lexicographically descending over the naturally sorted variable names."""
        order = sorted(range(len(self.variables)), key=lambda k: natural_key(self.variables[k]))
        rows = []
        for e, c in self.terms.items():
            ce = tuple(e[k] for k in order)
            rows.append(((-sum(ce), tuple(-x for x in ce)), e, c))
        rows.sort(key=lambda r: r[0])
        out = []
        for _, e, c in rows:
            mono = {self.variables[k]: e[k] for k in order if e[k]}
            out.append((mono, c))
        return out

    def to_string(self) -> str:
        """Canonical text; two polynomials are equal iff their strings are."""
        pieces = []
        for mono, c in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono.items()]
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt_scalar(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return "0"
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_string

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_string()!r}, variables={self.variables})"


def _mul_terms(a: dict, b: dict, cap_idx) -> dict:
    """Product of two term dicts, dropping exponents beyond ``cap_idx`` caps."""
    out: dict = {}
    if len(a) > len(b):
        a, b = b, a
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(add, ea, eb))
            if cap_idx and any(e[i] > m for i, m in cap_idx):
                continue
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


class UniPoly(MultiPoly):
    """Polynomial in the single indeterminate X."""

    __slots__ = ()

    def __init__(self, coeffs: Mapping[int, object] | Iterable = ()):
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        super().__init__(("X",), {(k,): c for k, c in coeffs.items()})

    @classmethod
    def x(cls) -> "UniPoly":
        return UniPoly({1: 1})

    def coeff(self, k: int) -> Fraction:
        return self.terms.get((k,), Fraction(0))

    def coefficients(self) -> list[Fraction]:
        """Dense list c_0..c_deg; empty for the zero polynomial."""
        if not self.terms:
            return []
        return [self.coeff(k) for k in range(self.degree() + 1)]

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients()):
            acc = acc * x + c
        return acc

    def shift(self, c) -> "UniPoly":
        """p(X + c)."""
        return self.substitute("X", UniPoly({0: c, 1: 1}))

    def negate_var(self) -> "UniPoly":
        """p(-X)."""
        return _build(("X",), {e: (-c if e[0] % 2 else c) for e, c in self.terms.items()})


# -- binomial-type polynomials ---------------------------------------------


def binom_of(p: MultiPoly, n: int) -> MultiPoly:
    """C(p, n) = p (p-1) ... (p-n+1) / n! for a polynomial ``p``."""
    if n < 0:
        return MultiPoly.constant(0, p.variables)
    acc = MultiPoly.constant(1, p.variables)
    for k in range(n):
        acc = acc * (p - k)
    return acc / factorial(n)


def falling_poly(n: int) -> UniPoly:
    """[X]_n = X (X-1) ... (X-n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = UniPoly({0: 1})
    for k in range(n):
        acc = acc * UniPoly({0: -k, 1: 1})
    return acc


def rising_poly(n: int) -> UniPoly:
    """(X)_n = X (X+1) ... (X+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = UniPoly({0: 1})
    for k in range(n):
        acc = acc * UniPoly({0: k, 1: 1})
    return acc


def binom_poly(n: int) -> UniPoly:
    """C(X, n) as a polynomial in X."""
    return falling_poly(n) / factorial(n)


def binom_poly_shifted(c: int, n: int) -> UniPoly:
    """C(X + c, n) as a polynomial in X."""
    return binom_poly(n).shift(c)


def h_one_power(i: int) -> UniPoly:
    """h_i(1^X) = C(X + i - 1, i), the coefficient of t^i in (1-t)^(-X)."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return binom_poly_shifted(i - 1, i)


def h_poly(i: int, variables: Iterable[str]) -> MultiPoly:
    """Complete homogeneous symmetric polynomial h_i in ``variables``."""
    variables = tuple(variables)
    if i < 0:
        return MultiPoly.constant(0, variables)
    n = len(variables)
    terms = {}

    def walk(k: int, left: int, acc: tuple):
        if k == n - 1:
            terms[acc + (left,)] = 1
            return
        for e in range(left, -1, -1):
            walk(k + 1, left - e, acc + (e,))

    if n == 0:
        return MultiPoly.constant(1 if i == 0 else 0, ())
    walk(0, i, ())
    return MultiPoly(variables, terms)


# -- truncated series -------------------------------------------------------


class TruncatedSeries:
    """A power series known up to per-variable exponent caps.

    Variables absent from ``caps`` are untruncated.  All products re-truncate,
    so the result always equals the truncation of the exact product.
    """

    __slots__ = ("poly", "caps")

    def __init__(self, poly: MultiPoly, caps: Mapping[str, int]):
        caps = {v: int(m) for v, m in caps.items()}
        if any(m < 0 for m in caps.values()):
            raise ValueError("caps must be nonnegative")
        missing = set(caps) - set(poly.variables)
        if missing:
            poly = poly.with_variables(poly.variables + tuple(sorted(missing, key=natural_key)))
        self.poly = poly.truncate(caps)
        self.caps = caps

    @property
    def variables(self) -> tuple[str, ...]:
        return self.poly.variables

    def _cap_idx(self, variables):
        return tuple((variables.index(v), m) for v, m in self.caps.items() if v in variables)

    def _merge(self, other) -> tuple["TruncatedSeries", "TruncatedSeries"]:
        if isinstance(other, TruncatedSeries):
            caps = dict(self.caps)
            for v, m in other.caps.items():
                caps[v] = min(m, caps.get(v, m))
            if caps == self.caps == other.caps:
                return self, other
            return TruncatedSeries(self.poly, caps), TruncatedSeries(other.poly, caps)
        if isinstance(other, (MultiPoly, int, Rational)):
            if not isinstance(other, MultiPoly):
                other = MultiPoly.constant(other, self.variables)
            return self, TruncatedSeries(other, self.caps)
        return NotImplemented

    def __add__(self, other):
        merged = self._merge(other)
        if merged is NotImplemented:
            return NotImplemented
        a, b = merged
        return TruncatedSeries(a.poly + b.poly, a.caps)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.caps)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, (MultiPoly, TruncatedSeries)):
            return TruncatedSeries(self.poly * other, self.caps)
        merged = self._merge(other)
        if merged is NotImplemented:
            return NotImplemented
        a, b = merged
        variables, ta, tb = a.poly._aligned(b.poly)
        terms = _mul_terms(ta, tb, a._cap_idx(variables))
        s = object.__new__(TruncatedSeries)
        s.poly = _build(variables, terms)
        s.caps = a.caps
        return s

    __rmul__ = __mul__

    def __truediv__(self, other):
        return TruncatedSeries(self.poly / other, self.caps)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncatedSeries(MultiPoly.constant(1, self.variables), self.caps)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        merged = self._merge(other)
        if merged is NotImplemented:
            return NotImplemented
        a, b = merged
        return a.poly == b.poly

    __hash__ = None

    def coefficient(self, **exps: int) -> Fraction:
        return self.poly.coefficient(**exps)

    def to_string(self) -> str:
        return self.poly.to_string()

    __str__ = to_string

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.to_string()!r}, caps={self.caps})"


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) = sum_k s^k / k!, truncated to the caps of ``s``.

    Every monomial of ``s`` must have positive degree in some capped variable;
    that makes s^k vanish under the caps once k exceeds their sum.
    """
    idx = s._cap_idx(s.variables)
    for e in s.poly.terms:
        if not any(e[i] for i, _ in idx):
            if not any(e):
                raise ValueError("series_exp needs a zero constant term")
            raise ValueError("every monomial must involve a capped variable")
    result = TruncatedSeries(MultiPoly.constant(1, s.variables), s.caps)
    term = result
    k = 0
    while True:
        k += 1
        term = (term * s) / k
        if term.poly.is_zero():
            return result
        result = result + term


_XYQ = ("x", "y", "q")


def theorem9_lhs(ymax: int, qmax: int) -> TruncatedSeries:
    """((1-y)/(1-y(1+q)))^x as exp(x * sum_i ((y(1+q))^i - y^i)/i), truncated."""
    if ymax < 1 or qmax < 1:
        raise ValueError("caps must be >= 1")
    caps = {"y": ymax, "q": qmax}
    x, y, q = (MultiPoly.var(v, _XYQ) for v in _XYQ)
    y1q = TruncatedSeries(y * (1 + q), caps)
    ys = TruncatedSeries(y, caps)
    inner = TruncatedSeries(MultiPoly.constant(0, _XYQ), caps)
    pa, pb = y1q, ys
    for i in range(1, ymax + 1):
        inner = inner + (pa - pb) / i
        pa, pb = pa * y1q, pb * ys
    result = series_exp(inner * x)
    for e in result.poly.terms:
        assert e[0] <= e[1], "x-degree exceeds y-degree"
    return result


def theorem9_rhs(ymax: int, qmax: int) -> TruncatedSeries:
    """sum over i, j, k of C(i-1, j-1) |s(j,k)| / j! x^k y^i q^j, truncated.

    C(i-1, j-1) counts compositions of i into j parts (1 at i = j = 0).
    """
    if ymax < 1 or qmax < 1:
        raise ValueError("caps must be >= 1")
    terms = {}
    for i in range(ymax + 1):
        for j in range(min(i, qmax) + 1):
            c = compositions(i, j)
            if not c:
                continue
            for k in range(j + 1):
                s = stirling_unsigned(j, k)
                if s:
                    terms[(k, i, j)] = Fraction(c * s, factorial(j))
    return TruncatedSeries(MultiPoly(_XYQ, terms), {"y": ymax, "q": qmax})


def theorem9_binomial_route(ymax: int, qmax: int) -> TruncatedSeries:
    """sum_j C(-x, j) (qy/(y-1))^j, with (1-y)^(-1) expanded geometrically."""
    caps = {"y": ymax, "q": qmax}
    x, y, q = (MultiPoly.var(v, _XYQ) for v in _XYQ)
    geometric = TruncatedSeries(sum((y**m for m in range(ymax + 1)), MultiPoly.constant(0, _XYQ)), caps)
    # qy/(y-1) = -q y (1-y)^(-1)
    t = TruncatedSeries(-q * y, caps) * geometric
    result = TruncatedSeries(MultiPoly.constant(0, _XYQ), caps)
    power = TruncatedSeries(MultiPoly.constant(1, _XYQ), caps)
    for j in range(min(ymax, qmax) + 1):
        result = result + power * binom_of(-x, j)
        power = power * t
    return result
