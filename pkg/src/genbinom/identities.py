"""Generalized binomial coefficients <lambda, r> and the identities built on them.

Every ``*_sides`` function returns ``(lhs, rhs)`` as exact objects
(Fraction, :class:`UniPoly`, :class:`MultiPoly` or :class:`TruncatedSeries`),
never a bare boolean, so a failure always carries both witnesses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from .combinat import (
    binom_int,
    compositions,
    rising_factorial,
    stirling_unsigned,
)
from .partitions import (
    Partition,
    add_part,
    cells,
    enumerate_partitions,
    enumerate_with_length,
    zeta,
)
from .polyalg import (
    MultiPoly,
    TruncatedSeries,
    UniPoly,
    binom_of,
    binom_poly,
    binom_poly_shifted,
    h_one_power,
    h_poly,
)

DEFAULT_ORACLE_CAP = 16


# -- <lambda, r> -------------------------------------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def gen_binom_row(lam: Partition) -> tuple[int, ...]:
    """Coefficients of prod_i ((1+q)^{lam_i} - 1), indexed by the power of q."""
    row = [1]
    for part in lam:
        factor = [binom_int(part, k) for k in range(part + 1)]
        factor[0] = 0
        row = _poly_mul(row, factor)
    return tuple(row)


def gen_binom(lam: Partition, r: int) -> int:
    """<lam, r>: ways to pick r cells of the diagram with every row hit.

    Read off as a coefficient of the generating polynomial; any integer r is
    accepted (0 outside 0..|lam|, and <(), 0> = 1).
    """
    row = gen_binom_row(Partition(lam))
    return row[r] if 0 <= r < len(row) else 0


def gen_binom_oracle(lam: Partition, r: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Count r-subsets of the Ferrers cells that meet every row, by brute force."""
    lam = Partition(lam)
    if lam.weight > cap:
        raise ValueError(f"|lambda| = {lam.weight} exceeds oracle cap {cap}")
    if r < 0:
        return 0
    rows = set(range(1, len(lam) + 1))
    return sum(1 for pick in combinations(cells(lam), r) if {i for i, _ in pick} == rows)


def sum_rising(mu: Partition, s: int) -> int:
    """sum over parts of (mu_i)_s."""
    return sum(rising_factorial(part, s) for part in mu)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _X(k: int) -> UniPoly:
    return UniPoly({k: 1})


# -- single-variable identities in X -------------------------------------------


def classical_sides(n: int) -> tuple[UniPoly, UniPoly]:
    """sum_{|mu|=n} (-1)^{n-l} X^l / z_mu  vs  C(X, n)."""
    lhs = UniPoly()
    for mu in enumerate_partitions(n):
        lhs = lhs + _X(len(mu)) * Fraction(_sign(n - len(mu)), zeta(mu))
    return lhs, binom_poly(n)


def classical_alt_sides(n: int) -> tuple[UniPoly, UniPoly]:
    """sum_{|mu|=n} X^l / z_mu  vs  C(X + n - 1, n)."""
    lhs = UniPoly()
    for mu in enumerate_partitions(n):
        lhs = lhs + _X(len(mu)) * Fraction(1, zeta(mu))
    return lhs, binom_poly_shifted(n - 1, n)


def _weighted_rising_poly(n: int, r: int, s: int, signed: bool) -> UniPoly:
    coeffs: dict[int, Fraction] = {}
    for mu in enumerate_partitions(n):
        g = gen_binom(mu, r)
        if not g:
            continue
        c = Fraction(g * sum_rising(mu, s), zeta(mu))
        if signed:
            c *= _sign(r - len(mu))
        coeffs[len(mu) - 1] = coeffs.get(len(mu) - 1, 0) + c
    return UniPoly(coeffs)


def thm1_sides(n: int, r: int, s: int) -> tuple[UniPoly, UniPoly]:
    lhs = _weighted_rising_poly(n, r, s, signed=True)
    scale = factorial(s - 1) * binom_int(n + s - 1, n - r)
    rhs = (binom_poly(r) - binom_poly_shifted(-s, r)) * scale
    return lhs, rhs


def thm1_alt_sides(n: int, r: int, s: int) -> tuple[UniPoly, UniPoly]:
    lhs = _weighted_rising_poly(n, r, s, signed=False)
    scale = factorial(s - 1) * binom_int(n + s - 1, n - r)
    rhs = (binom_poly_shifted(r + s - 1, r) - binom_poly_shifted(r - 1, r)) * scale
    return lhs, rhs


def thm2_sides(n: int, r: int, s: int, p: int) -> tuple[Fraction, Fraction]:
    if not 1 <= p <= r:
        raise ValueError("need 1 <= p <= r")
    total = Fraction(0)
    for mu in enumerate_with_length(n, p):
        total += Fraction(gen_binom(mu, r) * sum_rising(mu, s), zeta(mu))
    lhs = total * factorial(r) / factorial(s)
    inner = sum(binom_int(j, p - 1) * stirling_unsigned(r, j) * s ** (j - p) for j in range(p, r + 1))
    rhs = Fraction(binom_int(n + s - 1, n - r) * inner)
    return lhs, rhs


def thm3_sides(n: int, r: int, s: int) -> tuple[Fraction, Fraction]:
    total = Fraction(0)
    for mu in enumerate_with_length(n, r):
        mult = mu.multiplicities
        num = sum(m * rising_factorial(i, s) for i, m in mult.items())
        total += Fraction(num, prod(factorial(m) for m in mult.values()))
    lhs = total * factorial(r - 1)
    return lhs, Fraction(factorial(s) * binom_int(n + s - 1, n - r))


def thm4_sides(n: int, s: int) -> tuple[UniPoly, UniPoly]:
    coeffs: dict[int, Fraction] = {}
    for mu in enumerate_partitions(n):
        c = Fraction(_sign(n - len(mu)) * sum_rising(mu, s), zeta(mu))
        coeffs[len(mu) - 1] = coeffs.get(len(mu) - 1, 0) + c
    rhs = (binom_poly(n) - binom_poly_shifted(-s, n)) * factorial(s - 1)
    return UniPoly(coeffs), rhs


def thm4_alt_sides(n: int, s: int) -> tuple[UniPoly, UniPoly]:
    coeffs: dict[int, Fraction] = {}
    for mu in enumerate_partitions(n):
        c = Fraction(sum_rising(mu, s), zeta(mu))
        coeffs[len(mu) - 1] = coeffs.get(len(mu) - 1, 0) + c
    rhs = (binom_poly_shifted(n + s - 1, n) - binom_poly_shifted(n - 1, n)) * factorial(s - 1)
    return UniPoly(coeffs), rhs


def eq2_sides(n: int, r: int) -> tuple[UniPoly, UniPoly]:
    lhs = UniPoly()
    for mu in enumerate_partitions(n):
        g = gen_binom(mu, r)
        if g:
            lhs = lhs + _X(len(mu)) * Fraction(_sign(r - len(mu)) * g, zeta(mu))
    return lhs, binom_poly(r) * binom_int(n - 1, r - 1)


def eq3_sides(n: int, r: int, p: int) -> tuple[Fraction, Fraction]:
    if not 1 <= p <= r:
        raise ValueError("need 1 <= p <= r")
    total = sum((Fraction(gen_binom(mu, r), zeta(mu)) for mu in enumerate_with_length(n, p)), Fraction(0))
    return total * factorial(r), Fraction(binom_int(n - 1, r - 1) * stirling_unsigned(r, p))


# -- binomial and h_i(1^X) identities -----------------------------------------


def eq1_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """Chu-Vandermonde: C(X+Y, n) vs sum_i C(X, n-i) C(Y, i), over {X, Y}."""
    xy = ("X", "Y")
    X, Y = MultiPoly.var("X", xy), MultiPoly.var("Y", xy)
    lhs = binom_of(X + Y, n)
    rhs = MultiPoly.constant(0, xy)
    for i in range(n + 1):
        rhs = rhs + binom_of(X, n - i) * binom_of(Y, i)
    return lhs, rhs


def eq4_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """h_n(1^{X+Y}) vs sum_i h_{n-i}(1^X) h_i(1^Y)."""
    xy = ("X", "Y")
    X, Y = MultiPoly.var("X", xy), MultiPoly.var("Y", xy)
    lhs = h_one_power(n).with_variables(xy).substitute("X", X + Y)
    rhs = MultiPoly.constant(0, xy)
    for i in range(n + 1):
        rhs = rhs + h_one_power(n - i).with_variables(xy) * h_one_power(i).with_variables(xy).substitute("X", Y)
    return lhs, rhs


def eq5_sides(i: int, k: int) -> tuple[Fraction, Fraction]:
    """h_i(1^X) at X = k vs C(i + k - 1, i)."""
    return h_one_power(i)(k), Fraction(binom_int(i + k - 1, i))


def h_relation_sides(i: int, k: int) -> tuple[Fraction, Fraction]:
    """h_i(1^k) / k vs h_{i-1}(1^{k+1}) / i, for i, k >= 1."""
    return h_one_power(i)(k) / k, h_one_power(i - 1)(k + 1) / i


def lemma_sides(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    """C(a+b-1, d-c) C(b+c-1, c-1) vs sum_{i=c}^{d} C(i-1,c-1) C(a-i-1,a-d-1) C(b+i-1,i-1).

    Binomials of the shape C(x-1, y-1) are composition counts, so the
    boundary term i = d = a contributes C(-1, -1) = 1.
    """
    lhs = binom_int(a + b - 1, d - c) * compositions(b + c, c)
    rhs = sum(
        compositions(i, c) * compositions(a - i, a - d) * compositions(b + i, i)
        for i in range(c, d + 1)
    )
    return lhs, rhs


# -- identities in X and an alphabet z ---------------------------------------------


def _mult_z_sum(mu: Partition, zpow: dict[int, MultiPoly]) -> MultiPoly:
    acc = None
    for i, m in mu.multiplicities.items():
        term = zpow[i - 1] * m
        acc = term if acc is None else acc + term
    return acc


def thm5_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    xz = ("X", "z")
    z = MultiPoly.var("z", xz)
    zpow = {k: z**k for k in range(n)}
    lhs = MultiPoly.constant(0, xz)
    for mu in enumerate_partitions(n):
        lhs = lhs + MultiPoly.monomial(xz, Fraction(1, zeta(mu)), X=len(mu) - 1) * _mult_z_sum(mu, zpow)
    rhs = MultiPoly.constant(0, xz)
    for i in range(1, n + 1):
        rhs = rhs + h_one_power(n - i).with_variables(xz) * zpow[i - 1] / i
    return lhs, rhs


def _thm6_generic(n: int, r: int, variables: tuple[str, ...], hpow) -> tuple[MultiPoly, MultiPoly]:
    # hpow[k] plays h_k of the alphabet; the identity is linear in it.
    lhs = MultiPoly.constant(0, variables)
    for mu in enumerate_partitions(n):
        g = gen_binom(mu, r)
        if not g:
            continue
        c = Fraction(_sign(r - len(mu)) * g, zeta(mu))
        lhs = lhs + MultiPoly.monomial(variables, c, X=len(mu) - 1) * _mult_z_sum(mu, hpow)
    rhs = MultiPoly.constant(0, variables)
    for j in range(1, r + 1):
        bx = binom_poly(r - j).with_variables(variables) * _sign(j - 1)
        for i in range(j, n - r + j + 1):
            c = Fraction(binom_int(i, j) * compositions(n - i, r - j), i)
            if c:
                rhs = rhs + bx * hpow[i - 1] * c
    return lhs, rhs


def thm7_sides(n: int, r: int) -> tuple[MultiPoly, MultiPoly]:
    """Single-variable alphabet: h_k(z) = z^k, over {X, z}."""
    xz = ("X", "z")
    z = MultiPoly.var("z", xz)
    return _thm6_generic(n, r, xz, {k: z**k for k in range(n)})


def thm6_sides(n: int, r: int, t: int) -> tuple[MultiPoly, MultiPoly]:
    """Alphabet z_1..z_t with h_k the complete homogeneous polynomial, over {X, z_1..z_t}."""
    if t < 1:
        raise ValueError("alphabet needs at least one variable")
    zs = tuple(f"z_{k}" for k in range(1, t + 1))
    variables = ("X",) + zs
    hpow = {k: h_poly(k, zs).with_variables(variables) for k in range(n)}
    return _thm6_generic(n, r, variables, hpow)


def thm6_ones_sides(n: int, r: int, s: int) -> tuple[UniPoly, UniPoly]:
    """Alphabet 1^{s+1}: h_k = C(k+s, k), scaled by s!; both sides equal the
    corresponding sides of :func:`thm1_sides`."""
    hpow = {k: MultiPoly.constant(binom_int(k + s, k), ("X",)) for k in range(n)}
    lhs, rhs = _thm6_generic(n, r, ("X",), hpow)
    return lhs * factorial(s), rhs * factorial(s)


def thm7_specialized(n: int, r: int, s: int) -> tuple[UniPoly, UniPoly]:
    """Both sides of thm7 with z^k -> h_k(1^{s+1}) = C(k+s, k), times s!."""
    lhs, rhs = thm7_sides(n, r)
    f = lambda k: binom_int(k + s, k)  # noqa: E731
    out = []
    for side in (lhs, rhs):
        out.append((side.map_powers("z", f) * factorial(s)).with_variables(("X",)))
    return out[0], out[1]


def thm8_sides(n: int, r: int, p: int) -> tuple[MultiPoly, MultiPoly]:
    if not 1 <= p <= r:
        raise ValueError("need 1 <= p <= r")
    zs = ("z",)
    z = MultiPoly.var("z")
    zpow = {k: z**k for k in range(n)}
    lhs = MultiPoly.constant(0, zs)
    for mu in enumerate_with_length(n, p):
        g = gen_binom(mu, r)
        if g:
            lhs = lhs + _mult_z_sum(mu, zpow) * Fraction(g, zeta(mu))
    rhs = MultiPoly.constant(0, zs)
    for j in range(1, r + 1):
        st = stirling_unsigned(r - j, p - 1)
        if not st:
            continue
        for i in range(j, n - r + j + 1):
            c = Fraction(st * binom_int(i, j) * compositions(n - i, r - j), i * factorial(r - j))
            if c:
                rhs = rhs + zpow[i - 1] * c
    return lhs, rhs


# -- relations on <mu, r> itself ---------------------------------------------------


def partition_monomial(mu: Partition, variables: tuple[str, ...], coeff=1) -> MultiPoly:
    """coeff * prod_i X_i^{m_i(mu)} over ``variables`` (which must hold X_1..)."""
    return MultiPoly.monomial(variables, coeff, **{f"X_{i}": m for i, m in mu.multiplicities.items()})


def _weight_vars(n: int) -> tuple[str, ...]:
    return tuple(f"X_{i}" for i in range(1, n + 1))


def genbinom_oracle_sides(n: int, r: int, cap: int = DEFAULT_ORACLE_CAP) -> tuple[MultiPoly, MultiPoly]:
    """sum_{|lam|=n} <lam,r> X^{m(lam)}, coefficient route vs subset-enumeration route."""
    vs = _weight_vars(n)
    lhs = MultiPoly.constant(0, vs)
    rhs = MultiPoly.constant(0, vs)
    for lam in enumerate_partitions(n):
        lhs = lhs + partition_monomial(lam, vs, gen_binom(lam, r))
        rhs = rhs + partition_monomial(lam, vs, gen_binom_oracle(lam, r, cap))
    return lhs, rhs


def length_relation_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """<mu, l(mu)> vs prod mu_i, encoded over all partitions of n."""
    vs = _weight_vars(n)
    lhs = MultiPoly.constant(0, vs)
    rhs = MultiPoly.constant(0, vs)
    for mu in enumerate_partitions(n):
        lhs = lhs + partition_monomial(mu, vs, gen_binom(mu, len(mu)))
        rhs = rhs + partition_monomial(mu, vs, prod(mu))
    return lhs, rhs


def length_plus_one_relation_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """<mu, l(mu)+1> vs (|mu| - l(mu)) prod mu_i / 2, encoded over partitions of n."""
    vs = _weight_vars(n)
    lhs = MultiPoly.constant(0, vs)
    rhs = MultiPoly.constant(0, vs)
    for mu in enumerate_partitions(n):
        lhs = lhs + partition_monomial(mu, vs, gen_binom(mu, len(mu) + 1))
        rhs = rhs + partition_monomial(mu, vs, Fraction((n - len(mu)) * prod(mu), 2))
    return lhs, rhs


def recurrence_sides(n: int, i: int, r: int) -> tuple[MultiPoly, MultiPoly]:
    """<lam u {i}, r> vs sum_{j=1}^{i} C(i,j) <lam, r-j>, encoded over |lam| = n."""
    vs = _weight_vars(max(n, 1))
    lhs = MultiPoly.constant(0, vs)
    rhs = MultiPoly.constant(0, vs)
    for lam in enumerate_partitions(n):
        lhs = lhs + partition_monomial(lam, vs, gen_binom(add_part(lam, i), r))
        rec = sum(binom_int(i, j) * gen_binom(lam, r - j) for j in range(1, i + 1))
        rhs = rhs + partition_monomial(lam, vs, rec)
    return lhs, rhs


# -- P_jk and the series conjectures --------------------------------------------


def conj_P(j: int, k: int, variables: tuple[str, ...] | None = None) -> MultiPoly:
    """P_jk = sum_{|mu|=j} <mu,k>/z_mu prod_i X_i^{m_i(mu)}; P_00 = 1."""
    if j < 0 or k < 0:
        raise ValueError("j, k must be nonnegative")
    vs = variables if variables is not None else _weight_vars(j)
    acc = MultiPoly.constant(0, vs)
    for mu in enumerate_partitions(j):
        g = gen_binom(mu, k)
        if g:
            acc = acc + partition_monomial(mu, vs, Fraction(g, zeta(mu)))
    return acc


def _conj_vars(umax: int) -> tuple[str, ...]:
    return ("u",) + tuple(f"X_{p}" for p in range(umax + 1))


def conj2_sides(n: int, r: int, umax: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    if umax < 1:
        raise ValueError("umax must be >= 1")
    vs = _conj_vars(umax)
    caps = {"u": umax}
    X0 = MultiPoly.var("X_0", vs)
    one = TruncatedSeries(MultiPoly.constant(1, vs), caps)

    factors: dict[int, TruncatedSeries] = {}
    for i in range(1, n + 1):
        f = X0
        for p in range(1, umax + 1):
            c = Fraction(rising_factorial(i, p), factorial(p))
            f = f + MultiPoly.monomial(vs, c, u=p, **{f"X_{p}": 1})
        factors[i] = TruncatedSeries(f, caps)

    lhs = TruncatedSeries(MultiPoly.constant(0, vs), caps)
    for mu in enumerate_partitions(n):
        g = gen_binom(mu, r)
        if not g:
            continue
        term = one
        for i, m in mu.multiplicities.items():
            term = term * factors[i] ** m
        lhs = lhs + term * Fraction(_sign(r - len(mu)) * g, zeta(mu))

    rhs_poly = MultiPoly.constant(0, vs)
    for j in range(umax + 1):
        outer = binom_int(n + j - 1, n - r)
        if not outer:
            continue
        inner = MultiPoly.constant(0, vs)
        for k in range(min(r, j) + 1):
            pjk = conj_P(j, k, vs)
            if pjk:
                inner = inner + binom_of(X0 - j, r - k) * pjk
        rhs_poly = rhs_poly + MultiPoly.monomial(vs, outer, u=j) * inner
    return lhs, TruncatedSeries(rhs_poly, caps)


def conj1_sides(n: int, umax: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The r = n case."""
    return conj2_sides(n, n, umax)
