"""Named identity verifiers and their parameter grids."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from . import identities as ids
from .polyalg import MultiPoly, TruncatedSeries, _fmt_scalar, theorem9_binomial_route, theorem9_lhs, theorem9_rhs


@dataclass
class IdentityReport:
    identity_id: str
    params: dict[str, int]
    lhs: str
    rhs: str
    equal: bool
    elapsed_ms: float | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("identity_id")
        return d


@dataclass(frozen=True)
class Identity:
    """A verifier: ``sides(**params)`` returns exact (lhs, rhs).

    ``ranges`` maps a sweep config to one range per parameter name, in order;
    ``admissible`` filters out grid points violating the verifier's
    preconditions (those are skipped, not failed).
    """

    id: str
    params: tuple[str, ...]
    sides: Callable
    ranges: Callable[["object"], dict[str, range]]
    statement: str
    admissible: Callable[..., bool] = field(default=lambda **kw: True)
    conjecture: bool = False

    def grid(self, config) -> Iterator[dict[str, int]]:
        rs = self.ranges(config)
        for values in product(*(rs[p] for p in self.params)):
            point = dict(zip(self.params, values))
            if self.admissible(**point):
                yield point


REGISTRY: dict[str, Identity] = {}


def register(identity: Identity) -> Identity:
    REGISTRY[identity.id] = identity
    return identity


def unregister(identity_id: str) -> None:
    REGISTRY.pop(identity_id, None)


def render(value) -> str:
    """Canonical text of a scalar, polynomial or truncated series."""
    if isinstance(value, (MultiPoly, TruncatedSeries)):
        return value.to_string()
    return _fmt_scalar(Fraction(value))


def check(identity_id: str, params: dict[str, int], timing: bool = False) -> IdentityReport:
    identity = REGISTRY[identity_id]
    start = time.perf_counter()
    lhs, rhs = identity.sides(**params)
    elapsed = (time.perf_counter() - start) * 1000.0
    ls, rs = render(lhs), render(rhs)
    return IdentityReport(
        identity_id,
        dict(params),
        ls,
        rs,
        ls == rs,
        round(elapsed, 3) if timing else None,
    )


# -- grids -------------------------------------------------------------------


def _upto(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


def _n(c):
    return {"n": _upto(1, c.n_max)}


def _n0(c):
    return {"n": _upto(0, c.n_max)}


def _nr(c):
    return {"n": _upto(1, c.n_max), "r": _upto(1, c.r_max)}


def _nrs(c):
    return {**_nr(c), "s": _upto(1, c.s_max)}


def _ns(c):
    return {"n": _upto(1, c.n_max), "s": _upto(1, c.s_max)}


def _nrp(c):
    return {**_nr(c), "p": _upto(1, c.r_max)}


def _nrsp(c):
    return {**_nrs(c), "p": _upto(1, c.r_max)}


def _p_le_r(**kw) -> bool:
    return kw["p"] <= kw["r"]


def _thm9(n):
    return theorem9_lhs(n, n), theorem9_rhs(n, n)


def _thm9_binom(n):
    return theorem9_lhs(n, n), theorem9_binomial_route(n, n)


def _thm7_spec(n, r, s):
    _, spec_rhs = ids.thm7_specialized(n, r, s)
    _, rhs1 = ids.thm1_sides(n, r, s)
    return spec_rhs, rhs1


for _identity in [
    Identity("classical", ("n",), ids.classical_sides, _n,
             "sum_{|mu|=n} (-1)^(n-l(mu)) X^l(mu)/z_mu = C(X,n)"),
    Identity("classical_alt", ("n",), ids.classical_alt_sides, _n,
             "sum_{|mu|=n} X^l(mu)/z_mu = C(X+n-1,n)"),
    Identity("eq1", ("n",), ids.eq1_sides, _n0,
             "Chu-Vandermonde: C(X+Y,n) = sum_i C(X,n-i) C(Y,i)"),
    Identity("eq2", ("n", "r"), ids.eq2_sides, _nr,
             "sum (-1)^(r-l) <mu,r>/z_mu X^l = C(n-1,r-1) C(X,r)"),
    Identity("eq3", ("n", "r", "p"), ids.eq3_sides, _nrp,
             "r! sum_{l(mu)=p} <mu,r>/z_mu = C(n-1,r-1) |s(r,p)|", admissible=_p_le_r),
    Identity("eq4", ("n",), ids.eq4_sides, _n0,
             "h_n(1^(X+Y)) = sum_i h_(n-i)(1^X) h_i(1^Y)"),
    Identity("eq5", ("i", "k"), ids.eq5_sides,
             lambda c: {"i": _upto(0, c.n_max), "k": _upto(1, c.s_max)},
             "h_i(1^k) = C(i+k-1,i)"),
    Identity("hrel", ("i", "k"), ids.h_relation_sides,
             lambda c: {"i": _upto(1, c.n_max), "k": _upto(1, c.s_max)},
             "h_i(1^k)/k = h_(i-1)(1^(k+1))/i"),
    Identity("lemma", ("a", "b", "c", "d"), ids.lemma_sides,
             lambda c: {"a": _upto(0, c.n_max), "b": _upto(1, c.n_max),
                        "c": _upto(0, c.n_max), "d": _upto(0, c.n_max)},
             "C(a+b-1,d-c) C(b+c-1,c-1) = sum_{i=c..d} C(i-1,c-1) C(a-i-1,a-d-1) C(b+i-1,i-1)",
             admissible=lambda a, b, c, d: c <= d <= a),
    Identity("thm1", ("n", "r", "s"), ids.thm1_sides, _nrs,
             "sum (-1)^(r-l) <mu,r>/z_mu X^(l-1) sum_i (mu_i)_s = (s-1)! C(n+s-1,n-r) [C(X,r) - C(X-s,r)]"),
    Identity("thm1alt", ("n", "r", "s"), ids.thm1_alt_sides, _nrs,
             "sum <mu,r>/z_mu X^(l-1) sum_i (mu_i)_s = (s-1)! C(n+s-1,n-r) [C(X+r+s-1,r) - C(X+r-1,r)]"),
    Identity("thm2", ("n", "r", "s", "p"), ids.thm2_sides, _nrsp,
             "r! sum_{l(mu)=p} <mu,r>/z_mu sum_i (mu_i)_s/s! = C(n+s-1,n-r) sum_j C(j,p-1) |s(r,j)| s^(j-p)",
             admissible=_p_le_r),
    Identity("thm3", ("n", "r", "s"), ids.thm3_sides, _nrs,
             "(r-1)! sum_{l(mu)=r} sum_i m_i (i)_s / prod m_i! = s! C(n+s-1,n-r)"),
    Identity("thm4", ("n", "s"), ids.thm4_sides, _ns,
             "sum (-1)^(n-l) X^(l-1)/z_mu sum_i (mu_i)_s = (s-1)! [C(X,n) - C(X-s,n)]"),
    Identity("thm4alt", ("n", "s"), ids.thm4_alt_sides, _ns,
             "sum X^(l-1)/z_mu sum_i (mu_i)_s = (s-1)! [C(X+n+s-1,n) - C(X+n-1,n)]"),
    Identity("thm5", ("n",), ids.thm5_sides, _n,
             "sum X^(l-1)/z_mu sum_i m_i z^(i-1) = sum_i h_(n-i)(1^X) z^(i-1)/i"),
    Identity("thm6", ("n", "r", "t"), ids.thm6_sides,
             lambda c: {**_nr(c), "t": _upto(1, c.s_max)},
             "thm7 with z^(i-1) replaced by h_(i-1)(z_1..z_t)"),
    Identity("thm6ones", ("n", "r", "s"), ids.thm6_ones_sides, _nrs,
             "thm6 at the alphabet 1^(s+1), scaled by s!"),
    Identity("thm7", ("n", "r"), ids.thm7_sides, _nr,
             "sum (-1)^(r-l) <mu,r>/z_mu X^(l-1) sum_i m_i z^(i-1) = "
             "sum_j sum_i (-1)^(j-1) C(X,r-j) C(i,j)/i C(n-i-1,r-j-1) z^(i-1)"),
    Identity("thm7spec", ("n", "r", "s"), _thm7_spec, _nrs,
             "s! * (thm7 right side at z^k -> C(k+s,k)) = thm1 right side"),
    Identity("thm8", ("n", "r", "p"), ids.thm8_sides, _nrp,
             "sum_{l(mu)=p} <mu,r>/z_mu sum_i m_i z^(i-1) = "
             "sum_j sum_i |s(r-j,p-1)|/(i (r-j)!) C(i,j) C(n-i-1,r-j-1) z^(i-1)",
             admissible=_p_le_r),
    Identity("thm9", ("n",), _thm9, _n,
             "((1-y)/(1-y(1+q)))^x = sum C(i-1,j-1) |s(j,k)|/j! x^k y^i q^j, caps y,q <= n"),
    Identity("thm9binom", ("n",), _thm9_binom, _n,
             "exp route vs binomial-series route for ((1-y)/(1-y(1+q)))^x, caps y,q <= n"),
    Identity("genbinom", ("n", "r", "cap"), ids.genbinom_oracle_sides,
             lambda c: {"n": _upto(0, c.n_max), "r": _upto(0, c.r_max), "cap": [c.oracle_cap]},
             "<lam,r> by generating polynomial = <lam,r> by subset enumeration",
             admissible=lambda n, r, cap: n <= cap),
    Identity("rel_length", ("n",), ids.length_relation_sides, _n,
             "<mu,l(mu)> = prod mu_i"),
    Identity("rel_length1", ("n",), ids.length_plus_one_relation_sides, _n,
             "<mu,l(mu)+1> = (|mu|-l(mu)) prod mu_i / 2"),
    Identity("recurrence", ("n", "i", "r"), ids.recurrence_sides,
             lambda c: {"n": _upto(0, c.n_max), "i": _upto(1, c.s_max), "r": _upto(0, c.r_max)},
             "<lam u {i},r> = sum_j C(i,j) <lam,r-j>"),
    Identity("conj1", ("n", "umax"), ids.conj1_sides,
             lambda c: {"n": _upto(1, c.n_max), "umax": [c.umax]},
             "conj2 at r = n", conjecture=True),
    Identity("conj2", ("n", "r", "umax"), ids.conj2_sides,
             lambda c: {**_nr(c), "umax": [c.umax]},
             "sum (-1)^(r-l) <mu,r>/z_mu prod_i (X_0 + sum_p u^p (i)_p/p! X_p)^m_i = "
             "sum_j u^j C(n+j-1,n-r) sum_k C(X_0-j,r-k) P_jk, mod u^(umax+1)",
             conjecture=True),
]:
    register(_identity)
