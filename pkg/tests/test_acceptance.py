"""Acceptance suite: every criterion is an exact (zero tolerance) check.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import json
import sys
import time
from math import factorial

import pytest

from genbinom.cli import SweepConfig, main, run_sweep
from genbinom.combinat import stirling_unsigned
from genbinom.identities import classical_sides, gen_binom, gen_binom_oracle, thm4_sides
from genbinom.partitions import enumerate_partitions
from genbinom.polyalg import UniPoly
from genbinom.registry import Identity, check, register, unregister

X = UniPoly.x()


def sweep(identity, **caps):
    reports = run_sweep(SweepConfig(identity, **caps))
    assert reports, identity
    bad = [(r.params, r.lhs, r.rhs) for r in reports if not r.equal]
    assert not bad, f"{identity}: {len(bad)} failures, first {bad[0]}"
    return reports


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


@pytest.mark.criterion(1, "generating polynomial equals subset enumeration, |lam| <= 12")
def test_criterion_01_oracle():
    with Budget(30):
        count = 0
        for n in range(13):
            for lam in enumerate_partitions(n):
                for r in range(n + 1):
                    assert gen_binom(lam, r) == gen_binom_oracle(lam, r), (lam, r)
                    count += 1
    assert count == sum((n + 1) * len(enumerate_partitions(n)) for n in range(13))


@pytest.mark.criterion(2, "power-sum identity, both sign forms, n, s <= 8")
def test_criterion_02_rising_sum():
    with Budget(60):
        for name in ("thm1", "thm1alt"):
            reports = sweep(name, n_max=8, r_max=8, s_max=8)
            assert {(p["n"], p["r"], p["s"]) for p in (r.params for r in reports)} >= {
                (n, r, s) for n in range(1, 9) for r in range(1, n + 1) for s in range(1, 9)
            }


@pytest.mark.criterion(3, "fixed-length coefficient identity and its s = 1 case, n <= 10")
def test_criterion_03_fixed_length():
    with Budget(60):
        reports = sweep("thm2", n_max=10, r_max=10, s_max=6)
        in_range = [r for r in reports if r.params["r"] <= r.params["n"]]
        assert len(in_range) == 6 * sum(r for n in range(1, 11) for r in range(1, n + 1))
        sweep("eq3", n_max=10, r_max=10)


@pytest.mark.criterion(4, "full-length and unrestricted-length identities, n <= 10, s <= 8")
def test_criterion_04_full_and_all_lengths():
    sweep("thm3", n_max=10, r_max=10, s_max=8)
    sweep("thm4", n_max=10, s_max=8)
    sweep("thm4alt", n_max=10, s_max=8)
    for n in range(1, 11):
        lhs, rhs = thm4_sides(n, 1)
        c_lhs, c_rhs = classical_sides(n)
        assert X * lhs / n == c_lhs
        assert X * rhs / n == c_rhs
        assert str(X * rhs / n) == str(c_rhs)


@pytest.mark.criterion(5, "multiplicity-weighted polynomial identities, n <= 8, and the ones specialization")
def test_criterion_05_multiplicity_weighted():
    sweep("thm5", n_max=8)
    sweep("thm7", n_max=8, r_max=8)
    sweep("thm8", n_max=8, r_max=8)
    sweep("thm7spec", n_max=6, r_max=6, s_max=4)
    sweep("thm6ones", n_max=6, r_max=6, s_max=4)


@pytest.mark.criterion(6, "bivariate series identity at caps 10, binomial route at caps 6")
def test_criterion_06_bivariate_series():
    with Budget(60):
        report = check("thm9", {"n": 10})
        assert report.equal, (report.lhs, report.rhs)
        report = check("thm9binom", {"n": 6})
        assert report.equal, (report.lhs, report.rhs)


@pytest.mark.criterion(7, "triple-binomial lemma, 0 <= c <= d <= a <= 6, 1 <= b <= 6")
def test_criterion_07_triple_binomial():
    reports = sweep("lemma", n_max=6)
    expected = sum(1 for a in range(7) for b in range(1, 7) for d in range(a + 1) for c in range(d + 1))
    assert len(reports) == expected


@pytest.mark.criterion(8, "union recurrence and length relations, |lam| <= 10, i <= 6")
def test_criterion_08_relations():
    sweep("recurrence", n_max=10, s_max=6, r_max=16)
    sweep("rel_length", n_max=10)
    sweep("rel_length1", n_max=10)


@pytest.mark.criterion(9, "series conjectures through the CLI, n <= 6, u-cap 6")
def test_criterion_09_u_series(tmp_path):
    for name, total in (("conj1", 6), ("conj2", 36)):
        out = tmp_path / f"{name}.json"
        code = main(["verify", "--identity", name, "--n-max", "6", "--umax", "6", "--out", str(out)])
        doc = json.loads(out.read_text())
        assert code == 0, doc["summary"]
        assert doc["summary"] == {"total": total, "passed": total, "failed": 0}


@pytest.mark.criterion(10, "Stirling row sums, p(8) = 22, polynomial Chu-Vandermonde")
def test_criterion_10_sanity():
    for n in range(15):
        assert sum(stirling_unsigned(n, k) for k in range(n + 1)) == factorial(n)
    assert len(enumerate_partitions(8)) == 22
    reports = sweep("eq1", n_max=8)
    assert [r.params["n"] for r in reports] == list(range(9))


@pytest.mark.criterion(11, "byte-identical reports and exit code 1 on an injected failure")
def test_criterion_11_cli_contract(tmp_path, capsys):
    paths = [tmp_path / f"run{k}.json" for k in range(3)]
    args = ["verify", "--identity", "thm1", "--n-max", "5", "--s-max", "3"]
    assert main(args + ["--out", str(paths[0])]) == 0
    assert main(args + ["--out", str(paths[1])]) == 0
    assert main(args + ["--jobs", "3", "--out", str(paths[2])]) == 0
    data = [p.read_bytes() for p in paths]
    assert data[0] == data[1] == data[2]

    # test-only stub: wrong at n = 2 and nowhere else
    register(Identity("stub_fail", ("n",), lambda n: (X**n, X**n + (n == 2)),
                      lambda c: {"n": range(1, c.n_max + 1)}, "X^n = X^n + [n = 2]"))
    try:
        out = tmp_path / "stub.json"
        capsys.readouterr()
        code = main(["verify", "--identity", "stub_fail", "--n-max", "3", "--out", str(out)])
        assert code == 1
        doc = json.loads(out.read_text())
        assert doc["summary"] == {"total": 3, "passed": 2, "failed": 1}
        failed = [r for r in doc["results"] if not r["equal"]]
        assert failed == [{"params": {"n": 2}, "lhs": "X^2", "rhs": "X^2 + 1", "equal": False, "elapsed_ms": None}]
        assert "X^2 + 1" in capsys.readouterr().err
    finally:
        unregister("stub_fail")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
