"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed
past pytest's capture) or directly with ``python tests/test_acceptance.py``.
"""

import itertools
import os
import subprocess
import sys
from pathlib import Path

import pytest

from gdnsuper import (
    DiffElement,
    check_engel_identity,
    check_lemma42,
    check_lemma43,
    check_pbw_slice,
    derive,
    enumerate_monomials,
    enumerate_tableaux,
    enumerate_terms,
    enumerate_weight0,
    leading,
    leading_tableau_monomial,
    ls_defect,
    monomial_to_tableau,
    nf_embed,
    nf_rewrite,
    parse_term,
    phi,
    print_term,
    rc_defect,
    weight,
)
from gdnsuper.spans import RelationSet
from gdnsuper.terms import Alphabet

A2 = Alphabet.parse("x:0,xi:1")
A4 = Alphabet.parse("x:0,y:0,xi:1,eta:1")
ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def report(capsys):
    def emit(n, title, ok):
        with capsys.disabled():
            print(f"\n[acceptance {n:>2}] {'PASS' if ok else 'FAIL'}  {title}")
        assert ok, f"acceptance criterion {n} failed: {title}"

    return emit


def partition_numbers(n):
    """p(0..n) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            s = 1 if k % 2 else -1
            total += s * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += s * p[m - g2]
            k += 1
        p[m] = total
    return p


def test_01_defining_identities(report):
    by_len = {k: enumerate_terms(A4, k) for k in range(1, 4)}
    ok = True
    count = 0
    for l1, l2, l3 in itertools.product(range(1, 4), repeat=3):
        if l1 + l2 + l3 > 5:
            continue
        for a, b, c in itertools.product(by_len[l1], by_len[l2], by_len[l3]):
            for d in (ls_defect(a, b, c), rc_defect(a, b, c)):
                count += 1
                if nf_rewrite(d) != 0 or nf_embed(d) != 0:
                    ok = False
    report(1, f"defining identities vanish under both engines ({count} defects)", ok and count == 20096)


def test_02_dual_engine_agreement(report):
    ok = True
    count = 0
    for n in range(1, 6):
        for t in enumerate_terms(A2, n):
            count += 1
            r, e = nf_rewrite(t), nf_embed(t)
            if r != e or phi(r) != phi(t):
                ok = False
    report(2, f"nf_rewrite = nf_embed and phi preserved on {count} terms", ok and count == 550)


def test_03_basis_counting(report):
    ok = True
    for alphabet in (A2, A4):
        for n in range(1, 8):
            ok &= len(enumerate_tableaux(alphabet, n)) == len(enumerate_weight0(alphabet, n))
    X = Alphabet.parse("x:0")
    p = partition_numbers(7)
    counts = [len(enumerate_tableaux(X, n)) for n in range(1, 9)]
    ok &= counts == [p[n - 1] for n in range(1, 9)] == [1, 1, 2, 3, 5, 7, 11, 15]
    ok &= counts == [len(enumerate_weight0(X, n)) for n in range(1, 9)]
    report(3, "tableau counts equal weight-0 counts and partition numbers", ok)


def test_04_injectivity_witness(report):
    ok = True
    total = 0
    for n in range(1, 7):
        tabs = enumerate_tableaux(A4, n)
        seen = set()
        for tab in tabs:
            total += 1
            m, s = leading_tableau_monomial(tab)
            lm, lc = leading(phi(tab.to_term()))
            ok &= (lm, lc) == (m, s) and lc in (1, -1)
            ok &= monomial_to_tableau(m) == tab
            seen.add(m)
        ok &= len(seen) == len(tabs)
    report(4, f"distinct leading monomials, lc = +-1, inverse map on {total} tableaux", ok)


def test_05_nilpotency(report):
    one = Alphabet.parse("xi:1")
    two = Alphabet.parse("xi:1,eta:1")
    ok = all(nf_rewrite(t) == 0 and nf_embed(t) == 0 for n in (4, 5) for t in enumerate_terms(one, n))
    seven = enumerate_terms(two, 7)
    ok &= len(seven) == 16896
    ok &= all(nf_rewrite(t) == 0 and nf_embed(t) == 0 for t in seven)
    report(5, "all terms over {xi} of length 4, 5 and over {xi, eta} of length 7 vanish", ok)


def test_06_engel_identity(report):
    results = [check_engel_identity(t, method="both") for t in (1, 2, 3)]
    report(6, "symmetrization identity and inclusion-exclusion, t = 1, 2, 3", all(results))


def test_07_pbw_slice(report):
    X = Alphabet.parse("x:0")
    O = Alphabet.parse("xi:1,eta:1")
    runs = [
        check_pbw_slice(RelationSet(X, [parse_term("(x*x)", X)]), 5, method="both"),
        check_pbw_slice(RelationSet(O, [parse_term("(xi*xi)", O)]), 4, method="both"),
    ]
    ok = all(runs)
    for r in runs:
        ok &= all(d["gdn"] == d["phi"] == d["diff"] for d in r.details.get("dimensions", [])) and bool(r.details)
    report(7, "ideal slices agree in every degree for (x*x), L=5 and (xi*xi), L=4", ok)


def test_08_engel_inclusions(report):
    runs = [check_lemma42(2, 4), check_lemma42(2, 5), check_lemma43(4), check_lemma43(5)]
    report(8, "(A^2)^2 in A_L^3 at degrees 4, 5; odd splitting at degrees 4, 5", all(runs))


def test_09_differential_axioms(report):
    monos = [m for k in range(1, 5) for m in enumerate_monomials(A2, k, max_order=3)]
    els = [DiffElement.from_monomial(m) for m in monos]
    ok = True
    prod = {}
    for i, u in enumerate(els):
        for j, v in enumerate(els):
            uv = u * v
            prod[i, j] = uv
            ok &= uv == (v * u).scale((-1) ** (u.parity() * v.parity()))
            ok &= derive(uv) == derive(u) * v + u * derive(v)
            w = weight(monos[i]) + weight(monos[j]) - 1
            ok &= all(weight(m) == w for m in uv.monomials())
    by_len = {}
    for i, m in enumerate(monos):
        by_len.setdefault(m.length, []).append(i)
    triples = 0
    for l1, l2, l3 in itertools.product(range(1, 5), repeat=3):
        if l1 + l2 + l3 > 6:
            continue
        for i in by_len[l1]:
            for j in by_len[l2]:
                left = prod[i, j]
                for k in by_len[l3]:
                    triples += 1
                    ok &= left * els[k] == els[i] * prod[j, k]
    report(9, f"associativity ({triples} triples), supercommutativity, Leibniz, weight ({len(monos) ** 2} pairs)", ok)


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    return subprocess.run([sys.executable, "-m", "gdnsuper", *args], capture_output=True, env=env, check=False).stdout


def test_10_round_trip_and_determinism(report):
    ok = True
    count = 0
    for n in range(1, 6):
        for t in enumerate_terms(A4, n):
            count += 1
            ok &= parse_term(print_term(t), A4) == t
    commands = [
        ["nf", "--alphabet", "x:0,y:0,xi:1,eta:1", "((xi*(x*eta))*(y*(x*xi)))"],
        ["nf", "--method", "both", "--json", "((x*xi)*((x*x)*xi))"],
        ["phi", "--alphabet", "x:0,y:0,xi:1", "((y*x)*(x*xi))"],
        ["basis", "--alphabet", "x:0,xi:1", "--length", "5"],
        ["count", "--alphabet", "x:0,y:0,xi:1,eta:1", "--max", "5", "--json"],
        ["check", "pbw", "--alphabet", "x:0", "--max-length", "4", "--json"],
    ]
    for cmd in commands:
        outs = {_cli(cmd, seed) for seed in (0, 1, 12345)}
        ok &= len(outs) == 1 and bool(outs.pop())
    report(10, f"round trip on {count} terms, byte-identical CLI output across runs", ok)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
