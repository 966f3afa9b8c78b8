"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines
interleaved with the test names; they are printed either way.
"""

import io
import json
import random
import time
from contextlib import redirect_stdout
from functools import lru_cache

import pytest

from holsemi.characters import column_orthogonality_holds, inner_product, restrict
from holsemi.cli import run
from holsemi.holsemigroup import (
    ConstraintSet,
    admissible,
    hilbert_basis,
    is_factorial,
    predicted_basis,
    verify_theorem1,
    verify_theorem2,
)
from holsemi.induction import induce, linear_characters
from holsemi.library import LIBRARY_NAMES, library_group
from holsemi.monomiality import MonomialityReport, is_almost_monomial, is_monomial
from holsemi.oracle import check_basis, minimal_elements
from holsemi.subgroups import all_subgroups_up_to_conjugacy

SAMPLE_SEED = 20240601
SAMPLE_SIZE = 500
BOX = 12


class Gate:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.t0 = time.perf_counter()
        self.why = None

    def check(self, cond, why):
        if not cond:
            self.why = why
            pytest.fail(f"criterion {self.number}: {why}")

    def line(self, passed):
        dt = time.perf_counter() - self.t0
        if passed:
            return f"[PASS] criterion {self.number}: {self.title} ({dt:.2f}s)"
        return f"[FAIL] criterion {self.number}: {self.title}: {self.why or 'unexpected error'}"


@pytest.fixture
def gate(request, capsys):
    """Start a criterion; its PASS/FAIL line is printed at teardown."""
    holder = []

    def start(number, title):
        holder.append(Gate(number, title))
        return holder[0]

    yield start
    rep = getattr(request.node, "call_report", None)
    if holder:
        with capsys.disabled():
            print("\n" + holder[0].line(rep is not None and rep.passed))


@lru_cache(maxsize=None)
def report(name):
    return MonomialityReport.build(library_group(name))


@lru_cache(maxsize=None)
def samples():
    rng = random.Random(SAMPLE_SEED)
    out = []
    for _ in range(SAMPLE_SIZE):
        r = rng.randint(2, 5)
        out.append(tuple(rng.randint(-6, 6) for _ in range(r)))
    return tuple(out)


@lru_cache(maxsize=None)
def sample_bases():
    return {v: hilbert_basis(v) for v in samples()}


def test_criterion_01_a5_almost_monomial(gate):
    title = "A5 is almost monomial with a re-verified 5x4 witness matrix"
    g = gate(1, title)
    t0 = time.perf_counter()
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(["check", "A5", "--property", "almost-monomial", "--no-cache"])
    data = json.loads(buf.getvalue())
    dt = time.perf_counter() - t0
    g.check(code == 0 and data["result"] is True, f"exit {code}, result {data.get('result')}")
    pairs = {(w["contains"], w["excludes"]) for w in data["witnesses"]}
    g.check(pairs == {(i, j) for i in range(1, 6) for j in range(1, 6) if i != j}, "witness pairs incomplete")
    g.check(all(w["verified"] for w in data["witnesses"]), "a witness failed re-verification")
    for w in data["witnesses"]:
        m = w["multiplicities"]
        g.check(m[w["contains"] - 1] > 0 and m[w["excludes"] - 1] == 0, f"bad witness {w}")
    g.check(dt < 10, f"took {dt:.1f}s")


def test_criterion_02_monomial_booleans(gate):
    title = "A5 not monomial; S3, S4, A4, D4, Q8 monomial"
    g = gate(2, title)
    expected = {"A5": False, "S3": True, "S4": True, "A4": True, "D4": True, "Q8": True}
    got = {name: is_monomial(library_group(name), report(name)).holds for name in expected}
    g.check(got == expected, f"got {got}")


def test_criterion_03_monomial_implies_almost_monomial(gate):
    title = "monomial implies almost monomial over the library"
    g = gate(3, title)
    bad = []
    for name in LIBRARY_NAMES:
        G = library_group(name)
        if is_monomial(G, report(name)).holds and not is_almost_monomial(G, report(name)).holds:
            bad.append(name)
    g.check(not bad, f"exceptions {bad}")


def test_criterion_04_character_tables_exact(gate):
    title = "exact character tables for the library; A5 degrees (1,3,3,4,5)"
    g = gate(4, title)
    for name in LIBRARY_NAMES:
        G, T = library_group(name), report(name).table
        g.check(sum(d * d for d in T.degrees) == G.order, f"{name}: sum of squares")
        for i, chi in enumerate(T.irreducibles):
            for j, psi in enumerate(T.irreducibles):
                ip = inner_product(chi, psi)
                g.check(ip == int(i == j), f"{name}: <chi{i + 1}, chi{j + 1}> = {ip}")
        g.check(column_orthogonality_holds(T), f"{name}: column orthogonality")
    g.check(report("A5").table.degrees == [1, 3, 3, 4, 5], "A5 degrees")


def test_criterion_05_frobenius_reciprocity(gate):
    title = "Frobenius reciprocity for all library groups of order <= 60"
    g = gate(5, title)
    triples = 0
    for name in LIBRARY_NAMES:
        G = library_group(name)
        if G.order > 60:
            continue
        T = report(name).table
        for H in all_subgroups_up_to_conjugacy(G):
            for phi in linear_characters(H):
                ind = induce(phi, G)
                for chi in T.irreducibles:
                    lhs = inner_product(ind, chi)
                    rhs = inner_product(phi.as_class_function(), restrict(chi, H))
                    g.check(lhs == rhs, f"{name}, |H|={H.order}: {lhs} != {rhs}")
                    triples += 1
    g.check(triples > 0, "no triples checked")


def test_criterion_06_hilbert_basis_oracle(gate):
    title = f"Hilbert basis equals the box oracle on {SAMPLE_SIZE} random vectors"
    g = gate(6, title)
    t0 = time.perf_counter()
    for v, hb in sample_bases().items():
        flags = check_basis(v, hb.elements, BOX)
        g.check(all(flags.values()), f"v={v}: {flags}")
    dt = time.perf_counter() - t0
    g.check(dt < 60, f"took {dt:.1f}s")


def test_criterion_07_factoriality(gate):
    title = "factorial iff the basis has r elements"
    g = gate(7, title)
    g.check(list(hilbert_basis((1, -1)).elements) == [(1, 0), (1, 1)] and is_factorial((1, -1)), "(1,-1)")
    hb = hilbert_basis((2, -3))
    g.check(list(hb.elements) == [(1, 0), (2, 1), (3, 2)] and not is_factorial((2, -3)), "(2,-3)")
    g.check(minimal_elements((2, -3), BOX) == list(hb.elements), "(2,-3) oracle")
    for v, hb in sample_bases().items():
        g.check(is_factorial(v) == (len(hb) == len(v)), f"v={v}")


def test_criterion_08_theorem1(gate):
    title = "no admissible factorial vector with a pole in [-3,3]^r for A5, S3, S4"
    g = gate(8, title)
    t0 = time.perf_counter()
    for name in ("A5", "S3", "S4"):
        T = report(name).table
        M = [d.multiplicities for d in report(name).data]
        rep = verify_theorem1(T.degrees, M, 3)
        g.check(rep.searched == 7 ** len(T.degrees), f"{name}: searched {rep.searched}")
        g.check(rep.counterexamples == [], f"{name}: {rep.counterexamples[:5]}")
    dt = time.perf_counter() - t0
    g.check(dt < 60, f"took {dt:.1f}s")


def test_criterion_09_theorem2(gate):
    title = "no factorial counterexample for small d_l, with exact audits"
    g = gate(9, title)
    audited = 0
    for d in [(1, 2, 2), (1, 1, 2, 2), (1, 2, 3)]:
        for l in (i for i, x in enumerate(d) if x <= 2):
            rep = verify_theorem2(d, l, 3)
            g.check(rep.counterexamples == [], f"d={d}, l={l + 1}: {rep.counterexamples[:5]}")
            for a in rep.audits:
                identity = a.a is not None and d[l] == a.a[l] + sum(a.m[j] * d[j] for j in range(len(d)) if j != l)
                g.check(a.identity_holds and identity, f"d={d}, l={l + 1}, v={a.v}: audit fails")
                g.check(a.basis_is_predicted, f"d={d}, l={l + 1}, v={a.v}: basis not predicted")
                # every audited candidate is rejected, and only by the Rhoades constraint
                C = ConstraintSet(d, use_rhoades=True)
                g.check(not a.rhoades_admissible and not admissible(a.v, C), f"v={a.v} survives")
            audited += len(rep.audits)
    g.check(audited > 0, "no candidate was audited")


def test_criterion_10_structure_lemma(gate):
    title = "factorial bases with mixed signs equal the predicted basis"
    g = gate(10, title)
    hits = 0
    for v, hb in sample_bases().items():
        if not (is_factorial(v) and max(v) > 0 and min(v) < 0):
            continue
        for l in (i for i, x in enumerate(v) if x > 0):
            g.check(tuple(sorted(predicted_basis(v, l))) == hb.elements, f"v={v}, l={l}")
            hits += 1
    g.check(hits > 0, "no qualifying samples")
