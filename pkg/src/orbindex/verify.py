"""Sweep checks for the identities the library relies on.

Each ``check_*`` function runs one sweep and returns a :class:`CheckResult`;
``SUITES`` groups them for the ``verify`` command.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, pi
from typing import Callable

from . import correction as corr
from . import dedekind as ded
from . import oracle, spaces
from .numtheory import (
    CyclicAction,
    euclid_step,
    frac,
    hj_expansion,
    mod_inverse,
    sawtooth,
)

SEED = 20120517


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f"; first failures: {self.failures[:5]}"
        return f"[{status}] {self.name} ({self.checked} cases, {self.seconds:.2f}s){tail}"


def _run(name: str, cases, predicate) -> CheckResult:
    start = time.perf_counter()
    failures = []
    n = 0
    for case in cases:
        n += 1
        if not predicate(*case):
            failures.append(case)
    return CheckResult(name, not failures, n, failures, time.perf_counter() - start)


def coprime_pairs(pmax: int, pmin: int = 2):
    for p in range(pmin, pmax + 1):
        for q in range(1, p):
            if gcd(q, p) == 1:
                yield q, p


def wps_triples(pmax: int):
    for p in range(4, pmax + 1):
        for q in range(3, p):
            if gcd(q, p) != 1:
                continue
            for r in range(2, q):
                if gcd(r, q) == 1 and gcd(r, p) == 1:
                    yield r, q, p


def random_rationals(rng: random.Random, n: int, non_integral=True):
    out = []
    while len(out) < n:
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        if non_integral and x.denominator == 1:
            continue
        out.append(x)
    return out


def random_coprime_triples(rng: random.Random, n: int, hi: int):
    out = []
    while len(out) < n:
        r, q, p = (rng.randint(2, hi) for _ in range(3))
        if gcd(r, q) == gcd(q, p) == gcd(r, p) == 1:
            out.append((r, q, p))
    return out


# numtheory

def check_hj_reconstruction(pmax=500):
    return _run(
        "HJ expansion folds back to p/q",
        coprime_pairs(pmax),
        lambda q, p: hj_expansion(CyclicAction(q, p)).value() == Fraction(p, q),
    )


def check_hj_anchors(pmax=200):
    def ok(p):
        return (
            hj_expansion(CyclicAction(1, p)).coefficients == (p,)
            and hj_expansion(CyclicAction(p - 1, p)).coefficients == (2,) * (p - 1)
        )

    return _run("HJ(1,p) = [p], HJ(p-1,p) = [2]*(p-1)", ((p,) for p in range(2, pmax + 1)), ok)


def check_mod_inverse_involution(pmax=200):
    return _run(
        "mod_inverse is an involution",
        ((a, m) for m in range(2, pmax + 1) for a in range(1, m) if gcd(a, m) == 1),
        lambda a, m: mod_inverse(mod_inverse(a, m), m) == a,
    )


def check_inverse_identities(pmax=300):
    """For beta = e*alpha - a: beta^{-1;alpha} = alpha - a^{-1;alpha} and
    alpha*alpha^{-1;beta} = 1 + a^{-1;alpha}*beta."""

    def ok(alpha, beta):
        _, a = euclid_step(alpha, beta)
        a_inv = mod_inverse(a, alpha)
        return (
            mod_inverse(beta, alpha) == alpha - a_inv
            and alpha * mod_inverse(alpha, beta) == 1 + a_inv * beta
        )

    cases = ((alpha, beta) for alpha, beta in coprime_pairs(pmax) if alpha > 1)
    return _run("modular-inverse identities", cases, ok)


def check_sawtooth_odd(n=1000):
    rng = random.Random(SEED)
    xs = random_rationals(rng, n, non_integral=False)
    return _run("sawtooth is odd", ((x,) for x in xs), lambda x: sawtooth(-x) == -sawtooth(x))


def check_sawtooth_addition(n=1000):
    rng = random.Random(SEED + 1)
    xs = random_rationals(rng, n)
    ys = random_rationals(rng, n)
    # force a share of pairs onto the {a} + {b} = 1 boundary
    for i in range(0, n, 10):
        ys[i] = -xs[i] + rng.randint(-50, 50)

    def ok(a, b):
        s = frac(a) + frac(b)
        if s < 1:
            expected = sawtooth(a) + sawtooth(b) + Fraction(1, 2)
        elif s > 1:
            expected = sawtooth(a) + sawtooth(b) - Fraction(1, 2)
        else:
            expected = Fraction(0)
        return sawtooth(a + b) == expected

    return _run("sawtooth addition law", zip(xs, ys), ok)


# dedekind

def check_dedekind_closed_form(pmax=1000):
    return _run(
        "s(1,p) = (p-1)(p-2)/12p",
        ((p,) for p in range(2, pmax + 1)),
        lambda p: ded.dedekind_exact(1, p) == Fraction((p - 1) * (p - 2), 12 * p),
    )


def check_dedekind_fast(pmax=500):
    return _run(
        "fast Dedekind sum = sawtooth sum",
        coprime_pairs(pmax),
        lambda q, p: ded.dedekind_fast(q, p) == ded.dedekind_exact(q, p),
    )


def check_dedekind_float(pmax=200):
    return _run(
        "cotangent Dedekind sum within 1e-8*p",
        coprime_pairs(pmax),
        lambda q, p: abs(ded.dedekind_float(q, p) - float(ded.dedekind_exact(q, p))) <= 1e-8 * p,
    )


def check_dedekind_denominator(pmax=300):
    return _run(
        "12p * s(q,p) is an integer",
        coprime_pairs(pmax),
        lambda q, p: (12 * p * ded.dedekind_fast(q, p)).denominator == 1,
    )


def check_reciprocity(pmax=300):
    return _run(
        "two-term reciprocity defect is 0",
        ((q, p) for q, p in coprime_pairs(pmax) if q > 1),
        lambda q, p: ded.reciprocity_defect(q, p) == 0,
    )


def check_triple_reciprocity(n=500, hi=10**4):
    rng = random.Random(SEED + 2)
    return _run(
        "three-term reciprocity defect is 0",
        random_coprime_triples(rng, n, hi),
        lambda r, q, p: ded.triple_reciprocity_defect(r, q, p) == 0,
    )


def check_dedekind_symmetries(pmax=300):
    def ok(q, p):
        s = ded.dedekind_fast(q, p)
        return ded.dedekind_fast(mod_inverse(q, p), p) == s and ded.dedekind_fast(p - q, p) == -s

    return _run("s(q^{-1},p) = s(q,p) and s(p-q,p) = -s(q,p)", coprime_pairs(pmax), ok)


# correction

def check_n_closed_vs_dedekind(pmax=300):
    return _run(
        "N: HJ closed form = Dedekind form",
        coprime_pairs(pmax),
        lambda q, p: corr.n_closed(q, p) == corr.n_dedekind(q, p),
    )


def check_n_float(pmax=150):
    return _run(
        "N: trigonometric form within 1e-4",
        coprime_pairs(pmax),
        lambda q, p: abs(corr.n_float(q, p) - corr.n_closed(q, p)) < 1e-4,
    )


def check_n_anchors(pmax=300):
    def ok(p):
        good = corr.n_closed(p - 1, p) == -4 * p + 4
        if p >= 3:
            good = good and corr.n_closed(1, p) == 4 * p - 14
        return good

    cases = [(p,) for p in range(2, pmax + 1)]
    res = _run("N(1,p) = 4p-14, N(p-1,p) = -4p+4", cases, ok)
    if corr.n_closed(1, 2) != -4:
        res.passed = False
        res.failures.append((1, 2))
    return res


def check_n_inverse_symmetry(pmax=300):
    return _run(
        "N(q^{-1},p) = N(q,p)",
        coprime_pairs(pmax),
        lambda q, p: corr.n_closed(mod_inverse(q, p), p) == corr.n_closed(q, p),
    )


def check_football(pmax=300):
    def ok(q, p):
        report = spaces.index_orbifold(
            spaces.OrbifoldData(2, 0, (CyclicAction(q, p), CyclicAction(p - q, p)))
        )
        return corr.football_defect(q, p) == 0 and report.index == 3

    return _run(
        "football: N(q,p) + N(p-q,p) = -12 and index 3",
        ((q, p) for q, p in coprime_pairs(pmax) if 1 < q < p - 1),
        ok,
    )


def check_r_plus_table(pmax=200):
    return _run(
        "R+ case table",
        coprime_pairs(pmax),
        lambda q, p: corr.r_plus(q, p) == corr.r_plus_table(q, p),
    )


def check_r_minus_table(pmax=200):
    return _run(
        "R- case table",
        coprime_pairs(pmax),
        lambda q, p: corr.r_minus(q, p) == corr.r_minus_table(q, p),
    )


# oracle

def check_traces(n=100, tol=1e-9):
    rng = random.Random(SEED + 3)
    angles = [oracle.RotationAngles(rng.uniform(0, 2 * pi), rng.uniform(0, 2 * pi)) for _ in range(n)]

    def ok(a):
        return all(abs(x - y) <= tol for x, y in zip(oracle.traces(a), oracle.traces_matrix(a)))

    return _run("trace formulas = matrix representations", ((a,) for a in angles), ok)


def check_chern_ratio_consistency(pmax=60):
    def ok(q, p):
        for j in range(1, p):
            a = oracle.RotationAngles.for_element(CyclicAction(q, p), j)
            if abs(oracle.chern_ratio(a) - oracle.chern_ratio_from_traces(a)) > 1e-8:
                return False
        return True

    return _run("Chern ratio = trace ratio", coprime_pairs(pmax), ok)


def check_assembled_correction(pmax=150):
    return _run(
        "Kawasaki assembly = N closed form within 1e-4",
        coprime_pairs(pmax),
        lambda q, p: abs(oracle.assembled_correction_float(q, p) - corr.n_closed(q, p)) < 1e-4,
    )


def check_eisenstein(pmax=200):
    return _run(
        "Eisenstein sum = sawtooth within 1e-8",
        coprime_pairs(pmax),
        lambda q, p: abs(oracle.eisenstein_sum_float(q, p) - float(sawtooth(Fraction(q, p)))) <= 1e-8,
    )


# spaces

def check_cs_two_path(pmax=200):
    return _run(
        "Calderbank-Singer index: closed form = orbifold assembly",
        coprime_pairs(pmax),
        lambda q, p: spaces.index_calderbank_singer(q, p) == spaces.index_cs_via_orbifold(q, p),
    )


def check_cs_anchors(pmax=200):
    def ok(p):
        m = spaces.moduli_calderbank_singer(p - 1, p)
        if p == 2:
            return m.index == 4
        good = m.index == -3 * p + 8
        if p >= 3:
            good = good and m.dim_h1 == 3 * p - 6
        return good

    return _run("CS anchors: Ind(1,2)=4, Ind(p-1,p)=-3p+8, h1=3p-6", ((p,) for p in range(2, pmax + 1)), ok)


def check_cs_moduli(pmax=200):
    def ok(q, p):
        m = spaces.moduli_calderbank_singer(q, p)
        k = hj_expansion(CyclicAction(q, p)).length
        kind = spaces.StatementKind
        if (q, p) == (1, 2):
            return m.statement.kind is kind.RIGID and not m.admits_nontoric
        if (q, p) == (1, 3):
            expected = (kind.EXACT_DIM, 1)
        elif q == 1:
            expected = (kind.EXACT_DIM, 4 * p - 12)
        elif q == p - 1:
            expected = (kind.EXACT_DIM, 3 * p - 7)
        else:
            expected = (kind.LOWER_BOUND, m.dim_h1 - 2)
        if (m.statement.kind, m.statement.dim) != expected or not m.admits_nontoric:
            return False
        if m.statement.kind is kind.LOWER_BOUND:
            # strictly beyond the (k-1)-dimensional toric family
            return m.statement.dim > 0 and m.statement.dim > k - 1
        return True

    return _run("CS moduli statements", coprime_pairs(pmax), ok)


def check_wps_two_path(pmax=80):
    return _run(
        "WPS index: case formula = 8 + sum N",
        wps_triples(pmax),
        lambda r, q, p: spaces.index_wps((r, q, p)) == spaces.index_wps_assembled((r, q, p)),
    )


def check_wps_sum_regime(pmax=80):
    return _run(
        "WPS: r+q >= p gives index 2",
        ((r, q, p) for r, q, p in wps_triples(pmax) if r + q >= p),
        lambda r, q, p: spaces.index_wps((r, q, p)) == 2,
    )


def check_wps_two_exceptional(pmax=500, extra_pairs=20):
    rng = random.Random(SEED + 4)
    pairs = [(3, 7)]
    while len(pairs) < 1 + extra_pairs:
        r = rng.randint(2, 12)
        q = rng.randint(r + 1, 25)
        if gcd(r, q) == 1 and (r, q) not in pairs:
            pairs.append((r, q))
    cases = [
        (r, q, p)
        for r, q in pairs
        for p in range(q + 1, pmax + 1)
        if gcd(p, r) == 1 and gcd(p, q) == 1 and r + q < p
    ]

    def ok(r, q, p):
        c = spaces.classify_wps((r, q, p))
        if c.epsilon != 2:
            return True
        x, rem = divmod(p - r - q, q * r)
        return rem == 0 and x > 0 and c.h_sign is spaces.HSign.POSITIVE

    return _run("epsilon = 2 forces p = Xqr + r + q and H > 0", cases, ok)


def check_wps_r1(pmax=200):
    def ok(q, p):
        idx = spaces.index_wps((1, q, p))
        if idx != spaces.index_wps_r1_reciprocity(q, p):
            return False
        _, a = euclid_step(q, p)
        if q == p - 1:
            expected = 2
        elif a == q - 1:
            expected = -4 * (p // q) + 6
        elif 1 <= a <= q - 2 and q > 2:
            expected = -4 * (p // q) + 4
        else:
            return False
        return idx == expected

    res = _run("WPS r=1: 8 + R- and floor(p/q) cases", ((q, p) for q, p in coprime_pairs(pmax) if q > 1), ok)
    extra = _run("WPS (1,1,p) = -4p+12", ((p,) for p in range(2, pmax + 1)),
                 lambda p: spaces.index_wps((1, 1, p)) == -4 * p + 12)
    return CheckResult(
        res.name + "; (1,1,p) = -4p+12",
        res.passed and extra.passed,
        res.checked + extra.checked,
        res.failures + extra.failures,
        res.seconds + extra.seconds,
    )


TABLE_WPS_CASES = [
    ((3, 7, 11), 0, "<"),
    ((3, 7, 41), 0, ">"),
    ((3, 7, 25), 1, "<"),
    ((3, 7, 13), 1, ">"),
    ((3, 7, 31), 2, ">"),
]


def table_wps_rows():
    rows = []
    for triple, eps, sign in TABLE_WPS_CASES:
        c = spaces.classify_wps(triple)
        got_sign = ">" if c.h_sign is spaces.HSign.POSITIVE else "<"
        rows.append((triple, eps, sign, c.epsilon, got_sign, c.epsilon == eps and got_sign == sign))
    return rows


def check_table_wps():
    return _run("WPS case table rows", [(row,) for row in table_wps_rows()], lambda row: row[-1])


def check_exceptionality_tests(pmax=80):
    # classify_wps raises if congruence and conjugacy tests disagree
    return _run(
        "exceptionality: congruence = conjugacy",
        wps_triples(pmax),
        lambda r, q, p: spaces.classify_wps((r, q, p)).epsilon is not None,
    )


def _capped(fn: Callable, cap: int | None = None):
    def run(pmax: int):
        return fn(min(pmax, cap) if cap else pmax)

    run.__name__ = fn.__name__
    return run


SUITES: dict[str, list[Callable[[int], CheckResult]]] = {
    "numtheory": [
        check_hj_reconstruction,
        check_hj_anchors,
        check_mod_inverse_involution,
        check_inverse_identities,
        lambda pmax: check_sawtooth_odd(),
        lambda pmax: check_sawtooth_addition(),
    ],
    "dedekind": [
        check_dedekind_closed_form,
        check_dedekind_fast,
        check_dedekind_float,
        check_dedekind_denominator,
        check_reciprocity,
        lambda pmax: check_triple_reciprocity(),
        check_dedekind_symmetries,
    ],
    "correction": [
        check_n_closed_vs_dedekind,
        check_n_float,
        check_n_anchors,
        check_n_inverse_symmetry,
        check_football,
        check_r_plus_table,
        check_r_minus_table,
    ],
    "oracle": [
        lambda pmax: check_traces(),
        _capped(check_chern_ratio_consistency, 60),
        check_assembled_correction,
        check_eisenstein,
    ],
    "spaces": [
        check_cs_two_path,
        check_cs_anchors,
        check_cs_moduli,
        check_wps_two_path,
        check_wps_sum_regime,
        check_wps_two_exceptional,
        check_wps_r1,
        lambda pmax: check_table_wps(),
        check_exceptionality_tests,
    ],
}


def run_suite(name: str, pmax: int) -> list[CheckResult]:
    names = list(SUITES) if name == "all" else [name]
    return [check(pmax) for n in names for check in SUITES[n]]
