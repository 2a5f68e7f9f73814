from fractions import Fraction
from math import gcd

import pytest

from orbindex.correction import n_closed
from orbindex.numtheory import CyclicAction, DomainError, InvariantError
from orbindex.spaces import (
    HSign,
    OrbifoldData,
    Regime,
    StatementKind,
    WpsTriple,
    classify_wps,
    h_value,
    index_calderbank_singer,
    index_cs_via_orbifold,
    index_orbifold,
    index_wps,
    index_wps_assembled,
    moduli_calderbank_singer,
    moduli_wps,
    primes_between,
    scan_h,
    wps_singularities,
)


def test_index_orbifold_examples():
    assert index_orbifold(OrbifoldData(2, 0)).index == 15
    football = index_orbifold(OrbifoldData(2, 0, (CyclicAction(2, 5), CyclicAction(3, 5))))
    assert football.index == 3
    assert football.topological_part == 15
    wps = index_orbifold(OrbifoldData(3, -1, (CyclicAction(1, 3), CyclicAction(1, 7), CyclicAction(5, 11))))
    assert wps.topological_part == 8
    assert [n for _, n in wps.corrections] == [-2, 14, -18]
    assert wps.index == 2


def test_index_orbifold_parity_violation():
    with pytest.raises(InvariantError):
        index_orbifold(OrbifoldData(1, 0))


@pytest.mark.parametrize("q, p, expected", [(1, 2, 4), (2, 3, -1), (2, 5, -5), (1, 3, 0), (4, 5, -7)])
def test_calderbank_singer_examples(q, p, expected):
    assert index_calderbank_singer(q, p) == expected
    assert index_cs_via_orbifold(q, p) == expected


def test_calderbank_singer_rejects():
    with pytest.raises(DomainError):
        index_calderbank_singer(2, 4)


def test_cs_moduli_examples():
    m = moduli_calderbank_singer(1, 2)
    assert m.statement.kind is StatementKind.RIGID and not m.admits_nontoric
    m = moduli_calderbank_singer(4, 5)
    assert (m.statement.kind, m.statement.dim, m.dim_h1) == (StatementKind.EXACT_DIM, 8, 9)
    m = moduli_calderbank_singer(2, 5)
    assert (m.statement.kind, m.statement.dim, m.dim_h1) == (StatementKind.LOWER_BOUND, 5, 7)
    assert moduli_calderbank_singer(1, 3).statement.dim == 1
    assert moduli_calderbank_singer(1, 7).statement.dim == 16


def test_wps_singularities_examples():
    acts = wps_singularities((3, 7, 11))
    assert list(acts.values()) == [CyclicAction(1, 3), CyclicAction(1, 7), CyclicAction(5, 11)]
    assert wps_singularities((1, 1, 9)) == {"[0,0,1]": CyclicAction(8, 9)}
    for q, p in [(2, 5), (3, 7), (4, 11)]:
        acts = wps_singularities((1, q, p))
        inv = next(x for x in range(1, q) if x * p % q == 1)
        assert list(acts.values()) == [CyclicAction((-inv) % q, q), CyclicAction(p - q, p)]


@pytest.mark.parametrize("bad", [(2, 4, 7), (3, 2, 5), (0, 1, 2), (3, 3, 5)])
def test_wps_triple_validation(bad):
    with pytest.raises(DomainError):
        WpsTriple(*bad)


TABLE = [((3, 7, 11), 0, HSign.NEGATIVE), ((3, 7, 41), 0, HSign.POSITIVE), ((3, 7, 25), 1, HSign.NEGATIVE),
         ((3, 7, 13), 1, HSign.POSITIVE), ((3, 7, 31), 2, HSign.POSITIVE)]


@pytest.mark.parametrize("t, eps, sign", TABLE)
def test_classify_table_rows(t, eps, sign):
    c = classify_wps(t)
    assert c.epsilon == eps and c.h_sign is sign
    assert not c.exceptional_flags["[0,0,1]"]


def test_h_values():
    assert h_value(3, 7, 11) == Fraction(11, 21) - Fraction(2, 3) == Fraction(-1, 7)
    assert h_value(3, 7, 31) == Fraction(1, 7)


@pytest.mark.parametrize("t, expected", [((3, 7, 11), 2), ((3, 7, 41), -6), ((2, 3, 5), 2), ((3, 7, 31), -2),
                                         ((1, 1, 5), -8), ((1, 2, 3), 2), ((1, 2, 5), -2)])
def test_index_wps_examples(t, expected):
    assert index_wps(t) == expected
    assert index_wps_assembled(t) == expected


def test_regimes():
    assert classify_wps((2, 3, 5)).regime is Regime.SUM_EQUAL
    assert classify_wps((2, 3, 5)).epsilon == 2
    assert classify_wps((5, 7, 11)).regime is Regime.SUM_GREATER
    assert classify_wps((1, 2, 5)).h_sign is HSign.NOT_APPLICABLE


def test_moduli_wps_examples():
    m = moduli_wps((3, 7, 11))
    assert (m.statement.kind, m.statement.dim, m.statement.raw) == (StatementKind.LOWER_BOUND, 0, -2)
    assert moduli_wps((2, 3, 5)).statement.kind is StatementKind.ISOLATED
    m = moduli_wps((3, 7, 41))
    assert (m.statement.dim, m.index) == (6, -6)
    with pytest.raises(DomainError):
        moduli_wps((1, 2, 5))


def test_two_path_small_sweep():
    for p in range(4, 45):
        for q in range(3, p):
            for r in range(2, q):
                if gcd(r, q) == gcd(q, p) == gcd(r, p) == 1:
                    t = (r, q, p)
                    acts = wps_singularities(t).values()
                    assert index_wps(t) == 8 + sum(n_closed(a) for a in acts)


def test_scan_examples():
    rows = {row.p: row for row in scan_h(3, 7, [10, 11, 13, 14, 31])}
    assert sorted(rows) == [10, 11, 13, 31]
    assert rows[11].h == Fraction(-1, 7) and rows[11].sign == "-"
    assert rows[31].h == Fraction(1, 7) and rows[31].sign == "+"
    assert rows[13].sign == "+"


def test_primes_between():
    ps = primes_between(11, 541)
    assert ps[0] == 11 and ps[-1] == 541 and len(ps) == 96
