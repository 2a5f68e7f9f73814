"""Index and moduli counts for compact orbifolds with cyclic quotient singularities.

Covers three families: arbitrary compact orbifolds given by topological data,
compactified Calderbank-Singer ALE spaces, and weighted projective planes
with the reversed-orientation Bochner-Kähler metric.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .correction import n_closed, r_minus
from .numtheory import (
    Conjugacy,
    CyclicAction,
    DomainError,
    InvariantError,
    canonical_action,
    conjugacy,
    euclid_step,
    frac,
    hj_expansion,
    mod_inverse,
)


@dataclass(frozen=True)
class OrbifoldData:
    chi_top: int
    tau_top: int
    singularities: tuple[CyclicAction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "singularities", tuple(self.singularities))


@dataclass(frozen=True)
class SingularIndexReport:
    topological_part: Fraction
    corrections: tuple[tuple[CyclicAction, int], ...]
    index: int


def index_orbifold(data: OrbifoldData) -> SingularIndexReport:
    top = Fraction(15 * data.chi_top + 29 * data.tau_top, 2)
    corrections = tuple((a, n_closed(a)) for a in data.singularities)
    total = top + sum(n for _, n in corrections)
    if total.denominator != 1:
        raise InvariantError(
            f"15*chi + 29*tau + 2*sum(N) is odd for chi={data.chi_top}, "
            f"tau={data.tau_top}: inconsistent topological data"
        )
    return SingularIndexReport(top, corrections, int(total))


def _check_cs(q: int, p: int):
    if p < 2 or not 1 <= q < p or gcd(q, p) != 1:
        raise DomainError(f"need coprime 1 <= q < p with p >= 2, got q={q}, p={p}")


def index_calderbank_singer(q: int, p: int) -> int:
    """Index on the compactified Calderbank-Singer space with a (q,p)-action at infinity."""
    _check_cs(q, p)
    if q == 1:
        return -4 * p + 12
    hj = hj_expansion(CyclicAction(q, p))
    return 5 * hj.length + 5 - 4 * sum(hj.coefficients)


def index_cs_via_orbifold(q: int, p: int) -> int:
    """Same index assembled from χ = k+2, τ = -k and one (p-q, p) orbifold point."""
    _check_cs(q, p)
    k = hj_expansion(CyclicAction(q, p)).length
    data = OrbifoldData(k + 2, -k, (canonical_action(p - q, p),))
    return index_orbifold(data).index


class StatementKind(enum.Enum):
    RIGID = "rigid"
    EXACT_DIM = "exact"
    LOWER_BOUND = "lower_bound"
    ISOLATED = "isolated"


@dataclass(frozen=True)
class ModuliStatement:
    kind: StatementKind
    dim: Optional[int] = None
    raw: Optional[int] = None

    def __str__(self):
        if self.kind is StatementKind.RIGID:
            return "rigid"
        if self.kind is StatementKind.ISOLATED:
            return "isolated"
        if self.kind is StatementKind.EXACT_DIM:
            return f"dimension {self.dim}"
        note = "" if self.raw == self.dim else f" (raw bound {self.raw})"
        return f"dimension >= {self.dim}{note}"


@dataclass(frozen=True)
class CSModuli:
    index: int
    dim_h0: int
    dim_h1: int
    statement: ModuliStatement
    admits_nontoric: bool


def moduli_calderbank_singer(q: int, p: int) -> CSModuli:
    _check_cs(q, p)
    index = index_calderbank_singer(q, p)
    # identity component of the isometry group: U(2) for q = 1, a 2-torus otherwise
    dim_h0 = 4 if q == 1 else 2
    # H^2 vanishes for these metrics
    dim_h1 = dim_h0 - index
    if (q, p) == (1, 2):
        stmt = ModuliStatement(StatementKind.RIGID)
    elif (q, p) == (1, 3):
        stmt = ModuliStatement(StatementKind.EXACT_DIM, 1)
    elif q == 1:
        stmt = ModuliStatement(StatementKind.EXACT_DIM, 4 * p - 12)
    elif q == p - 1:
        stmt = ModuliStatement(StatementKind.EXACT_DIM, 3 * p - 7)
    else:
        stmt = ModuliStatement(StatementKind.LOWER_BOUND, dim_h1 - 2, dim_h1 - 2)
    return CSModuli(index, dim_h0, dim_h1, stmt, p > 2)


# Weighted projective planes

FIXED_POINTS = ("[1,0,0]", "[0,1,0]", "[0,0,1]")


class HSign(enum.Enum):
    NEGATIVE = "-"
    POSITIVE = "+"
    NOT_APPLICABLE = "n/a"


class Regime(enum.Enum):
    SUM_GREATER = "r+q>p"
    SUM_EQUAL = "r+q=p"
    SUM_LESS = "r+q<p"


@dataclass(frozen=True, order=True)
class WpsTriple:
    r: int
    q: int
    p: int

    def __post_init__(self):
        r, q, p = self.r, self.q, self.p
        if not 1 <= r <= q <= p:
            raise DomainError(f"need 1 <= r <= q <= p, got ({r},{q},{p})")
        if gcd(r, q) != 1 or gcd(q, p) != 1 or gcd(r, p) != 1:
            raise DomainError(f"weights must be pairwise coprime, got ({r},{q},{p})")

    def __iter__(self):
        return iter((self.r, self.q, self.p))

    def __str__(self):
        return f"({self.r},{self.q},{self.p})"


def _triple(t) -> WpsTriple:
    return t if isinstance(t, WpsTriple) else WpsTriple(*t)


@dataclass(frozen=True)
class WpsClassification:
    triple: WpsTriple
    actions: dict[str, CyclicAction]
    exceptional_flags: dict[str, bool]
    epsilon: Optional[int]
    h_sign: HSign
    regime: Regime
    h_value: Optional[Fraction] = field(default=None)


def wps_singularities(t) -> dict[str, CyclicAction]:
    """Orbifold actions at the three coordinate points, keyed by fixed point.

    Points with weight 1 are smooth and omitted.
    """
    r, q, p = _triple(t)
    raw = {
        "[1,0,0]": (lambda: -mod_inverse(q, r) * p, r),
        "[0,1,0]": (lambda: -mod_inverse(p, q) * r, q),
        "[0,0,1]": (lambda: -mod_inverse(r, p) * q, p),
    }
    return {pt: canonical_action(num(), w) for pt, (num, w) in raw.items() if w > 1}


def h_value(r: int, q: int, p: int) -> Fraction:
    """H(r,q,p) = {p/qr} - {q^{-1;r} p / r}."""
    return frac(Fraction(p, q * r)) - frac(Fraction(mod_inverse(q, r) * p, r))


def _regime(r, q, p) -> Regime:
    if r + q > p:
        return Regime.SUM_GREATER
    if r + q == p:
        return Regime.SUM_EQUAL
    return Regime.SUM_LESS


def classify_wps(t) -> WpsClassification:
    t = _triple(t)
    r, q, p = t
    actions = wps_singularities(t)
    flags = {
        pt: conjugacy(a, CyclicAction(a.p - 1, a.p))
        in (Conjugacy.ORIENTATION_PRESERVING, Conjugacy.BOTH)
        for pt, a in actions.items()
    }
    regime = _regime(r, q, p)
    if not 1 < r < q < p:
        return WpsClassification(t, actions, flags, None, HSign.NOT_APPLICABLE, regime)

    by_congruence = {
        "[1,0,0]": (p - q) % r == 0,
        "[0,1,0]": (p - r) % q == 0,
        "[0,0,1]": False,
    }
    if by_congruence != flags:
        raise InvariantError(f"exceptionality tests disagree for {t}: {by_congruence} vs {flags}")
    epsilon = flags["[1,0,0]"] + flags["[0,1,0]"]
    h = h_value(r, q, p)
    if h == 0:
        raise InvariantError(f"H vanished for {t}")
    sign = HSign.POSITIVE if h > 0 else HSign.NEGATIVE
    if epsilon == 2 and sign is not HSign.POSITIVE:
        raise InvariantError(f"two exceptional points but H < 0 for {t}")
    return WpsClassification(t, actions, flags, epsilon, sign, regime, h)


def index_wps_assembled(t) -> int:
    """8 + sum of the corrections: χ = 3 and τ = -1 for the reversed orientation."""
    report = index_orbifold(OrbifoldData(3, -1, tuple(wps_singularities(t).values())))
    return report.index


def index_wps(t) -> int:
    """Index from the case formulas, cross-checked against :func:`index_wps_assembled`."""
    t = _triple(t)
    r, q, p = t
    if r == 1 and q == 1:
        value = -4 * p + 12
    elif r == 1:
        _, a = euclid_step(q, p)
        if q == p - 1:
            value = 2
        elif a == q - 1:
            value = -4 * (p // q) + 6
        else:
            value = -4 * (p // q) + 4
    else:
        c = classify_wps(t)
        if c.regime is not Regime.SUM_LESS:
            value = 2
        else:
            base = 2 if c.h_sign is HSign.NEGATIVE else -2
            value = base + 2 * c.epsilon - 4 * (p // (q * r))
    assembled = index_wps_assembled(t)
    if value != assembled:
        raise InvariantError(f"index of CP^2{t}: case formula {value} != assembly {assembled}")
    return value


def index_wps_r1_reciprocity(q: int, p: int) -> int:
    """Index of CP^2(1,q,p) as 8 + R^-(q,p)."""
    return 8 + r_minus(q, p)


@dataclass(frozen=True)
class WpsModuli:
    index: int
    statement: ModuliStatement


def moduli_wps(t) -> WpsModuli:
    t = _triple(t)
    r, q, p = t
    if not 1 < r < q < p:
        raise DomainError(f"moduli bounds need 1 < r < q < p, got {t}")
    index = index_wps(t)
    if p <= q + r:
        return WpsModuli(index, ModuliStatement(StatementKind.ISOLATED))
    c = classify_wps(t)
    shift = -2 if c.h_sign is HSign.NEGATIVE else 2
    raw = 4 * (p // (q * r)) + shift - 2 * c.epsilon
    return WpsModuli(index, ModuliStatement(StatementKind.LOWER_BOUND, max(raw, 0), raw))


@dataclass(frozen=True)
class ScanRow:
    p: int
    h: Fraction

    @property
    def sign(self) -> str:
        return "+" if self.h > 0 else "-"


def scan_h(r: int, q: int, ps: Iterable[int]) -> list[ScanRow]:
    """Exact H(r,q,p) for each p coprime to qr; other p are skipped."""
    if r < 2 or gcd(r, q) != 1:
        raise DomainError(f"need r >= 2 and gcd(r,q) = 1, got r={r}, q={q}")
    return [ScanRow(p, h_value(r, q, p)) for p in ps if gcd(p, q * r) == 1]


def primes_between(lo: int, hi: int) -> list[int]:
    from sympy import primerange

    return list(primerange(lo, hi + 1))
