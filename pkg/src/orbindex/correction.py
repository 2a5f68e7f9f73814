"""The non-topological correction N(q,p) contributed by a type-(q,p) singular point.

Three routes compute the same integer:

* :func:`n_closed`   from the Hirzebruch-Jung expansion,
* :func:`n_dedekind` from a Dedekind sum plus two sawtooth values,
* :func:`n_float`    from the raw trigonometric sums (an oracle only).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .dedekind import dedekind_fast
from .numtheory import (
    CyclicAction,
    DomainError,
    InvariantError,
    as_action,
    euclid_step,
    hj_expansion,
    mod_inverse,
    sawtooth,
)


@dataclass(frozen=True)
class CorrectionTerm:
    action: CyclicAction
    value: int

    @property
    def exceptional(self) -> bool:
        return self.action.exceptional

    @property
    def constant(self) -> int:
        """Constant part of N: -4 at an exceptional point, -6 otherwise."""
        return -4 if self.exceptional else -6


def n_closed(action, p=None) -> int:
    action = as_action(action, p)
    if action.exceptional:
        return -4 * action.p + 4
    hj = hj_expansion(action)
    return 4 * sum(hj.coefficients) - 12 * hj.length - 2


def n_dedekind(action, p=None) -> int:
    action = as_action(action, p)
    q, p = action.q, action.p
    if action.exceptional:
        value = -4 - 48 * dedekind_fast(1, p) + 8 * sawtooth(Fraction(1, p))
    else:
        value = (
            -6
            + 48 * dedekind_fast(action)
            - 4 * sawtooth(Fraction(mod_inverse(q, p), p))
            - 4 * sawtooth(Fraction(q, p))
        )
    if value.denominator != 1:
        raise InvariantError(f"N{action} came out non-integral: {value}")
    return int(value)


def n_float(action, p=None) -> float:
    """Evaluate the trigonometric form of N(q,p) numerically.

    The cases q = 1 and q = p - 1 need their own constant because the
    cosine sums that vanish in the generic case do not vanish there.
    """
    action = as_action(action, p)
    q, p = action.q, action.p
    if p == 2:
        return -4.0
    j = np.arange(1, p)
    a = np.pi * j / p
    b = np.pi * ((q * j) % p) / p
    cot_a = np.cos(a) / np.sin(a)
    if q == 1:
        cot2 = cot_a**2
        return float(-5 + 14 / p * cot2.sum() - 2 / p * (cot2 * np.cos(2 * a) ** 2).sum())
    if q == p - 1:
        cot2 = cot_a**2
        return float(-5 - 14 / p * cot2.sum() + 2 / p * (cot2 * np.cos(2 * a) ** 2).sum())
    cc = cot_a * (np.cos(b) / np.sin(b))
    return float(-6 + 14 / p * cc.sum() - 2 / p * (cc * np.cos(2 * a) * np.cos(2 * b)).sum())


def correction(q: int, p: int) -> int:
    """N(q,p) for raw integers; the trivial group (p = 1) contributes 0."""
    if p == 1:
        return 0
    return n_closed(q, p)


def correction_term(action, p=None) -> CorrectionTerm:
    action = as_action(action, p)
    return CorrectionTerm(action, n_closed(action))


def _check_pair(q: int, p: int):
    if not 1 <= q < p or gcd(q, p) != 1:
        raise DomainError(f"need coprime 1 <= q < p, got q={q}, p={p}")


def r_plus(q: int, p: int) -> int:
    _check_pair(q, p)
    return correction(q, p) + correction(p % q, q)


def r_minus(q: int, p: int) -> int:
    _check_pair(q, p)
    return correction(-q, p) + correction(-p % q, q)


def r_plus_table(q: int, p: int) -> int:
    """Case table for R+ written in terms of p = eq - a."""
    _check_pair(q, p)
    if q == 1 and p == 2:
        return -4
    if 1 < q == p - 1:
        return -14
    if q == 1:
        return 4 * p - 14
    e, a = euclid_step(q, p)
    if a == 1:
        return 4 * e - 22
    return 4 * e - 24


def r_minus_table(q: int, p: int) -> int:
    """Case table for R- written in terms of p = eq - a."""
    _check_pair(q, p)
    if q == 1 and p == 2:
        return -4
    if 1 < q == p - 1:
        return -6
    if q == 1:
        return -4 * p + 4
    e, a = euclid_step(q, p)
    if a == q - 1:
        return -4 * e + 2
    return -4 * e


def football_defect(q: int, p: int) -> int:
    """N(q,p) + N(p-q,p) + 12; zero for every 1 < q < p-1."""
    if not 1 < q < p - 1 or gcd(q, p) != 1:
        raise DomainError(f"need coprime 1 < q < p-1, got q={q}, p={p}")
    return n_closed(q, p) + n_closed(p - q, p) + 12
