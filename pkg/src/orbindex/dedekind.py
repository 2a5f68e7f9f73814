"""Dedekind sums, their reciprocity laws, and lens-space eta invariants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .numtheory import CyclicAction, DomainError, as_action, euclid_step, mod_inverse


@dataclass(frozen=True)
class DedekindValue:
    value: Fraction
    q: int
    p: int

    @property
    def a48(self) -> Fraction:
        """``48 * s(q, p)``, the form that appears in the correction term."""
        return 48 * self.value


def dedekind_exact(action, p=None) -> Fraction:
    """s(q, p) as the sawtooth sum over j = 1..p-1 of ((j/p))((qj/p)).

    For 0 < j < p both sawtooth arguments are non-integral, so
    ``((j/p)) = (2j - p) / 2p``; the sum is accumulated over the common
    denominator ``4p^2`` and reduced once.
    """
    action = as_action(action, p)
    q, p = action.q, action.p
    total = sum((2 * j - p) * (2 * (q * j % p) - p) for j in range(1, p))
    return Fraction(total, 4 * p * p)


def dedekind_fast(action, p=None) -> Fraction:
    """s(q, p) via the two-term reciprocity law, O(log p) steps."""
    action = as_action(action, p)
    q, p = action.q, action.p
    total = Fraction(0)
    sign = 1
    while q != 1:
        total += sign * (Fraction(-1, 4) + Fraction(p * p + q * q + 1, 12 * p * q))
        sign = -sign
        q, p = p % q, q
    # s(1, p) = (p-1)(p-2)/12p
    return total + sign * Fraction((p - 1) * (p - 2), 12 * p)


def dedekind_float(action, p=None) -> float:
    """(1/4p) * sum of cot(πj/p) cot(πqj/p), in double precision."""
    action = as_action(action, p)
    q, p = action.q, action.p
    j = np.arange(1, p)
    a = np.pi * j / p
    b = np.pi * ((q * j) % p) / p
    terms = (np.cos(a) / np.sin(a)) * (np.cos(b) / np.sin(b))
    return float(terms.sum() / (4 * p))


def dedekind_value(action, p=None) -> DedekindValue:
    action = as_action(action, p)
    return DedekindValue(dedekind_fast(action), action.q, action.p)


def eta_invariant(action, p=None) -> Fraction:
    """Eta invariant of the lens space S^3/Γ for a type-(q,p) action: 4 s(q,p)."""
    return 4 * dedekind_fast(action, p)


def reciprocity_defect(q: int, p: int) -> Fraction:
    """A(q,p) + A(p,q) minus its closed form, where A = 48 s and p = eq - a.

    Identically zero; any nonzero return flags an arithmetic bug.
    """
    if not 1 < q < p or gcd(q, p) != 1:
        raise DomainError(f"need coprime 1 < q < p, got q={q}, p={p}")
    e, a = euclid_step(q, p)
    lhs = 48 * dedekind_fast(q, p) + 48 * dedekind_fast(p % q, q)
    rhs = -12 + 4 * e - Fraction(4 * a, q) + Fraction(4 * q, p) + Fraction(4, p * q)
    return lhs - rhs


def triple_reciprocity_defect(r: int, q: int, p: int) -> Fraction:
    """Rademacher's three-term law for pairwise coprime r, q, p >= 2, minus its value."""
    for name, v in (("r", r), ("q", q), ("p", p)):
        if v < 2:
            raise DomainError(f"{name} must be >= 2, got {v}")
    if gcd(r, q) != 1 or gcd(q, p) != 1 or gcd(r, p) != 1:
        raise DomainError(f"r, q, p must be pairwise coprime, got ({r},{q},{p})")
    lhs = (
        dedekind_fast(mod_inverse(q, r) * p, r)
        + dedekind_fast(mod_inverse(p, q) * r, q)
        + dedekind_fast(mod_inverse(r, p) * q, p)
    )
    rhs = Fraction(-1, 4) + Fraction(r * r + q * q + p * p, 12 * p * q * r)
    return lhs - rhs


__all__ = [
    "CyclicAction",
    "DedekindValue",
    "dedekind_exact",
    "dedekind_fast",
    "dedekind_float",
    "dedekind_value",
    "eta_invariant",
    "reciprocity_defect",
    "triple_reciprocity_defect",
]
