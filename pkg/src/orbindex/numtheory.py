"""Exact integer and rational primitives.

Everything here works on Python ints and :class:`fractions.Fraction`, so
results are exact regardless of size.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Union

ExactRational = Fraction
RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an input violates a documented precondition."""


class InvariantError(RuntimeError):
    """Raised when two routes that must agree do not (an implementation bug)."""


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` as a representative in ``[1, m-1]``."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got m={m}")
    if gcd(a % m, m) != 1:
        raise DomainError(f"{a} is not invertible modulo {m}: gcd(a={a}, m={m}) != 1")
    return pow(a, -1, m)


def frac(x: RationalLike) -> Fraction:
    """Fractional part ``x - floor(x)``, always in ``[0, 1)``."""
    x = Fraction(x)
    return x - floor(x)


def sawtooth(x: RationalLike) -> Fraction:
    """The sawtooth function ((x)): zero on integers, else ``{x} - 1/2``."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


@dataclass(frozen=True, order=True)
class CyclicAction:
    """A type-(q, p) action of Z/p on C^2: generator acts by (e^{2πi/p}, e^{2πiq/p}).

    ``q`` is always the canonical representative in ``[1, p-1]``; use
    :func:`canonical_action` to build one from an arbitrary integer.
    """

    q: int
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise DomainError(f"p must be >= 2, got p={self.p}")
        if not 1 <= self.q <= self.p - 1:
            raise DomainError(f"q must lie in [1, p-1], got q={self.q}, p={self.p}")
        if gcd(self.q, self.p) != 1:
            raise DomainError(f"gcd(q,p) must be 1, got q={self.q}, p={self.p}")

    @property
    def exceptional(self) -> bool:
        return self.q == self.p - 1

    def __str__(self):
        return f"({self.q},{self.p})"


def canonical_action(q: int, p: int) -> CyclicAction:
    """Reduce ``q`` modulo ``p`` into ``[1, p-1]`` and validate coprimality."""
    if p < 2:
        raise DomainError(f"p must be >= 2, got p={p}")
    r = q % p
    if r == 0:
        raise DomainError(f"q must be nonzero mod p, got q={q}, p={p}")
    if gcd(r, p) != 1:
        raise DomainError(f"gcd(q,p) must be 1, got q={q}, p={p}")
    return CyclicAction(r, p)


def as_action(q_or_action, p: int | None = None) -> CyclicAction:
    if isinstance(q_or_action, CyclicAction):
        return q_or_action
    if p is None:
        raise TypeError("p is required when q is given as an integer")
    return canonical_action(q_or_action, p)


@dataclass(frozen=True)
class HJExpansion:
    """Hirzebruch-Jung coefficients of p/q = e_1 - 1/(e_2 - ... - 1/e_k)."""

    coefficients: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def value(self) -> Fraction:
        """Fold the continued fraction back into a rational."""
        coeffs = self.coefficients
        acc = Fraction(coeffs[-1])
        for e in reversed(coeffs[:-1]):
            acc = e - 1 / acc
        return acc


def hj_expansion(action: CyclicAction) -> HJExpansion:
    """Modified (ceiling) Euclidean algorithm on ``(p, q)``.

    ``b_{i+1} = e_i b_i - b_{i-1}`` with ``e_i = ceil(b_{i-1}/b_i)``,
    stopping once the new remainder is zero.
    """
    prev, cur = action.p, action.q
    coeffs = []
    while True:
        e = -(-prev // cur)
        coeffs.append(e)
        prev, cur = cur, e * cur - prev
        if cur == 0:
            break
    return HJExpansion(tuple(coeffs))


class Conjugacy(enum.Enum):
    ORIENTATION_PRESERVING = "orientation-preserving"
    ORIENTATION_REVERSING = "orientation-reversing"
    BOTH = "both"
    NEITHER = "neither"


def conjugacy(a: CyclicAction, b: CyclicAction) -> Conjugacy:
    """Classify how two cyclic actions are conjugate inside O(4)."""
    if a.p != b.p:
        return Conjugacy.NEITHER
    p = a.p
    preserving = (b.q - a.q) % p == 0 or (b.q * a.q - 1) % p == 0
    reversing = (b.q + a.q) % p == 0 or (b.q * a.q + 1) % p == 0
    if preserving and reversing:
        return Conjugacy.BOTH
    if preserving:
        return Conjugacy.ORIENTATION_PRESERVING
    if reversing:
        return Conjugacy.ORIENTATION_REVERSING
    return Conjugacy.NEITHER


def euclid_step(alpha: int, beta: int) -> tuple[int, int]:
    """Write ``beta = e*alpha - a`` with ``0 <= a < alpha``; return ``(e, a)``."""
    e = -(-beta // alpha)
    return e, e * alpha - beta
