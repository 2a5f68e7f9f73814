"""Floating-point Kawasaki correction machinery, used only to cross-check the exact routes.

The fixed-point contribution of each non-identity group element is built from
traces of its action on the bundles in the symbol of the deformation complex.
:func:`traces_matrix` recomputes those traces from explicit matrices so the
closed-form trace formulas can be checked rather than trusted.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import cos, pi, sin

import numpy as np

from .numtheory import DomainError, as_action


@dataclass(frozen=True)
class RotationAngles:
    theta1: float
    theta2: float

    @classmethod
    def for_element(cls, action, j: int) -> "RotationAngles":
        return cls(2 * pi * j / action.p, 2 * pi * action.q * j / action.p)


def traces(angles: RotationAngles) -> tuple[float, float, float]:
    """Traces on N_C, S^2_0(N_C) and S^2_0(Λ^2_+) from the closed-form formulas."""
    t1, t2 = angles.theta1, angles.theta2
    plus, minus = t1 + t2, -t1 + t2
    tr_n = 2 * cos(t1) + 2 * cos(t2)
    tr_s20n = 1 + 2 * cos(plus) + 2 * cos(minus) + 4 * cos(plus) * cos(minus)
    tr_s20lp = 2 * cos(plus) + 4 * cos(plus) ** 2 - 1
    return tr_n, tr_s20n, tr_s20lp


def rotation_matrix(angles: RotationAngles) -> np.ndarray:
    g = np.zeros((4, 4))
    for k, t in enumerate((angles.theta1, angles.theta2)):
        c, s = cos(t), sin(t)
        g[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = [[c, -s], [s, c]]
    return g


def _orthonormal(basis: list[np.ndarray]) -> np.ndarray:
    flat = np.array([b.ravel() for b in basis]).T
    q, _ = np.linalg.qr(flat)
    return q.T


def _induced_trace(basis: np.ndarray, shape, act) -> float:
    """Trace of a linear map restricted to the span of an orthonormal basis."""
    return float(sum(b @ act(b.reshape(shape)).ravel() for b in basis))


def _hodge_basis() -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal bases of self-dual and anti-self-dual 2-forms (as 4x4 skew matrices)."""
    pairs = list(itertools.combinations(range(4), 2))
    elem = []
    for i, j in pairs:
        m = np.zeros((4, 4))
        m[i, j], m[j, i] = 1.0, -1.0
        elem.append(m)
    # Hodge star on e_i ^ e_j for the orientation e_1 ^ e_2 ^ e_3 ^ e_4
    star = np.zeros((6, 6))
    for a, (i, j) in enumerate(pairs):
        k, l = (x for x in range(4) if x not in (i, j))
        perm = [i, j, k, l]
        sign = round(np.linalg.det(np.eye(4)[perm]))
        star[pairs.index((k, l)), a] = sign
    w, v = np.linalg.eigh(star)
    plus = [sum(v[a, n] * elem[a] for a in range(6)) for n in range(6) if w[n] > 0]
    minus = [sum(v[a, n] * elem[a] for a in range(6)) for n in range(6) if w[n] < 0]
    return _orthonormal(plus), _orthonormal(minus)


def _traceless_symmetric_basis(n: int) -> np.ndarray:
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = m[j, i] = 1.0
            basis.append(m)
    for i in range(n - 1):
        m = np.zeros((n, n))
        m[i, i], m[i + 1, i + 1] = 1.0, -1.0
        basis.append(m)
    return _orthonormal(basis)


def traces_matrix(angles: RotationAngles) -> tuple[float, float, float]:
    """The same three traces, computed from explicit representation matrices.

    N_C is the defining 4-dim representation; S^2_0(N_C) is realised as
    traceless symmetric 4x4 matrices under X -> g X g^T (9-dim); S^2_0(Λ^2_+)
    as traceless symmetric 3x3 matrices under the induced action on self-dual
    2-forms (5-dim).
    """
    g = rotation_matrix(angles)
    tr_n = float(np.trace(g))

    s20 = _traceless_symmetric_basis(4)
    tr_s20n = _induced_trace(s20, (4, 4), lambda x: g @ x @ g.T)

    plus, _ = _hodge_basis()
    # 3x3 matrix of g acting on Λ^2_+ in the orthonormal basis `plus`
    a = np.array([[pb @ (g @ pc.reshape(4, 4) @ g.T).ravel() for pc in plus] for pb in plus])
    s20_3 = _traceless_symmetric_basis(3)
    tr_s20lp = _induced_trace(s20_3, (3, 3), lambda x: a @ x @ a.T)
    return tr_n, tr_s20n, tr_s20lp


def _cot_half(theta: float) -> float:
    s = sin(theta / 2)
    if abs(s) < 1e-12:
        raise DomainError(f"angle {theta} lies in 2πZ; the identity element has no correction")
    return cos(theta / 2) / s


def chern_ratio(angles: RotationAngles) -> float:
    """ch_γ(i*σ) / ch_γ(λ_{-1} N_C) for a rotation by (θ1, θ2)."""
    t1, t2 = angles.theta1, angles.theta2
    cc = _cot_half(t1) * _cot_half(t2)
    return -0.5 + 2 * (1 + cos(t1)) * (1 + cos(t2)) - 0.5 * cc - 2 * cc * cos(t1) * cos(t2)


def chern_ratio_from_traces(angles: RotationAngles) -> float:
    t1, t2 = angles.theta1, angles.theta2
    tr_n, tr_s20n, tr_s20lp = traces(angles)
    return (tr_n - tr_s20n + tr_s20lp) / (4 * (cos(t1) - 1) * (cos(t2) - 1))


def correction_sum_float(action, p=None) -> float:
    """Sum of :func:`chern_ratio` over the p - 1 non-identity group elements."""
    action = as_action(action, p)
    return sum(chern_ratio(RotationAngles.for_element(action, j)) for j in range(1, action.p))


def eta_float(action, p=None) -> float:
    action = as_action(action, p)
    return sum(
        _cot_half(a.theta1) * _cot_half(a.theta2)
        for a in (RotationAngles.for_element(action, j) for j in range(1, action.p))
    ) / action.p


def assembled_correction_float(action, p=None) -> float:
    """Full non-topological index term: Euler and signature defects plus the fixed-point sum."""
    action = as_action(action, p)
    n = action.p
    return -7.5 * (n - 1) / n + 14.5 * eta_float(action) + correction_sum_float(action) / n


def eisenstein_sum_float(q: int, p: int) -> float:
    """-(1/2p) * sum of sin(2πqj/p) cot(πj/p); equals the sawtooth ((q/p))."""
    if p < 2:
        raise DomainError(f"p must be >= 2, got p={p}")
    j = np.arange(1, p)
    a = np.pi * j / p
    return float(-(np.sin(2 * np.pi * q * j / p) * np.cos(a) / np.sin(a)).sum() / (2 * p))
