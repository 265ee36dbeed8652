"""Resolvent (t*e1 - zeta)^(-1) via recurrences and the Q-table closed form.

The resolvent of the hypercomplex variable zeta = x*e1 + y*e2 + z*e3 is a
rational function of t with poles only at the spectrum points
xi_u = x + y*a_u + z*b_u.  Two equivalent assemblies are provided: the
coefficient recurrence (A-values) and the partial-fraction closed form built
from the Q-table; both are cross-checkable against plain linear-system
inversion in the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .algebra import AlgebraSpec, Element

if TYPE_CHECKING:  # pragma: no cover
    from .monogenic import TriadSpec

B_NONZERO_TOL = 1e-14


class OnSpectrum(Exception):
    """t coincides (to relative tolerance) with a spectrum point xi_u."""


def spectrum(triad: "TriadSpec", m: int, x: float, y: float, z: float) -> np.ndarray:
    """xi_u = x + y*a_u + z*b_u for u = 1..m."""
    a = np.asarray(triad.a, dtype=np.complex128)[:m]
    b = np.asarray(triad.b, dtype=np.complex128)[:m]
    return x + y * a + z * b


def t_coeffs(spec: AlgebraSpec, triad: "TriadSpec", y: float, z: float) -> np.ndarray:
    """T_s = y*a_s + z*b_s for the radical indices s = m+1..n."""
    a = np.asarray(triad.a, dtype=np.complex128)[spec.m :]
    b = np.asarray(triad.b, dtype=np.complex128)[spec.m :]
    return y * a + z * b


def b_coeffs(spec: AlgebraSpec, T: np.ndarray) -> np.ndarray:
    """B[r, p] = sum_s T_s * Y[r, p -> s]; indices offset by m+1.

    Stored as a dense (n-m) x (n-m) array; entries outside the defined
    range (r < p required) stay zero.
    """
    d = spec.n - spec.m
    B = np.zeros((d, d), dtype=np.complex128)
    for p in range(spec.m + 2, spec.n + 1):
        for r in range(spec.m + 1, p):
            acc = 0.0 + 0.0j
            for s in range(spec.m + 1, p):
                v = spec.upsilon.get((min(r, s), max(r, s), p))
                if v is not None:
                    acc += T[s - spec.m - 1] * v
            B[r - spec.m - 1, p - spec.m - 1] = acc
    return B


def q_table(spec: AlgebraSpec, T: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Q[k, s - m - 1] for k = 2..s-m+1; Q_{2,s} = T_s, higher k by recurrence."""
    d = spec.n - spec.m
    Q = np.zeros((d + 3, d), dtype=np.complex128)
    Q[2, :d] = T
    for s in range(spec.m + 2, spec.n + 1):
        si = s - spec.m - 1
        for k in range(3, s - spec.m + 2):
            acc = 0.0 + 0.0j
            for r in range(spec.m + 1, s):
                ri = r - spec.m - 1
                acc += Q[k - 1, ri] * B[ri, si]
            Q[k, si] = acc
    return Q


def lemma2_audit(spec: AlgebraSpec, T: np.ndarray, B: np.ndarray) -> list[tuple[int, int]]:
    """Pairs (r, p) with B_{r,p} != 0 but u_r != u_p; empty for valid algebras."""
    bad = []
    for p in range(spec.m + 2, spec.n + 1):
        for r in range(spec.m + 1, p):
            if abs(B[r - spec.m - 1, p - spec.m - 1]) > B_NONZERO_TOL:
                if spec.u_map[r] != spec.u_map[p]:
                    bad.append((r, p))
    return bad


def _check_off_spectrum(t: complex, xi: np.ndarray) -> None:
    tol = 1e-12 * max(1.0, abs(t))
    if np.min(np.abs(t - xi)) <= tol:
        u = int(np.argmin(np.abs(t - xi))) + 1
        raise OnSpectrum(f"t = {t} coincides with xi_{u} = {xi[u - 1]}")


def resolvent_recurrence(
    spec: AlgebraSpec,
    triad: "TriadSpec",
    point: tuple[float, float, float],
    t: complex,
) -> Element:
    """Coefficients A_r of (t*e1 - zeta)^(-1) by the direct recurrence."""
    x, y, z = point
    xi = spectrum(triad, spec.m, x, y, z)
    _check_off_spectrum(t, xi)
    T = t_coeffs(spec, triad, y, z)
    B = b_coeffs(spec, T)
    A = np.zeros(spec.n, dtype=np.complex128)
    A[: spec.m] = 1.0 / (t - xi)
    for p in range(spec.m + 1, spec.n + 1):
        xi_up = xi[spec.u_map[p] - 1]
        acc = T[p - spec.m - 1] / (t - xi_up) ** 2
        if p > spec.m + 1:
            cross = 0.0 + 0.0j
            for r in range(spec.m + 1, p):
                cross += A[r - 1] * B[r - spec.m - 1, p - spec.m - 1]
            acc += cross / (t - xi_up)
        A[p - 1] = acc
    return A


def resolvent_closed(
    spec: AlgebraSpec,
    triad: "TriadSpec",
    point: tuple[float, float, float],
    t: complex,
) -> Element:
    """Partial-fraction form: sum over idempotents plus Q-table terms."""
    x, y, z = point
    xi = spectrum(triad, spec.m, x, y, z)
    _check_off_spectrum(t, xi)
    T = t_coeffs(spec, triad, y, z)
    Q = q_table(spec, T, b_coeffs(spec, T))
    return assemble_closed(spec, xi, Q, t)


def assemble_closed(
    spec: AlgebraSpec, xi: np.ndarray, Q: np.ndarray, t
) -> np.ndarray:
    """Evaluate the closed form from precomputed (xi, Q); t may be an array.

    Returns shape (n,) for scalar t, or (n, N) for an array of N nodes.
    """
    t = np.asarray(t, dtype=np.complex128)
    out = np.zeros((spec.n,) + t.shape, dtype=np.complex128)
    for u in range(spec.m):
        out[u] = 1.0 / (t - xi[u])
    for s in range(spec.m + 1, spec.n + 1):
        si = s - spec.m - 1
        denom_base = t - xi[spec.u_map[s] - 1]
        acc = np.zeros_like(t)
        for k in range(2, s - spec.m + 2):
            acc = acc + Q[k, si] / denom_base**k
        out[s - 1] = acc
    return out


@dataclass(frozen=True)
class LineL:
    """The real line in R^3 on which f_u(zeta) = 0.

    Constraints: x + y*Re(a_u) + z*Re(b_u) = 0 and y*Im(a_u) + z*Im(b_u) = 0.
    """

    u: int
    a_u: complex
    b_u: complex

    @property
    def normals(self) -> tuple[np.ndarray, np.ndarray]:
        n1 = np.array([1.0, self.a_u.real, self.b_u.real])
        n2 = np.array([0.0, self.a_u.imag, self.b_u.imag])
        return n1, n2

    @property
    def direction(self) -> np.ndarray:
        n1, n2 = self.normals
        return np.cross(n1, n2)

    def contains(self, point: tuple[float, float, float], tol: float = 1e-12) -> bool:
        p = np.asarray(point, dtype=float)
        n1, n2 = self.normals
        scale = max(1.0, float(np.max(np.abs(p))))
        return abs(n1 @ p) <= tol * scale and abs(n2 @ p) <= tol * scale


def noninvertible_lines(triad: "TriadSpec", m: int) -> list[LineL]:
    return [
        LineL(u, complex(triad.a[u - 1]), complex(triad.b[u - 1]))
        for u in range(1, m + 1)
    ]
