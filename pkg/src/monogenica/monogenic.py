"""Monogenic functions of zeta = x*e1 + y*e2 + z*e3 with algebra values.

A monogenic function is determined by one holomorphic function F_u per
idempotent and one G_s per radical basis index.  Three evaluation routes
are provided: the explicit partial-fraction formula, the Cauchy-type
contour integral, and fast paths for the special algebra classes; all
agree on valid data, which the test suite uses as a standing cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from . import resolvent as rsv
from .algebra import (
    AlgebraSpec,
    Element,
    SpecialCase,
    ValidationReport,
    algebra_from_dict,
    load_algebra,
)
from .holo import contour_integrate, default_contour, holo_from_dict

Point = tuple[float, float, float]


class NotSpecial(Exception):
    """Algebra has no special-case fast path."""


@dataclass(frozen=True)
class TriadSpec:
    """Coefficient vectors of e2 and e3 over the basis; e1 = 1 is implicit."""

    a: tuple[complex, ...]
    b: tuple[complex, ...]

    @classmethod
    def create(cls, a: Sequence[complex], b: Sequence[complex]) -> "TriadSpec":
        return cls(tuple(complex(v) for v in a), tuple(complex(v) for v in b))

    @cached_property
    def a_vec(self) -> np.ndarray:
        return np.asarray(self.a, dtype=np.complex128)

    @cached_property
    def b_vec(self) -> np.ndarray:
        return np.asarray(self.b, dtype=np.complex128)


def validate_triad(spec: AlgebraSpec, triad: TriadSpec) -> ValidationReport:
    """Real linear independence of {e1, e2, e3} plus the surjectivity condition."""
    report = ValidationReport()
    if len(triad.a) != spec.n or len(triad.b) != spec.n:
        report.add("dimension", (len(triad.a), len(triad.b)), f"expected length {spec.n}")
        return report
    e1 = spec.unit()
    cols = np.stack([e1, triad.a_vec, triad.b_vec], axis=1)
    real_mat = np.vstack([cols.real, cols.imag])  # 2n x 3
    rank = np.linalg.matrix_rank(real_mat, tol=1e-10)
    if rank < 3:
        report.add("rank", (rank,), "e1, e2, e3 are linearly dependent over R")
    for u in range(1, spec.m + 1):
        if abs(triad.a[u - 1].imag) <= 1e-12 and abs(triad.b[u - 1].imag) <= 1e-12:
            report.add(
                "surjectivity",
                (u,),
                "both a_u and b_u are real, so f_u does not map onto C",
            )
    return report


def embed(spec: AlgebraSpec, triad: TriadSpec, p: Point) -> Element:
    """Coefficients of zeta = x*e1 + y*e2 + z*e3 over the basis."""
    x, y, z = p
    return x * spec.unit() + y * triad.a_vec + z * triad.b_vec


def xi(triad: TriadSpec, p: Point, u: int) -> complex:
    """The complex shadow f_u(zeta) = x + y*a_u + z*b_u."""
    x, y, z = p
    return complex(x + y * triad.a[u - 1] + z * triad.b[u - 1])


def xi_all(spec: AlgebraSpec, triad: TriadSpec, p: Point) -> np.ndarray:
    x, y, z = p
    return rsv.spectrum(triad, spec.m, x, y, z)


@dataclass(frozen=True)
class MonogenicSpec:
    """Algebra + triad + the holomorphic data determining one monogenic function."""

    algebra: AlgebraSpec
    triad: TriadSpec
    F: tuple  # m holomorphic functions, one per idempotent
    G: tuple  # n - m holomorphic functions, indexed s = m+1..n

    @classmethod
    def create(cls, algebra: AlgebraSpec, triad: TriadSpec, F: Sequence, G: Sequence = ()) -> "MonogenicSpec":
        F = tuple(F)
        G = tuple(G)
        if len(F) != algebra.m:
            raise ValueError(f"need {algebra.m} F functions, got {len(F)}")
        if len(G) != algebra.n - algebra.m:
            raise ValueError(f"need {algebra.n - algebra.m} G functions, got {len(G)}")
        return cls(algebra, triad, F, G)

    def validate(self) -> ValidationReport:
        return validate_triad(self.algebra, self.triad)


def extract_components(v: Element) -> list[complex]:
    """Coordinates U_k of v over the basis; Re/Im are the PDE-facing fields."""
    return [complex(c) for c in np.asarray(v)]


# -- explicit evaluation -------------------------------------------------------


def eval_explicit(ms: MonogenicSpec, p: Point) -> Element:
    """Partial-fraction representation: exact holomorphic derivatives, no quadrature."""
    spec, triad = ms.algebra, ms.triad
    x, y, z = p
    xi_v = xi_all(spec, triad, p)
    T = rsv.t_coeffs(spec, triad, y, z)
    Q = rsv.q_table(spec, T, rsv.b_coeffs(spec, T))

    out = np.zeros(spec.n, dtype=np.complex128)
    for u in range(1, spec.m + 1):
        out[u - 1] += ms.F[u - 1].eval(0, xi_v[u - 1])
    for s in range(spec.m + 1, spec.n + 1):
        si = s - spec.m - 1
        xi_us = xi_v[spec.u_map[s] - 1]
        acc = 0.0 + 0.0j
        for k in range(2, s - spec.m + 2):
            acc += Q[k, si] / math.factorial(k - 1) * ms.F[spec.u_map[s] - 1].eval(k - 1, xi_us)
        out[s - 1] += acc
    for q in range(spec.m + 1, spec.n + 1):
        xi_uq = xi_v[spec.u_map[q] - 1]
        g = ms.G[q - spec.m - 1]
        out[q - 1] += g.eval(0, xi_uq)
        for s in range(spec.m + 1, spec.n + 1):
            si = s - spec.m - 1
            prod = spec.mult_tensor[q - 1, s - 1, :]  # I_q * I_s over the basis
            if not np.any(prod):
                continue
            for k in range(2, s - spec.m + 2):
                coef = Q[k, si] / math.factorial(k - 1) * g.eval(k - 1, xi_uq)
                out += coef * prod
    return out


# -- integral evaluation -------------------------------------------------------


def _clusters(xi_v: np.ndarray) -> list[list[int]]:
    """Group 0-based idempotent indices whose xi values coincide exactly.

    Distinct clusters separated by <= 1e-10 are rejected upstream by
    default_contour (CoincidentSpectrum).
    """
    groups: dict[complex, list[int]] = {}
    for u, val in enumerate(xi_v):
        groups.setdefault(complex(val), []).append(u)
    return list(groups.values())


def _integral_assembly(ms: MonogenicSpec, p: Point, power: int, nodes: int) -> Element:
    """Sum of cluster contour integrals of W(t) * R(t)^power.

    W collects F_u on the cluster's idempotents and G_s on the radical
    indices attached to them; power = 1 gives the function itself,
    power = r + 1 (with an r! factor applied by the caller) the r-th
    Gateaux derivative.
    """
    spec, triad = ms.algebra, ms.triad
    x, y, z = p
    xi_v = xi_all(spec, triad, p)
    T = rsv.t_coeffs(spec, triad, y, z)
    Q = rsv.q_table(spec, T, rsv.b_coeffs(spec, T))
    M = spec.mult_tensor

    total = np.zeros(spec.n, dtype=np.complex128)
    clusters = _clusters(xi_v)
    centers = [xi_v[c[0]] for c in clusters]
    for ci, cluster in enumerate(clusters):
        others = [centers[j] for j in range(len(clusters)) if j != ci]
        contour = default_contour(centers[ci], others, nodes)

        def integrand(t: np.ndarray) -> np.ndarray:
            R = rsv.assemble_closed(spec, xi_v, Q, t)  # (n, N)
            P = R
            for _ in range(power - 1):
                P = np.einsum("it,jt,ijk->kt", P, R, M)
            W = np.zeros((spec.n, len(t)), dtype=np.complex128)
            for u in cluster:
                W[u] = ms.F[u].eval(0, t)
            for s in range(spec.m + 1, spec.n + 1):
                if spec.u_map[s] - 1 in cluster:
                    W[s - 1] = ms.G[s - spec.m - 1].eval(0, t)
            return np.einsum("it,jt,ijk->kt", P, W, M)

        total += contour_integrate(integrand, contour)
    return total


def eval_integral(ms: MonogenicSpec, p: Point, nodes: int = 256) -> Element:
    """Cauchy-type integral representation over circles around the xi_u."""
    return _integral_assembly(ms, p, power=1, nodes=nodes)


def gateaux_derivative(ms: MonogenicSpec, p: Point, r: int, nodes: int = 256) -> Element:
    """r-th Gateaux derivative via contour quadrature of W(t) * R(t)^(r+1) * r!."""
    if r < 1:
        raise ValueError("derivative order must be >= 1")
    return math.factorial(r) * _integral_assembly(ms, p, power=r + 1, nodes=nodes)


# -- special-case evaluation ---------------------------------------------------


def eval_special(ms: MonogenicSpec, p: Point) -> Element:
    """Fast path for semi-simple, single-idempotent-action, and all-distinct cases."""
    spec, triad = ms.algebra, ms.triad
    case = spec.classify_special_case()
    xi_v = xi_all(spec, triad, p)

    if case is SpecialCase.SEMI_SIMPLE:
        return np.array(
            [ms.F[u].eval(0, xi_v[u]) for u in range(spec.m)], dtype=np.complex128
        )

    if case is SpecialCase.PROP2:
        x, y, z = p
        T = rsv.t_coeffs(spec, triad, y, z)
        out = np.zeros(spec.n, dtype=np.complex128)
        for u in range(spec.m):
            out[u] = ms.F[u].eval(0, xi_v[u])
        for s in range(spec.m + 1, spec.n + 1):
            si = s - spec.m - 1
            xi_us = xi_v[spec.u_map[s] - 1]
            out[s - 1] = (
                ms.G[si].eval(0, xi_us)
                + T[si] * ms.F[spec.u_map[s] - 1].eval(1, xi_us)
            )
        return out

    if case is SpecialCase.PROP1:
        # All radical indices share one idempotent; the general formula
        # collapses to a single evaluation argument xi_eta.
        return eval_explicit(ms, p)

    raise NotSpecial("algebra is neither semi-simple nor Prop1/Prop2")


# -- differential checks ---------------------------------------------------------


def cr_residual(
    ms: MonogenicSpec,
    p: Point,
    h: float = 1e-5,
    evaluator: Callable[[Point], Element] | None = None,
) -> tuple[Element, Element]:
    """Cauchy-Riemann residuals (dPhi/dy - dPhi/dx * e2, dPhi/dz - dPhi/dx * e3).

    Central differences of the explicit evaluation; near-zero certifies
    monogenicity at the point, a large value is a broken-data signal.
    """
    spec = ms.algebra
    if evaluator is None:
        evaluator = lambda q: eval_explicit(ms, q)
    x, y, z = p
    dx = (evaluator((x + h, y, z)) - evaluator((x - h, y, z))) / (2 * h)
    dy = (evaluator((x, y + h, z)) - evaluator((x, y - h, z))) / (2 * h)
    dz = (evaluator((x, y, z + h)) - evaluator((x, y, z - h))) / (2 * h)
    e2 = ms.triad.a_vec
    e3 = ms.triad.b_vec
    return dy - spec.multiply(dx, e2), dz - spec.multiply(dx, e3)


# -- JSON form ---------------------------------------------------------------


def monogenic_from_dict(data: Mapping, base_dir: Union[str, Path, None] = None) -> MonogenicSpec:
    alg = data["algebra"]
    if isinstance(alg, str):
        path = Path(alg)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        algebra = load_algebra(path)
    else:
        algebra = algebra_from_dict(alg)
    triad = TriadSpec.create(
        [_cnum(v) for v in data["triad"]["a"]],
        [_cnum(v) for v in data["triad"]["b"]],
    )
    F = [holo_from_dict(d) for d in data.get("F", [])]
    G = [holo_from_dict(d) for d in data.get("G", [])]
    return MonogenicSpec.create(algebra, triad, F, G)


def _cnum(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    return complex(v[0], v[1])
