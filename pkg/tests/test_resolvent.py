import numpy as np
import pytest

from monogenica import (
    OnSpectrum,
    TriadSpec,
    b_coeffs,
    embed,
    lemma2_audit,
    noninvertible_lines,
    q_table,
    resolvent_closed,
    resolvent_recurrence,
    t_coeffs,
    xi_all,
)

from conftest import fixture_triad, random_triad
from test_algebra import direct_sum_truncated


def geometric_series_resolvent(t, x, T):
    """Oracle for C[rho]/rho^4: expand (t - x - w)^(-1), w = T2*rho + T3*rho^2 + T4*rho^3."""
    w = np.array([0.0, T[0], T[1], T[2]], dtype=np.complex128)
    out = np.zeros(4, dtype=np.complex128)
    power = np.array([1.0, 0, 0, 0], dtype=np.complex128)

    def mult(a, b):
        c = np.zeros(4, dtype=np.complex128)
        for i in range(4):
            for j in range(4 - i):
                c[i + j] += a[i] * b[j]
        return c

    for j in range(4):
        out += power / (t - x) ** (j + 1)
        power = mult(power, w)
    return out


class TestTB:
    def test_t_zero(self, alg_t4):
        triad = fixture_triad("alg_t4")
        assert np.allclose(t_coeffs(alg_t4, triad, 0.0, 0.0), 0.0)

    def test_t_direct(self, alg_d2, alg_t4):
        triad = TriadSpec.create([1j, 1.0], [0.0, 0.0])
        assert np.allclose(t_coeffs(alg_d2, triad, 1.0, 5.0), [1.0])
        triad4 = TriadSpec.create([1j, 1, 0, 0], [0.5, 0, 1, 0])
        assert np.allclose(t_coeffs(alg_t4, triad4, 2.0, 3.0), [2.0, 3.0, 0.0])

    def test_b_zero_for_prop2(self, alg_p2, rng):
        T = t_coeffs(alg_p2, random_triad(alg_p2, rng), 1.3, -0.8)
        assert np.allclose(b_coeffs(alg_p2, T), 0.0)

    def test_b_t4_hand_values(self, alg_t4):
        triad = fixture_triad("alg_t4")
        T = t_coeffs(alg_t4, triad, 2.0, 3.0)
        B = b_coeffs(alg_t4, T)
        assert B[0, 1] == T[0]  # B_{2,3} = T2 * Y[2,3->2]
        assert B[1, 2] == T[0]  # B_{3,4} = T2 * Y[3,4->2]
        assert B[0, 2] == T[1]  # B_{2,4} = T3 * Y[2,4->3]


class TestQTable:
    def test_base_case(self, all_algebras, rng):
        for spec in all_algebras.values():
            triad = random_triad(spec, rng)
            T = t_coeffs(spec, triad, 0.7, -1.1)
            Q = q_table(spec, T, b_coeffs(spec, T))
            assert np.array_equal(Q[2, :], T)

    def test_t4_closed_forms_against_geometric_series(self, alg_t4, rng):
        # Q_{3,4} = 2*T2*T3 and Q_{4,4} = T2^3 per the series oracle.
        for _ in range(10):
            triad = random_triad(alg_t4, rng)
            y, z = rng.uniform(-2, 2, 2)
            T = t_coeffs(alg_t4, triad, y, z)
            Q = q_table(alg_t4, T, b_coeffs(alg_t4, T))
            assert abs(Q[3, 2] - 2 * T[0] * T[1]) < 1e-13
            assert abs(Q[4, 2] - T[0] ** 3) < 1e-13
            x = float(rng.uniform(-2, 2))
            t = complex(*rng.uniform(2.5, 4.0, 2))
            xi1 = x + y * triad.a[0] + z * triad.b[0]
            oracle = geometric_series_resolvent(t, xi1, T)
            got = resolvent_closed(alg_t4, triad, (x, y, z), t)
            assert np.max(np.abs(got - oracle)) < 1e-12

    def test_degree_bound(self, all_algebras, rng):
        # No Q entry materializes past k = s - m + 1.
        for spec in all_algebras.values():
            triad = random_triad(spec, rng)
            T = t_coeffs(spec, triad, 1.0, 1.0)
            Q = q_table(spec, T, b_coeffs(spec, T))
            for s in range(spec.m + 1, spec.n + 1):
                si = s - spec.m - 1
                for k in range(s - spec.m + 2, Q.shape[0]):
                    assert Q[k, si] == 0.0


class TestResolvent:
    def test_semisimple_explicit(self, alg_ss2):
        triad = fixture_triad("alg_ss2")
        p = (0.4, 0.3, -0.7)
        t = 2.0 + 1.5j
        xi = xi_all(alg_ss2, triad, p)
        got = resolvent_recurrence(alg_ss2, triad, p, t)
        assert np.max(np.abs(got - 1.0 / (t - xi))) < 1e-14

    def test_d2_worked_example(self, alg_d2):
        triad = TriadSpec.create([1j, 1.0], [0.0, 0.0])
        got = resolvent_recurrence(alg_d2, triad, (0.0, 1.0, 0.0), 0.0)
        assert np.max(np.abs(got - np.array([1j, -1.0]))) < 1e-14

    def test_on_spectrum_raises(self, alg_ss2):
        triad = fixture_triad("alg_ss2")
        p = (0.4, 0.3, -0.7)
        xi1 = complex(xi_all(alg_ss2, triad, p)[0])
        with pytest.raises(OnSpectrum):
            resolvent_recurrence(alg_ss2, triad, p, xi1)
        with pytest.raises(OnSpectrum):
            resolvent_closed(alg_ss2, triad, p, xi1)

    def test_recurrence_closed_invert_agree(self, all_algebras, rng):
        for spec in all_algebras.values():
            for _ in range(40):
                triad = random_triad(spec, rng)
                p = tuple(rng.uniform(-2, 2, 3))
                xi = xi_all(spec, triad, p)
                t = complex(*rng.uniform(-4, 4, 2))
                if np.min(np.abs(t - xi)) < 0.1:
                    continue
                rec = resolvent_recurrence(spec, triad, p, t)
                clo = resolvent_closed(spec, triad, p, t)
                assert np.max(np.abs(rec - clo)) < 1e-12
                zeta = embed(spec, triad, p)
                ident = spec.multiply(t * spec.unit() - zeta, clo)
                assert np.max(np.abs(ident - spec.unit())) < 1e-12
                oracle = spec.invert(t * spec.unit() - zeta)
                assert np.max(np.abs(clo - oracle)) < 1e-10

    def test_prop2_closed_form(self, alg_p2, rng):
        # Second sum collapses to T_s / (t - xi_{u_s})^2.
        triad = random_triad(alg_p2, rng)
        p = (0.2, 0.9, -0.4)
        t = 3.0 + 0.5j
        xi = xi_all(alg_p2, triad, p)
        T = t_coeffs(alg_p2, triad, p[1], p[2])
        got = resolvent_closed(alg_p2, triad, p, t)
        for s in range(3, 5):
            expect = T[s - 3] / (t - xi[alg_p2.u_map[s] - 1]) ** 2
            assert abs(got[s - 1] - expect) < 1e-14


class TestLemma2:
    def test_audit_empty_on_fixtures(self, all_algebras, rng):
        for spec in all_algebras.values():
            triad = random_triad(spec, rng)
            T = t_coeffs(spec, triad, 1.0, 0.6)
            B = b_coeffs(spec, T)
            assert lemma2_audit(spec, T, B) == []

    def test_audit_on_direct_sum(self, rng):
        spec = direct_sum_truncated(3, 3)
        triad = random_triad(spec, rng)
        T = t_coeffs(spec, triad, 0.9, -1.2)
        B = b_coeffs(spec, T)
        assert lemma2_audit(spec, T, B) == []

    def test_audit_flags_incoherent_table(self, alg_t4):
        # Force u_3 != u_2 on a T4-shaped table: B_{2,3} != 0 must be flagged.
        bad = alg_t4.create(4, 2, [(3, 3, 4, 1.0)], {3: 1, 4: 2})
        triad = TriadSpec.create([2j, 1j, 1.0, 0.0], [1.0, 0.0, 0.5, 1.0])
        T = t_coeffs(bad, triad, 1.0, 0.0)
        B = b_coeffs(bad, T)
        assert lemma2_audit(bad, T, B) == [(3, 4)]


class TestLines:
    def test_z_axis_line(self):
        triad = TriadSpec.create([1j, 0.3], [0.0, 1.0])
        (line,) = noninvertible_lines(triad, 1)
        assert line.contains((0.0, 0.0, 5.0))
        assert not line.contains((1.0, 0.0, 0.0))

    def test_origin_on_every_line(self, alg_ss2, rng):
        triad = random_triad(alg_ss2, rng)
        for line in noninvertible_lines(triad, alg_ss2.m):
            assert line.contains((0.0, 0.0, 0.0))

    def test_sampled_line_points_kill_xi(self, alg_p2, rng):
        triad = random_triad(alg_p2, rng)
        for line in noninvertible_lines(triad, alg_p2.m):
            d = line.direction
            for tval in (-2.0, 0.5, 3.0):
                p = tuple(tval * d)
                xi = xi_all(alg_p2, triad, p)
                assert abs(xi[line.u - 1]) <= 1e-12 * max(1.0, float(np.max(np.abs(p))))
