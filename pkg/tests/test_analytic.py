"""Analytic engine: closed forms against trivial limits and the Fock oracle."""

import math

import numpy as np
import pytest

from conftest import fock_state, normalized_params, oracle_g2, random_normalized_params

from janusg2 import (
    JanusParams,
    SqueezeParam,
    cross_moment_fock,
    cross_n,
    cross_n2,
    g2_boundary,
    g2_boundary_series,
    g2_equal_squeeze,
    g2_general,
    g2_optimal,
    norm_residual,
    optimal_phase_K,
    overlap,
    phase_geometry,
    reduced_vars,
    solve_chi,
    squeezed_fock,
)
from janusg2.errors import (
    InfeasibleAmplitudeError,
    SingularOverlapError,
    UndefinedG2Error,
    UnnormalizedInputError,
    UnsupportedOrderError,
)

PI = math.pi


class TestReducedVars:
    def test_vacuum(self):
        p = JanusParams(SqueezeParam(0.0), SqueezeParam(0.0), 1.0, 0.5)
        rv = reduced_vars(p)
        assert rv.x == rv.y == 0.0
        assert rv.z == 0.0

    def test_equal_antialigned(self):
        p = JanusParams(SqueezeParam(0.34, PI), SqueezeParam(0.34, 0.0), 1.0, 1.0)
        rv = reduced_vars(p)
        assert rv.z == pytest.approx(-math.tanh(0.34) ** 2, abs=1e-15)
        assert abs(rv.z.imag) < 1e-15
        assert rv.K == pytest.approx(optimal_phase_K(0.34), abs=1e-15)
        assert rv.L == pytest.approx(2.0 * rv.K * 1.0 * 1.0, abs=1e-15)

    def test_unequal_quadrature(self):
        p = JanusParams(SqueezeParam(0.7, PI / 2), SqueezeParam(0.3, 0.0), 1.0, 1.0)
        rv = reduced_vars(p)
        expected = math.tanh(0.7) * math.tanh(0.3) * 1j
        assert rv.z == pytest.approx(expected, abs=1e-15)
        assert rv.K is None and rv.L is None
        assert abs(rv.z) ** 2 == pytest.approx(rv.x * rv.y, abs=1e-15)


class TestOverlap:
    def test_self_overlap_is_one(self):
        for r, th in [(0.0, 0.0), (0.5, 1.1), (1.3, 4.0)]:
            assert overlap(SqueezeParam(r, th), SqueezeParam(r, th)) == pytest.approx(1.0, abs=1e-14)

    def test_antialigned_value(self):
        # (cosh 0.5)^{-1} (1 + tanh^2 0.5)^{-1/2}, real
        got = overlap(SqueezeParam(0.5, PI), SqueezeParam(0.5, 0.0))
        want = 1.0 / (math.cosh(0.5) * math.sqrt(1.0 + math.tanh(0.5) ** 2))
        assert got == pytest.approx(want, abs=1e-14)
        assert abs(got.imag) < 1e-14

    def test_against_fock_inner_product(self):
        xi, zeta = SqueezeParam(0.5, PI), SqueezeParam(0.5, 0.0)
        num = cross_moment_fock(squeezed_fock(xi, 200), squeezed_fock(zeta, 200), "overlap")
        assert abs(num - overlap(xi, zeta)) < 1e-12

    def test_conjugate_symmetry(self):
        xi, zeta = SqueezeParam(0.8, 1.2), SqueezeParam(0.4, 5.0)
        assert overlap(xi, zeta) == pytest.approx(overlap(zeta, xi).conjugate(), abs=1e-15)

    def test_singularity_guard(self):
        big = SqueezeParam(18.0, 0.0)
        with pytest.raises(SingularOverlapError):
            overlap(big, big)


class TestNormalization:
    def test_single_state(self):
        p = JanusParams(SqueezeParam(0.7, 0.3), SqueezeParam(0.2), 1.0, 0.0)
        assert norm_residual(p) == pytest.approx(0.0, abs=1e-15)

    def test_fully_overlapping_opposite_sign(self):
        xi = SqueezeParam(0.6, 1.0)
        p = JanusParams(xi, xi, 2.0, 1.0, delta=PI)
        # chi^2 + eta^2 - 2 chi eta - 1 = 4 + 1 - 4 - 1 = 0
        assert norm_residual(p) == pytest.approx(0.0, abs=1e-13)

    def test_unnormalized_value(self):
        xi = SqueezeParam(0.5, 0.7)
        p = JanusParams(xi, xi, 1.0, 1.0, delta=0.0)
        assert norm_residual(p) == pytest.approx(3.0, abs=1e-13)

    def test_solved_chi_gives_zero_residual_and_unit_fock_norm(self):
        p = normalized_params(0.34, 0.34, PI, PI, 2.20070)
        assert abs(norm_residual(p)) < 1e-12
        assert fock_state(p).norm2 == pytest.approx(1.0, abs=1e-12)


class TestSolveChi:
    def test_eta_zero(self):
        assert solve_chi(0.0, SqueezeParam(0.5), SqueezeParam(0.3), 1.0) == pytest.approx(1.0)

    def test_reference_point(self):
        chi = solve_chi(2.20070, SqueezeParam(0.34, PI), SqueezeParam(0.34, 0.0), PI)
        assert chi == pytest.approx(2.224787667612444, abs=1e-12)

    def test_identical_states_opposite_sign(self):
        xi = SqueezeParam(0.9, 0.4)
        assert solve_chi(1.0, xi, xi, PI) == pytest.approx(2.0, abs=1e-13)

    def test_smaller_root(self):
        xi, zeta = SqueezeParam(0.34, PI), SqueezeParam(0.34, 0.0)
        lo = solve_chi(2.20070, xi, zeta, PI, smaller_root=True)
        hi = solve_chi(2.20070, xi, zeta, PI)
        assert lo < hi
        for chi in (lo, hi):
            p = JanusParams(xi, zeta, chi, 2.20070, PI)
            assert abs(norm_residual(p)) < 1e-12

    def test_infeasible(self):
        with pytest.raises(InfeasibleAmplitudeError):
            solve_chi(2.20070, SqueezeParam(0.40, PI), SqueezeParam(0.40, 0.0), PI)
        # delta = 0 with eta > 1 leaves only a negative root
        with pytest.raises(InfeasibleAmplitudeError):
            solve_chi(1.5, SqueezeParam(0.4, PI), SqueezeParam(0.4, 0.0), 0.0)


class TestCrossMoments:
    def test_diagonal_reductions(self):
        xi = SqueezeParam(0.85, 2.0)
        assert cross_n(xi, xi) == pytest.approx(math.sinh(0.85) ** 2, abs=1e-13)
        sh2 = math.sinh(0.85) ** 2
        assert cross_n2(xi, xi) == pytest.approx(sh2 * (3.0 * sh2 + 1.0), abs=1e-12)

    def test_vacuum_factor_vanishes(self):
        assert cross_n(SqueezeParam(0.0), SqueezeParam(0.7, 1.0)) == 0.0
        assert cross_n2(SqueezeParam(0.0), SqueezeParam(0.0)) == 0.0

    def test_antialigned_sign(self):
        got = cross_n(SqueezeParam(0.5, PI), SqueezeParam(0.5, 0.0))
        assert got.real < 0.0 and abs(got.imag) < 1e-14

    @pytest.mark.parametrize(
        "xi,zeta",
        [
            (SqueezeParam(0.5, PI), SqueezeParam(0.5, 0.0)),
            (SqueezeParam(0.4, PI / 2), SqueezeParam(0.4, 0.0)),
            (SqueezeParam(0.9, 1.3), SqueezeParam(0.2, 5.1)),
        ],
    )
    def test_against_fock_sums(self, xi, zeta):
        v1, v2 = squeezed_fock(xi, 200), squeezed_fock(zeta, 200)
        assert abs(cross_moment_fock(v1, v2, "n") - cross_n(xi, zeta)) < 1e-12
        assert abs(cross_moment_fock(v1, v2, "n2") - cross_n2(xi, zeta)) < 1e-12


class TestG2General:
    def test_single_state_value(self):
        p = JanusParams(SqueezeParam(1.0), SqueezeParam(0.3), 1.0, 0.0)
        assert g2_general(p) == pytest.approx(3.0 + 1.0 / math.sinh(1.0) ** 2, abs=1e-13)

    def test_reference_point_matches_oracle(self):
        p = normalized_params(0.34, 0.34, PI, PI, 2.20070)
        got = g2_general(p)
        assert got == pytest.approx(0.5360151802350004, abs=1e-12)
        assert got == pytest.approx(oracle_g2(p), abs=1e-11)

    def test_random_points_match_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            p = random_normalized_params(rng)
            assert g2_general(p) == pytest.approx(oracle_g2(p), abs=1e-9)

    def test_vacuum_is_undefined(self):
        p = JanusParams(SqueezeParam(0.0), SqueezeParam(0.0), 1.0, 0.0)
        with pytest.raises(UndefinedG2Error):
            g2_general(p)

    def test_unnormalized_rejected(self):
        p = JanusParams(SqueezeParam(0.5), SqueezeParam(0.5), 1.0, 1.0, delta=1.0)
        with pytest.raises(UnnormalizedInputError):
            g2_general(p)


class TestPhaseGeometry:
    def test_aligned(self):
        for r in (0.0, 0.3, 2.0):
            geom = phase_geometry(r, 0.0)
            assert geom.f == pytest.approx(1.0, abs=1e-12)
            assert geom.gamma == pytest.approx(0.0, abs=1e-15)

    def test_antialigned(self):
        geom = phase_geometry(0.34, PI)
        assert geom.f == pytest.approx((2.0 * math.sinh(0.34) ** 2 + 1.0) ** 2, abs=1e-13)
        assert geom.gamma == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("r", [0.1, 0.5, 1.4])
    @pytest.mark.parametrize("Delta", [0.3, PI / 2, PI, 4.5, 6.0])
    def test_identity(self, r, Delta):
        # (1-x)/(1-z) = f^{-1/2} e^{-i gamma} on the equal-squeezing manifold
        geom = phase_geometry(r, Delta)
        x = math.tanh(r) ** 2
        z = x * complex(math.cos(Delta), math.sin(Delta))
        lhs = (1.0 - x) / (1.0 - z)
        rhs = geom.f**-0.5 * complex(math.cos(-geom.gamma), math.sin(-geom.gamma))
        assert abs(lhs - rhs) < 1e-12


class TestG2EqualSqueeze:
    def test_single_state_reduction(self):
        assert g2_equal_squeeze(0.75, 1.0, 0.0, 1.0, 0.0) == pytest.approx(
            3.0 + 1.0 / math.sinh(0.75) ** 2, abs=1e-12
        )

    def test_agrees_with_general_on_manifold(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            r = rng.uniform(0.05, 1.2)
            p = random_normalized_params(rng, r_lo=r, r_hi=r)
            if abs(p.xi.r - p.zeta.r) > 1e-15:
                continue
            got = g2_equal_squeeze(p.xi.r, p.Delta, p.delta, p.chi_mag, p.eta_mag)
            assert got == pytest.approx(g2_general(p), abs=1e-10)

    def test_nonoptimal_phase_super_poissonian(self):
        # delta = 0 keeps the vacuum component; statistics stay classical-like
        chi = solve_chi(1.0, SqueezeParam(0.5, PI), SqueezeParam(0.5, 0.0), 0.0)
        assert g2_equal_squeeze(0.5, PI, 0.0, chi, 1.0) > 1.0

    def test_unnormalized_rejected(self):
        with pytest.raises(UnnormalizedInputError):
            g2_equal_squeeze(0.5, PI, PI, 1.0, 1.0)


class TestG2Optimal:
    def test_single_state(self):
        assert g2_optimal(0.8, 1.0, 0.0) == pytest.approx(
            3.0 + 1.0 / math.sinh(0.8) ** 2, abs=1e-12
        )

    def test_specialization_chain(self):
        for r, eta in [(0.2, 1.5), (0.34, 2.20070), (0.34, 1.0), (0.9, 1.2)]:
            p = normalized_params(r, r, PI, PI, eta)
            a = g2_general(p)
            b = g2_equal_squeeze(r, PI, PI, p.chi_mag, eta)
            c = g2_optimal(r, p.chi_mag, eta)
            assert a == pytest.approx(b, abs=1e-10)
            assert b == pytest.approx(c, abs=1e-10)
            assert a == pytest.approx(c, abs=1e-10)

    def test_constraint_enforced(self):
        with pytest.raises(UnnormalizedInputError):
            g2_optimal(0.34, 1.0, 1.0)


class TestBoundary:
    def test_at_zero(self):
        assert g2_boundary(0.0) == 0.5

    def test_unit_sinh2(self):
        r = math.asinh(1.0)
        assert g2_boundary(r) == pytest.approx(144.0 / 98.0, abs=1e-13)

    def test_large_r_asymptote(self):
        assert abs(g2_boundary(6.0) - 3.0) < 0.01
        assert g2_boundary(6.0) < 3.0

    def test_monotone_bounded(self):
        rs = [0.01 * k for k in range(601)]
        vals = [g2_boundary(r) for r in rs]
        assert all(b >= a - 1e-14 for a, b in zip(vals, vals[1:]))
        assert all(0.5 <= v < 3.0 for v in vals)

    def test_series_values(self):
        assert g2_boundary_series(0.0, 3) == 0.5
        u = math.sinh(0.05) ** 2
        assert g2_boundary_series(0.05, 1) == pytest.approx(0.5 + 0.75 * u, abs=1e-15)

    def test_series_close_to_exact(self):
        r = 0.1
        assert abs(g2_boundary_series(r, 3) - g2_boundary(r)) <= 1e-7

    def test_series_order_guard(self):
        with pytest.raises(UnsupportedOrderError):
            g2_boundary_series(0.1, 4)
        with pytest.raises(UnsupportedOrderError):
            g2_boundary_series(0.1, -1)
