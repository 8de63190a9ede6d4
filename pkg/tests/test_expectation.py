"""Expectation engine against closed forms and independent 1d quadrature.

The oracle integrals are evaluated with scipy.integrate.quad, which shares
no code with the engine's Gauss product rules.
"""

import numpy as np
import pytest
from scipy.integrate import quad

from diracfock.constants import PhysicalConstants, natural_units
from diracfock.expectation import (
    classical_amplitude,
    classical_dirac_residual,
    classical_energy,
    classical_spinor,
    current_reality_residual,
    example_report,
    quantum_energy,
    r_density,
    r_density_residuals,
    total_charge,
    two_point,
    two_point_dirac_residual,
)
from diracfock.quadrature import Diverged, QuadratureNotConverged, QuadratureSpec
from diracfock.states import (
    GeneralStateFamily,
    RhoStateFamily,
    gaussian_family,
    sech2_family,
    step_family,
    tabulated_family,
    vacuum_family,
)

NAT = natural_units()
SPEC = QuadratureSpec()


def _weight(k):
    # momentum-space weight at unit constants: sqrt(1 / ((2 pi)^3 2 k0))
    k0 = np.sqrt(1.0 + k * k)
    return np.sqrt(1.0 / ((2.0 * np.pi) ** 3 * 2.0 * k0))


def _upper_component(k):
    # N (k0 + kappa) of the first particle spinor, kappa = 1
    k0 = np.sqrt(1.0 + k * k)
    return np.sqrt((k0 + 1.0) / (2.0 * k0))


class TestClassicalField:
    def test_amplitude_formula(self):
        fam = sech2_family(1.0, chi=lambda r: 0.3 * r, xi=lambda r: 0.1 * r)
        consts = PhysicalConstants(ell=2.0)
        k = np.array([0.0, 0.0, 1.2])
        rho = 1.0 / np.cosh(1.2) ** 2
        expect = 2.0**1.5 * np.sqrt(rho * (1 - rho)) * np.exp(-1.0j * 0.2 * 1.2)
        assert classical_amplitude(fam, k, consts) == pytest.approx(expect, rel=1e-13)

    def test_amplitude_rejects_general_family(self):
        fam = GeneralStateFamily(z=lambda kv: np.zeros((len(kv), 16)), k_cutoff=1.0)
        with pytest.raises(ValueError):
            classical_amplitude(fam, np.zeros(3), NAT)

    def test_origin_value_against_radial_oracle(self):
        # at x = 0 the angular average kills all but the first component
        fam = sech2_family(1.0)
        phi = classical_spinor(fam, np.zeros(4), SPEC, NAT, check=False)

        def integrand(k):
            amp = np.cosh(k) ** -1 * np.abs(np.tanh(k))
            return 4.0 * np.pi * k * k * _weight(k) * amp * _upper_component(k)

        oracle, err = quad(integrand, 0.0, 40.0, limit=200)
        assert err < 1e-8
        assert phi[0].real == pytest.approx(oracle, rel=1e-9)
        assert phi[0].real == pytest.approx(1.016851860221, rel=1e-9)
        assert np.max(np.abs(phi[1:])) < 1e-12
        assert abs(phi[0].imag) < 1e-15

    def test_satisfies_classical_dirac_equation(self):
        fam = sech2_family(1.0)
        xs = np.array([[0.0, 0.0, 0.0, 0.0], [0.4, 0.3, -0.2, 0.5], [1.0, -0.8, 0.1, 0.0]])
        assert classical_dirac_residual(fam, xs, SPEC, NAT, check=False) < 1e-10

    def test_refinement_guard_trips_on_truncated_tail(self):
        # cutting the sech^2 tail at |k| = 3 leaves a visible truncation error
        fam = RhoStateFamily(occupied=1, rho=lambda r: 1.0 / np.cosh(r) ** 2, k_cutoff=3.0)
        with pytest.raises(QuadratureNotConverged):
            classical_spinor(fam, np.zeros(4), SPEC, NAT)


class TestScalars:
    def test_charge_closed_form_sech2(self):
        q = total_charge(sech2_family(1.0), SPEC, NAT)
        assert q == pytest.approx(np.pi**3 / 3.0, rel=1e-12)

    def test_charge_closed_form_step(self):
        q = total_charge(step_family(2.0), SPEC, NAT)
        assert q == pytest.approx(4.0 * np.pi / 3.0 * 8.0, rel=1e-12)

    def test_charge_sign_and_scales(self):
        consts = PhysicalConstants(q=0.5, ell=2.0)
        q = total_charge(sech2_family(1.0, occupied=4), SPEC, consts)
        assert q == pytest.approx(-0.5 * 8.0 * np.pi**3 / 3.0, rel=1e-12)

    def test_charge_scaling_law(self):
        lam = 2.5
        q1 = total_charge(sech2_family(1.0), SPEC, NAT)
        q2 = total_charge(sech2_family(lam), SPEC, NAT)
        assert q2 == pytest.approx(q1 / lam**3, rel=1e-12)

    def test_general_family_matches_radial_reduction(self):
        # isotropic coefficients through the full 3d product rule
        rho_fam = sech2_family(1.0)
        fam = GeneralStateFamily(
            z=rho_fam.coefficients, k_cutoff=rho_fam.k_cutoff, hard_cutoff=rho_fam.hard_cutoff
        )
        q3d = total_charge(fam, SPEC, NAT)
        q1d = total_charge(rho_fam, SPEC, NAT)
        assert abs(q3d - q1d) < SPEC.abs_tol

    def test_energies_against_oracle(self):
        fam = sech2_family(1.0)
        e = quantum_energy(fam, SPEC, NAT)
        e_cl = classical_energy(fam, SPEC, NAT)

        def base(k):
            return 4.0 * np.pi * k * k * np.sqrt(1.0 + k * k) / np.cosh(k) ** 2

        oracle_e = quad(base, 0.0, 40.0, limit=200)[0]
        oracle_cl = quad(lambda k: base(k) * np.tanh(k) ** 2, 0.0, 40.0, limit=200)[0]
        assert e == pytest.approx(oracle_e, rel=1e-12)
        assert e_cl == pytest.approx(oracle_cl, rel=1e-12)
        assert e_cl < e

    def test_classical_below_quantum_across_profiles(self):
        for fam in (sech2_family(0.7), gaussian_family(1.3), step_family(1.5)):
            e = quantum_energy(fam, SPEC, NAT)
            e_cl = classical_energy(fam, SPEC, NAT)
            assert e_cl < e

    def test_step_profile_energies_coincide(self):
        # rho is 0 or 1 everywhere, so rho (1 - rho) vanishes identically
        fam = step_family(1.5)
        assert classical_energy(fam, SPEC, NAT) == 0.0

    def test_energy_rejects_general_family(self):
        fam = GeneralStateFamily(z=lambda kv: np.zeros((len(kv), 16)), k_cutoff=1.0)
        with pytest.raises(ValueError):
            quantum_energy(fam, SPEC, NAT)
        with pytest.raises(ValueError):
            classical_energy(fam, SPEC, NAT)

    def test_unbounded_density_diverges(self):
        fam = RhoStateFamily(occupied=1, rho=lambda r: np.full_like(r, 0.5))
        with pytest.raises(Diverged):
            total_charge(fam, SPEC, NAT)


class TestTwoPoint:
    def test_vacuum_matrix_at_origin(self):
        # only the antiparticle sector survives; its diagonal is -I_v^2 with
        # I_v the radial integral of the surviving spinor component
        fam = vacuum_family()
        g = two_point(fam, fam, np.zeros(4), np.zeros(4), SPEC, NAT)

        def integrand(k):
            return 4.0 * np.pi * k * k * _weight(k) * _upper_component(k)

        iv = quad(integrand, 0.0, 40.0, limit=200)[0]
        expect = np.diag([0.0, 0.0, -(iv**2), -(iv**2)])
        assert iv**2 == pytest.approx(2711269.7074, rel=1e-9)
        assert np.max(np.abs(g - expect)) < 1e-5
        assert g[2, 2].real == pytest.approx(-(iv**2), rel=1e-12)
        assert g[3, 3].real == pytest.approx(-(iv**2), rel=1e-12)

    def test_field_equations_both_arguments(self):
        fam = sech2_family(1.0)
        vac = vacuum_family()
        x = np.array([0.2, 0.5, -0.1, 0.3])
        xp = np.array([0.0, -0.4, 0.2, 0.6])
        assert two_point_dirac_residual(fam, vac, x, xp, SPEC, NAT) < 1e-8
        assert two_point_dirac_residual(fam, fam, x, xp, SPEC, NAT) < 1e-8


class TestLocalDensities:
    xs = np.array([[0.0, 0.0, 0.0, 0.0], [0.3, 0.5, -0.2, 0.4]])

    def test_vacuum_density_is_zero_point_value(self):
        fam = vacuum_family()
        r = r_density(fam, self.xs, SPEC, NAT)

        def integrand(k):
            return 4.0 * np.pi * k * k * _weight(k) * _upper_component(k)

        iv = quad(integrand, 0.0, 40.0, limit=200)[0]
        assert r[0, 0] == pytest.approx(2.0 * iv**2, rel=1e-10)
        assert np.max(np.abs(r[0, 1:])) < 1e-6

    def test_residual_audits(self):
        out = r_density_residuals(sech2_family(1.0), self.xs, SPEC, NAT)
        assert out["imag_max"] < 1e-8
        assert out["r0_min"] >= 0.0
        assert out["continuity"] < 1e-8

    def test_smeared_current_reality(self):
        fam_a = sech2_family(1.0)
        fam_b = gaussian_family(1.0)
        x = np.array([0.1, 0.4, -0.3, 0.2])
        assert current_reality_residual(fam_a, fam_b, x, SPEC, NAT) < 1e-8


class TestExampleReport:
    def test_reduced_integrals_against_oracle(self):
        rep = example_report(1.0, NAT, SPEC)
        assert rep.I_Q == pytest.approx(np.pi**2 / 12.0, rel=1e-13)
        i_e = quad(lambda r: r * r * np.hypot(1.0, r) / np.cosh(r) ** 2, 0.0, 40.0, limit=200)[0]
        i_ecl = quad(
            lambda r: r * r * np.hypot(1.0, r) * np.tanh(r) ** 2 / np.cosh(r) ** 2,
            0.0,
            40.0,
            limit=200,
        )[0]
        assert rep.I_E == pytest.approx(i_e, rel=1e-12)
        assert rep.I_Ecl == pytest.approx(i_ecl, rel=1e-12)

    def test_dimensionful_values(self):
        rep = example_report(1.0, NAT, SPEC)
        assert rep.E == pytest.approx(20.409467200230594, rel=1e-12)
        assert rep.E_cl == pytest.approx(16.546491836565313, rel=1e-12)
        assert rep.Q == pytest.approx(10.335425560099905, rel=1e-12)
        assert rep.ratio == pytest.approx(1.9747099025144845, rel=1e-12)
        assert rep.Q_rel_error < 1e-12
        assert rep.Q_closed == pytest.approx(np.pi**3 / 3.0, rel=1e-15)

    def test_matches_engine_energies(self):
        rep = example_report(1.0, NAT, SPEC)
        assert quantum_energy(sech2_family(1.0), SPEC, NAT) == pytest.approx(rep.E, rel=1e-12)
        assert classical_energy(sech2_family(1.0), SPEC, NAT) == pytest.approx(
            rep.E_cl, rel=1e-12
        )
        assert total_charge(sech2_family(1.0), SPEC, NAT) == pytest.approx(rep.Q, rel=1e-12)

    def test_charge_integral_scale_invariant(self):
        # I_Q never changes with a; the dimensionful charge scales as a^-3
        r1 = example_report(1.0, NAT, SPEC)
        r2 = example_report(3.0, NAT, SPEC)
        assert r2.I_Q == pytest.approx(r1.I_Q, rel=1e-14)
        assert r2.Q == pytest.approx(r1.Q / 27.0, rel=1e-12)

    def test_ratio_decreases_toward_one(self):
        consts = [PhysicalConstants(kappa=k) for k in (10.0, 100.0, 1000.0)]
        ratios = [example_report(1.0, c, SPEC).ratio for c in consts]
        assert ratios[0] > ratios[1] > ratios[2] > 1.0
        assert ratios[0] == pytest.approx(1.0169558656, rel=1e-9)
        assert ratios[1] == pytest.approx(1.0001726844, rel=1e-9)
        assert ratios[2] == pytest.approx(1.0000017272, rel=1e-9)

    def test_rejects_nonpositive_scale(self):
        with pytest.raises(ValueError):
            example_report(-1.0, NAT, SPEC)


class TestTabulatedProfile:
    def test_breakpoint_quadrature_keeps_scalars_stable(self):
        fam = tabulated_family([0.0, 0.8, 1.6, 2.4], [0.9, 0.6, 0.3, 0.0])
        q = total_charge(fam, SPEC, NAT)
        # trapezoid-exact closed form for the piecewise-linear density
        oracle = quad(
            lambda k: 4.0 * np.pi * k * k * np.interp(k, [0.0, 0.8, 1.6, 2.4], [0.9, 0.6, 0.3, 0.0]),
            0.0,
            2.4,
            points=[0.8, 1.6],
        )[0]
        assert q == pytest.approx(oracle, rel=1e-12)
        assert classical_energy(fam, SPEC, NAT) < quantum_energy(fam, SPEC, NAT)
