import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stokes_spectra.dispersion import (
    akers_milewski,
    capillary_whitham,
    kawahara,
    whitham,
)
from stokes_spectra.benjamin_feir import (
    am_lemniscate,
    bf_constants,
    compare_growth,
    lemniscate,
    lemniscate_curve,
)
from stokes_spectra.exceptions import SignRestrictionError, StableModelError
from stokes_spectra.stokes import stokes_expand
from stokes_spectra import hill

KAW_BF = kawahara(-3.0, 1.0)     # modulationally unstable reference case
KDV = kawahara(1.0, 0.0)         # cubic-only dispersion: stable


class TestConstants:
    def test_kawahara_reference_values(self):
        # c0 = -2, omega'(0) = 0, omega'(1) = -4, omega(2) = 8, omega''(1) = 2:
        # U = 1/4 + 1/12 = 1/3, V = -1, Delta = 1/3
        lm = bf_constants(KAW_BF)
        assert lm.U == pytest.approx(1.0 / 3.0, abs=1e-14)
        assert lm.V == pytest.approx(-1.0, abs=1e-14)
        assert lm.delta_bf == pytest.approx(1.0 / 3.0, abs=1e-14)
        assert lm.cg1 == pytest.approx(-2.0, abs=1e-14)
        assert lm.unstable and lm.r1 == 0.0
        assert lm.p1_max == pytest.approx(math.sqrt(2.0 / 3.0))

    def test_akers_milewski_branch(self):
        lm = bf_constants(akers_milewski(1.0))
        assert lm.cg1 == 0.0
        assert lm.am_mode
        assert lm.U == pytest.approx(1.0) and lm.V == pytest.approx(-1.0)
        assert lm.delta_bf == pytest.approx(1.0)

    def test_stable_dispersion(self):
        lm = bf_constants(KDV)
        assert lm.delta_bf == pytest.approx(-1.0 / 18.0)
        assert not lm.unstable

    def test_delta_is_minus_u_over_v(self):
        for model in (KAW_BF, whitham(2.0), capillary_whitham(2.0, 3.0)):
            lm = bf_constants(model)
            assert lm.delta_bf == pytest.approx(-lm.U / lm.V, rel=1e-14)


class TestLemniscate:
    def test_origin_crossing(self):
        lm = bf_constants(KAW_BF)
        (lp, pp), (lmn, pm) = lemniscate(lm, 1e-2, math.pi)
        assert lp == pytest.approx(0.0, abs=1e-16)
        assert pp == pytest.approx(0.0, abs=1e-16)
        assert lmn == pytest.approx(0.0, abs=1e-16) and pm == pytest.approx(0.0, abs=1e-16)

    def test_extents(self):
        eps = 1e-2
        lm = bf_constants(KAW_BF)
        _, _, lam, p = lemniscate_curve(lm, eps, 2048)
        assert lam.real.max() == pytest.approx(eps**2 / 3.0, rel=1e-6)
        assert np.abs(lam.imag).max() == pytest.approx(
            eps * 2.0 * math.sqrt(2.0 / 3.0), rel=1e-6)
        # Floquet interval symmetric about zero
        assert p.max() == pytest.approx(-p.min(), rel=1e-12)
        assert p.max() == pytest.approx(eps * math.sqrt(2.0 / 3.0), rel=1e-6)

    def test_branch_pairing(self):
        # along each branch the imaginary part is slaved to the Floquet
        # correction through the comoving group velocity
        lm = bf_constants(KAW_BF)
        theta = np.linspace(0.1, 2 * np.pi - 0.1, 50)
        for lam, p in lemniscate(lm, 1e-2, theta):
            assert np.allclose(lam.imag, lm.cg1 * p, atol=1e-18)

    def test_full_curve_symmetries(self):
        # the two-branch curve is invariant under Re -> -Re and Im -> -Im
        lm = bf_constants(KAW_BF)
        _, _, lam, _ = lemniscate_curve(lm, 1e-2, 1024)
        for mirrored in (-np.conj(lam), np.conj(lam)):
            dists = [np.min(np.abs(lam - z)) for z in mirrored[::41]]
            assert max(dists) < 1e-9

    def test_stable_raises(self):
        with pytest.raises(StableModelError):
            lemniscate(bf_constants(KDV), 1e-2, 0.5)


class TestAgainstSpectrum:
    def test_growth_matches_dense_spectrum(self):
        eps = 1e-2
        lm = bf_constants(KAW_BF)
        wave = stokes_expand(KAW_BF, eps, 2)
        best = 0.0
        for p in np.linspace(1e-5, 1.05 * eps * lm.p1_max, 40):
            best = max(best, hill.spectrum_slice(KAW_BF, wave, float(p), 24).max_re)
        assert abs(best - lm.max_growth_rate(eps)) / lm.max_growth_rate(eps) < 0.01

    def test_sign_test_agrees_with_spectrum(self):
        eps = 1e-2
        for model, expect in ((KAW_BF, True), (KDV, False)):
            wave = stokes_expand(model, eps, 2)
            seen = any(
                hill.is_robustly_unstable(model, wave, float(p), 24, near=0j, radius=0.05)
                for p in np.linspace(2e-3, 8e-3, 4))
            assert seen == expect


@given(st.floats(min_value=0.05, max_value=2 * math.pi - 0.05))
def test_unit_modulus_ratio_keeps_floquet_real(theta):
    # (1 + b)^2 / b is real exactly when b is real or |b| = 1
    b = complex(math.cos(theta), math.sin(theta))
    assert abs(((1 + b) ** 2 / b).imag) < 1e-12


@given(st.floats(min_value=0.2, max_value=0.9),
       st.floats(min_value=0.3, max_value=math.pi - 0.3))
def test_off_circle_ratio_is_complex(r, theta):
    b = r * complex(math.cos(theta), math.sin(theta))
    assert abs(((1 + b) ** 2 / b).imag) > 1e-6


class TestAkersMilewskiCurve:
    def test_real_extent_matches_spectrum(self):
        model = akers_milewski(1.0)
        eps = 1e-2
        curve = am_lemniscate(model, eps)
        lm = bf_constants(model)
        wave = stokes_expand(model, eps, 2)
        best = 0.0
        for p in np.linspace(1e-5, 1.05 * eps * lm.p1_max, 40):
            best = max(best, hill.spectrum_slice(model, wave, float(p), 24).max_re)
        assert abs(curve.lam.real.max() - best) / best < 0.1
        assert curve.fitted

    def test_imaginary_part_is_cubic_scale(self):
        curve = am_lemniscate(akers_milewski(1.0), 1e-2)
        assert 0.0 < np.abs(curve.lam.imag).max() < 1e-5   # ~ eps^3, not eps^2

    def test_sign_restriction(self):
        with pytest.raises(SignRestrictionError):
            am_lemniscate(akers_milewski(1.0), -1e-3)

    def test_zero_amplitude_multiplicity_drop(self):
        # with the jump at the origin only two of the three cluster modes
        # stay in the nullspace as p -> 0+
        model = akers_milewski(1.0)
        wave = stokes_expand(model, 0.0, 2)
        sl = hill.spectrum_slice(model, wave, 1e-5, 16)
        assert int(np.sum(np.abs(sl.eigenvalues) < 1e-8)) == 2


class TestCompareGrowth:
    def test_triad_dominates(self):
        rep = compare_growth(capillary_whitham(math.inf, 2.5), (-8, 8))
        assert rep.verdict == "triad-dominates"
        assert rep.triads

    def test_bf_default(self):
        rep = compare_growth(whitham(2.0), (-8, 8))
        assert rep.verdict == "bf-dominates-by-default"
        assert not rep.triads and not rep.quartets

    def test_quartet_vs_bf_table(self):
        rep = compare_growth(capillary_whitham(math.inf, 0.25), (-8, 8))
        assert rep.verdict == "quartet-dominates"
        assert rep.bf_amp is None          # deep water: Delta < 0 here
        assert len(rep.rows()) == len(rep.quartets)

    def test_stable_model(self):
        rep = compare_growth(KDV, (-8, 8))
        assert rep.verdict == "stable-at-second-order"
