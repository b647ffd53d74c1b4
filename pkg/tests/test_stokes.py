import math

import numpy as np
import pytest

from stokes_spectra.dispersion import akers_milewski, capillary_whitham, kawahara, omega
from stokes_spectra.exceptions import WiltonResonanceError
from stokes_spectra.stokes import (
    stokes_expand,
    stokes_numeric,
    traveling_residual,
)

KAW = kawahara(1.0, -0.25)


class TestExpansion:
    def test_second_order_coefficients(self):
        # c0 = 0.75, c_p(2) = 0 -> second harmonic and velocity correction 2/3
        w = stokes_expand(KAW, 1e-3, order=2)
        assert w.c_series[0] == pytest.approx(0.75)
        assert w.c_series[1] == 0.0
        assert w.c_series[2] == pytest.approx(2.0 / 3.0)
        assert w.cos_coeffs[1] == pytest.approx(1e-3)
        assert w.cos_coeffs[2] == pytest.approx(2.0 / 3.0 * 1e-6)

    def test_flat_state(self):
        w = stokes_expand(KAW, 0.0, order=2)
        assert w.c == pytest.approx(omega(KAW, 1.0))
        assert np.all(w.cos_coeffs == 0.0)

    def test_residual_oracle_small_amplitude(self):
        # leading residual term of the order-2 wave is the third harmonic,
        # 3 a2 eps^3 = 12.7 eps^3 for this configuration
        m = capillary_whitham(math.inf, 0.25)
        w = stokes_expand(m, 1e-4, order=2)
        assert traveling_residual(w) < 1.5e-11

    def test_wilton_resonance_detected(self):
        # a = -5 b makes the second harmonic phase-resonant with the carrier
        with pytest.raises(WiltonResonanceError):
            stokes_expand(kawahara(-5.0, 1.0), 1e-3, order=2)

    @pytest.mark.parametrize("order,slope", [(2, 3.0), (4, 5.0)])
    def test_residual_scaling(self, order, slope):
        eps = np.array([1e-4, 3e-4, 1e-3, 3e-3, 1e-2])
        res = [traveling_residual(stokes_expand(KAW, e, order)) for e in eps]
        fit = np.polyfit(np.log(eps), np.log(res), 1)[0]
        assert abs(fit - slope) < 0.2

    def test_mean_mode_and_evenness(self):
        w = stokes_expand(kawahara(-3.0, 1.0), 1e-2, order=4)
        assert w.cos_coeffs[0] == 0.0
        full = w.fourier_full(8)
        assert np.all(full == full[::-1])
        assert np.all(np.isreal(full))

    def test_serialization(self):
        import json
        w = stokes_expand(KAW, 1e-3, order=2)
        d = json.loads(json.dumps(w.to_dict()))
        assert d["family"] == "kawahara"
        assert d["coeffs"][1] == pytest.approx(0.5e-3)   # u_hat_1 = eps/2


class TestNumeric:
    def test_velocity_matches_expansion(self):
        w2 = stokes_expand(KAW, 1e-3, order=2)
        wn = stokes_numeric(KAW, 1e-3, 32)
        assert abs(wn.c - w2.c) < 1e-8

    def test_zero_amplitude(self):
        wn = stokes_numeric(KAW, 0.0, 32)
        assert wn.c == pytest.approx(omega(KAW, 1.0))
        assert np.all(wn.cos_coeffs == 0.0)

    def test_galerkin_residual_below_tolerance(self):
        wn = stokes_numeric(kawahara(-3.0, 1.0), 1e-2, 32)
        assert traveling_residual(wn) < 1e-12

    def test_akers_milewski_wave_and_harmonic_ratio(self):
        m = akers_milewski(2.0)
        wn = stokes_numeric(m, 1e-3, 32)
        assert np.all(np.isreal(wn.cos_coeffs))
        # u_hat_2 / u_hat_1^2 -> 2 c2 as eps -> 0
        c2 = 1.0 / (2.0 * (omega(m, 1.0) - omega(m, 2.0) / 2.0))
        ratios = []
        for eps in (1e-3, 3e-4, 1e-4):
            w = stokes_numeric(m, eps, 32)
            u1, u2 = w.cos_coeffs[1] / 2.0, w.cos_coeffs[2] / 2.0
            ratios.append(u2 / u1**2)
        assert ratios[-1] == pytest.approx(2.0 * c2, rel=1e-5)

    def test_agreement_scales_with_truncation_order(self):
        # velocity difference between expansion and converged wave is
        # O(eps^{order+1}); the order-3 coefficient vanishes by parity, so
        # order 2 gains an extra power
        diffs = []
        for eps in (3e-3, 1e-3):
            diffs.append(abs(stokes_expand(KAW, eps, 2).c - stokes_numeric(KAW, eps, 32).c))
        rate = math.log(diffs[0] / diffs[1]) / math.log(3.0)
        assert rate > 3.5
