import math

import numpy as np
import pytest

from stokes_spectra.dispersion import (
    akers_milewski,
    capillary_whitham,
    kawahara,
    whitham,
)
from stokes_spectra.flatspec import (
    benjamin_feir_collision,
    benjamin_feir_modes,
    find_collisions,
    flat_eigenvalue,
)

KAW = kawahara(1.0, -0.25)


class TestFlatEigenvalue:
    @pytest.mark.parametrize("model", [KAW, whitham(2.0), akers_milewski(1.0)], ids=str)
    def test_carrier_modes_are_null(self, model):
        assert flat_eigenvalue(model, 1, 0.0) == 0.0
        assert flat_eigenvalue(model, -1, 0.0) == 0.0

    def test_kawahara_midpoint_value(self):
        # i(omega(0.5) - 0.75 * 0.5) with omega(0.5) = 0.125 - 0.25/32
        lam = flat_eigenvalue(KAW, 0, 0.5)
        assert lam == pytest.approx(-0.2578125j, abs=1e-15)
        assert lam.real == 0.0


CAPTION_CASES = [
    (capillary_whitham(math.inf, 2.5), 1, 0.2681, 0.0608),
    (akers_milewski(2.0), 1, 0.1464, 0.3536),
    (kawahara(1.0, -0.25), 2, 0.3675, 0.2277),
    (capillary_whitham(math.inf, 0.25), 2, 0.1363, 0.2177),
]


class TestCollisions:
    @pytest.mark.parametrize("model,m,p0,im_abs", CAPTION_CASES,
                             ids=["cw2.5", "am2", "kaw", "cw0.25"])
    def test_reference_collisions_found(self, model, m, p0, im_abs):
        cols = find_collisions(model, m, (-10, 10))
        hit = min(cols, key=lambda c: abs(c.p0 - p0))
        assert abs(hit.p0 - p0) <= 1e-3
        assert abs(abs(hit.lambda0.imag) - im_abs) <= 1e-3
        assert hit.krein_negative

    @pytest.mark.parametrize("model,m", [(m, mm) for m, mm, *_ in CAPTION_CASES],
                             ids=["cw2.5", "am2", "kaw", "cw0.25"])
    def test_collision_invariants(self, model, m):
        for c in find_collisions(model, m, (-10, 10)):
            lam1 = flat_eigenvalue(model, c.k1, c.p0)
            lam2 = flat_eigenvalue(model, c.k2, c.p0)
            assert abs(lam1 - lam2) < 1e-10
            assert c.lambda0.real == 0.0
            assert c.m == c.k2 - c.k1 >= 1
            assert 0.0 < c.p0 < 1.0

    @pytest.mark.parametrize("model,m", [(m, mm) for m, mm, *_ in CAPTION_CASES],
                             ids=["cw2.5", "am2", "kaw", "cw0.25"])
    def test_conjugate_branch_present(self, model, m):
        # negating both physical wavenumbers maps collisions to collisions,
        # with Floquet exponent 1 - p0
        cols = find_collisions(model, m, (-10, 10))
        for c in cols:
            partner = [d for d in cols
                       if abs(d.p0 - (1.0 - c.p0)) < 1e-9
                       and abs((d.k1 + d.p0) + (c.k2 + c.p0)) < 1e-9
                       and abs((d.k2 + d.p0) + (c.k1 + c.p0)) < 1e-9]
            assert len(partner) == 1

    def test_triad_krein_sign_rule(self):
        for c in find_collisions(capillary_whitham(math.inf, 2.5), 1, (-10, 10)):
            assert c.krein_negative == ((c.k1 + c.p0) * (c.k2 + c.p0) < 0)

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            find_collisions(KAW, 0)


class TestBenjaminFeirCluster:
    @pytest.mark.parametrize("model", [KAW, kawahara(-3.0, 1.0), whitham(2.0),
                                       capillary_whitham(2.0, 3.0)], ids=str)
    def test_smooth_models_have_the_triple(self, model):
        assert benjamin_feir_modes(model) == [-1, 0, 1]

    def test_akers_milewski_loses_the_mean_mode(self):
        assert benjamin_feir_modes(akers_milewski(1.0)) == [-1, 1]

    def test_record_shape(self):
        c = benjamin_feir_collision(KAW)
        assert c.p0 == 0.0
        assert c.lambda0 == 0.0
        assert c.is_benjamin_feir
