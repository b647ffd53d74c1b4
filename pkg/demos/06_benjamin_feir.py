"""Modulational (figure-eight) instability: constants, curve, spectrum.

Computes the closed-form constants and overlays the lemniscate against the
unstable eigenvalues of the swept numerical spectrum, including the
discontinuous-dispersion variant.
"""

import numpy as np

from stokes_spectra import (
    akers_milewski,
    am_lemniscate,
    bf_constants,
    capillary_whitham,
    kawahara,
    lemniscate_curve,
    spectrum_slice,
    stokes_expand,
    whitham,
)

eps = 1e-2
for model in (kawahara(-3.0, 1.0), whitham(2.0), capillary_whitham(2.0, 3.0)):
    lm = bf_constants(model)
    print(f"{model}:")
    print(f"  U={lm.U:+.6f}  V={lm.V:+.6f}  Delta={lm.delta_bf:+.6f}  "
          f"unstable={lm.unstable}")
    if not lm.unstable:
        continue
    _, _, lam, _ = lemniscate_curve(lm, eps, 1024)
    wave = stokes_expand(model, eps, 2)
    best = 0.0
    for p in np.linspace(1e-5, 1.02 * eps * lm.p1_max, 40):
        best = max(best, spectrum_slice(model, wave, float(p), 24).max_re)
    print(f"  lemniscate extents: Re {lam.real.max():.3e}, Im {np.abs(lam.imag).max():.3e}")
    print(f"  max growth: predicted {lm.max_growth_rate(eps):.3e}, measured {best:.3e}")

print("\nAkers-Milewski sigma=1 (jump at k = 0, comoving group velocity vanishes):")
am = akers_milewski(1.0)
lm = bf_constants(am)
print(f"  U={lm.U:+.4f}  V={lm.V:+.4f}  Delta={lm.delta_bf:+.4f}  cg~(1)={lm.cg1}")
curve = am_lemniscate(am, eps)
print(f"  real extent {curve.lam.real.max():.3e} ~ eps^2;  "
      f"imaginary extent {np.abs(curve.lam.imag).max():.3e} ~ eps^3 (fitted cubic)")
