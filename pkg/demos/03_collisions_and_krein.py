"""Locate flat-state eigenvalue collisions and classify their sign condition.

Collisions of the zero-amplitude spectrum seed instabilities; the sign
(Krein) condition decides which of them actually destabilize the wave.
"""

import math

from stokes_spectra import (
    akers_milewski,
    benjamin_feir_modes,
    capillary_whitham,
    find_collisions,
    kawahara,
)

cases = [
    ("capillary-Whitham deep, sigma=2.5 (triads)", capillary_whitham(math.inf, 2.5), 1),
    ("Akers-Milewski sigma=2 (triads)", akers_milewski(2.0), 1),
    ("Kawahara (1, -0.25) (quartets)", kawahara(1.0, -0.25), 2),
    ("capillary-Whitham deep, sigma=0.25 (quartets)", capillary_whitham(math.inf, 0.25), 2),
]

for label, model, m in cases:
    print(label)
    for c in find_collisions(model, m, (-8, 8)):
        tag = "UNSTABLE" if c.krein_negative else "stable"
        print(f"  (k1,k2)=({c.k1:+d},{c.k2:+d})  p0={c.p0:.6f}  "
              f"lambda0={c.lambda0.imag:+.6f}i  {tag}")
    print()

print("modes in the nullspace at p = 0 (the modulational cluster):")
for model in (kawahara(1.0, -0.25), akers_milewski(1.0)):
    print(f"  {str(model):30s} -> {benjamin_feir_modes(model)}")
