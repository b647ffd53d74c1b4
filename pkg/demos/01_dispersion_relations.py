"""Tour of the dispersion-relation families.

Evaluates omega(k) and its derived quantities for each supported model and
checks the structural properties (oddness, deep-water limit) numerically.
"""

import math

import numpy as np

from stokes_spectra import (
    akers_milewski,
    capillary_whitham,
    group_velocity,
    kawahara,
    omega,
    parse_model,
    phase_velocity,
    whitham,
)

models = [
    kawahara(1.0, -0.25),
    whitham(2.0),
    capillary_whitham(math.inf, 2.5),
    akers_milewski(2.0),
]

print("omega(k) on a few wavenumbers")
ks = np.array([0.5, 1.0, 2.0, 4.0])
for m in models:
    print(f"  {str(m):38s} " + "  ".join(f"{omega(m, k):+9.4f}" for k in ks))

print("\ncarrier quantities at k = 1 (phase speed, group speed, comoving group speed)")
for m in models:
    c0 = phase_velocity(m, 1.0)
    cg = group_velocity(m, 1.0)
    print(f"  {str(m):38s} c_p={c0:+.4f}  c_g={cg:+.4f}  c_g-c_p={cg - c0:+.4f}")

print("\noddness check: max |omega(k) + omega(-k)| on k in [0.1, 10]")
grid = np.linspace(0.1, 10, 200)
for m in models:
    print(f"  {str(m):38s} {np.max(np.abs(omega(m, grid) + omega(m, -grid))):.2e}")

print("\ndeep water is the analytic limit of large depth:")
deep, shallow = whitham(math.inf), whitham(1e3)
k = np.linspace(0.5, 5, 10)
print(f"  max |omega_inf - omega_h=1000| = {np.max(np.abs(omega(deep, k) - omega(shallow, k))):.2e}")

print("\nmodel specification strings round-trip through the parser:")
spec = "capillarywhitham:h=inf,sigma=0.25"
print(f"  {spec!r} -> {parse_model(spec)}")
