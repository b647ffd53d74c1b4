"""Second-order quartet isola and its cubic error law.

The quartet corrections predict the eigenvalue to O(eps^3); tracking a
continued eigenpair across amplitudes exposes that error scaling directly.
"""

import numpy as np

from stokes_spectra import (
    continue_in_epsilon,
    find_collisions,
    fit_power_law,
    kawahara,
    quartet_coeffs,
    quartet_isola,
)

model = kawahara(1.0, -0.25)
coll = [c for c in find_collisions(model, 2, (-6, 6)) if c.krein_negative][0]
qc = quartet_coeffs(model, coll)
print(f"collision (k1,k2)=({coll.k1},{coll.k2})  p0={coll.p0:.6f}")
print(f"solvability coefficients: A={qc.A:+.5f} B={qc.B:+.5f} C={qc.C:+.5f}")
print(f"                          E={qc.E:+.5f} F={qc.F:+.5f} G={qc.G:+.5f}")
print(f"sign condition G/E = {qc.krein_ratio:+.5f}  (> 0: unstable)")

iso = quartet_isola(qc, coll)
eps_list = [1e-3, 1.778e-3, 3.162e-3, 5.623e-3, 1e-2]
thetas = np.linspace(0, 2 * np.pi, 16, endpoint=False)
errors = np.zeros(len(eps_list))
for th in thetas:
    pairs = continue_in_epsilon(model, coll, float(th), eps_list, N=32, isola=iso)
    for i, (e, pr) in enumerate(zip(eps_list, pairs)):
        errors[i] = max(errors[i], abs(pr.lam - iso.lambda_at(float(th), e)))

print("\n  eps        worst |numeric - asymptotic|")
for e, err in zip(eps_list, errors):
    print(f"  {e:8.3e}  {err:.3e}")

slope, prefactor = fit_power_law(list(zip(eps_list, errors)))
print(f"\nfitted law: {prefactor:.2f} * eps^{slope:.3f}")
