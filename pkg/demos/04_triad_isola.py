"""A triad instability isola: closed form against continued eigenpairs.

The first-order asymptotics predict an ellipse of unstable eigenvalues
around the collision; quasi-Newton continuation of individual eigenpairs
provides the numerical ground truth.
"""

import numpy as np

from stokes_spectra import akers_milewski, find_collisions, isola_points, triad_isola

model = akers_milewski(2.0)
eps = 1e-3

coll = [c for c in find_collisions(model, 1, (-6, 6)) if c.krein_negative][0]
iso = triad_isola(model, coll)
print(f"collision: (k1,k2)=({coll.k1},{coll.k2}) p0={coll.p0:.6f} "
      f"lambda0={coll.lambda0.imag:+.6f}i")
print(f"mode-ratio modulus rho = {iso.rho:.6f}")
print(f"real semi-axis (growth) coefficient = {iso.re_amp:+.6f} "
      f"= sqrt(p0 (1-p0)) = {np.sqrt(coll.p0 * (1 - coll.p0)):.6f}")

thetas = np.linspace(0, 2 * np.pi, 8, endpoint=False)
pairs = isola_points(model, coll, eps, thetas, N=24, isola=iso)
print(f"\n  theta     asymptotic lambda            continued lambda             |diff|")
for th, pr in zip(thetas, pairs):
    pred = iso.lambda_at(float(th), eps)
    print(f"  {th:5.2f}  {pred.real:+.6e}{pred.imag:+.6f}i  "
          f"{pr.lam.real:+.6e}{pr.lam.imag:+.6f}i  {abs(pr.lam - pred):.1e}")

lams = np.array([p.lam for p in pairs])
print(f"\nmax growth: asymptotic {iso.max_growth_rate(eps):.6e}  "
      f"numeric {lams.real.max():.6e}")
