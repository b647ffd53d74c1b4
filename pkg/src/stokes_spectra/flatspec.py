"""Flat-state spectrum and eigenvalue collisions.

At zero amplitude the linearization about the flat state diagonalizes in
Fourier modes ``exp(i (k + p) x)`` with purely imaginary eigenvalues

    lambda_0(k, p) = i (omega(k + p) - c0 (k + p)),      c0 = omega(1).

Repeated eigenvalues (collisions) seed instabilities for small amplitude.
:func:`find_collisions` locates all collisions of a given resonance order
``m = k2 - k1`` by a dense scan in the Floquet exponent followed by
bisection refinement, and classifies each by its sign (Krein) condition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dispersion import DispersionModel, Family, group_velocity, omega
from .exceptions import JumpDiscontinuityError

TOL_COLLISION = 1e-12
# roots this close to p = 0 or 1 belong to the modulational cluster, not to
# the high-frequency family
EDGE_EXCLUSION = 1e-8
# colliding modes with group velocities closer than this leave the
# solvability system singular
TOL_DEGENERATE_CG = 1e-8


@dataclass(frozen=True)
class Collision:
    """A repeated flat-state eigenvalue.

    ``k1 < k2`` are the integer mode labels, ``m = k2 - k1`` the resonance
    order (1 = triad, 2 = quartet, >= 3 higher order), ``p0`` the Floquet
    exponent, and ``lambda0`` the shared purely imaginary eigenvalue.
    ``cg1``/``cg2`` are the traveling-frame group velocities at the two
    colliding wavenumbers.  ``krein_negative`` marks the sign condition that
    admits instability; ``degenerate`` marks equal group velocities (the
    asymptotics are unavailable there).
    """

    k1: int
    k2: int
    m: int
    p0: float
    lambda0: complex
    krein_negative: bool
    cg1: float
    cg2: float
    degenerate: bool = False

    @property
    def is_benjamin_feir(self) -> bool:
        return self.p0 == 0.0 and self.lambda0 == 0.0


def flat_eigenvalue(model: DispersionModel, k: int, p: float) -> complex:
    """Eigenvalue lambda_0(k, p) of the zero-amplitude linearization."""
    c0 = omega(model, 1.0)
    kp = k + p
    if model.family is Family.AKERS_MILEWSKI and kp == 0.0:
        raise JumpDiscontinuityError("flat eigenvalue undefined on the jump (k + p = 0)")
    return 1j * (omega(model, kp) - c0 * kp)


def _collision_residual(model: DispersionModel, m: int, k1, p):
    """m*omega(1) + omega(k1+p) - omega(k1+m+p); zero exactly at a collision."""
    c0 = omega(model, 1.0)
    return m * c0 + omega(model, k1 + p) - omega(model, k1 + m + p)


def _refine_root(model, m, k1, lo, hi, f_lo):
    """Bisection to |interval| ~ 1e-15, then the residual is well below tol."""
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        f_mid = _collision_residual(model, m, k1, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def _krein_negative(model, k1, k2, p0, cg1, cg2) -> bool:
    m = k2 - k1
    if m == 1:
        return (k1 + p0) * (k2 + p0) < 0.0
    if m == 2:
        # sign condition of the quartet coefficient ratio; import locally to
        # keep the module dependency one-way
        from .highfreq import quartet_krein_ratio
        try:
            return quartet_krein_ratio(model, k1, k2, p0) > 0.0
        except Exception:
            return False
    return False


def find_collisions(model: DispersionModel, m: int,
                    k_range: tuple[int, int] = (-20, 20),
                    p_grid: int = 10_000) -> list[Collision]:
    """All order-``m`` collisions with Floquet exponent in (0, 1).

    Scans the residual of the resonance condition on a dense grid for every
    admissible pair ``(k1, k1 + m)`` inside ``k_range`` and refines each sign
    change by bisection.  Roots within 1e-8 of the interval ends belong to
    the modulational cluster and are dropped.

    Results are sorted by (p0, k1) and carry the Krein classification.
    """
    if m < 1:
        raise ValueError("resonance order m must be >= 1")
    c0 = omega(model, 1.0)
    ps = np.linspace(0.0, 1.0, p_grid + 1)[1:-1]
    found: list[Collision] = []
    for k1 in range(k_range[0], k_range[1] - m + 1):
        k2 = k1 + m
        r = m * c0 + omega(model, k1 + ps) - omega(model, k2 + ps)
        sign_change = np.nonzero(np.diff(np.sign(r)) != 0)[0]
        roots = []
        for i in sign_change:
            p0 = _refine_root(model, m, k1, ps[i], ps[i + 1], r[i])
            if min(p0, 1.0 - p0) < EDGE_EXCLUSION:
                continue
            if abs(_collision_residual(model, m, k1, p0)) > 1e-10:
                continue
            # a root sitting on a grid node flags two adjacent sign changes
            if roots and abs(p0 - roots[-1]) < 1e-9:
                continue
            roots.append(p0)
        for p0 in roots:
            lam = flat_eigenvalue(model, k2, p0)
            cg1 = group_velocity(model, k1 + p0) - c0
            cg2 = group_velocity(model, k2 + p0) - c0
            degenerate = abs(cg1 - cg2) < TOL_DEGENERATE_CG
            krein = False if degenerate else _krein_negative(model, k1, k2, p0, cg1, cg2)
            found.append(Collision(k1, k2, m, p0, lam, krein, cg1, cg2, degenerate))
    found.sort(key=lambda c: (c.p0, c.k1))
    return found


def benjamin_feir_modes(model: DispersionModel, k_range: tuple[int, int] = (-20, 20)) -> list[int]:
    """Integer modes in the nullspace of the flat linearization at p = 0.

    For smooth odd dispersion with a nonresonant carrier this is exactly
    ``[-1, 0, 1]``, the seed of the modulational instability.  The
    Akers--Milewski family keeps only ``[-1, 1]``: the mean mode leaves the
    nullspace because of the jump at the origin.
    """
    c0 = omega(model, 1.0)
    out = []
    for k in range(k_range[0], k_range[1] + 1):
        if k == 0:
            if model.family is not Family.AKERS_MILEWSKI:
                out.append(0)
            continue
        if abs(omega(model, float(k)) - c0 * k) < 1e-12:
            out.append(k)
    return out


def benjamin_feir_collision(model: DispersionModel) -> Collision:
    """The triple (double for Akers--Milewski) eigenvalue at the origin."""
    c0 = omega(model, 1.0)
    cg = group_velocity(model, 1.0) - c0
    return Collision(k1=-1, k2=1, m=2, p0=0.0, lambda0=0.0j,
                     krein_negative=False, cg1=cg, cg2=cg)
