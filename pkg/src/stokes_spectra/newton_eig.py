"""Continuation of individual eigenpairs in amplitude.

Instead of solving for the whole spectrum, a single eigenpair ``(lambda, v)``
of the Bloch matrix is tracked: the eigenvalue equation is augmented with the
pinning condition ``v[k_pin] = 1`` and solved by a quasi-Newton iteration
(full Jacobian once, rank-one updates afterwards, refresh on a failed step).
Seeded from the isola asymptotics at small amplitude and stepped upward in
``eps``, this produces the "circles" validating each asymptotic curve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dispersion import DispersionModel
from .exceptions import NewtonDivergedError
from .flatspec import Collision
from . import hill
from .highfreq import IsolaModel, higher_order_corrections
from .stokes import StokesWave, stokes_expand

TOL_NEWTON = 1e-12
MAX_ITER = 50


@dataclass(frozen=True)
class EigenPair:
    """One converged eigenpair of the Bloch matrix at (epsilon, p)."""

    lam: complex
    v: np.ndarray
    p: float
    epsilon: float
    residual: float
    iters: int

    @property
    def n_modes(self) -> int:
        return (len(self.v) - 1) // 2


def _defect(M, v, lam, pin):
    r = M @ v - lam * v
    return np.concatenate([r, [v[pin] - 1.0]])


def refine(model: DispersionModel, wave: StokesWave, p: float, lam0: complex,
           v0: np.ndarray, pin_mode: int, N: int,
           tol: float = TOL_NEWTON, max_iter: int = MAX_ITER) -> EigenPair:
    """Quasi-Newton solution of the pinned eigenproblem from a nearby guess.

    Parameters
    ----------
    lam0, v0 : seed eigenvalue and coefficient vector over modes -N..N.
    pin_mode : integer mode whose coefficient is held at exactly 1.

    Raises
    ------
    NewtonDivergedError
        If the residual is not below ``tol`` after ``max_iter`` iterations;
        the exception carries the residual history.
    """
    M = hill.assemble(model, wave, p, N)
    pin = N + pin_mode
    dim = 2 * N + 1
    v = np.asarray(v0, dtype=complex).copy()
    if v[pin] == 0.0:
        raise ValueError("seed vector vanishes on the pin mode")
    v /= v[pin]
    lam = complex(lam0)

    def jacobian(v, lam):
        J = np.zeros((dim + 1, dim + 1), dtype=complex)
        J[:dim, :dim] = M - lam * np.eye(dim)
        J[:dim, dim] = -v
        J[dim, pin] = 1.0
        return J

    F = _defect(M, v, lam, pin)
    hist = [float(np.max(np.abs(F)))]
    if hist[0] < tol:
        return EigenPair(lam, v, float(p), wave.epsilon, hist[0], 0)

    J = jacobian(v, lam)
    fresh = True
    stalls = 0
    for it in range(1, max_iter + 1):
        try:
            dx = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            J, fresh = jacobian(v, lam), True
            dx = np.linalg.lstsq(J, -F, rcond=None)[0]
        v_new = v + dx[:dim]
        lam_new = lam + dx[dim]
        F_new = _defect(M, v_new, lam_new, pin)
        rn = float(np.max(np.abs(F_new)))
        if rn >= hist[-1] and rn > tol:
            if not fresh:
                # failed quasi-Newton step: refresh the Jacobian and redo it
                J, fresh = jacobian(v, lam), True
                hist.append(hist[-1])
                continue
            stalls += 1
            if stalls >= 2:
                # oscillating between a symmetric just-split pair: nudge the
                # eigenvalue guess off the axis of symmetry, toward Re > 0
                lam = lam + max(rn, 10.0 * tol)
                F = _defect(M, v, lam, pin)
                J, fresh = jacobian(v, lam), True
                stalls = 0
                hist.append(float(np.max(np.abs(F))))
                continue
        else:
            # Broyden update keeps the Jacobian cheap between refreshes
            denom = np.vdot(dx, dx)
            if denom != 0.0:
                J += np.outer((F_new - F) - J @ dx, dx.conj()) / denom
                fresh = False
        v, lam, F = v_new, lam_new, F_new
        hist.append(rn)
        if rn < tol:
            v = v / v[pin]
            rfin = float(np.max(np.abs(_defect(M, v, lam, pin))))
            return EigenPair(lam, v, float(p), wave.epsilon, rfin, it)
    raise NewtonDivergedError(
        f"eigenpair refinement stalled at residual {hist[-1]:.3e}", history=hist)


def _seed_vector(collision: Collision, theta: float, rho: float, N: int) -> np.ndarray:
    v = np.zeros(2 * N + 1, dtype=complex)
    v[N + collision.k1] = 1.0
    v[N + collision.k2] = rho * np.exp(1j * theta)
    return v


def _asymptotic_path(model, collision, theta, isola: IsolaModel | None):
    """(lam(eps), p(eps)) predictors for the seeded collision."""
    if isola is None and collision.m <= 2:
        from .highfreq import isola_for
        isola = isola_for(model, collision)
    if isola is not None:
        return (lambda e: isola.lambda_at(theta, e),
                lambda e: isola.p_at(theta, e),
                isola.rho)
    lam2, p2 = higher_order_corrections(model, collision)
    return (lambda e: collision.lambda0 + e**2 * lam2,
            lambda e: collision.p0 + e**2 * p2,
            1.0)


def continue_in_epsilon(model: DispersionModel, collision: Collision, theta: float,
                        eps_targets, N: int = 32, isola: IsolaModel | None = None,
                        wave_builder=None, max_bisect: int = 6) -> list[EigenPair]:
    """Track the collision eigenpair along increasing amplitude targets.

    The Floquet exponent follows the asymptotic predictor of the isola (or
    the second-order shift for m >= 3 collisions), the eigenvector is carried
    from the previous amplitude, and the eigenvalue seed adds the asymptotic
    increment to the last converged value.  A step that diverges is bisected
    (up to ``max_bisect`` times per gap).

    Returns one :class:`EigenPair` per entry of ``eps_targets`` (which must
    be nondecreasing).
    """
    if wave_builder is None:
        wave_builder = lambda m, e: stokes_expand(m, e, 2)
    eps_targets = list(eps_targets)
    if any(b < a for a, b in zip(eps_targets, eps_targets[1:])):
        raise ValueError("eps_targets must be nondecreasing")
    lam_of, p_of, rho = _asymptotic_path(model, collision, theta, isola)
    pin = collision.k1

    v = _seed_vector(collision, theta, rho, N)
    lam_cur = complex(collision.lambda0)
    eps_cur = 0.0
    out = []
    for target in eps_targets:
        if target == 0.0:
            out.append(EigenPair(lam_cur, v.copy(), collision.p0, 0.0, 0.0, 0))
            continue
        stack = [target]
        while stack:
            eps_next = stack[-1]
            wave = wave_builder(model, eps_next)
            seed_lam = lam_cur + (lam_of(eps_next) - lam_of(eps_cur))
            try:
                pair = refine(model, wave, p_of(eps_next), seed_lam, v, pin, N)
            except NewtonDivergedError:
                if len(stack) > max_bisect:
                    raise NewtonDivergedError(
                        f"continuation failed between eps={eps_cur:g} and {eps_next:g}")
                stack.append(0.5 * (eps_cur + eps_next))
                continue
            stack.pop()
            v = pair.v
            lam_cur = pair.lam
            eps_cur = eps_next
        out.append(pair)
    return out


def isola_points(model: DispersionModel, collision: Collision, eps: float,
                 thetas, N: int = 32, isola: IsolaModel | None = None,
                 wave_builder=None) -> list[EigenPair]:
    """Converged eigenpairs around the isola at one amplitude."""
    if isola is None:
        from .highfreq import isola_for
        isola = isola_for(model, collision)
    return [continue_in_epsilon(model, collision, th, [eps], N=N, isola=isola,
                                wave_builder=wave_builder)[-1]
            for th in np.asarray(thetas, dtype=float)]
