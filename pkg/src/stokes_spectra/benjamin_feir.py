"""Modulational (Benjamin--Feir) instability asymptotics.

The spectrum bifurcating from the origin is a figure-eight.  Expanding the
spectral data in amplitude around the triple eigenvalue at Floquet exponent
zero and eliminating the free mode ratio yields two constants

    U = 1/(omega'(0) - omega'(1)) + 1/(omega(2) - 2 c0),
    V = -omega''(1)/2,

a discriminant ``Delta = -U/V`` whose positivity is the instability
criterion, and the closed curve (both signs traced)

    Re lambda = -eps^2 U sin(theta),
    Im lambda =  eps cg~(1) p1(theta),     p = eps p1(theta),
    p1(theta) = +- sqrt(2 Delta) cos(theta/2),

a lemniscate through the origin.  For the Akers--Milewski family the jump
at k = 0 removes the mean mode from the nullspace; the same elimination
then gives effective constants U = -1/(2 c0 - omega(2)) and V = -sigma^2
with no derivative-at-zero term at all, the real part keeps the same form,
and the imaginary part is pushed to third order (obtained here by a fit to
the numerical spectrum, since no closed form is available at that order).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dispersion import DispersionModel, Family, group_velocity, omega, second_derivative
from .exceptions import (
    BFResonanceError,
    DegenerateCurvatureError,
    SignRestrictionError,
    StableModelError,
)
from . import hill
from .stokes import stokes_expand

TOL_DENOM = 1e-12


@dataclass(frozen=True)
class LemniscateModel:
    """Constants of the modulational-instability curve for one model."""

    cg1: float
    U: float
    V: float
    delta_bf: float
    r1: float
    unstable: bool
    am_mode: bool

    @property
    def p1_max(self) -> float:
        return math.sqrt(2.0 * self.delta_bf) if self.unstable else 0.0

    def max_growth_rate(self, eps: float) -> float:
        """Largest Re over the curve: eps^2 |U| at sin(theta) = -sgn(U)."""
        return eps**2 * abs(self.U)

    def to_dict(self) -> dict:
        return {"U": self.U, "V": self.V, "delta_bf": self.delta_bf,
                "cg1": self.cg1, "r1": self.r1, "unstable": self.unstable,
                "am_mode": self.am_mode}


def bf_constants(model: DispersionModel) -> LemniscateModel:
    """Modulational-instability constants U, V, Delta for a model.

    For deep water the mean-flow term 1/(omega'(0) - omega'(1)) vanishes in
    the limit (omega'(0+) diverges).  For Akers--Milewski the mean mode is
    excluded from the nullspace outright, and matching the two remaining
    solvability conditions to the smooth template gives U = -1/(2c0 -
    omega(2)) and V = -sigma^2; this was fixed against the numerical
    spectrum rather than a one-sided derivative recipe.

    Raises
    ------
    BFResonanceError
        If a denominator of U vanishes.
    DegenerateCurvatureError
        If omega''(1) = 0, leaving the discriminant undefined.
    """
    c0 = omega(model, 1.0)
    cg1 = group_velocity(model, 1.0) - c0
    am = model.family is Family.AKERS_MILEWSKI

    den2 = omega(model, 2.0) - 2.0 * c0
    if abs(den2) < TOL_DENOM:
        raise BFResonanceError("second harmonic resonant: omega(2) = 2 omega(1)")

    if am:
        U = 1.0 / den2
        V = -0.5 * second_derivative(model, 1.0)     # = -sigma^2
    else:
        if model.h is not None and math.isinf(model.h):
            term1 = 0.0
        else:
            den1 = group_velocity(model, 0.0) - group_velocity(model, 1.0)
            if abs(den1) < TOL_DENOM:
                raise BFResonanceError("group velocities at k=0 and k=1 coincide")
            term1 = 1.0 / den1
        U = term1 + 1.0 / den2
        V = -0.5 * second_derivative(model, 1.0)
    if abs(V) < TOL_DENOM:
        raise DegenerateCurvatureError("omega''(1) = 0: discriminant undefined")
    delta = -U / V
    return LemniscateModel(cg1=float(cg1), U=float(U), V=float(V),
                           delta_bf=float(delta), r1=0.0,
                           unstable=delta > 0.0, am_mode=am)


def lemniscate(lm: LemniscateModel, eps: float, theta):
    """Both branches of the figure-eight at one theta (or theta array).

    Returns ``((lambda_plus, p_plus), (lambda_minus, p_minus))``; the sign
    tags the branch of ``p1 = +- sqrt(2 Delta) cos(theta/2)``, and the
    imaginary part is slaved to it through ``Im lambda = eps cg~(1) p1``.

    Raises
    ------
    StableModelError
        If the discriminant is not positive.
    """
    if not lm.unstable:
        raise StableModelError("no modulational instability: Delta <= 0")
    theta = np.asarray(theta, dtype=float)
    scale = 1.0 + lm.r1 * eps
    re = -(eps**2) * lm.U * np.sin(theta)
    out = []
    for sign in (+1.0, -1.0):
        p1 = sign * lm.p1_max * np.cos(theta / 2.0)
        lam = re + 1j * (eps * lm.cg1 * p1 * scale)
        p = eps * p1 * scale
        out.append((lam if theta.ndim else complex(lam),
                    p if theta.ndim else float(p)))
    return tuple(out)


def lemniscate_curve(lm: LemniscateModel, eps: float, n_theta: int = 512):
    """Dense sample of the full curve: arrays (theta, branch, lambda, p)."""
    theta = np.linspace(0.0, 2.0 * np.pi, n_theta, endpoint=False)
    (lp, pp), (lmn, pm) = lemniscate(lm, eps, theta)
    thetas = np.concatenate([theta, theta])
    branch = np.concatenate([np.ones(n_theta), -np.ones(n_theta)])
    lams = np.concatenate([lp, lmn])
    ps = np.concatenate([pp, pm])
    return thetas, branch, lams, ps


@dataclass(frozen=True)
class AmCurve:
    """Sampled Akers--Milewski figure-eight with fitted cubic imaginary part."""

    theta: np.ndarray
    branch: np.ndarray
    lam: np.ndarray
    p: np.ndarray
    im_linear: float
    im_cubic: float
    fitted: bool = True


def am_lemniscate(model: DispersionModel, eps: float, n_theta: int = 256,
                  n_modes: int = 24, n_p: int = 40) -> AmCurve:
    """Figure-eight of the Akers--Milewski family at amplitude eps > 0.

    The real part uses the closed form ``-eps^2 U sin(theta)``.  The
    imaginary part starts at third order and has no closed form here, so an
    odd cubic ``Im = g1 p + g3 p^3`` is fitted to the unstable eigenvalues
    of the numerical spectrum swept over the predicted Floquet window.

    Raises
    ------
    SignRestrictionError
        For eps <= 0; the amplitude expansion picks the eps > 0 branch.
    """
    if model.family is not Family.AKERS_MILEWSKI:
        raise ValueError("am_lemniscate expects an Akers-Milewski model")
    if eps <= 0.0:
        raise SignRestrictionError("the discontinuous expansion requires eps > 0")
    lm = bf_constants(model)
    if not lm.unstable:
        raise StableModelError("no modulational instability: Delta <= 0")
    wave = stokes_expand(model, eps, 2)
    pmax = 1.02 * eps * lm.p1_max
    pts_p, pts_im = [], []
    for p in np.linspace(pmax / n_p, pmax, n_p):
        sl = hill.spectrum_slice(model, wave, p, n_modes)
        un = sl.unstable(tol=10 * hill.TOL_UNSTABLE)
        un = un[np.abs(un) < 10.0 * max(eps * lm.p1_max, eps)]
        if len(un):
            lam = un[np.argmax(un.real)]
            pts_p.append(p)
            pts_im.append(lam.imag)
    if len(pts_p) >= 4:
        P = np.asarray(pts_p)
        A = np.stack([P, P**3], axis=1)
        g1, g3 = np.linalg.lstsq(A, np.asarray(pts_im), rcond=None)[0]
    else:
        g1 = g3 = 0.0

    theta = np.linspace(0.0, 2.0 * np.pi, n_theta, endpoint=False)
    thetas = np.concatenate([theta, theta])
    branch = np.concatenate([np.ones(n_theta), -np.ones(n_theta)])
    re = -(eps**2) * lm.U * np.sin(thetas)
    p = branch * eps * lm.p1_max * np.cos(thetas / 2.0)
    lam = re + 1j * (g1 * p + g3 * p**3)
    return AmCurve(thetas, branch, lam, p, float(g1), float(g3))


@dataclass(frozen=True)
class GrowthReport:
    """Leading growth rates of every instability mechanism of one model."""

    model: DispersionModel
    triads: list            # (Collision, eps-coefficient of max Re)
    quartets: list          # (Collision, eps^2-coefficient of max Re)
    bf_amp: float | None    # eps^2-coefficient |U|, None if BF is stable/absent
    verdict: str

    def rows(self):
        out = []
        for coll, amp in self.triads:
            out.append(("triad", coll.m, coll.p0, 1, amp))
        for coll, amp in self.quartets:
            out.append(("quartet", coll.m, coll.p0, 2, amp))
        if self.bf_amp is not None:
            out.append(("benjamin-feir", 0, 0.0, 2, self.bf_amp))
        return out


def compare_growth(model: DispersionModel, k_range=(-20, 20)) -> GrowthReport:
    """Rank the instability mechanisms by leading-order growth rate.

    Triads grow like eps and therefore dominate whenever one exists.  At
    second order the quartet coefficient |A rho - C/rho| competes with the
    modulational coefficient |U|; with no high-frequency instability at all,
    the modulational mechanism wins by default.
    """
    from .flatspec import find_collisions
    from .highfreq import quartet_coeffs, quartet_isola, triad_isola

    triads = []
    for coll in find_collisions(model, 1, k_range):
        if coll.krein_negative and not coll.degenerate:
            iso = triad_isola(model, coll)
            triads.append((coll, abs(iso.re_amp)))
    quartets = []
    for coll in find_collisions(model, 2, k_range):
        if coll.krein_negative and not coll.degenerate:
            iso = quartet_isola(quartet_coeffs(model, coll), coll)
            quartets.append((coll, abs(iso.re_amp)))
    try:
        lm = bf_constants(model)
        bf_amp = abs(lm.U) if lm.unstable else None
    except (BFResonanceError, DegenerateCurvatureError):
        bf_amp = None

    if triads:
        verdict = "triad-dominates"
    elif quartets and bf_amp is not None:
        q = max(a for _, a in quartets)
        verdict = "bf-dominates" if bf_amp > q else "quartet-dominates"
    elif quartets:
        verdict = "quartet-dominates"
    elif bf_amp is not None:
        verdict = "bf-dominates-by-default"
    else:
        verdict = "stable-at-second-order"
    return GrowthReport(model, triads, quartets, bf_amp, verdict)
