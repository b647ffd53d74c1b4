"""Closed-form asymptotics of high-frequency instabilities.

Near a nonzero collision the eigenvalue and Floquet exponent are expanded in
the amplitude with the complex ratio of the two colliding modes as the free
parameter.  Requiring a real Floquet exponent pins the modulus of that ratio
and leaves its phase ``theta`` parameterizing a closed curve of eigenvalues
(the isola):

* triads (m = 1): the curve is an ellipse centred at the collision, semi-axes
  O(eps), traced by ``lambda = lambda0 + eps lambda1(theta)``;
* quartets (m = 2): an ellipse with O(eps^2) axes whose centre also drifts
  along the imaginary axis at O(eps^2);
* higher order (m >= 3): the corrections stay purely imaginary, so these
  collisions shift but do not destabilize at this order.

Sign conventions follow ``lambda0(k, p) = i (omega(k+p) - c0 (k+p))``
throughout, matching :mod:`stokes_spectra.flatspec` and the numerical
spectrum of :mod:`stokes_spectra.hill`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dispersion import DispersionModel, omega, phase_velocity
from .exceptions import (
    DegenerateGroupVelocityError,
    DegenerateQuartetError,
    SecondaryResonanceError,
    StableCollisionError,
)
from .flatspec import Collision

TOL_SECONDARY = 1e-10


class IsolaKind(enum.Enum):
    TRIAD = "triad"
    QUARTET = "quartet"
    HIGHER_ORDER = "higher-order"


@dataclass(frozen=True)
class IsolaModel:
    """theta-parameterized asymptotic isola attached to one collision.

    The eigenvalue curve at amplitude eps is

        lambda(theta) = lambda0 + eps^order *
            (re_amp sin(theta) + i (im_amp cos(theta) + center_im))

    and the matching Floquet exponent is

        p(theta) = p0 + eps^order * (p_cos cos(theta) + p_const).

    ``center_im`` and ``p_const`` vanish for triads; ``order`` is 1 for
    triads and 2 for quartets.
    """

    collision: Collision
    kind: IsolaKind
    rho: float
    order: int
    re_amp: float
    im_amp: float
    center_im: float
    p_cos: float
    p_const: float

    def lambda_at(self, theta, eps: float):
        theta = np.asarray(theta, dtype=float)
        corr = self.re_amp * np.sin(theta) + 1j * (self.im_amp * np.cos(theta) + self.center_im)
        out = self.collision.lambda0 + eps**self.order * corr
        return out if theta.ndim else complex(out)

    def p_at(self, theta, eps: float):
        theta = np.asarray(theta, dtype=float)
        out = self.collision.p0 + eps**self.order * (self.p_cos * np.cos(theta) + self.p_const)
        return out if theta.ndim else float(out)

    def max_growth_rate(self, eps: float) -> float:
        """max over theta of Re lambda; attained at sin(theta) = +-1."""
        return abs(self.re_amp) * eps**self.order

    def sample(self, eps: float, n_theta: int = 256):
        """(theta, lambda, p) arrays on a uniform closed theta grid."""
        theta = np.linspace(0.0, 2.0 * np.pi, n_theta, endpoint=False)
        return theta, self.lambda_at(theta, eps), self.p_at(theta, eps)


@dataclass(frozen=True)
class QuartetCoeffs:
    """Real coefficients of the second-order quartet solvability system."""

    alpha1_plus: float
    alpha1_minus: float
    alpha2_plus: float
    alpha2_minus: float
    A: float
    B: float
    C: float
    E: float
    F: float
    G: float
    D: float
    c2: float

    @property
    def krein_ratio(self) -> float:
        return self.G / self.E

    @property
    def unstable(self) -> bool:
        return self.krein_ratio > 0.0


def _require_distinct_cg(collision: Collision):
    if collision.degenerate or collision.cg1 == collision.cg2:
        raise DegenerateGroupVelocityError(
            f"colliding modes at p0={collision.p0:.6f} share a group velocity")


def triad_isola(model: DispersionModel, collision: Collision) -> IsolaModel:
    """First-order isola of a triad (m = 1) collision.

    With mu_j = k_j + p0 and rho^2 = -mu2/mu1 the eigenvalue correction is

        lambda1(theta) = i (mu1 rho e^{i theta} cg2~ - cg1~ mu2 rho^{-1} e^{-i theta})
                         / (cg2~ - cg1~),

    whose real part is -(rho mu1 cg2~ + rho^{-1} cg1~ mu2) sin(theta) /
    (cg2~ - cg1~); the Floquet correction is
    p1(theta) = (mu1 rho - mu2 rho^{-1}) cos(theta) / (cg2~ - cg1~).

    Raises
    ------
    StableCollisionError
        If the colliding wavenumbers have the same sign (Krein condition
        fails); real beta then forces a purely imaginary correction.
    DegenerateGroupVelocityError
        If the traveling-frame group velocities coincide.
    """
    if collision.m != 1:
        raise ValueError("triad_isola needs a resonance order m = 1 collision")
    _require_distinct_cg(collision)
    mu1 = collision.k1 + collision.p0
    mu2 = collision.k2 + collision.p0
    if mu1 * mu2 >= 0.0:
        raise StableCollisionError(
            "colliding modes have the same sign; the isola degenerates to the axis")
    ct1, ct2 = collision.cg1, collision.cg2
    den = ct2 - ct1
    rho = float(np.sqrt(-mu2 / mu1))
    re_amp = -(rho * mu1 * ct2 + ct1 * mu2 / rho) / den
    im_amp = (rho * mu1 * ct2 - ct1 * mu2 / rho) / den
    p_cos = (mu1 * rho - mu2 / rho) / den
    return IsolaModel(collision, IsolaKind.TRIAD, rho, 1,
                      re_amp, im_amp, 0.0, p_cos, 0.0)


def _alpha(model: DispersionModel, mu: float, side: int) -> float:
    """First-order sideband coefficient i (mu+side) / (L(mu) - L(mu+side))."""
    c0 = omega(model, 1.0)
    lam = lambda q: 1j * (omega(model, q) - c0 * q)
    den = lam(mu) - lam(mu + side)
    if abs(den) < TOL_SECONDARY:
        raise SecondaryResonanceError(
            f"shifted mode {mu + side:.6f} collides with {mu:.6f}")
    val = 1j * (mu + side) / den
    return float(val.real)


def stokes_second_harmonic(model: DispersionModel) -> float:
    """Coefficient 1 / (2 (c0 - c_p(2))): both the second-harmonic amplitude
    and the velocity correction of the small wave."""
    c0 = omega(model, 1.0)
    return 1.0 / (2.0 * (c0 - phase_velocity(model, 2.0)))


def quartet_krein_ratio(model: DispersionModel, k1: int, k2: int, p0: float) -> float:
    """G/E for a quartet collision; positivity signals instability.

    The group-velocity denominators cancel in the ratio, so this needs only
    the sideband coefficients and the second-harmonic constant.
    """
    mu1, mu2 = k1 + p0, k2 + p0
    D = stokes_second_harmonic(model)
    a1p = _alpha(model, mu1, +1)
    a2m = _alpha(model, mu2, -1)
    num = -mu2 * (a1p + D)
    den = mu1 * (a2m + D)
    if den == 0.0:
        raise DegenerateQuartetError("vanishing quartet coefficient E")
    return num / den


def quartet_coeffs(model: DispersionModel, collision: Collision) -> QuartetCoeffs:
    """Solvability coefficients of the second-order quartet system.

    All outputs are real.  ``D`` equals the second-harmonic Stokes
    coefficient c2: the only second-order forcing beyond the sideband terms
    is the interaction of the colliding modes with the second harmonic of
    the wave, whose projection carries exactly that constant.
    """
    if collision.m != 2:
        raise ValueError("quartet_coeffs needs a resonance order m = 2 collision")
    _require_distinct_cg(collision)
    p0 = collision.p0
    mu1, mu2 = collision.k1 + p0, collision.k2 + p0
    ct1, ct2 = collision.cg1, collision.cg2
    den = ct2 - ct1
    D = c2 = stokes_second_harmonic(model)
    a1p = _alpha(model, mu1, +1)
    a1m = _alpha(model, mu1, -1)
    a2p = _alpha(model, mu2, +1)
    a2m = _alpha(model, mu2, -1)
    s1 = a1p + a1m - c2
    s2 = a2p + a2m - c2
    A = -ct2 * mu1 * (a2m + D) / den
    B = (-ct2 * mu1 * s1 + ct1 * mu2 * s2) / den
    C = ct1 * mu2 * (a1p + D) / den
    E = mu1 * (a2m + D) / den
    F = (mu1 * s1 - mu2 * s2) / den
    G = -mu2 * (a1p + D) / den
    if E == 0.0:
        raise DegenerateQuartetError("vanishing quartet coefficient E")
    return QuartetCoeffs(a1p, a1m, a2p, a2m, A, B, C, E, F, G, D, c2)


def quartet_isola(coeffs: QuartetCoeffs, collision: Collision) -> IsolaModel:
    """Second-order isola of a quartet collision.

    With rho = sqrt(G/E) the eigenvalue correction is

        lambda2(theta) = -i (A rho e^{i theta} + B + C rho^{-1} e^{-i theta}),

    an ellipse with real semi-axis (A rho - C/rho), imaginary semi-axis
    (A rho + C/rho) and centre drifted by -B along the imaginary axis; the
    Floquet correction is p2(theta) = (E rho + G/rho) cos(theta) + F.

    Raises
    ------
    StableCollisionError
        If G/E <= 0 (Krein condition fails).
    """
    ratio = coeffs.krein_ratio
    if ratio <= 0.0:
        raise StableCollisionError("G/E <= 0: the quartet collision does not destabilize")
    rho = float(np.sqrt(ratio))
    re_amp = coeffs.A * rho - coeffs.C / rho
    im_amp = -(coeffs.A * rho + coeffs.C / rho)
    center_im = -coeffs.B
    p_cos = coeffs.E * rho + coeffs.G / rho
    return IsolaModel(collision, IsolaKind.QUARTET, rho, 2,
                      re_amp, im_amp, center_im, p_cos, coeffs.F)


def higher_order_corrections(model: DispersionModel, collision: Collision):
    """Second-order corrections (lambda2, p2) for collisions with m >= 3.

    The mode-ratio parameter divides out of the solvability system, so the
    result is independent of it, lambda2 is purely imaginary, and p2 is real:
    these collisions do not destabilize at second order.
    """
    if collision.m < 3:
        raise ValueError("higher_order_corrections needs m >= 3")
    _require_distinct_cg(collision)
    p0 = collision.p0
    mu1, mu2 = collision.k1 + p0, collision.k2 + p0
    ct1, ct2 = collision.cg1, collision.cg2
    den = ct2 - ct1
    c2 = stokes_second_harmonic(model)
    s1 = _alpha(model, mu1, +1) + _alpha(model, mu1, -1) - c2
    s2 = _alpha(model, mu2, +1) + _alpha(model, mu2, -1) - c2
    lam2 = 1j * (mu1 * ct2 * s1 - ct1 * mu2 * s2) / den
    p2 = (mu1 * s1 - mu2 * s2) / den
    return lam2, float(p2)


def isola_for(model: DispersionModel, collision: Collision) -> IsolaModel:
    """Dispatch on the resonance order; higher orders have no isola."""
    if collision.m == 1:
        return triad_isola(model, collision)
    if collision.m == 2:
        return quartet_isola(quartet_coeffs(model, collision), collision)
    raise StableCollisionError(
        f"order-{collision.m} collisions stay imaginary at second order")
