"""Small-amplitude periodic traveling waves (Stokes waves).

Two constructions of the same object:

* :func:`stokes_expand` -- the amplitude power series, solved order by order
  from the hierarchy of linear problems.  Through second order it reads

      u = eps cos x + eps^2 /(2 (c0 - c_p(2))) cos 2x + ...
      c = c_p(1)   + eps^2 /(2 (c0 - c_p(2))) + ...

* :func:`stokes_numeric` -- Newton iteration on the Galerkin truncation of
  the steady equation ``-c u' + L u + (u^2)' = 0``, used as the independent
  validation oracle for the expansion.

Both pin the first cosine coefficient to ``eps`` exactly (so the complex
coefficient of ``exp(ix)`` is ``eps/2``) and fix the zero mode to 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dispersion import DispersionModel, omega, phase_velocity
from .exceptions import ContinuationFailureError, WiltonResonanceError

# carrier is resonant with its n-th harmonic if |c0 - c_p(n)| falls below this
TOL_RESONANT = 1e-10

TOL_NEWTON = 1e-12
MAX_NEWTON_ITER = 50


@dataclass(frozen=True)
class StokesWave:
    """A traveling wave at one amplitude.

    Attributes
    ----------
    model : DispersionModel
    epsilon : float
        Amplitude parameter; equals the coefficient of cos(x).
    order : int
        Truncation order of the expansion (0 means numerically converged).
    c : float
        Wave velocity at this amplitude.
    cos_coeffs : ndarray
        ``cos_coeffs[n]`` multiplies ``cos(n x)``; index 0 is the (zero) mean.
    c_series : tuple
        Velocity coefficients (c_0, c_1, ...) when built by expansion.
    """

    model: DispersionModel
    epsilon: float
    order: int
    c: float
    cos_coeffs: np.ndarray
    c_series: tuple = field(default=())

    @property
    def fourier(self) -> np.ndarray:
        """Complex coefficients u_hat_n for n >= 0 (u_hat_{-n} = u_hat_n, all real)."""
        uh = self.cos_coeffs / 2.0
        uh = uh.astype(float).copy()
        uh[0] = self.cos_coeffs[0]
        return uh

    def fourier_full(self, nmax: int) -> np.ndarray:
        """Two-sided coefficient vector (u_hat_{-nmax}, ..., u_hat_{nmax})."""
        uh = np.zeros(2 * nmax + 1)
        top = min(nmax, len(self.cos_coeffs) - 1)
        for n in range(1, top + 1):
            uh[nmax + n] = uh[nmax - n] = self.cos_coeffs[n] / 2.0
        uh[nmax] = self.cos_coeffs[0]
        return uh

    def evaluate(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.full_like(x, self.cos_coeffs[0])
        for n in range(1, len(self.cos_coeffs)):
            out += self.cos_coeffs[n] * np.cos(n * x)
        return out

    def to_dict(self) -> dict:
        return {
            "family": self.model.family.value,
            "params": self.model.params,
            "epsilon": self.epsilon,
            "c": self.c,
            "coeffs": [c / 2.0 if n else c
                       for n, c in enumerate(self.cos_coeffs.tolist())],
        }


def _check_nonresonant(model: DispersionModel, n: int, c0: float) -> float:
    cpn = phase_velocity(model, float(n))
    if abs(c0 - cpn) < TOL_RESONANT:
        raise WiltonResonanceError(
            f"harmonic {n} is resonant with the carrier (|c0 - c_p({n})| < {TOL_RESONANT:g})")
    return cpn


def stokes_expand(model: DispersionModel, epsilon: float, order: int = 2) -> StokesWave:
    """Stokes wave by the amplitude power series, truncated at ``order``.

    The order-j profile is a cosine polynomial with harmonics up to j; its
    coefficients follow from mode-by-mode division by ``n (c_p(n) - c0)`` and
    the projection on cos(x) fixes the velocity coefficient ``c_{j-1}``.

    Raises
    ------
    WiltonResonanceError
        If a needed harmonic is resonant with the carrier, i.e.
        ``|c0 - c_p(n)| < 1e-10`` for some ``2 <= n <= order``.
    """
    if order < 2:
        raise ValueError("expansion order must be at least 2")
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    c0 = omega(model, 1.0)

    # profiles[j][n] is the cos(n x) coefficient of the order-j profile u_j
    profiles = [np.zeros(order + 1), np.zeros(order + 1)]
    profiles[1][1] = 1.0
    c_series = [c0]

    # the order-j equation fixes c_{j-1} by its cos(x) projection, so the
    # velocity accurate through eps^order needs one pass beyond the profiles
    for j in range(2, order + 2):
        # cosine-coefficient convolution of sum_{l=1}^{j-1} u_l u_{j-l}
        quad = np.zeros(2 * j + 1)
        for l in range(1, min(j, len(profiles))):
            if j - l >= len(profiles):
                continue
            ul, um = profiles[l], profiles[j - l]
            for n1 in range(1, len(ul)):
                if ul[n1] == 0.0:
                    continue
                for n2 in range(1, len(um)):
                    if um[n2] == 0.0:
                        continue
                    # cos a cos b = (cos(a+b) + cos(a-b)) / 2
                    quad[n1 + n2] += ul[n1] * um[n2] / 2.0
                    quad[abs(n1 - n2)] += ul[n1] * um[n2] / 2.0

        # solvability: the gauge a_1^{(l)} = 0 for l >= 2 makes every velocity
        # cross term vanish, leaving c_{j-1} = quadratic forcing on cos(x)
        c_series.append(quad[1])
        if j > order:
            break
        uj = np.zeros(order + 1)
        for n in range(2, j + 1):
            forcing = n * quad[n]
            for m in range(1, j - 1):
                forcing -= n * c_series[m] * profiles[j - m][n]
            _check_nonresonant(model, n, c0)
            uj[n] = forcing / (c0 * n - omega(model, float(n)))
        profiles.append(uj)

    # assemble at this amplitude
    coeffs = np.zeros(order + 1)
    c = 0.0
    for j in range(1, order + 1):
        coeffs += epsilon**j * profiles[j]
    for m, cm in enumerate(c_series):
        c += epsilon**m * cm
    return StokesWave(model, float(epsilon), order, float(c), coeffs, tuple(c_series))


def traveling_residual(wave: StokesWave, n_grid: int = 256) -> float:
    """Sup-norm of ``-c u' + L u + (u^2)'`` evaluated pseudospectrally.

    Independent of how the wave was built: synthesises u on a grid, forms the
    full (untruncated) quadratic, and applies the multiplier mode by mode.
    """
    N = len(wave.cos_coeffs) - 1
    nmax = 2 * N + 1
    x = np.linspace(0.0, 2.0 * np.pi, n_grid, endpoint=False)
    res = np.zeros(n_grid)
    # cosine coefficients of u^2 via coefficient convolution
    a = wave.cos_coeffs
    sq = np.zeros(2 * N + 1)
    for n1 in range(1, N + 1):
        if a[n1] == 0.0:
            continue
        for n2 in range(1, N + 1):
            if a[n2] == 0.0:
                continue
            sq[n1 + n2] += a[n1] * a[n2] / 2.0
            sq[abs(n1 - n2)] += a[n1] * a[n2] / 2.0
    om = omega(wave.model, np.arange(1, nmax + 1, dtype=float))
    for n in range(1, nmax + 1):
        an = a[n] if n <= N else 0.0
        qn = sq[n] if n <= 2 * N else 0.0
        # each cos(n x) term contributes (c n an - omega(n) an - n qn) sin(n x)
        res += (wave.c * n * an - om[n - 1] * an - n * qn) * np.sin(n * x)
    return float(np.max(np.abs(res)))


def stokes_numeric(model: DispersionModel, epsilon: float, n_modes: int = 32) -> StokesWave:
    """Traveling wave from Newton iteration on the Fourier-Galerkin system.

    Unknowns are the cosine coefficients a_2..a_N and the velocity c; the
    amplitude is pinned by a_1 = eps and the mean by a_0 = 0.  Converges to
    residual < 1e-12 in the Galerkin modes or raises.

    Raises
    ------
    ContinuationFailureError
        If Newton does not reach the tolerance within 50 iterations.
    """
    if n_modes < 16:
        raise ValueError("n_modes must be at least 16")
    c0 = omega(model, 1.0)
    if epsilon == 0.0:
        return StokesWave(model, 0.0, 0, float(c0), np.zeros(n_modes + 1))
    _check_nonresonant(model, 2, c0)

    N = n_modes
    om = omega(model, np.arange(1, N + 1, dtype=float))
    start = stokes_expand(model, epsilon, order=2)
    a = np.zeros(N + 1)
    a[1:3] = start.cos_coeffs[1:3]
    c = start.c

    def half_coeffs(a):
        # two-sided complex coefficients, index offset N
        uh = np.zeros(2 * N + 1)
        uh[N + 1:] = a[1:] / 2.0
        uh[:N] = a[1:][::-1] / 2.0
        return uh

    def residual(a, c):
        uh = half_coeffs(a)
        conv = np.convolve(uh, uh)          # mode n at index 2N + n
        ns = np.arange(1, N + 1)
        return ns * (-c * a[1:] / 2.0 + conv[2 * N + 1: 2 * N + 1 + N]) + om * a[1:] / 2.0

    hist = []
    for _ in range(MAX_NEWTON_ITER):
        r = residual(a, c)
        rn = float(np.max(np.abs(r)))
        hist.append(rn)
        if rn < TOL_NEWTON:
            return StokesWave(model, float(epsilon), 0, float(c), a)
        # analytic Jacobian: d conv_n / d a_m = (uh_{n-m} + uh_{n+m}) / ...
        uh = half_coeffs(a)

        def uhat(n):
            return uh[N + n] if -N <= n <= N else 0.0

        J = np.zeros((N, N))
        ns = np.arange(1, N + 1)
        for col, m in enumerate(range(2, N + 1)):
            dconv = np.array([uhat(n - m) + uhat(n + m) for n in ns])
            J[:, col] = ns * dconv
            J[m - 1, col] += (-c * ns[m - 1] + om[m - 1]) / 2.0
        J[:, N - 1] = -ns * a[1:] / 2.0     # d/dc
        try:
            step = np.linalg.solve(J, -r)
        except np.linalg.LinAlgError as exc:
            raise ContinuationFailureError(f"singular Jacobian: {exc}", residual=rn)
        a[2:] += step[:-1]
        c += step[-1]
    raise ContinuationFailureError(
        f"no convergence after {MAX_NEWTON_ITER} iterations (residual {hist[-1]:.3e})",
        residual=hist[-1])
