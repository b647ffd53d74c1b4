"""Numerical spectrum by the Fourier-Hill method.

The linearization about a wave ``u`` with velocity ``c``, restricted to
Bloch waves ``v(x) e^{i p x} e^{lambda t}``, becomes a bi-infinite matrix in
Fourier space.  Truncating to modes ``|n| <= N`` gives

    M[n, m] = i (omega(p + n) - c (p + n)) delta_{nm} + 2 i (p + n) u_hat_{n-m},

whose dense eigenvalues approximate the spectrum at Floquet exponent ``p``.
At zero amplitude the eigenvalues are exactly the flat-state values
``lambda_0(n, p)`` of :mod:`stokes_spectra.flatspec` (same sign convention).
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .dispersion import DispersionModel, Family, omega
from .exceptions import EigFailureError, JumpDiscontinuityError
from .stokes import StokesWave

TOL_UNSTABLE = 1e-10


@dataclass(frozen=True)
class SpectrumSlice:
    """All eigenvalues at one Floquet exponent and truncation."""

    p: float
    N: int
    epsilon: float
    eigenvalues: np.ndarray

    @property
    def max_re(self) -> float:
        return float(np.max(self.eigenvalues.real))

    def unstable(self, tol: float = TOL_UNSTABLE) -> np.ndarray:
        ev = self.eigenvalues
        return ev[np.abs(ev.real) > tol]

    def nearest(self, target: complex) -> complex:
        ev = self.eigenvalues
        return complex(ev[np.argmin(np.abs(ev - target))])


def assemble(model: DispersionModel, wave: StokesWave, p: float, N: int) -> np.ndarray:
    """Truncated Bloch matrix of the linearization at Floquet exponent p.

    Raises
    ------
    JumpDiscontinuityError
        If some shifted mode ``n + p`` lands on the Akers--Milewski jump.
    """
    min_n = 2 * max(wave.order, 2) + 4
    if N < min_n:
        warnings.warn(f"truncation N={N} under-resolves the wave; use N >= {min_n}",
                      stacklevel=2)
    n = np.arange(-N, N + 1)
    kp = p + n
    if model.family is Family.AKERS_MILEWSKI and np.any(kp == 0.0):
        raise JumpDiscontinuityError(
            f"mode index hits the jump: n + p = 0 for p={p!r}")
    M = np.diag(1j * (omega(model, kp) - wave.c * kp)).astype(complex)
    uhat = wave.fourier_full(2 * N)      # indices offset by 2N
    col = uhat[2 * N + (n - n[0])]       # u_hat_{n - m} as a Toeplitz table
    T = scipy.linalg.toeplitz(c=col, r=uhat[2 * N - (n - n[0])])
    M += 2j * kp[:, None] * T
    return M


def spectrum_slice(model: DispersionModel, wave: StokesWave, p: float, N: int) -> SpectrumSlice:
    """Dense eigensolve of :func:`assemble`; eigenvalues sorted by (Im, Re)."""
    M = assemble(model, wave, p, N)
    try:
        ev = scipy.linalg.eigvals(M)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigFailureError(f"dense eigensolve failed at p={p}: {exc}") from exc
    order = np.lexsort((ev.real, ev.imag))
    return SpectrumSlice(float(p), int(N), wave.epsilon, ev[order])


def sweep(model: DispersionModel, wave: StokesWave, p_list, N: int,
          jobs: int = 1) -> list[SpectrumSlice]:
    """Spectrum slices at each Floquet exponent, in input order.

    LAPACK releases the GIL, so ``jobs > 1`` runs slices on a thread pool.
    """
    p_list = list(p_list)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda p: spectrum_slice(model, wave, p, N), p_list))
    return [spectrum_slice(model, wave, p, N) for p in p_list]


def unstable_points(slices, tol: float = TOL_UNSTABLE):
    """(p, lambda) pairs of every eigenvalue with |Re| above tol."""
    out = []
    for sl in slices:
        for lam in sl.unstable(tol):
            out.append((sl.p, complex(lam)))
    return out


def is_robustly_unstable(model: DispersionModel, wave: StokesWave, p: float, N: int,
                         near: complex | None = None, radius: float = np.inf,
                         tol: float = TOL_UNSTABLE) -> bool:
    """True if an eigenvalue near ``near`` keeps Re above tol when N grows.

    Dense eigensolves of nearly defective pencils produce spurious real
    parts far above machine precision, but such noise is not reproducible
    under a truncation change, while a genuine unstable eigenvalue moves by
    far less than its real part.  Checks at N and N + 8.
    """
    found = []
    for Ni in (N, N + 8):
        sl = spectrum_slice(model, wave, p, Ni)
        ev = sl.eigenvalues
        if near is not None:
            ev = ev[np.abs(ev - near) <= radius]
        ev = ev[ev.real > tol]
        if len(ev) == 0:
            return False
        found.append(ev[np.argmax(ev.real)])
    return bool(abs(found[0] - found[1]) < 1e-10)
