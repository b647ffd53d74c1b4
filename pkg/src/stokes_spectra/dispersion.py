"""Dispersion relations of the unidirectional model family.

Each model is a Fourier-multiplier equation ``u_t + L u + (u^2)_x = 0`` whose
symbol is ``i*omega(k)``.  Four families are supported:

====================  =========================================  ==========
family                omega(k)                                   parameters
====================  =========================================  ==========
Kawahara              a k^3 + b k^5                              a, b
Whitham               k sqrt(tanh(k h) / k)                      h
CapillaryWhitham      k sqrt((1 + sigma k^2) tanh(k h) / k)      h, sigma
AkersMilewski         sgn(k) (1 + sigma |k|)^2                   sigma
====================  =========================================  ==========

``h = inf`` selects the analytic deep-water limit branch (Whitham types only).
The Akers--Milewski symbol carries a jump at ``k = 0``; evaluation there
raises and callers must choose a side themselves.

All functions accept scalars or numpy arrays in ``k`` and are pure, so they
are safe for concurrent use.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigError, JumpDiscontinuityError, NotDifferentiableError


class Family(enum.Enum):
    KAWAHARA = "kawahara"
    WHITHAM = "whitham"
    CAPILLARY_WHITHAM = "capillarywhitham"
    AKERS_MILEWSKI = "akersmilewski"


class Smoothness(enum.Enum):
    SMOOTH = "smooth"
    DISCONTINUOUS_AT_ZERO = "discontinuous-at-zero"


# below this value of |k*h| the ratio tanh(kh)/k is evaluated by series to
# avoid 0/0 cancellation
_SERIES_CUTOFF = 1e-4


@dataclass(frozen=True)
class DispersionModel:
    """A named dispersion relation with its parameters.

    Use the module-level constructors (:func:`kawahara`, :func:`whitham`,
    :func:`capillary_whitham`, :func:`akers_milewski`) or
    :func:`parse_model` rather than instantiating directly.
    """

    family: Family
    a: float | None = None
    b: float | None = None
    h: float | None = None
    sigma: float | None = None

    @property
    def smoothness(self) -> Smoothness:
        if self.family is Family.AKERS_MILEWSKI:
            return Smoothness.DISCONTINUOUS_AT_ZERO
        return Smoothness.SMOOTH

    @property
    def params(self) -> dict:
        out = {}
        for name in ("a", "b", "h", "sigma"):
            val = getattr(self, name)
            if val is not None:
                out[name] = val
        return out

    def spec_string(self) -> str:
        """Inverse of :func:`parse_model`."""
        parts = [f"{k}=inf" if math.isinf(v) else f"{k}={v:g}"
                 for k, v in self.params.items()]
        return f"{self.family.value}:{','.join(parts)}"

    def __str__(self) -> str:
        return self.spec_string()


def kawahara(a: float, b: float) -> DispersionModel:
    return DispersionModel(Family.KAWAHARA, a=float(a), b=float(b))


def whitham(h: float) -> DispersionModel:
    if h <= 0:
        raise ConfigError("depth h must be positive (or inf)")
    return DispersionModel(Family.WHITHAM, h=float(h))


def capillary_whitham(h: float, sigma: float) -> DispersionModel:
    if h <= 0:
        raise ConfigError("depth h must be positive (or inf)")
    return DispersionModel(Family.CAPILLARY_WHITHAM, h=float(h), sigma=float(sigma))


def akers_milewski(sigma: float) -> DispersionModel:
    return DispersionModel(Family.AKERS_MILEWSKI, sigma=float(sigma))


def parse_model(spec: str) -> DispersionModel:
    """Build a model from a specification string like ``"kawahara:a=1,b=-0.25"``.

    Family names are case-insensitive and dashes/underscores are ignored, so
    ``"capillary-whitham:h=inf,sigma=0.25"`` works.  A ``whitham`` spec that
    carries a nonzero ``sigma`` is promoted to the capillary family.
    """
    try:
        name, _, tail = spec.partition(":")
        key = name.strip().lower().replace("-", "").replace("_", "")
        kv = {}
        if tail.strip():
            for item in tail.split(","):
                k, _, v = item.partition("=")
                kv[k.strip().lower()] = math.inf if v.strip().lower() == "inf" else float(v)
    except ValueError as exc:
        raise ConfigError(f"cannot parse model spec {spec!r}: {exc}") from None

    def take(allowed):
        extra = set(kv) - set(allowed)
        if extra:
            raise ConfigError(f"unknown parameters {sorted(extra)} for model {name!r}")
        missing = [p for p in allowed if p not in kv and p != "sigma"]
        if missing:
            raise ConfigError(f"missing parameters {missing} for model {name!r}")
        return kv

    if key == "kawahara":
        take(("a", "b"))
        return kawahara(kv["a"], kv["b"])
    if key == "whitham":
        take(("h", "sigma"))
        if kv.get("sigma"):
            return capillary_whitham(kv["h"], kv["sigma"])
        return whitham(kv["h"])
    if key in ("capillarywhitham", "cw"):
        take(("h", "sigma"))
        return capillary_whitham(kv["h"], kv.get("sigma", 0.0))
    if key in ("akersmilewski", "am"):
        take(("sigma",))
        return akers_milewski(kv.get("sigma", 1.0))
    raise ConfigError(f"unknown model family {name!r}")


# ----------------------------------------------------------------------------
# tanh(x)/x and its derivatives, stable through x = 0
# ----------------------------------------------------------------------------

def _t(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < _SERIES_CUTOFF
    xs = np.where(small, 0.0, x)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.tanh(xs) / xs
    series = 1.0 - x**2 / 3.0 + 2.0 * x**4 / 15.0
    return np.where(small, series, direct)


def _tp(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-2
    xs = np.where(small, 1.0, x)
    sech2 = 1.0 / np.cosh(xs) ** 2
    direct = sech2 / xs - np.tanh(xs) / xs**2
    series = -2.0 * x / 3.0 + 8.0 * x**3 / 15.0 - 34.0 * x**5 / 105.0
    return np.where(small, series, direct)


def _tpp(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-2
    xs = np.where(small, 1.0, x)
    th, sech2 = np.tanh(xs), 1.0 / np.cosh(xs) ** 2
    direct = -2.0 * th * sech2 / xs - 2.0 * sech2 / xs**2 + 2.0 * th / xs**3
    series = -2.0 / 3.0 + 8.0 * x**2 / 5.0 - 34.0 * x**4 / 21.0
    return np.where(small, series, direct)


# ----------------------------------------------------------------------------
# Whitham-type helpers: omega(k) = k * sqrt(q(k)) with q even and positive
# ----------------------------------------------------------------------------

def _whitham_q(model, k, order):
    """q(k) = (1 + sigma k^2) tanh(kh)/k and derivatives q', q''.

    Finite depth only.  Even in k, analytic through k = 0.
    """
    sig = model.sigma or 0.0
    h = model.h
    x = k * h
    cap = 1.0 + sig * k**2
    q = cap * h * _t(x)
    if order == 0:
        return q
    qp = 2.0 * sig * k * h * _t(x) + cap * h**2 * _tp(x)
    if order == 1:
        return q, qp
    qpp = 2.0 * sig * h * _t(x) + 4.0 * sig * k * h**2 * _tp(x) + cap * h**3 * _tpp(x)
    return q, qp, qpp


def _whitham_deep_f(model, k, order):
    """f(k) = (1 + sigma k^2) k for k > 0 (deep water), with f', f''."""
    sig = model.sigma or 0.0
    f = k + sig * k**3
    if order == 0:
        return f
    fp = 1.0 + 3.0 * sig * k**2
    if order == 1:
        return f, fp
    return f, fp, 6.0 * sig * k


def _is_deep(model) -> bool:
    return model.h is not None and math.isinf(model.h)


# ----------------------------------------------------------------------------
# public operations
# ----------------------------------------------------------------------------

def omega(model: DispersionModel, k):
    """Frequency omega(k).  Odd in k for every family.

    Raises
    ------
    JumpDiscontinuityError
        For the Akers--Milewski family at k = 0, where the symbol jumps.
    """
    karr = np.asarray(k, dtype=float)
    fam = model.family
    if fam is Family.KAWAHARA:
        # sgn(k) f(|k|) keeps omega odd to the last bit
        ka = np.abs(karr)
        out = np.sign(karr) * (model.a * ka**3 + model.b * ka**5)
    elif fam is Family.AKERS_MILEWSKI:
        if np.any(karr == 0.0):
            raise JumpDiscontinuityError(
                "Akers-Milewski omega is undefined at k = 0; pick a side")
        out = np.sign(karr) * (1.0 + model.sigma * np.abs(karr)) ** 2
    elif _is_deep(model):
        out = np.sign(karr) * np.sqrt(_whitham_deep_f(model, np.abs(karr), 0))
    else:
        out = karr * np.sqrt(_whitham_q(model, karr, 0))
    return out if np.ndim(k) else float(out)


def phase_velocity(model: DispersionModel, k):
    """Phase velocity omega(k)/k, with the k -> 0 limit where it exists."""
    karr = np.asarray(k, dtype=float)
    if model.family is Family.AKERS_MILEWSKI and np.any(karr == 0.0):
        raise JumpDiscontinuityError("Akers-Milewski phase velocity undefined at k = 0")
    zero = karr == 0.0
    if np.any(zero):
        if model.family is Family.KAWAHARA:
            limit = 0.0
        elif _is_deep(model):
            limit = math.inf
        else:
            limit = math.sqrt(model.h)  # lim tanh(kh)/k = h
        safe = np.where(zero, 1.0, karr)
        out = np.where(zero, limit, omega(model, safe) / safe)
    else:
        out = omega(model, karr) / karr
    return out if np.ndim(k) else float(out)


def group_velocity(model: DispersionModel, k):
    """omega'(k) in closed form.  Even in k for every family."""
    karr = np.asarray(k, dtype=float)
    fam = model.family
    if fam is Family.KAWAHARA:
        out = 3.0 * model.a * karr**2 + 5.0 * model.b * karr**4
    elif fam is Family.AKERS_MILEWSKI:
        if np.any(karr == 0.0):
            raise NotDifferentiableError("Akers-Milewski omega' undefined at k = 0")
        out = 2.0 * model.sigma * (1.0 + model.sigma * np.abs(karr))
    elif _is_deep(model):
        if np.any(karr == 0.0):
            raise NotDifferentiableError("deep-water omega'(k) diverges as k -> 0")
        ka = np.abs(karr)
        f, fp = _whitham_deep_f(model, ka, 1)
        out = fp / (2.0 * np.sqrt(f))
    else:
        # omega = k sqrt(q): omega' = sqrt(q) + k q' / (2 sqrt(q))
        q, qp = _whitham_q(model, karr, 1)
        sq = np.sqrt(q)
        out = sq + karr * qp / (2.0 * sq)
    return out if np.ndim(k) else float(out)


def second_derivative(model: DispersionModel, k):
    """omega''(k) in closed form.  Odd in k for every family."""
    karr = np.asarray(k, dtype=float)
    fam = model.family
    if fam is Family.KAWAHARA:
        ka = np.abs(karr)
        out = np.sign(karr) * (6.0 * model.a * ka + 20.0 * model.b * ka**3)
    elif fam is Family.AKERS_MILEWSKI:
        if np.any(karr == 0.0):
            raise NotDifferentiableError("Akers-Milewski omega'' undefined at k = 0")
        out = 2.0 * model.sigma**2 * np.sign(karr)
    elif _is_deep(model):
        if np.any(karr == 0.0):
            raise NotDifferentiableError("deep-water omega''(k) diverges as k -> 0")
        ka = np.abs(karr)
        f, fp, fpp = _whitham_deep_f(model, ka, 2)
        out = np.sign(karr) * (fpp / (2.0 * np.sqrt(f)) - fp**2 / (4.0 * f**1.5))
    else:
        # omega = k sqrt(q): omega'' = q'/sqrt(q) + k (q''/(2 sqrt q) - q'^2/(4 q^1.5))
        q, qp, qpp = _whitham_q(model, karr, 2)
        sq = np.sqrt(q)
        out = qp / sq + karr * (qpp / (2.0 * sq) - qp**2 / (4.0 * q * sq))
    return out if np.ndim(k) else float(out)


def finite_difference_derivative(model: DispersionModel, k: float, order: int = 1) -> float:
    """Central-difference derivative of omega, independent of the closed forms.

    Step size (machine epsilon)^(1/3) * max(1, |k|), the standard choice for
    first differences.  Used as the cross-check oracle for
    :func:`group_velocity` and :func:`second_derivative`.
    """
    hd = np.finfo(float).eps ** (1.0 / 3.0) * max(1.0, abs(k))
    if order == 1:
        return (omega(model, k + hd) - omega(model, k - hd)) / (2.0 * hd)
    if order == 2:
        hd = np.finfo(float).eps ** 0.25 * max(1.0, abs(k))
        return (omega(model, k + hd) - 2.0 * omega(model, k) + omega(model, k - hd)) / hd**2
    raise ValueError("order must be 1 or 2")
