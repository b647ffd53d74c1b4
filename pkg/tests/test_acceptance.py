"""End-to-end acceptance suite.

Each test prints one ``ACCEPTANCE <name>: PASS|FAIL`` line (visible with
``pytest -s`` or in failure output) and asserts the stated tolerance, so the
whole file doubles as the project's verification report.

Run with::

    pytest tests/test_acceptance.py -v -s
"""

import math
import time

import numpy as np
import pytest

from stokes_spectra import hill
from stokes_spectra.benjamin_feir import bf_constants
from stokes_spectra.dispersion import (
    akers_milewski,
    capillary_whitham,
    kawahara,
)
from stokes_spectra.experiments import run
from stokes_spectra.flatspec import find_collisions, flat_eigenvalue
from stokes_spectra.highfreq import higher_order_corrections, isola_for
from stokes_spectra.stokes import stokes_expand, traveling_residual


def _report(name, ok, detail=""):
    print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{name}: {detail}"


# ---------------------------------------------------------------------------
# collision reproduction
# ---------------------------------------------------------------------------

def test_collision_reproduction():
    """Reference collisions of all four model configurations, budget 10 s.

    The printed reference values pin (p0, |Im lambda0|); the sign of the
    imaginary part depends on an orientation convention that the reference
    figures themselves use inconsistently (two captions match each sign), so
    the magnitude is asserted.
    """
    cases = [
        ("capillarywhitham h=inf sigma=2.5", capillary_whitham(math.inf, 2.5),
         1, 0.2681, 0.0608),
        ("akersmilewski sigma=2", akers_milewski(2.0), 1, 0.1464, 0.3536),
        ("kawahara (1,-0.25)", kawahara(1.0, -0.25), 2, 0.3675, 0.2277),
        ("capillarywhitham h=inf sigma=0.25", capillary_whitham(math.inf, 0.25),
         2, 0.1363, 0.2177),
    ]
    t0 = time.perf_counter()
    details = []
    ok = True
    for label, model, m, p0_ref, im_ref in cases:
        cols = find_collisions(model, m)            # default (-20, 20) range
        best = min(cols, key=lambda c: abs(c.p0 - p0_ref))
        dp = abs(best.p0 - p0_ref)
        dim = abs(abs(best.lambda0.imag) - im_ref)
        ok &= dp <= 1e-3 and dim <= 1e-3
        details.append(f"{label}: dp0={dp:.1e} dIm={dim:.1e}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 10.0
    _report("collision-reproduction", ok,
            "; ".join(details) + f"; runtime {elapsed:.2f}s")


# ---------------------------------------------------------------------------
# quartet error laws
# ---------------------------------------------------------------------------

def test_kawahara_quartet_error_law(tmp_path):
    """Worst-over-theta eigenvalue error ~ 6 eps^3 over the cubic regime."""
    t0 = time.perf_counter()
    s = run("fig4", tmp_path)
    elapsed = time.perf_counter() - t0
    ok = abs(s["slope"] - 3.0) <= 0.2 and 2.0 <= s["prefactor"] <= 18.0 \
        and elapsed < 120.0
    _report("kawahara-quartet-error-law", ok,
            f"slope={s['slope']:.3f} prefactor={s['prefactor']:.2f} "
            f"runtime {elapsed:.1f}s")


def test_capillary_whitham_quartet_error_law(tmp_path):
    """Same protocol at sigma=0.25; reference level ~1e3 eps^3."""
    t0 = time.perf_counter()
    s = run("fig5", tmp_path)
    elapsed = time.perf_counter() - t0
    ok = abs(s["slope"] - 3.0) <= 0.2 and 2e2 <= s["prefactor"] <= 5e3 \
        and elapsed < 120.0
    _report("cw-quartet-error-law", ok,
            f"slope={s['slope']:.3f} prefactor={s['prefactor']:.1f} "
            f"runtime {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# triad isola match
# ---------------------------------------------------------------------------

def test_triad_isola_match(tmp_path):
    """Hausdorff distance between asymptotic isola and continued eigenpairs.

    The 10 eps^2 bound cannot be met by the leading-order ellipse: at the
    isola tips the exact eigenvalue pair coalesces and the matched distance
    is of order eps^{3/2} (measured 16-20 eps^2 at eps = 1e-3, growing to
    ~50 eps^2 at eps = 1e-4), an intrinsic property of the spectrum rather
    than an implementation artifact.  The max-growth agreement on the same
    runs is at the 1e-5 relative level.  Asserted as stated; see the
    decisions ledger for the blocking analysis.
    """
    t0 = time.perf_counter()
    eps = 1e-3
    details, ok = [], True
    for name in ("fig1-left", "fig1-right"):
        s = run(name, tmp_path / name)
        h = s["hausdorff"]
        ok &= h <= 10.0 * eps**2
        details.append(f"{name}: H={h:.2e} ({h / eps**2:.1f} eps^2), "
                       f"growth rel err {s['growth_rel_err']:.1e}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60.0
    _report("triad-isola-match", ok, "; ".join(details) + f"; runtime {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# modulational lemniscates
# ---------------------------------------------------------------------------

def test_benjamin_feir_lemniscates(tmp_path):
    """Figure-eight match for the three finite-depth configurations.

    Checks the independently derived Kawahara constants, that every swept
    unstable eigenvalue lies within 20 eps^3 of the closed-form lemniscate,
    and that the maximal growth rate matches the closed-form eps^2 |U|
    within 10%.
    """
    t0 = time.perf_counter()
    lm = bf_constants(kawahara(-3.0, 1.0))
    ok = (lm.U == pytest.approx(1.0 / 3.0, abs=1e-13)
          and lm.V == pytest.approx(-1.0, abs=1e-13)
          and lm.delta_bf == pytest.approx(1.0 / 3.0, abs=1e-13))
    details = [f"kawahara constants U={lm.U:.4f} V={lm.V:.4f} D={lm.delta_bf:.4f}"]
    for name in ("fig6-left", "fig6-center", "fig6-right"):
        s = run(name, tmp_path / name)
        ok &= s["worst_distance"] <= s["distance_bound_20eps3"]
        ok &= s["growth_rel_err"] <= 0.10
        details.append(f"{name}: dist={s['worst_distance']:.1e} "
                       f"growth err={s['growth_rel_err']:.1%}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 180.0
    _report("benjamin-feir-lemniscates", ok,
            "; ".join(details) + f"; runtime {elapsed:.1f}s")


def test_akers_milewski_bf_scalings(tmp_path):
    """Discontinuous-dispersion figure-eight: eps^2 real, eps^3 imaginary."""
    t0 = time.perf_counter()
    model = akers_milewski(1.0)
    from stokes_spectra.dispersion import group_velocity, omega
    cg1 = group_velocity(model, 1.0) - omega(model, 1.0)
    ok = cg1 == 0.0
    s = run("fig7", tmp_path)
    ok &= abs(s["re_exponent"] - 2.0) <= 0.2
    ok &= abs(s["im_exponent"] - 3.0) <= 0.3
    ok &= s["re_rel_err"] <= 0.10
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 180.0
    _report("am-bf-scalings", ok,
            f"cg~(1)={cg1} re_exp={s['re_exponent']:.3f} "
            f"im_exp={s['im_exponent']:.3f} re err={s['re_rel_err']:.1%}; "
            f"runtime {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# Krein equivalence
# ---------------------------------------------------------------------------

def _confirm_with_spectrum(model, coll, eps=1e-3, N=24):
    """True iff the dense spectrum shows a robust instability at the collision."""
    wave = stokes_expand(model, eps, 2)
    radius = 5e-3
    if coll.krein_negative:
        iso = isola_for(model, coll)
        ps = [iso.p_at(np.pi / 2, eps)]
        radius = max(radius, 2 * eps * abs(iso.im_amp) + 2 * eps**2 * abs(iso.center_im))
    else:
        ps = [coll.p0, coll.p0 + 0.3 * eps, coll.p0 - 0.3 * eps]
    return any(hill.is_robustly_unstable(model, wave, p, N,
                                         near=coll.lambda0, radius=radius)
               for p in ps)


def test_krein_equivalence():
    """Sign condition <=> instability across a parameter scan, no exceptions.

    Every order-1 and order-2 collision found for capillary-Whitham
    (h = inf, sigma in {0.1 ... 3}) and a Kawahara (a, b) grid is checked
    against the dense spectrum at eps = 1e-3 with the robust 1e-10 filter.
    sigma = 0.5 is excluded: the carrier is second-harmonic resonant there
    (the wave itself does not exist in this family's small-amplitude form).
    """
    t0 = time.perf_counter()
    models = [capillary_whitham(math.inf, s)
              for s in (0.1, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0)]
    models += [kawahara(*ab) for ab in
               ((1.0, -0.25), (-3.0, 1.0), (1.0, -0.5), (-1.0, 0.5), (2.0, -0.3))]
    checked, mismatches = 0, []
    for model in models:
        for m in (1, 2):
            for coll in find_collisions(model, m, (-10, 10)):
                if coll.degenerate:
                    continue
                seen = _confirm_with_spectrum(model, coll)
                checked += 1
                if seen != coll.krein_negative:
                    mismatches.append((str(model), m, round(coll.p0, 4),
                                       coll.krein_negative, seen))
    elapsed = time.perf_counter() - t0
    _report("krein-equivalence", checked > 20 and not mismatches,
            f"{checked} collisions checked, {len(mismatches)} counterexamples "
            f"{mismatches[:4]}; runtime {elapsed:.1f}s")


def test_higher_order_non_instability():
    """Order-3 collisions carry no second-order isola.

    The second-order corrections are purely imaginary by construction, and
    the dense spectrum at the collision's own Floquet exponent shows no
    unstable eigenvalue above 1e-10 near lambda0 at eps = 1e-3.  These
    collisions do destabilize eventually, but only at third order: the
    residual growth in the (order-eps^2-shifted) Floquet window is verified
    to stay below 100 eps^3, far under any eps^2 isola scale.
    """
    t0 = time.perf_counter()
    eps = 1e-3
    checked, bad = 0, []
    for model in (kawahara(1.0, -0.25), capillary_whitham(math.inf, 0.25),
                  akers_milewski(2.0)):
        for coll in find_collisions(model, 3, (-10, 10)):
            if coll.degenerate:
                continue
            lam2, p2 = higher_order_corrections(model, coll)
            checked += 1
            if lam2.real != 0.0:
                bad.append((str(model), coll.p0, "analytic"))
                continue
            wave = stokes_expand(model, eps, 2)
            if hill.is_robustly_unstable(model, wave, coll.p0, 24,
                                         near=coll.lambda0, radius=5e-3):
                bad.append((str(model), round(coll.p0, 4), "isola at collision"))
                continue
            # third-order onset in the shifted window stays third-order small
            worst = 0.0
            for p in np.linspace(coll.p0 - 5 * eps**2 * abs(p2),
                                 coll.p0 + 5 * eps**2 * abs(p2), 9):
                sl = hill.spectrum_slice(model, wave, float(p), 24)
                near = sl.eigenvalues[np.abs(sl.eigenvalues - coll.lambda0) < 5e-3]
                if len(near):
                    worst = max(worst, float(near.real.max()))
            if worst > 100.0 * eps**3:
                bad.append((str(model), round(coll.p0, 4), f"growth {worst:.1e}"))
    elapsed = time.perf_counter() - t0
    _report("higher-order-non-instability", checked > 0 and not bad,
            f"{checked} collisions checked, violations {bad}; "
            f"runtime {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# structural suites
# ---------------------------------------------------------------------------

def test_structural_suites():
    """Flat-limit exactness, conjugation symmetry, truncation robustness,
    and the Stokes residual scaling, in one sweep."""
    kaw = kawahara(1.0, -0.25)
    details = []

    flat = stokes_expand(kaw, 0.0, 2)
    sl = hill.spectrum_slice(kaw, flat, 0.5, 16)
    ref = np.array([flat_eigenvalue(kaw, k, 0.5) for k in range(-16, 17)])
    ref = ref[np.lexsort((ref.real, ref.imag))]
    flat_err = float(np.max(np.abs(sl.eigenvalues - ref)))
    ok = flat_err < 1e-12
    details.append(f"flat-limit {flat_err:.1e}")

    wave = stokes_expand(kaw, 1e-3, 2)
    a = hill.spectrum_slice(kaw, wave, 0.3, 16).eigenvalues
    b = np.conj(hill.spectrum_slice(kaw, wave, 0.7, 16).eigenvalues)
    rel = np.sort([np.min(np.abs(b - x) / (1.0 + abs(x))) for x in a])
    conj_err = float(rel[-3])
    ok &= conj_err < 1e-10
    details.append(f"conjugation {conj_err:.1e} (2 window-edge modes excluded)")

    model = kawahara(-3.0, 1.0)
    wave = stokes_expand(model, 1e-2, 2)
    uns = []
    for N in (24, 32):
        un = hill.spectrum_slice(model, wave, 0.004, N).unstable()
        uns.append(un[np.argmax(un.real)])
    trunc_err = abs(uns[0] - uns[1])
    ok &= trunc_err < 1e-10
    details.append(f"truncation {trunc_err:.1e}")

    eps = np.array([1e-4, 3e-4, 1e-3, 3e-3, 1e-2])
    for order, target in ((2, 3.0), (4, 5.0)):
        res = [traveling_residual(stokes_expand(kaw, e, order)) for e in eps]
        slope = float(np.polyfit(np.log(eps), np.log(res), 1)[0])
        ok &= abs(slope - target) <= 0.2
        details.append(f"residual slope(order {order})={slope:.2f}")

    _report("structural-suites", ok, "; ".join(details))
