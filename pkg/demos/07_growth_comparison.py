"""Which instability wins at small amplitude?

Triads grow like eps and dominate when present; otherwise the quartet and
modulational mechanisms compete at eps^2.
"""

import math

from stokes_spectra import (
    akers_milewski,
    capillary_whitham,
    compare_growth,
    kawahara,
    whitham,
)

models = [
    capillary_whitham(math.inf, 2.5),
    capillary_whitham(math.inf, 0.25),
    kawahara(1.0, -0.25),
    kawahara(-3.0, 1.0),
    kawahara(1.0, 0.0),
    whitham(2.0),
    akers_milewski(2.0),
]

for model in models:
    rep = compare_growth(model, (-8, 8))
    print(f"{str(model):42s} -> {rep.verdict}")
    for mech, m, p0, order, amp in rep.rows():
        print(f"    {mech:14s} order eps^{order}  coefficient {amp:.4f}")
