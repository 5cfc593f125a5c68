"""Backend selection for the hot loops.

Orbit iteration, Lyapunov accumulation, box counting and nearest-point
queries dominate runtime. A compiled extension implements them when it was
built; a NumPy/pure-Python twin provides the same API otherwise. Both
backends are kept operation-for-operation identical so results agree to the
last bit (orbits, box counts) or to rounding (distances).

Set ``GAH_LAB_PURE_PYTHON=1`` to force the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os

if os.environ.get("GAH_LAB_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "native"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"


_PARAM_ORDER = {
    "henon": ("a", "b"),
    "lozi": ("alpha", "beta"),
    "henon3": ("a", "b"),
    "lozi3": ("alpha", "beta"),
}


def _params(kind, params):
    return [float(params[k]) for k in _PARAM_ORDER[kind]]


def orbit_function(kind):
    """Orbit runner for a named map kind, or None when the backend has no
    specialization. The runner returns ``(points, diverged_step, bad_point)``
    with ``diverged_step == -1`` on success."""
    fn = getattr(_impl, f"orbit_{kind}", None)
    if fn is None:
        return None

    def run(params, p0, n, burn_in, escape_radius):
        args = _params(kind, params) + [float(c) for c in p0]
        return fn(*args, int(n), int(burn_in), float(escape_radius))

    return run


def lyapunov_function(kind):
    """Lyapunov accumulator for a named map kind, or None.

    Returns ``(exponents, skipped, diverged_step, bad_point)``.
    """
    fn = getattr(_impl, f"lyap_{kind}", None)
    if fn is None:
        return None

    def run(params, p0, n, escape_radius):
        args = _params(kind, params) + [float(c) for c in p0]
        out = fn(*args, int(n), float(escape_radius))
        exps, skipped, step, bad = out
        return list(exps), int(skipped), int(step), bad

    return run


def box_count(points, origin, eps):
    """Number of occupied eps-boxes on a grid anchored at ``origin``."""
    import numpy as np

    pts = np.ascontiguousarray(points, dtype=float)
    if pts.shape[1] == 2:
        return int(_impl.box_count_2d(pts, float(origin[0]), float(origin[1]), float(eps)))
    return int(
        _impl.box_count_3d(
            pts, float(origin[0]), float(origin[1]), float(origin[2]), float(eps)
        )
    )


def onesided_distance(a, b, cells=256):
    """sup over a of the distance to the nearest point of b."""
    import numpy as np

    a = np.ascontiguousarray(a, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    if a.shape[1] == 2:
        return float(_impl.onesided_2d(a, b, int(cells)))
    return float(_impl.onesided_3d(a, b, int(cells)))
