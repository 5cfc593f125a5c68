"""The named maps: quadratic (Hénon-type) and piecewise-linear (Lozi-type)
planar maps with analytic Jacobians, inverses and per-box Jacobian-norm
bounds, plus their 3-space extensions."""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateParameter
from .base import PlanarMap, SingularSet

# Points with |x| below this are treated as lying on the fold line x = 0 of
# a piecewise-linear map (Jacobian undefined, Lyapunov steps skipped).
SINGULAR_X_TOL = 1e-12


def henon_eval(p, a, b):
    """One step of (x, y) -> (1 - a*x^2 + y, b*x)."""
    x, y = float(p[0]), float(p[1])
    return np.array([1.0 - a * x * x + y, b * x])


def henon_inverse(p, a, b):
    """Inverse step: (x, y) -> (y/b, x - 1 + a*(y/b)^2). Requires b != 0."""
    if b == 0.0:
        raise DegenerateParameter("quadratic map with b = 0 is not invertible")
    x, y = float(p[0]), float(p[1])
    u = y / b
    return np.array([u, x - 1.0 + a * u * u])


def lozi_eval(p, alpha, beta):
    """One step of (x, y) -> (1 - alpha*|x| + y, beta*x)."""
    x, y = float(p[0]), float(p[1])
    return np.array([1.0 - alpha * abs(x) + y, beta * x])


def _sigma_max_from_frob(t, det):
    # Largest singular value of a 2x2 matrix from ||J||_F^2 = t and det:
    # sigma1^2 = (t + sqrt(t^2 - 4 det^2)) / 2.
    disc = max(t * t - 4.0 * det * det, 0.0)
    return np.sqrt((t + np.sqrt(disc)) / 2.0)


def henon_map(a, b):
    """The quadratic planar map H(x, y) = (1 - a*x^2 + y, b*x).

    Jacobian [[-2ax, 1], [b, 0]] has constant determinant -b; for b != 0 the
    map is a diffeomorphism of the plane with explicit inverse.
    """
    a = float(a)
    b = float(b)

    def evaluate(p):
        return henon_eval(p, a, b)

    def jacobian(p):
        return np.array([[-2.0 * a * float(p[0]), 1.0], [b, 0.0]])

    inverse = None
    inverse_batch = None
    if b != 0.0:
        def inverse(p):  # noqa: E306
            return henon_inverse(p, a, b)

        def inverse_batch(pts):  # noqa: E306
            pts = np.asarray(pts, dtype=float)
            u = pts[:, 1] / b
            return np.column_stack([u, pts[:, 0] - 1.0 + a * u * u])

    def evaluate_batch(pts):
        pts = np.asarray(pts, dtype=float)
        x = pts[:, 0]
        return np.column_stack([1.0 - a * x * x + pts[:, 1], b * x])

    def lipschitz_box(box):
        # |J|_F^2 = 4 a^2 x^2 + 1 + b^2 is monotone in |x|, so the sup over a
        # box is attained at the endpoint of largest |x|: the bound is exact.
        xmax = max(abs(box[0]), abs(box[2]))
        t = 4.0 * a * a * xmax * xmax + 1.0 + b * b
        return float(_sigma_max_from_frob(t, -b))

    return PlanarMap(
        name="henon",
        params={"a": a, "b": b},
        evaluate=evaluate,
        jacobian=jacobian,
        inverse=inverse,
        evaluate_batch=evaluate_batch,
        inverse_batch=inverse_batch,
        lipschitz_box=lipschitz_box,
        kernel="henon",
    )


def lozi_map(alpha, beta):
    """The piecewise-linear planar map L(x, y) = (1 - alpha*|x| + y, beta*x).

    Smooth off the line x = 0; both branches have determinant -beta and the
    same singular values, so one Jacobian-norm bound holds globally.
    """
    alpha = float(alpha)
    beta = float(beta)

    def evaluate(p):
        return lozi_eval(p, alpha, beta)

    def jacobian(p):
        s = 1.0 if float(p[0]) > 0.0 else -1.0
        return np.array([[-alpha * s, 1.0], [beta, 0.0]])

    def evaluate_batch(pts):
        pts = np.asarray(pts, dtype=float)
        x = pts[:, 0]
        return np.column_stack([1.0 - alpha * np.abs(x) + pts[:, 1], beta * x])

    sigma1 = float(_sigma_max_from_frob(alpha * alpha + 1.0 + beta * beta, -beta))

    def lipschitz_box(box):
        # Valid across the fold line: a segment can be split at x = 0 and the
        # same per-branch bound applies to both pieces.
        return sigma1

    return PlanarMap(
        name="lozi",
        params={"alpha": alpha, "beta": beta},
        evaluate=evaluate,
        jacobian=jacobian,
        singular_set=SingularSet(
            "the line x = 0", lambda p: abs(float(p[0])) < SINGULAR_X_TOL
        ),
        evaluate_batch=evaluate_batch,
        lipschitz_box=lipschitz_box,
        kernel="lozi",
    )


def henon_fixed_points(a, b):
    """Closed-form fixed points from a*x^2 + (1 - b)*x - 1 = 0, each as
    (x, b*x); the positive-root point first."""
    disc = (1.0 - b) ** 2 + 4.0 * a
    r = np.sqrt(disc)
    xs = [(-(1.0 - b) + r) / (2.0 * a), (-(1.0 - b) - r) / (2.0 * a)]
    return [np.array([x, b * x]) for x in xs]


def lozi_fixed_points(alpha, beta):
    """Closed-form fixed points of the piecewise-linear map, one per branch
    when the branch condition is met; x = 1/(1 + alpha - beta) on x > 0."""
    out = []
    d_pos = 1.0 + alpha - beta
    if d_pos != 0.0:
        x = 1.0 / d_pos
        if x > 0:
            out.append(np.array([x, beta * x]))
    d_neg = 1.0 - alpha - beta
    if d_neg != 0.0:
        x = 1.0 / d_neg
        if x < 0:
            out.append(np.array([x, beta * x]))
    return out


def henon3_map(a, b):
    """3-space extension of the quadratic map:
    (x, y, z) -> (1 - a*x^2 + y, b*z, 1 - a*z^2 + b*x)."""
    from .extension import extend_to_3d

    m = extend_to_3d(*planar_component_fields(henon_map(a, b)))
    m.name = "henon3"
    m.params = {"a": float(a), "b": float(b)}
    m.kernel = "henon3"
    return m


def lozi3_map(alpha, beta):
    """3-space extension of the piecewise-linear map:
    (x, y, z) -> (1 - alpha*|x| + y, beta*z, 1 - alpha*|z| + beta*x)."""
    from .extension import extend_to_3d

    m = extend_to_3d(*planar_component_fields(lozi_map(alpha, beta)))
    m.name = "lozi3"
    m.params = {"alpha": float(alpha), "beta": float(beta)}
    m.kernel = "lozi3"
    return m


def planar_component_fields(m):
    """The two scalar component fields (u, v) of a planar map, with partial
    derivatives attached when the map has an analytic Jacobian."""

    def u(x, y):
        return float(m.evaluate((x, y))[0])

    def v(x, y):
        return float(m.evaluate((x, y))[1])

    if m.jacobian is not None:
        def du(x, y):  # noqa: E306
            row = np.asarray(m.jacobian((x, y)))[0]
            return float(row[0]), float(row[1])

        def dv(x, y):  # noqa: E306
            row = np.asarray(m.jacobian((x, y)))[1]
            return float(row[0]), float(row[1])

        u.gradient = du
        v.gradient = dv
    if m.singular_set is not None:
        u.singular_set = m.singular_set
        v.singular_set = m.singular_set
    return u, v


def map_from_spec(spec):
    """Build a map from its JSON description:
    ``{"map": "henon"|"lozi"|"gah"|"henon3"|"lozi3", "params": {...}}``."""
    if not isinstance(spec, dict) or "map" not in spec:
        raise ValueError("map spec must be an object with a 'map' key")
    kind = spec["map"]
    params = dict(spec.get("params", {}))
    if kind == "henon":
        return henon_map(params["a"], params["b"])
    if kind == "lozi":
        return lozi_map(params["alpha"], params["beta"])
    if kind == "henon3":
        return henon3_map(params["a"], params["b"])
    if kind == "lozi3":
        return lozi3_map(params["alpha"], params["beta"])
    if kind == "gah":
        from ..regions import Region
        from .paradigm import GahParams, build_gah_paradigm

        q = params.pop("Q")
        region = Region.rectangle(q[0], q[1], q[2], q[3])
        gp = GahParams(
            lambda_v=params["lambda_v"],
            lambda_h=params["lambda_h"],
            fold_center=params.get("fold_center"),
            translation=tuple(params.get("translation", (0.0, 0.0))),
            orientation=params.get("orientation", "preserving"),
        )
        return build_gah_paradigm(gp, region)
    raise ValueError(f"unknown map kind: {kind!r}")
