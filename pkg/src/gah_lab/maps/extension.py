"""Rank-raising extension of a planar map to 3-space.

Writing the planar map as f(x, y) = (u(x, y), v(x, y)), the extension first
applies f in the x-y plane while carrying z along, then applies f in the z-y
plane while holding the first coordinate fixed. The composition is

    (x, y, z) -> (u(x, y), v(z, v(x, y)), u(z, v(x, y))),

which adds one expanding direction per application: applied to the quadratic
and piecewise-linear maps it reproduces their standard 3-space forms.
"""

from __future__ import annotations

import numpy as np

from .base import SingularSet, SpaceMap3


def extend_to_3d(u, v):
    """Assemble the 3-space extension of a planar map from its scalar
    component fields ``u`` and ``v``.

    Either component may carry a ``gradient(x, y) -> (d/dx, d/dy)`` attribute
    (both must, for an analytic Jacobian) and a ``singular_set`` attribute
    describing where the planar map is not differentiable.
    """

    def evaluate(p):
        x, y, z = float(p[0]), float(p[1]), float(p[2])
        w = v(x, y)
        return np.array([u(x, y), v(z, w), u(z, w)])

    jacobian = None
    if hasattr(u, "gradient") and hasattr(v, "gradient"):
        def jacobian(p):  # noqa: E306
            x, y, z = float(p[0]), float(p[1]), float(p[2])
            w = v(x, y)
            ux, uy = u.gradient(x, y)
            vx, vy = v.gradient(x, y)
            u1, u2 = u.gradient(z, w)
            v1, v2 = v.gradient(z, w)
            return np.array(
                [
                    [ux, uy, 0.0],
                    [v2 * vx, v2 * vy, v1],
                    [u2 * vx, u2 * vy, u1],
                ]
            )

    singular = None
    base_sing = getattr(u, "singular_set", None)
    if base_sing is not None:
        def contains(p):  # noqa: E306
            x, y, z = float(p[0]), float(p[1]), float(p[2])
            if base_sing.contains((x, y)):
                return True
            return base_sing.contains((z, v(x, y)))

        singular = SingularSet(f"{base_sing.description}, in both applied planes", contains)

    return SpaceMap3(
        name="extended3",
        params={},
        components=(u, v),
        evaluate=evaluate,
        jacobian=jacobian,
        singular_set=singular,
    )
