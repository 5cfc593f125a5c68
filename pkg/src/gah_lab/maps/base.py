"""Core map abstractions: planar maps, 3-space maps, orbits, Jacobians.

A map is a small bundle of callables plus metadata. Scalar evaluation is the
contract; vectorized evaluation, analytic Jacobians, inverses and per-box
Jacobian-norm bounds are optional capabilities that the verifiers and
manifold growers exploit when present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import OrbitDiverged, SingularLocus

# Central-difference step for the Jacobian fallback: balances truncation
# against rounding error at double precision.
FD_STEP = 1e-6

# Orbits whose norm exceeds this are declared divergent; every attractor of
# interest here lives in a region of diameter <= 4.
DEFAULT_ESCAPE_RADIUS = 1e6


@dataclass(frozen=True)
class SingularSet:
    """Description of a map's non-smooth locus plus a membership test."""

    description: str
    contains: Callable[[np.ndarray], bool]


@dataclass(eq=False)
class PlanarMap:
    """A parameterized self-map of the plane.

    ``evaluate`` maps a length-2 point to a length-2 point. ``jacobian``
    (optional) returns the analytic 2x2 Jacobian off ``singular_set``.
    ``inverse`` (optional) may be partial; it raises ``OutsideImage`` when
    queried off the map's image. ``lipschitz_box`` (optional) returns a sup
    bound on the Jacobian operator norm over an axis-aligned box
    ``(xmin, ymin, xmax, ymax)`` and is what makes bounded-mode verification
    possible. ``kernel`` names a compiled fast path for orbit iteration.
    """

    name: str
    params: dict
    evaluate: Callable
    jacobian: Callable | None = None
    inverse: Callable | None = None
    singular_set: SingularSet | None = None
    evaluate_batch: Callable | None = None
    inverse_batch: Callable | None = None
    lipschitz_box: Callable | None = None
    kernel: str | None = None
    metadata: dict = field(default_factory=dict)

    @property
    def dim(self):
        return 2

    def __repr__(self):
        ps = ", ".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"PlanarMap({self.name}, {ps})"


@dataclass(eq=False)
class SpaceMap3:
    """A self-map of 3-space assembled from the two scalar components of a
    planar map by the rank-raising extension (see ``extend_to_3d``)."""

    name: str
    params: dict
    components: tuple  # (u, v) scalar fields of the underlying planar map
    evaluate: Callable
    jacobian: Callable | None = None
    singular_set: SingularSet | None = None
    evaluate_batch: Callable | None = None
    kernel: str | None = None
    metadata: dict = field(default_factory=dict)

    @property
    def dim(self):
        return 3

    def __repr__(self):
        ps = ", ".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"SpaceMap3({self.name}, {ps})"


def _as_point(p, dim):
    q = np.asarray(p, dtype=float).reshape(-1)
    if q.size != dim:
        raise ValueError(f"expected a point of dimension {dim}, got shape {q.shape}")
    return q


def finite_difference_jacobian(evaluate, p, step=FD_STEP):
    """Central-difference Jacobian of ``evaluate`` at ``p``."""
    p = np.asarray(p, dtype=float)
    d = p.size
    cols = []
    for i in range(d):
        e = np.zeros(d)
        e[i] = step
        cols.append((np.asarray(evaluate(p + e)) - np.asarray(evaluate(p - e))) / (2.0 * step))
    return np.column_stack(cols)


def jacobian_at(m, p):
    """Jacobian of a map at a point: analytic when available, central finite
    differences otherwise. Raises ``SingularLocus`` on the non-smooth locus."""
    p = _as_point(p, m.dim)
    if m.singular_set is not None and m.singular_set.contains(p):
        raise SingularLocus(
            f"{m.name}: point {tuple(p)} lies on the singular set ({m.singular_set.description})"
        )
    if m.jacobian is not None:
        return np.asarray(m.jacobian(p), dtype=float)
    return finite_difference_jacobian(m.evaluate, p)


def _orbit_generic(m, p0, n, burn_in, escape_radius):
    esc2 = escape_radius * escape_radius
    p = np.array(p0, dtype=float)
    out = np.empty((n, p.size), dtype=float)
    total = burn_in + n
    for k in range(total):
        p = np.asarray(m.evaluate(p), dtype=float)
        n2 = float(np.dot(p, p))
        if not (n2 <= esc2):  # also catches NaN
            raise OrbitDiverged(k + 1, p)
        if k >= burn_in:
            out[k - burn_in] = p
    return out


def iterate_orbit(m, p0, n, burn_in=0, escape_radius=DEFAULT_ESCAPE_RADIUS):
    """Forward orbit of ``m`` from ``p0``: the ``n`` iterates following
    ``burn_in`` discarded ones. Deterministic; raises ``OrbitDiverged`` when
    any iterate (including burn-in) leaves the escape radius."""
    if n < 0 or burn_in < 0:
        raise ValueError("n and burn_in must be nonnegative")
    p0 = _as_point(p0, m.dim)
    if n == 0:
        return np.empty((0, m.dim), dtype=float)

    if m.kernel is not None:
        from .. import kernels

        fn = kernels.orbit_function(m.kernel)
        if fn is not None:
            out, step, bad = fn(m.params, p0, n, burn_in, escape_radius)
            if step >= 0:
                raise OrbitDiverged(step, bad)
            return out
    return _orbit_generic(m, p0, n, burn_in, escape_radius)


def compose_with_self(m):
    """The second iterate f∘f of a planar map, as a map object.

    Jacobians compose by the chain rule; the inverse (when present) composes
    in the opposite order. Used for crossing detection, where the doubled map
    has eigenvalues of definite sign at a saddle.
    """
    ev = m.evaluate

    def evaluate(p):
        return ev(ev(p))

    jac = None
    if m.jacobian is not None:
        def jac(p):  # noqa: E306
            q = ev(p)
            return np.asarray(m.jacobian(q)) @ np.asarray(m.jacobian(p))

    inv = None
    if m.inverse is not None:
        def inv(p):  # noqa: E306
            return m.inverse(m.inverse(p))

    evb = None
    if m.evaluate_batch is not None:
        def evb(pts):  # noqa: E306
            return m.evaluate_batch(m.evaluate_batch(pts))

    invb = None
    if m.inverse_batch is not None:
        def invb(pts):  # noqa: E306
            return m.inverse_batch(m.inverse_batch(pts))

    sing = m.singular_set
    if sing is not None:
        # The composed map is additionally non-smooth on the preimage of the
        # singular set; membership keeps the direct test and adds one pullback.
        base_contains = sing.contains

        def contains(p):
            if base_contains(p):
                return True
            try:
                q = ev(p)
            except Exception:
                return True
            return base_contains(q)

        sing = SingularSet(f"{sing.description} (and its preimage)", contains)

    return PlanarMap(
        name=f"{m.name}^2",
        params=dict(m.params),
        evaluate=evaluate,
        jacobian=jac,
        inverse=inv,
        singular_set=sing,
        evaluate_batch=evb,
        inverse_batch=invb,
        metadata={"iterate_of": m},
    )
