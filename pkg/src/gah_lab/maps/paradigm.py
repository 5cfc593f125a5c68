"""Constructed horseshoe self-map of a rectangle.

The map squeezes a rectangle Q vertically by ``lambda_v``, stretches it
horizontally by ``lambda_h``, folds the resulting strip into a U lying on its
side, and places the fold back inside Q. Concretely the image is a tube of
thickness ``lambda_v * height`` around a path made of a lower leg running
right, a semicircular turn of radius ``height/4`` on the right, and an upper
leg running back left. The domain splits into three vertical strips:

* left strip  -> lower leg, affine with linear part diag(+lh, +lv);
* middle strip -> the turn (arch), curvilinear, mapped into the arch box S;
* right strip -> upper leg, affine with linear part diag(-lh, -lv).

Along the turn the angular speed is blended so that the Jacobian matches the
legs exactly at both joins: the map is C^1 across the strips. The blend
profile is

    g(u) = m*u + (c - m) * (1 - (1 - 2u)^(2k+1)) / (2(2k+1)),

with c the centerline-to-lane radius ratio r/rho(y) and m = (2k+1 - c)/(2k);
g(0)=0, g(1)=1, g'(0)=g'(1)=c, and g' >= m > 0 whenever c < 2k+1. The
polynomial order k is fixed at build time so positivity holds over all of Q,
which keeps the fold injective for every legal (lambda_v, lambda_h).

As a piecewise formula the map extends beyond Q (the legs affinely, the arch
wherever rho(y) != 0) and has exactly two fixed points, both saddles: one
inside Q on the reversing leg (eigenvalues {-lh, -lv} in the
orientation-preserving build) and one on the extended non-reversing leg just
outside Q (eigenvalues {+lh, +lv}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import GeometryError, OutsideImage, SingularLocus
from .base import PlanarMap, SingularSet

_FIT_TOL = 1e-9


@dataclass(frozen=True)
class GahParams:
    """Construction parameters for the horseshoe paradigm map.

    ``lambda_v`` in (0, 1/2) is the vertical contraction, ``lambda_h`` in
    (1, 2) the horizontal expansion. ``fold_center`` optionally overrides the
    arch-turn center (default: horseshoe centered in the rectangle);
    ``translation`` shifts the whole image; ``orientation`` 'reversing'
    composes with a reflection in the rectangle's horizontal midline.
    """

    lambda_v: float
    lambda_h: float
    fold_center: tuple | None = None
    translation: tuple = (0.0, 0.0)
    orientation: str = "preserving"

    def __post_init__(self):
        if not (0.0 < self.lambda_v < 0.5):
            raise ValueError(f"lambda_v must lie in (0, 1/2), got {self.lambda_v}")
        if not (1.0 < self.lambda_h < 2.0):
            raise ValueError(f"lambda_h must lie in (1, 2), got {self.lambda_h}")
        if self.orientation not in ("preserving", "reversing"):
            raise ValueError("orientation must be 'preserving' or 'reversing'")


def _rectangle_bounds(region):
    v = np.asarray(region.vertices, dtype=float)
    xs = np.unique(np.round(v[:, 0], 12))
    ys = np.unique(np.round(v[:, 1], 12))
    if xs.size != 2 or ys.size != 2:
        raise GeometryError("paradigm construction requires an axis-aligned rectangle")
    return float(xs[0]), float(ys[0]), float(xs[1]), float(ys[1])


class _Geometry:
    """Resolved fold geometry; all the piecewise formulas read from here."""

    def __init__(self, gp, region):
        qx0, qy0, qx1, qy1 = _rectangle_bounds(region)
        W = qx1 - qx0
        H = qy1 - qy0
        lv, lh = gp.lambda_v, gp.lambda_h

        r = H / 4.0                      # turn radius (legs at quarter heights)
        thick = lv * H                   # tube thickness
        leg = (lh * W - math.pi * r) / 2.0
        if leg <= 0.0:
            raise GeometryError("rectangle too narrow: the fold leaves no room for legs")

        slack = W - (leg + r + thick / 2.0)
        if slack <= 0.0:
            raise GeometryError(
                "folded image cannot fit inside the rectangle for these factors"
            )

        y_mid = 0.5 * (qy0 + qy1)
        if gp.fold_center is None:
            cx, cy = qx0 + slack / 2.0 + leg, y_mid
        else:
            cx, cy = float(gp.fold_center[0]), float(gp.fold_center[1])
        cx += float(gp.translation[0])
        cy += float(gp.translation[1])

        self.qx0, self.qy0, self.qx1, self.qy1 = qx0, qy0, qx1, qy1
        self.W, self.H, self.lv, self.lh = W, H, lv, lh
        self.r, self.thick, self.leg = r, thick, leg
        self.y_mid = y_mid
        self.cx, self.cy = cx, cy
        self.x_start = cx - leg
        self.reversing = gp.orientation == "reversing"
        # domain strip boundaries (preimages of the joins)
        self.x_a = qx0 + leg / lh
        self.x_b = qx0 + (leg + math.pi * r) / lh

        # image bounding box must sit inside Q
        ylo, yhi = cy - r - thick / 2.0, cy + r + thick / 2.0
        if self.reversing:
            ylo, yhi = 2.0 * y_mid - yhi, 2.0 * y_mid - ylo
        tol = _FIT_TOL * max(W, H)
        if (
            self.x_start < qx0 - tol
            or cx + r + thick / 2.0 > qx1 + tol
            or ylo < qy0 - tol
            or yhi > qy1 + tol
        ):
            raise GeometryError(
                "folded image cannot fit inside the rectangle for this fold "
                "center / translation"
            )

        # rho(y) = r - lambda_v*(y - y_mid) is the lane radius; over Q it stays
        # positive because lambda_v < 1/2. The blend order k keeps the angular
        # speed positive (injective fold) with a factor-2 margin.
        rho_min = r - lv * H / 2.0
        c_max = r / rho_min
        self.k = max(1, math.ceil((2.0 * c_max - 1.0) / 2.0))

    # -- blend profile ----------------------------------------------------
    def g(self, u, c):
        k = self.k
        m = (2 * k + 1 - c) / (2 * k)
        return m * u + (c - m) * (1.0 - (1.0 - 2.0 * u) ** (2 * k + 1)) / (2.0 * (2 * k + 1))

    def g_u(self, u, c):
        k = self.k
        m = (2 * k + 1 - c) / (2 * k)
        return c - (c - m) * (1.0 - (1.0 - 2.0 * u) ** (2 * k))

    def g_c(self, u):
        k = self.k
        return -u / (2.0 * k) + (1.0 - (1.0 - 2.0 * u) ** (2 * k + 1)) / (4.0 * k)


def build_gah_paradigm(gp, region):
    """Build the horseshoe paradigm map on a rectangular region.

    Returns a ``PlanarMap`` whose image lies inside the region. The map
    carries metadata: its two fixed points, the saddle inside the region, the
    domain arch strip, and a default arch box S (the full-height slab from
    the turn center to the right edge, which contains the fold and lies
    strictly right of the in-region saddle for the intended parameters).

    Raises ``GeometryError`` when the folded image cannot fit.
    """
    geo = _Geometry(gp, region)
    lv, lh, r = geo.lv, geo.lh, geo.r
    two_y_mid = 2.0 * geo.y_mid

    def _fold(x, y):
        # (x, y) -> image point, before any orientation reflection
        n = lv * (y - geo.y_mid)
        if x <= geo.x_a:
            return geo.x_start + lh * (x - geo.qx0), geo.cy - r + n
        if x >= geo.x_b:
            s = lh * (x - geo.qx0)
            return geo.x_start + 2.0 * geo.leg + math.pi * r - s, geo.cy + r - n
        rho = r - n
        if rho == 0.0:
            raise SingularLocus("paradigm map: fold-center line rho(y) = 0")
        u = (x - geo.x_a) / (geo.x_b - geo.x_a)
        theta = math.pi * geo.g(u, r / rho) - math.pi / 2.0
        return geo.cx + rho * math.cos(theta), geo.cy + rho * math.sin(theta)

    def evaluate(p):
        fx, fy = _fold(float(p[0]), float(p[1]))
        if geo.reversing:
            fy = two_y_mid - fy
        return np.array([fx, fy])

    def evaluate_batch(pts):
        pts = np.asarray(pts, dtype=float)
        x, y = pts[:, 0], pts[:, 1]
        n = lv * (y - geo.y_mid)
        fx = np.empty_like(x)
        fy = np.empty_like(y)

        left = x <= geo.x_a
        right = x >= geo.x_b
        mid = ~(left | right)

        fx[left] = geo.x_start + lh * (x[left] - geo.qx0)
        fy[left] = geo.cy - r + n[left]
        fx[right] = geo.x_start + 2.0 * geo.leg + math.pi * r - lh * (x[right] - geo.qx0)
        fy[right] = geo.cy + r - n[right]
        if np.any(mid):
            rho = r - n[mid]
            with np.errstate(divide="ignore", invalid="ignore"):
                c = r / rho
                u = (x[mid] - geo.x_a) / (geo.x_b - geo.x_a)
                theta = np.pi * geo.g(u, c) - np.pi / 2.0
            fx[mid] = geo.cx + rho * np.cos(theta)
            fy[mid] = geo.cy + rho * np.sin(theta)
        if geo.reversing:
            fy = two_y_mid - fy
        return np.column_stack([fx, fy])

    def jacobian(p):
        x, y = float(p[0]), float(p[1])
        if x <= geo.x_a:
            J = np.array([[lh, 0.0], [0.0, lv]])
        elif x >= geo.x_b:
            J = np.array([[-lh, 0.0], [0.0, -lv]])
        else:
            n = lv * (y - geo.y_mid)
            rho = r - n
            if rho == 0.0:
                raise SingularLocus("paradigm map: fold-center line rho(y) = 0")
            c = r / rho
            u = (x - geo.x_a) / (geo.x_b - geo.x_a)
            theta = math.pi * geo.g(u, c) - math.pi / 2.0
            ct, st = math.cos(theta), math.sin(theta)
            theta_x = lh * geo.g_u(u, c) / r
            theta_y = math.pi * (r * lv / (rho * rho)) * geo.g_c(u)
            # columns: d/dx = rho*theta_x*T,  d/dy = -lv*R + rho*theta_y*T
            J = np.array(
                [
                    [-rho * theta_x * st, -lv * ct - rho * theta_y * st],
                    [rho * theta_x * ct, -lv * st + rho * theta_y * ct],
                ]
            )
        if geo.reversing:
            J = np.array([[1.0, 0.0], [0.0, -1.0]]) @ J
        return J

    band_tol = 1e-9 * geo.H

    def inverse(q):
        qx, qy = float(q[0]), float(q[1])
        if geo.reversing:
            qy = two_y_mid - qy
        if qx <= geo.cx:
            lo = qy - (geo.cy - r)   # offset within the lower-leg band
            hi = (geo.cy + r) - qy   # offset within the upper-leg band
            if abs(lo) <= geo.thick / 2.0 + band_tol:
                x = geo.qx0 + (qx - geo.x_start) / lh
                if x <= geo.x_a + band_tol:
                    return np.array([x, geo.y_mid + lo / lv])
            if abs(hi) <= geo.thick / 2.0 + band_tol:
                x = geo.qx0 + (geo.x_start + 2.0 * geo.leg + math.pi * r - qx) / lh
                if x >= geo.x_b - band_tol:
                    return np.array([x, geo.y_mid + hi / lv])
            raise OutsideImage(f"point {(qx, qy)} is not in the folded image tube")
        dx, dy = qx - geo.cx, qy - geo.cy
        rho = math.hypot(dx, dy)
        if abs(rho - r) > geo.thick / 2.0 + band_tol:
            raise OutsideImage(f"point {(qx, qy)} is not in the folded image tube")
        target = (math.atan2(dy, dx) + math.pi / 2.0) / math.pi
        u = _solve_blend(geo, r / rho, min(max(target, 0.0), 1.0))
        return np.array(
            [geo.x_a + u * (geo.x_b - geo.x_a), geo.y_mid + (r - rho) / lv]
        )

    def lipschitz_box(box):
        return _lipschitz_box(geo, box)

    sing_halfwidth = 1e-12 * geo.H

    def on_singular(p):
        x, y = float(p[0]), float(p[1])
        if not (geo.x_a < x < geo.x_b):
            return False
        return abs(r - lv * (y - geo.y_mid)) < sing_halfwidth

    m = PlanarMap(
        name="gah_paradigm",
        params={
            "lambda_v": lv,
            "lambda_h": lh,
            "orientation": gp.orientation,
            "tx": float(gp.translation[0]),
            "ty": float(gp.translation[1]),
        },
        evaluate=evaluate,
        jacobian=jacobian,
        inverse=inverse,
        singular_set=SingularSet(
            "fold-center line y = y_mid + r/lambda_v across the arch strip", on_singular
        ),
        evaluate_batch=evaluate_batch,
        lipschitz_box=lipschitz_box,
    )
    m.metadata.update(_fixed_point_metadata(geo))
    m.metadata["geometry"] = {
        "rect": (geo.qx0, geo.qy0, geo.qx1, geo.qy1),
        "leg_length": geo.leg,
        "turn_radius": r,
        "tube_thickness": geo.thick,
        "turn_center": (geo.cx, geo.cy),
        "blend_order": geo.k,
    }
    m.metadata["arch_strip"] = (geo.x_a, geo.x_b)
    m.metadata["arch_box"] = (geo.cx, geo.qy0, geo.qx1, geo.qy1)
    return m


def _solve_blend(geo, c, target, tol=1e-15, max_iter=100):
    """Invert the monotone blend profile g(., c) on [0, 1]."""
    lo, hi = 0.0, 1.0
    u = target  # g is a perturbation of the identity; good initial guess
    for _ in range(max_iter):
        f = geo.g(u, c) - target
        if f > 0.0:
            hi = u
        else:
            lo = u
        du = f / geo.g_u(u, c)
        u_new = u - du
        if not (lo < u_new < hi):
            u_new = 0.5 * (lo + hi)
        if abs(u_new - u) <= tol:
            return u_new
        u = u_new
    return u


def _fixed_point_metadata(geo):
    """Closed-form fixed points of the two affine legs (as formulas extended
    beyond their strips): keep those consistent with their own strip."""
    lv, lh, r = geo.lv, geo.lh, geo.r
    out = []
    for piece in ("lower_leg", "upper_leg"):
        if piece == "lower_leg":
            A = np.diag([lh, lv])
            p_ref = np.array([geo.qx0, geo.y_mid])
            f_ref = np.array([geo.x_start, geo.cy - r])
        else:
            A = np.diag([-lh, -lv])
            p_ref = np.array([geo.qx1, geo.y_mid])
            f_ref = np.array(
                [geo.x_start + 2.0 * geo.leg + math.pi * r - lh * geo.W, geo.cy + r]
            )
        if geo.reversing:
            R = np.diag([1.0, -1.0])
            A = R @ A
            f_ref = np.array([f_ref[0], 2.0 * geo.y_mid - f_ref[1]])
        b = f_ref - A @ p_ref
        fp = np.linalg.solve(np.eye(2) - A, b)
        valid = fp[0] <= geo.x_a if piece == "lower_leg" else fp[0] >= geo.x_b
        if valid:
            out.append(
                {
                    "point": fp,
                    "piece": piece,
                    "eigenvalues": tuple(np.diag(A)),
                }
            )
    saddle = None
    for rec in out:
        x, y = rec["point"]
        if geo.qx0 <= x <= geo.qx1 and geo.qy0 <= y <= geo.qy1:
            saddle = rec["point"]
    return {"fixed_points": out, "saddle_in_region": saddle}


def _lipschitz_box(geo, box):
    """Sup of the Jacobian operator norm over an axis-aligned box, per piece.

    Legs have exact norm lambda_h. On the arch the tangential stretch is
    lambda_h * (1 - (2k+1)/(2k) * (1-w) * (1-psi)) with w = rho/r and
    psi = (1-2u)^(2k); its extremes over the box's u- and w-ranges combine
    with a transverse-column bound into a Frobenius-style sup.
    """
    xmin, ymin, xmax, ymax = box
    lv, lh, r, k = geo.lv, geo.lh, geo.r, geo.k
    best = 0.0
    if xmin <= geo.x_a or xmax >= geo.x_b:
        best = lh  # sigma_1 of diag(lh, lv)
    if xmax <= geo.x_a or xmin >= geo.x_b:
        return best

    # arch contribution
    u0 = max((xmin - geo.x_a) / (geo.x_b - geo.x_a), 0.0)
    u1 = min((xmax - geo.x_a) / (geo.x_b - geo.x_a), 1.0)
    n_lo, n_hi = lv * (ymin - geo.y_mid), lv * (ymax - geo.y_mid)
    rho_lo, rho_hi = r - n_hi, r - n_lo
    if rho_lo <= 0.0:
        return float("inf")  # box reaches the fold-center line
    w_lo, w_hi = rho_lo / r, rho_hi / r

    s0, s1 = 1.0 - 2.0 * u1, 1.0 - 2.0 * u0
    psi_hi = max(s0 ** (2 * k), s1 ** (2 * k))
    psi_lo = 0.0 if s0 <= 0.0 <= s1 else min(s0 ** (2 * k), s1 ** (2 * k))

    fac = (2 * k + 1) / (2 * k)
    cands = [
        1.0 - fac * (1.0 - w) * (1.0 - psi)
        for w in (w_lo, w_hi)
        for psi in (psi_lo, psi_hi)
    ]
    sup_dx = lh * max(abs(v) for v in cands)
    # |g_c| <= 1/(4k) and |rho*theta_y| = pi*lv*c*|g_c| with c <= 1/w_lo
    sup_dy2 = lv * lv + (math.pi * lv / (w_lo * 4.0 * k)) ** 2
    return max(best, math.sqrt(sup_dx * sup_dx + sup_dy2))
