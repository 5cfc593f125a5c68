"""Pure-Python/NumPy twin of the compiled kernels.

Orbit and Lyapunov loops mirror the C operation order exactly (the extension
is compiled with FP contraction off), so the two backends produce identical
doubles. Box counting shares the integer-code construction; nearest-point
queries fall back to a KD-tree, which computes the same exact minima as the
native grid walk.
"""

from __future__ import annotations

from math import log, sqrt

import numpy as np

_SING_TOL = 1e-12


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

def orbit_henon(a, b, x, y, n, burn_in, escape):
    esc2 = escape * escape
    out = np.empty((n, 2))
    for k in range(burn_in + n):
        x, y = 1.0 - a * x * x + y, b * x
        if not (x * x + y * y <= esc2):
            return out, k + 1, (x, y)
        if k >= burn_in:
            out[k - burn_in, 0] = x
            out[k - burn_in, 1] = y
    return out, -1, (0.0, 0.0)


def orbit_lozi(alpha, beta, x, y, n, burn_in, escape):
    esc2 = escape * escape
    out = np.empty((n, 2))
    for k in range(burn_in + n):
        x, y = 1.0 - alpha * abs(x) + y, beta * x
        if not (x * x + y * y <= esc2):
            return out, k + 1, (x, y)
        if k >= burn_in:
            out[k - burn_in, 0] = x
            out[k - burn_in, 1] = y
    return out, -1, (0.0, 0.0)


def orbit_henon3(a, b, x, y, z, n, burn_in, escape):
    esc2 = escape * escape
    out = np.empty((n, 3))
    for k in range(burn_in + n):
        x, y, z = 1.0 - a * x * x + y, b * z, 1.0 - a * z * z + b * x
        if not (x * x + y * y + z * z <= esc2):
            return out, k + 1, (x, y, z)
        if k >= burn_in:
            out[k - burn_in, 0] = x
            out[k - burn_in, 1] = y
            out[k - burn_in, 2] = z
    return out, -1, (0.0, 0.0, 0.0)


def orbit_lozi3(alpha, beta, x, y, z, n, burn_in, escape):
    esc2 = escape * escape
    out = np.empty((n, 3))
    for k in range(burn_in + n):
        x, y, z = 1.0 - alpha * abs(x) + y, beta * z, 1.0 - alpha * abs(z) + beta * x
        if not (x * x + y * y + z * z <= esc2):
            return out, k + 1, (x, y, z)
        if k >= burn_in:
            out[k - burn_in, 0] = x
            out[k - burn_in, 1] = y
            out[k - burn_in, 2] = z
    return out, -1, (0.0, 0.0, 0.0)


# ---------------------------------------------------------------------------
# Lyapunov accumulation (Gram-Schmidt every step)
# ---------------------------------------------------------------------------

def _lyap2(jac, step, x, y, n, escape):
    esc2 = escape * escape
    q11, q21, q12, q22 = 1.0, 0.0, 0.0, 1.0
    s1 = s2 = 0.0
    skipped = 0
    for k in range(n):
        J = jac(x, y)
        if J is None:
            skipped += 1
        else:
            j11, j12, j21, j22 = J
            w11 = j11 * q11 + j12 * q21
            w21 = j21 * q11 + j22 * q21
            w12 = j11 * q12 + j12 * q22
            w22 = j21 * q12 + j22 * q22
            n1 = sqrt(w11 * w11 + w21 * w21)
            q11 = w11 / n1
            q21 = w21 / n1
            proj = q11 * w12 + q21 * w22
            w12 -= proj * q11
            w22 -= proj * q21
            n2 = sqrt(w12 * w12 + w22 * w22)
            q12 = w12 / n2
            q22 = w22 / n2
            s1 += log(n1)
            s2 += log(n2)
        x, y = step(x, y)
        if not (x * x + y * y <= esc2):
            return (float("nan"), float("nan")), skipped, k + 1, (x, y)
    m = n - skipped
    return (s1 / m, s2 / m), skipped, -1, (0.0, 0.0)


def lyap_henon(a, b, x, y, n, escape):
    return _lyap2(
        lambda px, py: (-2.0 * a * px, 1.0, b, 0.0),
        lambda px, py: (1.0 - a * px * px + py, b * px),
        x, y, n, escape,
    )


def lyap_lozi(alpha, beta, x, y, n, escape):
    def jac(px, py):
        if abs(px) < _SING_TOL:
            return None
        s = 1.0 if px > 0.0 else -1.0
        return (-alpha * s, 1.0, beta, 0.0)

    return _lyap2(
        jac,
        lambda px, py: (1.0 - alpha * abs(px) + py, beta * px),
        x, y, n, escape,
    )


def _lyap3(jac, step, x, y, z, n, escape):
    esc2 = escape * escape
    Q = np.eye(3)
    s = np.zeros(3)
    skipped = 0
    for k in range(n):
        J = jac(x, y, z)
        if J is None:
            skipped += 1
        else:
            W = np.empty((3, 3))
            for col in range(3):
                for row in range(3):
                    W[row, col] = (
                        J[row][0] * Q[0, col]
                        + J[row][1] * Q[1, col]
                        + J[row][2] * Q[2, col]
                    )
            for col in range(3):
                for prev in range(col):
                    proj = (
                        Q[0, prev] * W[0, col]
                        + Q[1, prev] * W[1, col]
                        + Q[2, prev] * W[2, col]
                    )
                    W[0, col] -= proj * Q[0, prev]
                    W[1, col] -= proj * Q[1, prev]
                    W[2, col] -= proj * Q[2, prev]
                nn = sqrt(W[0, col] ** 2 + W[1, col] ** 2 + W[2, col] ** 2)
                Q[0, col] = W[0, col] / nn
                Q[1, col] = W[1, col] / nn
                Q[2, col] = W[2, col] / nn
                s[col] += log(nn)
        x, y, z = step(x, y, z)
        if not (x * x + y * y + z * z <= esc2):
            nan = float("nan")
            return (nan, nan, nan), skipped, k + 1, (x, y, z)
    m = n - skipped
    return (s[0] / m, s[1] / m, s[2] / m), skipped, -1, (0.0, 0.0, 0.0)


def lyap_henon3(a, b, x, y, z, n, escape):
    return _lyap3(
        lambda px, py, pz: ((-2.0 * a * px, 1.0, 0.0), (0.0, 0.0, b), (b, 0.0, -2.0 * a * pz)),
        lambda px, py, pz: (1.0 - a * px * px + py, b * pz, 1.0 - a * pz * pz + b * px),
        x, y, z, n, escape,
    )


def lyap_lozi3(alpha, beta, x, y, z, n, escape):
    def jac(px, py, pz):
        if abs(px) < _SING_TOL or abs(pz) < _SING_TOL:
            return None
        sx = 1.0 if px > 0.0 else -1.0
        sz = 1.0 if pz > 0.0 else -1.0
        return ((-alpha * sx, 1.0, 0.0), (0.0, 0.0, beta), (beta, 0.0, -alpha * sz))

    return _lyap3(
        jac,
        lambda px, py, pz: (
            1.0 - alpha * abs(px) + py,
            beta * pz,
            1.0 - alpha * abs(pz) + beta * px,
        ),
        x, y, z, n, escape,
    )


# ---------------------------------------------------------------------------
# box counting
# ---------------------------------------------------------------------------

def box_count_2d(pts, ox, oy, eps):
    ix = np.floor((pts[:, 0] - ox) / eps).astype(np.int64)
    iy = np.floor((pts[:, 1] - oy) / eps).astype(np.int64)
    if ix.size and (int(ix.max()) >= 1 << 31 or int(iy.max()) >= 1 << 31):
        raise ValueError("box grid too fine for the 64-bit cell code")
    return int(np.unique((ix << np.int64(31)) + iy).size)


def box_count_3d(pts, ox, oy, oz, eps):
    ix = np.floor((pts[:, 0] - ox) / eps).astype(np.int64)
    iy = np.floor((pts[:, 1] - oy) / eps).astype(np.int64)
    iz = np.floor((pts[:, 2] - oz) / eps).astype(np.int64)
    if ix.size and max(int(ix.max()), int(iy.max()), int(iz.max())) >= 1 << 21:
        raise ValueError("box grid too fine for the 64-bit cell code")
    code = (ix << np.int64(42)) + (iy << np.int64(21)) + iz
    return int(np.unique(code).size)


# ---------------------------------------------------------------------------
# one-sided point-set distance
# ---------------------------------------------------------------------------

def _onesided_tree(a, b):
    from scipy.spatial import cKDTree

    d, _ = cKDTree(b).query(a, k=1)
    return float(np.max(d))


def onesided_2d(a, b, cells=256):
    return _onesided_tree(a, b)


def onesided_3d(a, b, cells=64):
    return _onesided_tree(a, b)
