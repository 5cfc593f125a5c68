# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loops: orbit iteration, Lyapunov accumulation, box-cell
codes and grid nearest-point queries.

Operation order matches the pure-Python twin exactly and the extension is
built with FP contraction disabled, so both backends produce identical
doubles for orbits and identical integers for box counts.
"""

from libc.math cimport fabs, floor, log, sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF SING_TOL = 1e-12


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

def orbit_henon(double a, double b, double x, double y,
                Py_ssize_t n, Py_ssize_t burn_in, double escape):
    cdef double esc2 = escape * escape
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 2))
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, total = burn_in + n
    cdef double nx_, ny_
    for k in range(total):
        nx_ = 1.0 - a * x * x + y
        ny_ = b * x
        x = nx_
        y = ny_
        if not (x * x + y * y <= esc2):
            return out, k + 1, (x, y)
        if k >= burn_in:
            o[k - burn_in, 0] = x
            o[k - burn_in, 1] = y
    return out, -1, (0.0, 0.0)


def orbit_lozi(double alpha, double beta, double x, double y,
               Py_ssize_t n, Py_ssize_t burn_in, double escape):
    cdef double esc2 = escape * escape
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 2))
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, total = burn_in + n
    cdef double nx_, ny_
    for k in range(total):
        nx_ = 1.0 - alpha * fabs(x) + y
        ny_ = beta * x
        x = nx_
        y = ny_
        if not (x * x + y * y <= esc2):
            return out, k + 1, (x, y)
        if k >= burn_in:
            o[k - burn_in, 0] = x
            o[k - burn_in, 1] = y
    return out, -1, (0.0, 0.0)


def orbit_henon3(double a, double b, double x, double y, double z,
                 Py_ssize_t n, Py_ssize_t burn_in, double escape):
    cdef double esc2 = escape * escape
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 3))
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, total = burn_in + n
    cdef double nx_, ny_, nz_
    for k in range(total):
        nx_ = 1.0 - a * x * x + y
        ny_ = b * z
        nz_ = 1.0 - a * z * z + b * x
        x = nx_
        y = ny_
        z = nz_
        if not (x * x + y * y + z * z <= esc2):
            return out, k + 1, (x, y, z)
        if k >= burn_in:
            o[k - burn_in, 0] = x
            o[k - burn_in, 1] = y
            o[k - burn_in, 2] = z
    return out, -1, (0.0, 0.0, 0.0)


def orbit_lozi3(double alpha, double beta, double x, double y, double z,
                Py_ssize_t n, Py_ssize_t burn_in, double escape):
    cdef double esc2 = escape * escape
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 3))
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, total = burn_in + n
    cdef double nx_, ny_, nz_
    for k in range(total):
        nx_ = 1.0 - alpha * fabs(x) + y
        ny_ = beta * z
        nz_ = 1.0 - alpha * fabs(z) + beta * x
        x = nx_
        y = ny_
        z = nz_
        if not (x * x + y * y + z * z <= esc2):
            return out, k + 1, (x, y, z)
        if k >= burn_in:
            o[k - burn_in, 0] = x
            o[k - burn_in, 1] = y
            o[k - burn_in, 2] = z
    return out, -1, (0.0, 0.0, 0.0)


# ---------------------------------------------------------------------------
# Lyapunov accumulation (Gram-Schmidt every step)
# ---------------------------------------------------------------------------

def lyap_henon(double a, double b, double x, double y,
               Py_ssize_t n, double escape):
    cdef double esc2 = escape * escape
    cdef double q11 = 1.0, q21 = 0.0, q12 = 0.0, q22 = 1.0
    cdef double s1 = 0.0, s2 = 0.0
    cdef double j11, w11, w21, w12, w22, n1, n2, proj, nx_, ny_
    cdef Py_ssize_t k
    for k in range(n):
        j11 = -2.0 * a * x
        w11 = j11 * q11 + 1.0 * q21
        w21 = b * q11 + 0.0 * q21
        w12 = j11 * q12 + 1.0 * q22
        w22 = b * q12 + 0.0 * q22
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
        nx_ = 1.0 - a * x * x + y
        ny_ = b * x
        x = nx_
        y = ny_
        if not (x * x + y * y <= esc2):
            return (float("nan"), float("nan")), 0, k + 1, (x, y)
    return (s1 / n, s2 / n), 0, -1, (0.0, 0.0)


def lyap_lozi(double alpha, double beta, double x, double y,
              Py_ssize_t n, double escape):
    cdef double esc2 = escape * escape
    cdef double q11 = 1.0, q21 = 0.0, q12 = 0.0, q22 = 1.0
    cdef double s1 = 0.0, s2 = 0.0
    cdef double j11, w11, w21, w12, w22, n1, n2, proj, nx_, ny_, sgn
    cdef Py_ssize_t k, m
    cdef Py_ssize_t skipped = 0
    for k in range(n):
        if fabs(x) < SING_TOL:
            skipped += 1
        else:
            sgn = 1.0 if x > 0.0 else -1.0
            j11 = -alpha * sgn
            w11 = j11 * q11 + 1.0 * q21
            w21 = beta * q11 + 0.0 * q21
            w12 = j11 * q12 + 1.0 * q22
            w22 = beta * q12 + 0.0 * q22
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
        nx_ = 1.0 - alpha * fabs(x) + y
        ny_ = beta * x
        x = nx_
        y = ny_
        if not (x * x + y * y <= esc2):
            return (float("nan"), float("nan")), skipped, k + 1, (x, y)
    m = n - skipped
    return (s1 / m, s2 / m), skipped, -1, (0.0, 0.0)


cdef inline void _gs3(double* J, double* Q, double* s) noexcept nogil:
    # One step: W = J @ Q (row-major 3x3 flats), then Gram-Schmidt W into Q,
    # accumulating log column norms into s.
    cdef double W[9]
    cdef Py_ssize_t row, col, prev
    cdef double proj, nn
    for col in range(3):
        for row in range(3):
            W[row * 3 + col] = (
                J[row * 3 + 0] * Q[0 * 3 + col]
                + J[row * 3 + 1] * Q[1 * 3 + col]
                + J[row * 3 + 2] * Q[2 * 3 + col]
            )
    for col in range(3):
        for prev in range(col):
            proj = (
                Q[0 * 3 + prev] * W[0 * 3 + col]
                + Q[1 * 3 + prev] * W[1 * 3 + col]
                + Q[2 * 3 + prev] * W[2 * 3 + col]
            )
            W[0 * 3 + col] -= proj * Q[0 * 3 + prev]
            W[1 * 3 + col] -= proj * Q[1 * 3 + prev]
            W[2 * 3 + col] -= proj * Q[2 * 3 + prev]
        nn = sqrt(
            W[0 * 3 + col] * W[0 * 3 + col]
            + W[1 * 3 + col] * W[1 * 3 + col]
            + W[2 * 3 + col] * W[2 * 3 + col]
        )
        Q[0 * 3 + col] = W[0 * 3 + col] / nn
        Q[1 * 3 + col] = W[1 * 3 + col] / nn
        Q[2 * 3 + col] = W[2 * 3 + col] / nn
        s[col] += log(nn)


def lyap_henon3(double a, double b, double x, double y, double z,
                Py_ssize_t n, double escape):
    cdef double esc2 = escape * escape
    cdef double Q[9]
    cdef double s[3]
    cdef double J[9]
    cdef Py_ssize_t k, i
    cdef double nx_, ny_, nz_, nan
    for i in range(9):
        Q[i] = 1.0 if i % 4 == 0 else 0.0
        J[i] = 0.0
    for i in range(3):
        s[i] = 0.0
    J[1] = 1.0
    J[5] = b
    J[6] = b
    for k in range(n):
        J[0] = -2.0 * a * x
        J[8] = -2.0 * a * z
        _gs3(J, Q, s)
        nx_ = 1.0 - a * x * x + y
        ny_ = b * z
        nz_ = 1.0 - a * z * z + b * x
        x = nx_
        y = ny_
        z = nz_
        if not (x * x + y * y + z * z <= esc2):
            nan = float("nan")
            return (nan, nan, nan), 0, k + 1, (x, y, z)
    return (s[0] / n, s[1] / n, s[2] / n), 0, -1, (0.0, 0.0, 0.0)


def lyap_lozi3(double alpha, double beta, double x, double y, double z,
               Py_ssize_t n, double escape):
    cdef double esc2 = escape * escape
    cdef double Q[9]
    cdef double s[3]
    cdef double J[9]
    cdef Py_ssize_t k, i, m
    cdef Py_ssize_t skipped = 0
    cdef double nx_, ny_, nz_, sx, sz, nan
    for i in range(9):
        Q[i] = 1.0 if i % 4 == 0 else 0.0
        J[i] = 0.0
    for i in range(3):
        s[i] = 0.0
    J[1] = 1.0
    J[5] = beta
    J[6] = beta
    for k in range(n):
        if fabs(x) < SING_TOL or fabs(z) < SING_TOL:
            skipped += 1
        else:
            sx = 1.0 if x > 0.0 else -1.0
            sz = 1.0 if z > 0.0 else -1.0
            J[0] = -alpha * sx
            J[8] = -alpha * sz
            _gs3(J, Q, s)
        nx_ = 1.0 - alpha * fabs(x) + y
        ny_ = beta * z
        nz_ = 1.0 - alpha * fabs(z) + beta * x
        x = nx_
        y = ny_
        z = nz_
        if not (x * x + y * y + z * z <= esc2):
            nan = float("nan")
            return (nan, nan, nan), skipped, k + 1, (x, y, z)
    m = n - skipped
    return (s[0] / m, s[1] / m, s[2] / m), skipped, -1, (0.0, 0.0, 0.0)


# ---------------------------------------------------------------------------
# box counting
# ---------------------------------------------------------------------------

def box_count_2d(double[:, ::1] pts, double ox, double oy, double eps):
    cdef Py_ssize_t n = pts.shape[0], i
    cdef cnp.ndarray[cnp.int64_t, ndim=1] codes = np.empty(n, dtype=np.int64)
    cdef long long[::1] c = codes
    cdef long long ix, iy
    cdef long long lim = <long long>1 << 31
    for i in range(n):
        ix = <long long>floor((pts[i, 0] - ox) / eps)
        iy = <long long>floor((pts[i, 1] - oy) / eps)
        if ix >= lim or iy >= lim:
            raise ValueError("box grid too fine for the 64-bit cell code")
        c[i] = (ix << 31) + iy
    return int(np.unique(codes).size)


def box_count_3d(double[:, ::1] pts, double ox, double oy, double oz, double eps):
    cdef Py_ssize_t n = pts.shape[0], i
    cdef cnp.ndarray[cnp.int64_t, ndim=1] codes = np.empty(n, dtype=np.int64)
    cdef long long[::1] c = codes
    cdef long long ix, iy, iz
    cdef long long lim = <long long>1 << 21
    for i in range(n):
        ix = <long long>floor((pts[i, 0] - ox) / eps)
        iy = <long long>floor((pts[i, 1] - oy) / eps)
        iz = <long long>floor((pts[i, 2] - oz) / eps)
        if ix >= lim or iy >= lim or iz >= lim:
            raise ValueError("box grid too fine for the 64-bit cell code")
        c[i] = (ix << 42) + (iy << 21) + iz
    return int(np.unique(codes).size)


# ---------------------------------------------------------------------------
# one-sided point-set distance via a uniform grid on the target cloud
# ---------------------------------------------------------------------------

cdef inline Py_ssize_t _imax(Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    return a if a > b else b


cdef inline Py_ssize_t _imin(Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    return a if a < b else b


cdef inline Py_ssize_t _iabs(Py_ssize_t a) noexcept nogil:
    return a if a >= 0 else -a


def onesided_2d(double[:, ::1] a, double[:, ::1] b, int cells):
    """max over rows of ``a`` of the Euclidean distance to the nearest row
    of ``b``, via a uniform bucket grid with expanding ring search."""
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef double bx0 = b[0, 0], bx1 = b[0, 0], by0 = b[0, 1], by1 = b[0, 1]
    cdef Py_ssize_t i
    for i in range(nb):
        if b[i, 0] < bx0: bx0 = b[i, 0]
        if b[i, 0] > bx1: bx1 = b[i, 0]
        if b[i, 1] < by0: by0 = b[i, 1]
        if b[i, 1] > by1: by1 = b[i, 1]
    cdef double extent = bx1 - bx0
    if by1 - by0 > extent:
        extent = by1 - by0
    cdef double cell = extent / cells if extent > 0.0 else 1.0
    cdef Py_ssize_t nx = <Py_ssize_t>((bx1 - bx0) / cell) + 1
    cdef Py_ssize_t ny = <Py_ssize_t>((by1 - by0) / cell) + 1

    cdef cnp.ndarray[cnp.int64_t, ndim=1] starts_arr = np.zeros(nx * ny + 1, dtype=np.int64)
    cdef long long[::1] starts = starts_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order_arr = np.empty(nb, dtype=np.int64)
    cdef long long[::1] order = order_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] fill_arr = np.zeros(nx * ny, dtype=np.int64)
    cdef long long[::1] fill = fill_arr
    cdef Py_ssize_t cx, cy, idx
    for i in range(nb):
        cx = _imin(<Py_ssize_t>((b[i, 0] - bx0) / cell), nx - 1)
        cy = _imin(<Py_ssize_t>((b[i, 1] - by0) / cell), ny - 1)
        starts[cx * ny + cy + 1] += 1
    for i in range(nx * ny):
        starts[i + 1] += starts[i]
    for i in range(nb):
        cx = _imin(<Py_ssize_t>((b[i, 0] - bx0) / cell), nx - 1)
        cy = _imin(<Py_ssize_t>((b[i, 1] - by0) / cell), ny - 1)
        idx = cx * ny + cy
        order[starts[idx] + fill[idx]] = i
        fill[idx] += 1

    cdef double worst2 = 0.0
    cdef double best2, qx, qy, dx, dy, d2, reach
    cdef Py_ssize_t qi, qcx, qcy, R, Rmax, jx, jy, jy0, jy1, jx0, jx1, t, bi, j
    with nogil:
        for qi in range(na):
            qx = a[qi, 0]
            qy = a[qi, 1]
            qcx = <Py_ssize_t>floor((qx - bx0) / cell)
            qcy = <Py_ssize_t>floor((qy - by0) / cell)
            best2 = 1e300
            Rmax = _imax(
                _imax(_iabs(qcx), _iabs(qcx - (nx - 1))),
                _imax(_iabs(qcy), _iabs(qcy - (ny - 1))),
            ) + 1
            R = 0
            while R <= Rmax:
                jy0 = _imax(qcy - R, 0)
                jy1 = _imin(qcy + R, ny - 1)
                jx0 = _imax(qcx - R, 0)
                jx1 = _imin(qcx + R, nx - 1)
                for jx in range(jx0, jx1 + 1):
                    for jy in range(jy0, jy1 + 1):
                        if R > 0 and (jx != qcx - R and jx != qcx + R
                                      and jy != qcy - R and jy != qcy + R):
                            continue  # interior of the block: scanned earlier
                        bi = jx * ny + jy
                        for t in range(starts[bi], starts[bi + 1]):
                            j = order[t]
                            dx = b[j, 0] - qx
                            dy = b[j, 1] - qy
                            d2 = dx * dx + dy * dy
                            if d2 < best2:
                                best2 = d2
                reach = R * cell
                if best2 <= reach * reach:
                    break
                R += 1
            if best2 > worst2:
                worst2 = best2
    return sqrt(worst2)


def onesided_3d(double[:, ::1] a, double[:, ::1] b, int cells):
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef double lo[3]
    cdef double hi[3]
    cdef Py_ssize_t i, d
    for d in range(3):
        lo[d] = b[0, d]
        hi[d] = b[0, d]
    for i in range(nb):
        for d in range(3):
            if b[i, d] < lo[d]: lo[d] = b[i, d]
            if b[i, d] > hi[d]: hi[d] = b[i, d]
    cdef double extent = 0.0
    for d in range(3):
        if hi[d] - lo[d] > extent:
            extent = hi[d] - lo[d]
    cdef double cell = extent / cells if extent > 0.0 else 1.0
    cdef Py_ssize_t n0 = <Py_ssize_t>((hi[0] - lo[0]) / cell) + 1
    cdef Py_ssize_t n1 = <Py_ssize_t>((hi[1] - lo[1]) / cell) + 1
    cdef Py_ssize_t n2c = <Py_ssize_t>((hi[2] - lo[2]) / cell) + 1

    cdef Py_ssize_t ncell = n0 * n1 * n2c
    cdef cnp.ndarray[cnp.int64_t, ndim=1] starts_arr = np.zeros(ncell + 1, dtype=np.int64)
    cdef long long[::1] starts = starts_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order_arr = np.empty(nb, dtype=np.int64)
    cdef long long[::1] order = order_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] fill_arr = np.zeros(ncell, dtype=np.int64)
    cdef long long[::1] fill = fill_arr
    cdef Py_ssize_t cx, cy, cz, idx
    for i in range(nb):
        cx = _imin(<Py_ssize_t>((b[i, 0] - lo[0]) / cell), n0 - 1)
        cy = _imin(<Py_ssize_t>((b[i, 1] - lo[1]) / cell), n1 - 1)
        cz = _imin(<Py_ssize_t>((b[i, 2] - lo[2]) / cell), n2c - 1)
        starts[(cx * n1 + cy) * n2c + cz + 1] += 1
    for i in range(ncell):
        starts[i + 1] += starts[i]
    for i in range(nb):
        cx = _imin(<Py_ssize_t>((b[i, 0] - lo[0]) / cell), n0 - 1)
        cy = _imin(<Py_ssize_t>((b[i, 1] - lo[1]) / cell), n1 - 1)
        cz = _imin(<Py_ssize_t>((b[i, 2] - lo[2]) / cell), n2c - 1)
        idx = (cx * n1 + cy) * n2c + cz
        order[starts[idx] + fill[idx]] = i
        fill[idx] += 1

    cdef double worst2 = 0.0
    cdef double best2, d2, diff, reach, q0, q1, q2
    cdef Py_ssize_t qi, R, Rmax, jx, jy, jz, t, bi, j
    cdef Py_ssize_t qc0, qc1, qc2
    cdef Py_ssize_t jx0, jx1, jy0, jy1, jz0, jz1
    with nogil:
        for qi in range(na):
            q0 = a[qi, 0]
            q1 = a[qi, 1]
            q2 = a[qi, 2]
            qc0 = <Py_ssize_t>floor((q0 - lo[0]) / cell)
            qc1 = <Py_ssize_t>floor((q1 - lo[1]) / cell)
            qc2 = <Py_ssize_t>floor((q2 - lo[2]) / cell)
            best2 = 1e300
            Rmax = _imax(
                _imax(_iabs(qc0), _iabs(qc0 - (n0 - 1))),
                _imax(
                    _imax(_iabs(qc1), _iabs(qc1 - (n1 - 1))),
                    _imax(_iabs(qc2), _iabs(qc2 - (n2c - 1))),
                ),
            ) + 1
            R = 0
            while R <= Rmax:
                jx0 = _imax(qc0 - R, 0)
                jx1 = _imin(qc0 + R, n0 - 1)
                jy0 = _imax(qc1 - R, 0)
                jy1 = _imin(qc1 + R, n1 - 1)
                jz0 = _imax(qc2 - R, 0)
                jz1 = _imin(qc2 + R, n2c - 1)
                for jx in range(jx0, jx1 + 1):
                    for jy in range(jy0, jy1 + 1):
                        for jz in range(jz0, jz1 + 1):
                            if R > 0 and (
                                jx != qc0 - R and jx != qc0 + R
                                and jy != qc1 - R and jy != qc1 + R
                                and jz != qc2 - R and jz != qc2 + R
                            ):
                                continue
                            bi = (jx * n1 + jy) * n2c + jz
                            for t in range(starts[bi], starts[bi + 1]):
                                j = order[t]
                                diff = b[j, 0] - q0
                                d2 = diff * diff
                                diff = b[j, 1] - q1
                                d2 += diff * diff
                                diff = b[j, 2] - q2
                                d2 += diff * diff
                                if d2 < best2:
                                    best2 = d2
                reach = R * cell
                if best2 <= reach * reach:
                    break
                R += 1
            if best2 > worst2:
                worst2 = best2
    return sqrt(worst2)
