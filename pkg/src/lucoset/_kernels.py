"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The cyclic Jacobi sweep below is the single hottest loop in the package:
every eigendecomposition, matrix exponential and spectrum scan funnels
through it.  By default the sweep is JIT-compiled with numba; setting the
environment variable ``LUCOSET_PURE_NUMPY=1`` (or running without numba
installed) selects the interpreted fallback, which executes the identical
arithmetic in the identical order.

``benchmarks/bench_kernels.py`` compares the two paths.
"""

import math
import os

_FORCE_NUMPY = os.environ.get("LUCOSET_PURE_NUMPY", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}

if _FORCE_NUMPY:
    numba = None
else:
    try:
        import numba
    except ImportError:  # pragma: no cover - exercised only without numba
        numba = None

USING_NUMBA = numba is not None


def jacobi_sweeps_python(a, v, off_target, max_sweeps):
    """Cyclic Jacobi diagonalization of a Hermitian matrix, in place.

    ``a`` is overwritten with a (numerically) diagonal matrix and ``v``
    accumulates the product of the plane rotations, so that on entry
    ``v = I`` implies ``a_in = v a_out v^dagger`` on exit.  Sweeps run in
    fixed row-major order over the upper triangle (p < q), which makes the
    result deterministic for a fixed input.  Iteration stops once the
    off-diagonal Frobenius mass drops to ``off_target``.

    Returns the number of completed sweeps.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    x = a[i, j]
                    off += x.real * x.real + x.imag * x.imag
        if math.sqrt(off) <= off_target:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = math.hypot(apq.real, apq.imag)
                if r <= 1e-300:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                # smaller root of t^2 + 2*tau*t - 1 = 0
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = (t * c) * phase
                sc = s.conjugate()
                # A <- V^dagger A V with V the plane rotation on (p, q)
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - sc * aiq
                    a[i, q] = s * aip + c * aiq
                for j in range(n):
                    apj = a[p, j]
                    aqj = a[q, j]
                    a[p, j] = c * apj - s * aqj
                    a[q, j] = sc * apj + c * aqj
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = complex(a[p, p].real, 0.0)
                a[q, q] = complex(a[q, q].real, 0.0)
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - sc * viq
                    v[i, q] = s * vip + c * viq
    return max_sweeps


if USING_NUMBA:
    jacobi_sweeps_numba = numba.njit(cache=True)(jacobi_sweeps_python)
    jacobi_sweeps = jacobi_sweeps_numba
else:
    jacobi_sweeps_numba = None
    jacobi_sweeps = jacobi_sweeps_python
