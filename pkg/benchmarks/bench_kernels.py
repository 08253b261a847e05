"""Benchmark the Jacobi eigensolver kernel: numba JIT vs pure-numpy fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py

The same comparison can be forced package-wide by setting
``LUCOSET_PURE_NUMPY=1`` before importing ``lucoset``.
"""

import time

import numpy as np

from lucoset import _kernels
from lucoset.linalg import hermitian_eig
from lucoset.werner import werner_scan

SIZES = (4, 8, 16, 32)
REPEATS = {4: 400, 8: 200, 16: 50, 32: 10}


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


def time_kernel(fn, matrix, repeats):
    off_target = 1e-14 * float(np.linalg.norm(matrix))
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(repeats):
            work = matrix.copy()
            vecs = np.eye(matrix.shape[0], dtype=np.complex128)
            fn(work, vecs, off_target, 100)
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def main():
    if not _kernels.USING_NUMBA:
        print("numba unavailable or disabled; benchmarking the fallback only")
    else:
        # trigger JIT compilation outside the timed region
        warm = random_hermitian(4, 0)
        time_kernel(_kernels.jacobi_sweeps_numba, warm, 1)

    print(f"{'n':>4} {'numba':>12} {'numpy':>12} {'speedup':>9}")
    for n in SIZES:
        matrix = random_hermitian(n, n)
        t_py = time_kernel(_kernels.jacobi_sweeps_python, matrix, max(REPEATS[n] // 10, 3))
        if _kernels.USING_NUMBA:
            t_nb = time_kernel(_kernels.jacobi_sweeps_numba, matrix, REPEATS[n])
            print(f"{n:>4} {t_nb * 1e6:>10.1f}us {t_py * 1e6:>10.1f}us {t_py / t_nb:>8.1f}x")
        else:
            print(f"{n:>4} {'-':>12} {t_py * 1e6:>10.1f}us {'-':>9}")

    # end-to-end: the 50x50 Werner stratification grid (2500 eigendecompositions)
    start = time.perf_counter()
    records = werner_scan(50, 50)
    elapsed = time.perf_counter() - start
    path = "numba" if _kernels.USING_NUMBA else "numpy"
    agree = sum(r.agree for r in records)
    print(f"\nwerner_scan(50, 50) [{path} path]: {elapsed:.3f}s, {agree}/{len(records)} agree")

    # sanity: both paths produce the same decomposition
    matrix = random_hermitian(8, 99)
    values, vectors = hermitian_eig(matrix)
    recon = (vectors * values) @ vectors.conj().T
    print(f"reconstruction error at n=8: {np.abs(recon - matrix).max():.2e}")


if __name__ == "__main__":
    main()
