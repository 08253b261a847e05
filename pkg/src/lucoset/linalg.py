"""Dense complex linear algebra on plain ndarrays.

Density matrices, unitaries and Hermitian operators are all carried as
2-D ``complex128`` arrays; the validators below realize the invariants
(hermiticity, unit trace, positivity, unitarity) that the rest of the
package relies on.  The eigensolver is a cyclic Jacobi rotation scheme
(see ``_kernels``), chosen over a LAPACK call so that sweep order, and
therefore output, is fully pinned down at the sizes this package targets
(n up to a few dozen).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DimensionMismatchError,
    InvalidDensityError,
    NotHermitianError,
    NotSquareError,
    NotUnitaryError,
)

TOL_HERMITIAN = 1e-10
TOL_TRACE = 1e-10
TOL_PSD = 1e-9
TOL_UNITARY = 1e-10

_MAX_SWEEPS = 100
_OFF_DIAG_FACTOR = 1e-14


class HermitianEig(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and non-increasing; ``vectors`` holds the matching
    orthonormal eigenvectors as columns, each with its first non-negligible
    component phase-normalized to be real positive.
    """

    values: np.ndarray
    vectors: np.ndarray


def as_complex_matrix(matrix) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array (always a fresh copy)."""
    out = np.array(matrix, dtype=np.complex128, order="C", copy=True)
    if out.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got ndim={out.ndim}")
    if out.size and not np.all(np.isfinite(out)):
        raise DimensionMismatchError("matrix entries must be finite (no NaN/Inf)")
    return out


def is_hermitian(matrix: np.ndarray, tol: float = TOL_HERMITIAN) -> bool:
    """True if ``max |M - M^dagger|`` entrywise is at most ``tol``."""
    m = np.asarray(matrix)
    return m.shape[0] == m.shape[1] and np.abs(m - m.conj().T).max(initial=0.0) <= tol


def is_unitary(matrix: np.ndarray, tol: float = TOL_UNITARY) -> bool:
    """True if ``||U^dagger U - I||_F`` is at most ``tol``."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    gram = m.conj().T @ m
    return float(np.linalg.norm(gram - np.eye(m.shape[0]))) <= tol


def hermitian_eig(matrix, tol: float = TOL_HERMITIAN) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    matrix : array_like
        Square matrix, Hermitian within ``tol`` (entrywise).
    tol : float
        Maximum allowed entrywise asymmetry ``|M - M^dagger|``.

    Returns
    -------
    HermitianEig
        Eigenvalues sorted non-increasing (ties keep first-encounter column
        order) and phase-normalized eigenvector columns.  The output is
        deterministic for a fixed input: sweeps visit the upper triangle in
        row-major order until the off-diagonal Frobenius mass falls below
        ``1e-14 * ||M||_F``.

    Raises
    ------
    NotSquareError, NotHermitianError
    """
    m = as_complex_matrix(matrix)
    n = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {m.shape}")
    asym = np.abs(m - m.conj().T).max(initial=0.0)
    if asym > tol:
        raise NotHermitianError(
            f"matrix asymmetry {asym:.3e} exceeds tolerance {tol:.3e}"
        )
    work = (m + m.conj().T) / 2.0
    vectors = np.eye(n, dtype=np.complex128)
    off_target = _OFF_DIAG_FACTOR * float(np.linalg.norm(work))
    _kernels.jacobi_sweeps(work, vectors, off_target, _MAX_SWEEPS)

    values = work.diagonal().real.copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    for j in range(n):
        col = vectors[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size:
            lead = col[nz[0]]
            vectors[:, j] = col * (lead.conjugate() / abs(lead))
    return HermitianEig(values, vectors)


def validate_density(
    rho,
    tol_herm: float = TOL_HERMITIAN,
    tol_trace: float = TOL_TRACE,
    tol_psd: float = TOL_PSD,
) -> np.ndarray:
    """Check the density-matrix invariants and return the matrix as complex128.

    Raises ``InvalidDensityError`` naming the violated invariant: entrywise
    hermiticity within ``tol_herm``, unit trace within ``tol_trace``, and all
    eigenvalues at least ``-tol_psd``.
    """
    m = as_complex_matrix(rho)
    if m.shape[0] != m.shape[1]:
        raise InvalidDensityError(f"density matrix must be square, got {m.shape}")
    asym = np.abs(m - m.conj().T).max(initial=0.0)
    if asym > tol_herm:
        raise InvalidDensityError(
            f"not Hermitian: max |M - M^dagger| = {asym:.3e} > {tol_herm:.3e}"
        )
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tol_trace:
        raise InvalidDensityError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
    smallest = hermitian_eig(m, tol=tol_herm).values[-1] if m.shape[0] else 0.0
    if smallest < -tol_psd:
        raise InvalidDensityError(
            f"not positive semidefinite: min eigenvalue {smallest:.3e} < -{tol_psd:.3e}"
        )
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product: ``out[i*rB+k, j*cB+l] = A[i,j] * B[k,l]``."""
    am = as_complex_matrix(a)
    bm = as_complex_matrix(b)
    ra, ca = am.shape
    rb, cb = bm.shape
    return (am[:, None, :, None] * bm[None, :, None, :]).reshape(ra * rb, ca * cb)


def kron_all(matrices: Sequence[np.ndarray]) -> np.ndarray:
    """Kronecker product of a sequence of matrices, left to right."""
    if not len(matrices):
        raise DimensionMismatchError("need at least one factor")
    out = as_complex_matrix(matrices[0])
    for m in matrices[1:]:
        out = kron(out, m)
    return out


def partial_trace(rho, dims: Sequence[int], keep) -> np.ndarray:
    """Trace out the tensor factors not listed in ``keep``.

    Parameters
    ----------
    rho : array_like
        Square matrix on the full tensor-product space.
    dims : sequence of int
        Factor dimensions ``(n_1, ..., n_r)`` with product equal to the
        matrix size.
    keep : iterable of int
        Non-empty set of factor indices to retain; the output lives on the
        kept factors in increasing index order.

    Raises
    ------
    DimensionMismatchError
    """
    m = as_complex_matrix(rho)
    dims = tuple(int(d) for d in dims)
    r = len(dims)
    if r < 1 or any(d < 1 for d in dims):
        raise DimensionMismatchError(f"invalid factor dimensions {dims}")
    n = int(np.prod(dims))
    if m.shape != (n, n):
        raise DimensionMismatchError(
            f"matrix shape {m.shape} does not match product of dims {dims}"
        )
    kept = sorted(set(int(k) for k in keep))
    if not kept or kept[0] < 0 or kept[-1] >= r:
        raise DimensionMismatchError(
            f"keep={kept} is not a nonempty subset of factor indices 0..{r - 1}"
        )
    tensor = m.reshape(dims + dims)
    row_sub = list(range(r))
    col_sub = [k if k not in kept else r + k for k in range(r)]
    out_sub = kept + [r + k for k in kept]
    reduced = np.einsum(tensor, row_sub + col_sub, out_sub)
    dk = int(np.prod([dims[k] for k in kept]))
    return reduced.reshape(dk, dk)


def haar_unitary_from_rng(n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw a Haar-distributed ``n x n`` unitary from an existing generator."""
    if n < 1:
        raise DimensionMismatchError("n must be >= 1")
    gauss = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(gauss)
    diag = r.diagonal()
    # column phase fix makes the distribution exactly Haar
    q = q * (diag.conjugate() / np.abs(diag))
    return q


def haar_unitary(n: int, seed: int) -> np.ndarray:
    """Haar-random unitary, deterministic per seed.

    A complex standard Gaussian matrix is orthonormalized and each column j
    is multiplied by ``conj(r_jj)/|r_jj|`` of the triangular factor; without
    the phase fix the distribution would be biased by the factorization's
    phase convention.
    """
    return haar_unitary_from_rng(n, np.random.default_rng(seed))


def conjugate(rho, g, tol_unitary: float = TOL_UNITARY) -> np.ndarray:
    """Return ``g rho g^dagger`` for unitary ``g``, validated as a density matrix."""
    r = as_complex_matrix(rho)
    u = as_complex_matrix(g)
    if r.shape != u.shape:
        raise DimensionMismatchError(f"shape mismatch {r.shape} vs {u.shape}")
    if not is_unitary(u, tol_unitary):
        raise NotUnitaryError("conjugating matrix is not unitary within tolerance")
    out = (u @ r) @ u.conj().T
    return validate_density(out)


def frobenius_distance(a, b) -> float:
    """``sqrt(sum |A_ij - B_ij|^2)``; zero iff the matrices are equal."""
    am = as_complex_matrix(a)
    bm = as_complex_matrix(b)
    if am.shape != bm.shape:
        raise DimensionMismatchError(f"shape mismatch {am.shape} vs {bm.shape}")
    return float(np.linalg.norm(am - bm))


def expm_antihermitian(a) -> np.ndarray:
    """Matrix exponential of an anti-Hermitian matrix.

    Computed through the Hermitian eigendecomposition of ``i*A``, so the
    result is unitary up to eigensolver error.
    """
    m = as_complex_matrix(a)
    h = 1j * m
    values, vectors = hermitian_eig(h)
    # A = -i H  =>  exp(A) = V diag(exp(-i w)) V^dagger
    return (vectors * np.exp(-1j * values)) @ vectors.conj().T
