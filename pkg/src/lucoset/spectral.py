"""Spectral typing and canonical forms of density matrices.

The *type* of a density matrix is the partition of n formed by its
eigenvalue multiplicities.  Numerically, multiplicities come from
single-linkage clustering of the sorted eigenvalues with a relative gap
threshold; each cluster is represented by the mean of its members.
``canonical_form`` factors a state as ``basis @ diagonal @ basis^dagger``
with the eigenvalues grouped block-wise in descending order, and
``coset_representative`` returns the basis, which determines the state's
double coset (its individual entries are not invariants).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eig, validate_density

DEFAULT_CLUSTER_TOL = 1e-8


@dataclass(frozen=True)
class SpectralType:
    """Distinct eigenvalues with multiplicities, plus the sorted partition.

    ``distinct_values`` are strictly decreasing and ``multiplicities`` is
    aligned with them; ``partition`` is the same multiset of multiplicities
    re-sorted non-increasing.
    """

    distinct_values: tuple[float, ...]
    multiplicities: tuple[int, ...]
    partition: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    @property
    def block_count(self) -> int:
        return len(self.multiplicities)


@dataclass(frozen=True)
class CanonicalForm:
    """Factorization ``rho = basis @ diagonal @ basis^dagger``.

    ``diagonal`` is block-diagonal with each distinct eigenvalue repeated by
    its multiplicity, groups ordered by descending value; ``basis`` holds the
    matching orthonormal eigenvectors as columns, grouped the same way.
    """

    diagonal: np.ndarray
    basis: np.ndarray
    spectral_type: SpectralType


def _cluster_descending(values: np.ndarray, cluster_tol: float):
    """Single-linkage clustering of a descending sequence by gap threshold."""
    thresh = cluster_tol * max(1.0, float(values[0]))
    groups: list[list[float]] = [[float(values[0])]]
    for v in values[1:]:
        if groups[-1][-1] - float(v) <= thresh:
            groups[-1].append(float(v))
        else:
            groups.append([float(v)])
    distinct = tuple(max(sum(g) / len(g), 0.0) for g in groups)
    mults = tuple(len(g) for g in groups)
    return distinct, mults


def spectral_type(rho, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> SpectralType:
    """Eigenvalue multiplicity structure of a density matrix.

    Consecutive sorted eigenvalues closer than ``cluster_tol * max(1, a_1)``
    merge into one distinct value (their mean, floored at zero for boundary
    states).  Raises ``InvalidDensityError`` for invalid input.
    """
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    m = validate_density(rho)
    values = hermitian_eig(m).values
    distinct, mults = _cluster_descending(values, cluster_tol)
    partition = tuple(sorted(mults, reverse=True))
    return SpectralType(distinct, mults, partition)


def canonical_form(rho, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> CanonicalForm:
    """Diagonalize a density matrix with eigenvalues grouped by cluster."""
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    m = validate_density(rho)
    values, vectors = hermitian_eig(m)
    distinct, mults = _cluster_descending(values, cluster_tol)
    partition = tuple(sorted(mults, reverse=True))
    stype = SpectralType(distinct, mults, partition)
    diag = np.diag(np.repeat(distinct, mults)).astype(np.complex128)
    return CanonicalForm(diag, vectors, stype)


def coset_representative(rho, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> np.ndarray:
    """Unitary of orthonormal eigenvectors grouped to match the canonical diagonal.

    Only the double coset of the returned matrix (under left multiplication
    by local unitaries and right multiplication by block-diagonal ones) is
    an invariant of the state; individual entries are basis choices.
    """
    return canonical_form(rho, cluster_tol).basis


def spectral_projectors(cf: CanonicalForm) -> list[np.ndarray]:
    """Orthogonal projectors onto each distinct-eigenvalue eigenspace."""
    out = []
    start = 0
    for mult in cf.spectral_type.multiplicities:
        cols = cf.basis[:, start : start + mult]
        out.append(cols @ cols.conj().T)
        start += mult
    return out
