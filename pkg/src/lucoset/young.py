"""Block-diagonal and tensor-product subgroups of the unitary group.

Two embeddings of smaller unitary groups into U(n) appear throughout:
the additive one places blocks on the diagonal (block sizes summing to n),
the multiplicative one tensors factors together (factor sizes multiplying
to n).  The stabilizer of a density matrix under conjugation is generated
by additive blocks aligned with its eigenspaces, conjugated by its
eigenbasis.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, NotAPartitionError, NotUnitaryError
from .linalg import as_complex_matrix, haar_unitary_from_rng, is_unitary, kron_all
from .spectral import CanonicalForm

DEFAULT_STABILIZER_TOL = 1e-8


def validate_partition(parts: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Check that ``parts`` is non-increasing, positive, and sums to ``n``."""
    p = tuple(int(x) for x in parts)
    if not p or any(x < 1 for x in p):
        raise NotAPartitionError(f"parts must be positive integers, got {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise NotAPartitionError(f"parts must be non-increasing, got {p}")
    if n is not None and sum(p) != n:
        raise NotAPartitionError(f"parts {p} sum to {sum(p)}, expected {n}")
    return p


def validate_local_structure(dims: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Check that ``dims`` are positive factor dimensions, product ``n``."""
    d = tuple(int(x) for x in dims)
    if not d or any(x < 1 for x in d):
        raise DimensionMismatchError(f"factor dimensions must be >= 1, got {d}")
    if n is not None and int(np.prod(d)) != n:
        raise DimensionMismatchError(f"dims {d} multiply to {np.prod(d)}, expected {n}")
    return d


def embed_additive(blocks: Sequence[np.ndarray], sizes: Sequence[int]) -> np.ndarray:
    """Block-diagonal embedding of unitary blocks into U(n).

    ``sizes`` gives the expected side of each block, in order; any positive
    composition is accepted so blocks can follow a canonical form's
    descending-eigenvalue grouping rather than the sorted partition.
    """
    sz = tuple(int(s) for s in sizes)
    if len(blocks) != len(sz):
        raise DimensionMismatchError(
            f"{len(blocks)} blocks given for {len(sz)} block sizes"
        )
    mats = []
    for i, (block, s) in enumerate(zip(blocks, sz)):
        b = as_complex_matrix(block)
        if b.shape != (s, s):
            raise DimensionMismatchError(
                f"block {i} has shape {b.shape}, expected ({s}, {s})"
            )
        if not is_unitary(b):
            raise NotUnitaryError(f"block {i} is not unitary within tolerance")
        mats.append(b)
    n = sum(sz)
    out = np.zeros((n, n), dtype=np.complex128)
    start = 0
    for b, s in zip(mats, sz):
        out[start : start + s, start : start + s] = b
        start += s
    return out


def embed_multiplicative(factors: Sequence[np.ndarray], dims: Sequence[int]) -> np.ndarray:
    """Tensor-product embedding ``g_1 (x) ... (x) g_r`` into U(n)."""
    d = validate_local_structure(dims)
    if len(factors) != len(d):
        raise DimensionMismatchError(
            f"{len(factors)} factors given for {len(d)} factor dimensions"
        )
    mats = []
    for i, (factor, size) in enumerate(zip(factors, d)):
        f = as_complex_matrix(factor)
        if f.shape != (size, size):
            raise DimensionMismatchError(
                f"factor {i} has shape {f.shape}, expected ({size}, {size})"
            )
        if not is_unitary(f):
            raise NotUnitaryError(f"factor {i} is not unitary within tolerance")
        mats.append(f)
    return kron_all(mats)


def stabilizer_contains(rho, g, tol: float = DEFAULT_STABILIZER_TOL) -> bool:
    """True iff ``g`` commutes with ``rho``: ``||g rho - rho g||_F <= tol``.

    Commutation is equivalent to invariance under conjugation for unitary
    ``g``, and the commutator norm is the numerically tighter test.
    """
    r = as_complex_matrix(rho)
    u = as_complex_matrix(g)
    if r.shape != u.shape:
        raise DimensionMismatchError(f"shape mismatch {r.shape} vs {u.shape}")
    if not is_unitary(u):
        raise NotUnitaryError("stabilizer candidate is not unitary within tolerance")
    return float(np.linalg.norm(u @ r - r @ u)) <= tol


def random_stabilizer_element(cf: CanonicalForm, seed: int) -> np.ndarray:
    """Haar-random element of the stabilizer of the state behind ``cf``.

    Draws one Haar block per distinct eigenvalue (sized by its multiplicity,
    in the canonical form's descending-value order) and conjugates the
    block-diagonal result by the eigenbasis.
    """
    rng = np.random.default_rng(seed)
    mults = cf.spectral_type.multiplicities
    blocks = [haar_unitary_from_rng(m, rng) for m in mults]
    core = embed_additive(blocks, mults)
    return (cf.basis @ core) @ cf.basis.conj().T
