"""Two-parameter two-qubit Werner family and its multiplicity strata.

The family is parameterized over the triangle ``e >= 0``, ``0 <= f <= 1-e``
by the 4x4 matrix with diagonal ``((1-e-f)/3, (1+2f)/6, (1+2f)/6,
(1+e-f)/3)`` and off-diagonal ``(1-4f)/6`` in the central block; its
eigenvalues are ``(1-f+e)/3, (1-f)/3, (1-f-e)/3, f`` in closed form.
Multiplicity strata follow from the coincidences ``e = 0``,
``f = (1 +- e)/4`` and ``f = 1/4``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfTriangleError
from .spectral import spectral_type

DEFAULT_STRATUM_TOL = 1e-8


def _merge_partition(count, pairs):
    """Cluster sizes (non-increasing) after union-find merging of pairs."""
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    sizes: dict[int, int] = {}
    for x in range(count):
        root = find(x)
        sizes[root] = sizes.get(root, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


@dataclass(frozen=True)
class StratumRecord:
    """One grid point with its closed-form and numeric strata."""

    e: float
    f: float
    partition: tuple[int, ...]
    partition_numeric: tuple[int, ...]
    agree: bool


def validate_params(e: float, f: float) -> tuple[float, float]:
    """Check the admissible triangle ``e >= 0, 0 <= f <= 1 - e``."""
    e = float(e)
    f = float(f)
    if not (e >= 0.0 and 0.0 <= f <= 1.0 - e):
        raise OutOfTriangleError(f"(e={e}, f={f}) outside e >= 0, 0 <= f <= 1 - e")
    return e, f


def werner_state(e: float, f: float) -> np.ndarray:
    """The 4x4 Werner-family density matrix at parameters ``(e, f)``."""
    e, f = validate_params(e, f)
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = (1.0 - e - f) / 3.0
    m[1, 1] = (1.0 + 2.0 * f) / 6.0
    m[2, 2] = (1.0 + 2.0 * f) / 6.0
    m[3, 3] = (1.0 + e - f) / 3.0
    m[1, 2] = (1.0 - 4.0 * f) / 6.0
    m[2, 1] = (1.0 - 4.0 * f) / 6.0
    return m


def werner_spectrum(e: float, f: float) -> np.ndarray:
    """Closed-form eigenvalues, unsorted: ``((1-f+e)/3, (1-f)/3, (1-f-e)/3, f)``."""
    e, f = validate_params(e, f)
    return np.array(
        [(1.0 - f + e) / 3.0, (1.0 - f) / 3.0, (1.0 - f - e) / 3.0, f]
    )


def werner_stratum(
    e: float, f: float, tol: float = DEFAULT_STRATUM_TOL
) -> tuple[int, ...]:
    """Multiplicity partition at ``(e, f)`` by closed-form coincidence analysis.

    Coincidences are tested on the defining equations (``e``,
    ``f - (1+e)/4``, ``f - 1/4``, ``f - (1-e)/4``) with absolute tolerance
    ``tol``, not on computed eigenvalue gaps; all individually firing
    coincidences merge.  Away from multi-coincidence slivers this yields
    ``(1,1,1,1)`` generically for ``e > 0``, ``(2,1,1)`` on the three
    coincidence lines with ``e > 0``, ``(3,1)`` on ``e = 0`` away from
    ``f = 1/4``, and ``(4)`` at ``(0, 1/4)``.
    """
    e, f = validate_params(e, f)
    pairs = []
    if e <= tol:
        pairs += [(0, 1), (1, 2)]
    if abs(f - (1.0 + e) / 4.0) <= tol:
        pairs.append((0, 3))
    if abs(f - 0.25) <= tol:
        pairs.append((1, 3))
    if abs(f - (1.0 - e) / 4.0) <= tol:
        pairs.append((2, 3))
    return _merge_partition(4, pairs)


def werner_scan(
    grid_e: int, grid_f: int, tol: float = DEFAULT_STRATUM_TOL
) -> list[StratumRecord]:
    """Evaluate both stratum paths on a uniform grid over the triangle.

    ``e`` takes ``grid_e`` uniform values on [0, 1]; for each, ``f`` takes
    ``grid_f`` uniform values on [0, 1-e].  Each record carries the
    closed-form stratum, the stratum recovered numerically from the
    eigensolver via :func:`lucoset.spectral.spectral_type` (clustering at
    the same ``tol``), and their agreement flag.  Records are ordered by
    (e index, f index).
    """
    grid_e = int(grid_e)
    grid_f = int(grid_f)
    if grid_e < 2 or grid_f < 2:
        raise OutOfTriangleError("grid counts must be >= 2")
    records = []
    for i in range(grid_e):
        e = i / (grid_e - 1)
        span = 1.0 - e
        for j in range(grid_f):
            f = span * j / (grid_f - 1)
            closed = werner_stratum(e, f, tol)
            numeric = spectral_type(werner_state(e, f), cluster_tol=tol).partition
            records.append(StratumRecord(e, f, closed, numeric, closed == numeric))
    return records
