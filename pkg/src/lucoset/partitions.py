"""Integer partitions and class-manifold dimensions."""

from __future__ import annotations

from typing import Sequence

from .errors import OutOfRangeError
from .young import validate_partition

MAX_ENUMERATION_N = 60
MAX_COUNT_N = 1000


def enumerate_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of ``n`` in reverse lexicographic order.

    The first item is ``(n,)`` and the last is ``(1,) * n``; parts within
    each item are non-increasing.
    """
    n = int(n)
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise OutOfRangeError(f"n must be in 1..{MAX_ENUMERATION_N}, got {n}")
    out: list[tuple[int, ...]] = []
    parts = [n]
    while True:
        out.append(tuple(parts))
        # shrink the rightmost part > 1, then redistribute the remainder
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return out
        parts[k] -= 1
        remainder = len(parts) - k
        del parts[k + 1 :]
        cap = parts[k]
        while remainder > 0:
            take = min(remainder, cap)
            parts.append(take)
            remainder -= take


def partition_count(n: int) -> int:
    """Number of partitions ``p(n)``, by the pentagonal-number recurrence.

    Exact for all ``n`` up to 1000 (Python integers do not overflow);
    ``p(0) = 1`` counts the empty partition.
    """
    n = int(n)
    if not 0 <= n <= MAX_COUNT_N:
        raise OutOfRangeError(f"n must be in 0..{MAX_COUNT_N}, got {n}")
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts.append(total)
    return counts[n]


def orbit_dimension(n: int, parts: Sequence[int]) -> int:
    """Real dimension of the manifold of states with multiplicities ``parts``.

    Equals ``n^2 - sum(parts_i^2)``: the dimension of U(n) minus that of the
    block-diagonal stabilizer.  Raises ``NotAPartitionError`` unless ``parts``
    is a partition of ``n``.
    """
    p = validate_partition(parts, int(n))
    return int(n) ** 2 - sum(x * x for x in p)


def format_partition(parts: Sequence[int]) -> str:
    """Serialize parts as dash-joined integers, e.g. ``2-1-1``."""
    return "-".join(str(int(x)) for x in parts)


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse the dash-joined form produced by :func:`format_partition`."""
    try:
        parts = tuple(int(piece) for piece in text.strip().split("-"))
    except ValueError as exc:
        raise OutOfRangeError(f"cannot parse partition {text!r}") from exc
    if not parts or any(x < 1 for x in parts):
        raise OutOfRangeError(f"cannot parse partition {text!r}")
    return parts
