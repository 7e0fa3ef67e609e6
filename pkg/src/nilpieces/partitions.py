"""Partition arithmetic used by the classical orbit calculus.

Partitions are plain tuples of positive integers in weakly decreasing
order.  The empty tuple is the zero partition.
"""
from __future__ import annotations

import enum
from collections import Counter
from typing import Iterable, Iterator

from .errors import NilpiecesError

Partition = tuple


class ParityFamily(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


def make_partition(parts: Iterable[int]) -> Partition:
    """Return the canonical tuple for ``parts``, dropping zeros.

    Raises if a part is negative.  Input order does not matter.
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise NilpiecesError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"`` (whitespace tolerated).  ``""`` and ``"0"`` give ()."""
    text = text.strip()
    if not text or text in ("0", "-", "()"):
        return ()
    try:
        return make_partition(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError as exc:
        raise NilpiecesError(f"cannot parse partition {text!r}") from exc


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "0"


def size(p: Partition) -> int:
    return sum(p)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def _prefix_sums(p, length):
    out, total = [], 0
    for i in range(length):
        total += p[i] if i < len(p) else 0
        out.append(total)
    return out


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff ``p`` is dominated by ``q`` (both of the same size)."""
    if sum(p) != sum(q):
        raise NilpiecesError(
            f"dominance needs equal sizes, got {sum(p)} and {sum(q)}")
    n = max(len(p), len(q))
    return all(a <= b for a, b in zip(_prefix_sums(p, n), _prefix_sums(q, n)))


def _bad_values(p: Partition, family: ParityFamily):
    """Part values violating the multiplicity rule of ``family``."""
    if family == ParityFamily.A:
        return []
    wrong_parity = 0 if family in (ParityFamily.B, ParityFamily.D) else 1
    return sorted((v for v, m in Counter(p).items()
                   if v % 2 == wrong_parity and m % 2), reverse=True)


def _size_parity_ok(n: int, family: ParityFamily) -> bool:
    if family == ParityFamily.B:
        return n % 2 == 1
    if family in (ParityFamily.C, ParityFamily.D):
        return n % 2 == 0
    return True


def is_valid(p: Partition, family: ParityFamily, ambient_size: int) -> bool:
    family = ParityFamily(family)
    if sum(p) != ambient_size or any(x <= 0 for x in p):
        return False
    if list(p) != sorted(p, reverse=True):
        return False
    return _size_parity_ok(ambient_size, family) and not _bad_values(p, family)


def is_very_even(p: Partition) -> bool:
    """All parts even, each with even multiplicity (and p nonempty)."""
    return bool(p) and all(v % 2 == 0 and m % 2 == 0 for v, m in Counter(p).items())


def collapse(p: Partition, family: ParityFamily) -> Partition:
    """Largest partition of the family dominated by ``p``.

    Greedy: take the largest offending part value, lower its last
    occurrence by one and raise the first later part that is at least two
    smaller.  Each move stays below ``p`` in dominance.
    """
    family = ParityFamily(family)
    n = sum(p)
    if not _size_parity_ok(n, family):
        raise NilpiecesError(
            f"no {family.value}-partition of size {n}: wrong parity")
    parts = list(p) + [0] * (n + 1)
    while True:
        bad = _bad_values(tuple(x for x in parts if x), family)
        if not bad:
            return make_partition(parts)
        q = bad[0]
        last = max(i for i, x in enumerate(parts) if x == q)
        parts[last] -= 1
        j = next(i for i in range(last + 1, len(parts)) if parts[i] < q - 1)
        parts[j] += 1


def _all_partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    # descending lexicographic order
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _all_partitions(n - first, first):
            yield (first,) + rest


def all_partitions(n: int) -> list[Partition]:
    return list(_all_partitions(n))


def enumerate_partitions(n: int, family: ParityFamily) -> list[Partition]:
    """All ``family``-valid partitions of ``n``, descending lexicographic."""
    family = ParityFamily(family)
    if n < 0:
        raise NilpiecesError("negative size")
    if n == 0:
        return [()]  # the empty partition, whatever the parity rule
    return [p for p in _all_partitions(n) if is_valid(p, family, n)]
