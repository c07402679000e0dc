"""Brute-force partition enumeration, used as the independent oracle.

Two partition classes are enumerated here:

* gap-admissible partitions: consecutive parts differ by at least 3, and
  by at least 6 whenever both parts are multiples of 3;
* partitions into distinct parts congruent to 1 or 2 mod 3.

Everything in this module works by direct search over part choices.  It
deliberately knows nothing about the series builders it is used to
validate, so an error would have to be made twice, in two unrelated
ways, to go unnoticed.

Partitions are ascending tuples of positive ints; the empty tuple is the
unique partition of 0.
"""

from __future__ import annotations

from typing import Iterable

from .qpoly import QPoly, XSeries

Partition = tuple[int, ...]


def is_schur_admissible(parts: Iterable[int]) -> bool:
    """Gap >= 3 between consecutive parts, >= 6 when both are multiples
    of 3; parts ascending and positive.  The tightening applies only when
    both neighbours are divisible by 3: a multiple of 3 may sit 4 or 5
    below a non-multiple."""
    prev = None
    for p in parts:
        if p < 1:
            return False
        if prev is not None:
            gap = p - prev
            if gap < 3:
                return False
            if gap < 6 and p % 3 == 0 and prev % 3 == 0:
                return False
        prev = p
    return True


def _min_gap(prev: int, nxt: int) -> bool:
    # admissibility of one adjacent pair
    gap = nxt - prev
    if gap < 3:
        return False
    return gap >= 6 or nxt % 3 != 0 or prev % 3 != 0


def enumerate_schur(n_max: int, largest_part: int | None = None) -> dict[int, list[Partition]]:
    """All gap-admissible partitions of every size <= n_max, grouped by
    size, each list in lexicographic order of the ascending part tuples.

    `largest_part` bounds every part when given.  Depth-first search over
    the smallest part first; the remaining-size bound n_max prunes.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    bound = n_max if largest_part is None else min(largest_part, n_max)
    by_size: dict[int, list[Partition]] = {n: [] for n in range(n_max + 1)}
    by_size[0].append(())

    def extend(prefix: Partition, size: int, lo: int) -> None:
        last = prefix[-1] if prefix else None
        for p in range(lo, min(bound, n_max - size) + 1):
            if last is not None and not _min_gap(last, p):
                continue
            nxt = prefix + (p,)
            by_size[size + p].append(nxt)
            extend(nxt, size + p, p + 3)

    extend((), 0, 1)
    return by_size


def enumerate_distinct_pm1_mod3(n_max: int) -> dict[int, list[Partition]]:
    """All partitions into distinct parts congruent to +-1 mod 3, of every
    size <= n_max, grouped by size, lists in lexicographic order."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    by_size: dict[int, list[Partition]] = {n: [] for n in range(n_max + 1)}
    by_size[0].append(())

    def extend(prefix: Partition, size: int, lo: int) -> None:
        for p in range(lo, n_max - size + 1):
            if p % 3 == 0:
                continue
            nxt = prefix + (p,)
            by_size[size + p].append(nxt)
            extend(nxt, size + p, p + 1)

    extend((), 0, 1)
    return by_size


def schur_counts(n_max: int, largest_part: int | None = None) -> list[int]:
    by_size = enumerate_schur(n_max, largest_part)
    return [len(by_size[n]) for n in range(n_max + 1)]


def distinct_pm1_counts(n_max: int) -> list[int]:
    by_size = enumerate_distinct_pm1_mod3(n_max)
    return [len(by_size[n]) for n in range(n_max + 1)]


def schur_gf_oracle(T: int, largest_part: int | None = None) -> XSeries:
    """Sum of x^(number of parts) q^size over gap-admissible partitions
    of size <= T, straight from the enumeration."""
    strata: dict[int, dict[int, int]] = {}
    for n, plist in enumerate_schur(T, largest_part).items():
        for parts in plist:
            row = strata.setdefault(len(parts), {})
            row[n] = row.get(n, 0) + 1
    return XSeries(T, {x: QPoly.from_q_coeffs(row) for x, row in strata.items()})


def format_partition(parts: Iterable[int]) -> str:
    """Comma-separated ascending parts; empty partition is the empty string."""
    return ",".join(str(p) for p in parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError("partition must be comma-separated integers") from exc
    if any(p < 1 for p in parts):
        raise ValueError("parts must be positive")
    if list(parts) != sorted(parts):
        raise ValueError("parts must be ascending")
    return parts
