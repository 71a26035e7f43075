"""Partitions as highest weights in the stable range.

A :class:`Partition` is a tuple subclass kept in canonical form: weakly
decreasing, nonnegative, no trailing zeros. Rank-padded forms only exist at
module boundaries (see :meth:`Partition.padded`).
"""

from __future__ import annotations

from typing import Iterable

from .errors import InputError

MAX_PART = 10**6
MAX_LENGTH = 64


class Partition(tuple):
    """Weakly decreasing sequence of nonnegative integers, trailing zeros stripped.

    >>> Partition([2, 1, 1, 0, 0])
    Partition(2, 1, 1)
    >>> Partition([2, 1, 1, 0]).length
    3
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = list(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InputError(f"partition parts must be integers, got {p!r}")
            if p < 0:
                raise InputError(f"partition parts must be nonnegative, got {parts}")
            if p > MAX_PART:
                raise InputError(f"part {p} exceeds the cap {MAX_PART}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InputError(f"partition parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        if len(parts) > MAX_LENGTH:
            raise InputError(f"partition length {len(parts)} exceeds the cap {MAX_LENGTH}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return format_partition(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based part access; indices past the end read 0."""
        return self[i] if 0 <= i < len(self) else 0

    def padded(self, rank: int) -> tuple[int, ...]:
        if len(self) > rank:
            raise InputError(f"{format_partition(self)} has length {len(self)} > rank {rank}")
        return tuple(self) + (0,) * (rank - len(self))

    def truncate(self) -> Partition:
        """Drop the last nonzero row: (mu_1, ..., mu_{r-1})."""
        return Partition(self[:-1])

    def last(self) -> int:
        """The last nonzero part, or 0 for the empty partition."""
        return self[-1] if self else 0


def length(p) -> int:
    return Partition(p).length


def canonical(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def is_horizontal_strip(outer, inner) -> bool:
    """True iff ``outer / inner`` is a horizontal strip.

    That is, ``outer[i] >= inner[i] >= outer[i+1]`` for every row, with
    indices past the end reading as 0.
    """
    outer, inner = Partition(outer), Partition(inner)
    if len(inner) > len(outer):
        return False
    for i in range(len(outer)):
        if not outer.part(i) >= inner.part(i) >= outer.part(i + 1):
            return False
    return True


def contains(outer, inner) -> bool:
    outer, inner = Partition(outer), Partition(inner)
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


def skew_size(outer, inner) -> int:
    outer, inner = Partition(outer), Partition(inner)
    if not contains(outer, inner):
        raise InputError(f"{format_partition(inner)} is not contained in {format_partition(outer)}")
    return outer.size - inner.size


def order_less(a, b) -> bool:
    """The well-founded order driving the recursive tensor decomposition.

    ``a < b`` iff ``a`` is shorter, or both have the same length ``r`` and
    ``a_r < b_r``. Pairs of equal length and equal last part are
    incomparable, so both directions return False.
    """
    a, b = Partition(a), Partition(b)
    if len(a) != len(b):
        return len(a) < len(b)
    return a.last() < b.last()


def horizontal_strips(inner, k: int, max_length: int | None = None):
    """Yield every partition obtained from ``inner`` by adding a horizontal k-strip.

    Results are restricted to length ``<= max_length`` when given.
    """
    inner = Partition(inner)
    rows = len(inner) + 1
    if max_length is not None:
        rows = min(rows, max_length)
    if rows < len(inner):
        return
    base = list(inner) + [0] * (rows - len(inner))

    def rec(i, remaining, acc):
        if i == rows:
            if remaining == 0:
                yield Partition(acc)
            return
        # row i may grow up to the original row above it
        cap = remaining if i == 0 else min(remaining, base[i - 1] - base[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, remaining - add, acc + [base[i] + add])

    yield from rec(0, k, [])


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form. ``""`` and ``"0"`` are empty."""
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    text = text.strip("()")
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise InputError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def format_partition(p) -> str:
    return ",".join(str(x) for x in p)
