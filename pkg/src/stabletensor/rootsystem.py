"""Root data for GL(n), Sp(2n), SO(2n+1) and SO(2n) in the standard L_i basis.

Half-integral rho-shifts of type B are handled in doubled coordinates
(``rho2 = 2 * rho``), so the hot paths only ever see integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import InputError


class Kind(str, enum.Enum):
    GL = "gl"
    SP = "sp"
    SO_ODD = "so-odd"
    SO_EVEN = "so-even"

    @classmethod
    def parse(cls, text) -> Kind:
        if isinstance(text, Kind):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise InputError(f"unknown group {text!r}; expected one of {names}") from None

    @property
    def cartan_letter(self) -> str:
        return {"gl": "A", "sp": "C", "so-odd": "B", "so-even": "D"}[self.value]


CLASSICAL = (Kind.SP, Kind.SO_ODD, Kind.SO_EVEN)


@dataclass(frozen=True, order=True)
class GroupFamily:
    """A group of the nested classical families, indexed by its rank n.

    ``GroupFamily(Kind.SO_EVEN, 4)`` is SO(8).
    """

    kind: Kind
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise InputError(f"rank must be an integer, got {self.rank!r}")
        lowest = 2 if self.kind is Kind.SO_EVEN else 1
        if self.rank < lowest:
            raise InputError(f"rank {self.rank} too small for {self.kind.value} (need >= {lowest})")

    @property
    def name(self) -> str:
        n = self.rank
        return {
            Kind.GL: f"GL({n})",
            Kind.SP: f"Sp({2 * n})",
            Kind.SO_ODD: f"SO({2 * n + 1})",
            Kind.SO_EVEN: f"SO({2 * n})",
        }[self.kind]

    def __str__(self):
        return self.name


class ChamberResult(NamedTuple):
    """Outcome of reducing a vector to the dominant chamber.

    ``weight`` is None and ``sign`` is 0 when the vector lies on a wall.
    """

    weight: tuple | None
    sign: int

    @property
    def on_wall(self) -> bool:
        return self.weight is None


ON_WALL = ChamberResult(None, 0)


@lru_cache(maxsize=None)
def rho2(family: GroupFamily) -> tuple[int, ...]:
    """Twice the rho vector, as integers."""
    n = family.rank
    if family.kind is Kind.GL:
        return tuple(2 * (n - 1 - i) for i in range(n))
    if family.kind is Kind.SP:
        return tuple(2 * (n - i) for i in range(n))
    if family.kind is Kind.SO_ODD:
        return tuple(2 * (n - i) - 1 for i in range(n))
    return tuple(2 * (n - 1 - i) for i in range(n))


def rho(family: GroupFamily) -> tuple[Fraction, ...]:
    """Half the sum of the positive roots (GL uses (n-1, ..., 1, 0))."""
    return tuple(Fraction(x, 2) for x in rho2(family))


@lru_cache(maxsize=None)
def positive_roots(family: GroupFamily) -> tuple[tuple[int, ...], ...]:
    n = family.rank
    roots = []

    def unit(*pairs):
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for i in range(n):
        for j in range(i + 1, n):
            roots.append(unit((i, 1), (j, -1)))
            if family.kind is not Kind.GL:
                roots.append(unit((i, 1), (j, 1)))
    if family.kind is Kind.SP:
        roots.extend(unit((i, 2)) for i in range(n))
    elif family.kind is Kind.SO_ODD:
        roots.extend(unit((i, 1)) for i in range(n))
    return tuple(roots)


def _check_length(family, v):
    if len(v) != family.rank:
        raise InputError(f"{family} weights need {family.rank} coordinates, got {len(v)}: {tuple(v)}")


def is_dominant(family: GroupFamily, v: Sequence[int]) -> bool:
    _check_length(family, v)
    if any(a < b for a, b in zip(v, v[1:])):
        return False
    kind = family.kind
    if kind is Kind.GL:
        return True
    if kind is Kind.SO_EVEN:
        return family.rank < 2 or v[-2] >= abs(v[-1])
    return v[-1] >= 0


def _permutation_parity(keys) -> int:
    """Sign of the permutation sorting ``keys`` into descending order.

    Keys are assumed pairwise distinct.
    """
    order = sorted(range(len(keys)), key=lambda i: keys[i], reverse=True)
    seen = [False] * len(order)
    sign = 1
    for start in range(len(order)):
        if seen[start]:
            continue
        j, cycle = start, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def reduce_integral(kind: Kind, v: Sequence[int]) -> ChamberResult:
    """Dominant-chamber reduction of an integer vector (sorting, not reflection walks).

    The returned sign is the determinant of the signed permutation applied.
    """
    if kind is Kind.GL:
        if len(set(v)) != len(v):
            return ON_WALL
        return ChamberResult(tuple(sorted(v, reverse=True)), _permutation_parity(v))

    absv = [abs(x) for x in v]
    if len(set(absv)) != len(absv):
        return ON_WALL
    negatives = sum(1 for x in v if x < 0)
    has_zero = 0 in absv
    if kind is not Kind.SO_EVEN and has_zero:
        return ON_WALL

    sign = _permutation_parity(absv)
    dominant = sorted(absv, reverse=True)
    if kind is Kind.SO_EVEN:
        # Only even numbers of sign flips. With an odd number of negatives and
        # no zero coordinate to absorb the extra flip, the smallest entry stays negative.
        if negatives % 2 == 1 and not has_zero:
            dominant[-1] = -dominant[-1]
    elif negatives % 2 == 1:
        sign = -sign
    return ChamberResult(tuple(dominant), sign)


def reflect_to_dominant(family: GroupFamily, v: Sequence) -> ChamberResult:
    """Reduce a (possibly half-integral) vector to the dominant chamber.

    Returns :data:`ON_WALL`-style results when some reflection fixes ``v``,
    otherwise the dominant representative and the determinant of the Weyl
    element used.
    """
    _check_length(family, v)
    try:
        doubled = [Fraction(x) * 2 for x in v]
    except (TypeError, ValueError):
        raise InputError(f"cannot interpret {v!r} as a rational vector") from None
    if any(d.denominator != 1 for d in doubled):
        raise InputError(f"{tuple(v)} is neither integral nor half-integral")
    doubled = [int(d) for d in doubled]
    parities = {d % 2 for d in doubled}
    if len(parities) > 1:
        raise InputError(f"{tuple(v)} mixes integral and half-integral coordinates")
    result = reduce_integral(family.kind, doubled)
    if result.on_wall:
        return result
    halves = parities == {1}
    weight = tuple(Fraction(d, 2) if halves else d // 2 for d in result.weight)
    return ChamberResult(weight, result.sign)


def dominant_representative(kind: Kind, v: Sequence[int]) -> tuple[int, ...]:
    """The dominant element of the Weyl orbit of ``v`` (no wall check)."""
    if kind is Kind.GL:
        return tuple(sorted(v, reverse=True))
    dominant = sorted((abs(x) for x in v), reverse=True)
    if kind is Kind.SO_EVEN and dominant and dominant[-1] != 0:
        if sum(1 for x in v if x < 0) % 2 == 1:
            dominant[-1] = -dominant[-1]
    return tuple(dominant)


def inner(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))
