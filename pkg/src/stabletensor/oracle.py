"""Character-theoretic tensor product decomposition.

Weight multiplicities come from Freudenthal's recursion (run on dominant
weights only, with orbit lookups for everything else); tensor products come
from the Brauer-Klimyk shifted-reflection rule. Nothing here knows about
Pieri rules, so it serves as the independent check on :mod:`.engine`.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterator, Mapping

from .errors import ConsistencyError, InputError, ResourceError
from .partitions import Partition, format_partition
from .rootsystem import (
    GroupFamily,
    Kind,
    dominant_representative,
    inner,
    is_dominant,
    positive_roots,
    reduce_integral,
    rho2,
)

DEFAULT_MAX_WEIGHTS = 5_000_000

# Dimension conservation is asserted on every decomposition built through
# ``Decomposition.checked``. Switch off only for profiling.
CHECK_DIMENSIONS = True


def _weight_key(w):
    return tuple(-x for x in w)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """A tensor product as a multiset of irreducibles.

    ``terms`` maps highest weights (tuples padded to ``family.rank``) to
    positive multiplicities and iterates in descending lexicographic order.
    ``family`` is None for stable decompositions, whose keys are canonical
    partitions without rank padding.
    """

    family: GroupFamily | None
    terms: Mapping[tuple, int]
    engine: str = ""
    lhs: tuple = ()
    rhs: tuple = ()
    computed_with: GroupFamily | None = field(default=None, compare=False)

    def __post_init__(self):
        cleaned = {}
        for w, m in self.terms.items():
            if m < 0:
                raise ConsistencyError(f"negative multiplicity {m} for {w}")
            if m:
                cleaned[tuple(w)] = m
        if self.family is not None:
            for w in cleaned:
                if not is_dominant(self.family, w):
                    raise ConsistencyError(f"{w} is not dominant for {self.family}")
        ordered = dict(sorted(cleaned.items(), reverse=True))
        object.__setattr__(self, "terms", ordered)

    def __getitem__(self, weight) -> int:
        return self.terms.get(tuple(weight), 0)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.family == other.family and self.terms == other.terms

    def items(self):
        return self.terms.items()

    @property
    def total(self) -> int:
        return sum(self.terms.values())

    def stripped(self) -> dict[tuple, int]:
        """Coefficient table with trailing zeros removed, for cross-rank comparison."""
        out = {}
        for w, m in self.terms.items():
            w = list(w)
            while w and w[-1] == 0:
                w.pop()
            out[tuple(w)] = m
        return out

    def check_dimensions(self, lhs=None, rhs=None) -> None:
        """Assert dim(lhs) * dim(rhs) == sum of mult * dim(term)."""
        family = self.family or self.computed_with
        lhs = self.lhs if lhs is None else lhs
        rhs = self.rhs if rhs is None else rhs
        n = family.rank
        pad = lambda w: tuple(w) + (0,) * (n - len(w))
        left = dim(family, pad(lhs)) * dim(family, pad(rhs))
        right = sum(m * dim(family, pad(w)) for w, m in self.terms.items())
        if left != right:
            raise ConsistencyError(
                f"dimension mismatch in {family} for {lhs} x {rhs}: {left} != {right}"
            )

    def checked(self) -> Decomposition:
        if CHECK_DIMENSIONS:
            self.check_dimensions()
        return self

    def pretty(self) -> str:
        parts = []
        for w, m in self.terms.items():
            label = "(" + format_partition(w) + ")"
            parts.append(label if m == 1 else f"{m}×{label}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        where = self.family or "stable"
        return f"Decomposition[{where}]({self.pretty()})"


@dataclass
class WeightSystem:
    """All weights of an irreducible with their multiplicities."""

    family: GroupFamily
    highest: tuple
    dominant: dict
    entries: dict

    @property
    def mass(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, weight) -> int:
        return self.entries.get(tuple(weight), 0)

    def __len__(self):
        return len(self.entries)


def _validate_weight(family: GroupFamily, hw) -> tuple[int, ...]:
    if isinstance(hw, Partition):
        hw = hw.padded(family.rank)
    hw = tuple(hw)
    if any(isinstance(x, bool) or not isinstance(x, int) for x in hw):
        raise InputError(f"highest weights must be integral, got {hw}")
    if not is_dominant(family, hw):
        raise InputError(f"{hw} is not a dominant weight for {family}")
    if family.kind is Kind.GL and hw and hw[-1] < 0:
        raise InputError(f"only polynomial GL weights are supported, got {hw}")
    return hw


def dim(family: GroupFamily, hw) -> int:
    """Weyl dimension formula, exact."""
    hw = _validate_weight(family, hw)
    r2 = rho2(family)
    shifted = [2 * a + b for a, b in zip(hw, r2)]
    num = den = 1
    for alpha in positive_roots(family):
        num *= inner(shifted, alpha)
        den *= inner(r2, alpha)
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"non-integral dimension for {hw} in {family}")
    return q


def _distinct_permutations(values) -> Iterator[tuple]:
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(values)
    out = [None] * n

    def rec(i):
        if i == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[i] = k
                yield from rec(i + 1)
                counts[k] += 1

    yield from rec(0)


def orbit(kind: Kind, weight) -> Iterator[tuple[int, ...]]:
    """Distinct elements of the Weyl orbit of a dominant weight."""
    weight = tuple(weight)
    if kind is Kind.GL:
        yield from _distinct_permutations(weight)
        return
    absw = tuple(abs(x) for x in weight)
    parity = sum(1 for x in weight if x < 0) % 2
    free = kind is not Kind.SO_EVEN or 0 in absw
    for perm in _distinct_permutations(absw):
        nonzero = [i for i, x in enumerate(perm) if x]
        for mask in range(1 << len(nonzero)):
            if not free and bin(mask).count("1") % 2 != parity:
                continue
            v = list(perm)
            for bit, i in enumerate(nonzero):
                if mask >> bit & 1:
                    v[i] = -v[i]
            yield tuple(v)


def orbit_size(kind: Kind, weight) -> int:
    weight = tuple(weight)
    counts: dict = {}
    source = weight if kind is Kind.GL else tuple(abs(x) for x in weight)
    for x in source:
        counts[x] = counts.get(x, 0) + 1
    perms = factorial(len(source)) // prod(factorial(c) for c in counts.values())
    if kind is Kind.GL:
        return perms
    nonzero = sum(1 for x in source if x)
    flips = 1 << nonzero
    if kind is Kind.SO_EVEN and nonzero == len(source):
        flips //= 2
    return perms * flips


def dominant_weights(family: GroupFamily, hw) -> list[tuple[int, ...]]:
    """Dominant weights below ``hw``, highest first.

    Every dominant weight below ``hw`` is reachable through a chain of
    dominant weights differing by positive roots, so a search that never
    leaves the dominant chamber is complete.
    """
    hw = _validate_weight(family, hw)
    roots = positive_roots(family)
    seen = {hw}
    frontier = [hw]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in roots:
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if nu not in seen and is_dominant(family, nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    r2 = rho2(family)
    return sorted(seen, key=lambda w: (-inner(w, r2), _weight_key(w)))


_cache_lock = threading.Lock()
_dominant_cache: dict = {}
_system_cache: dict = {}


def dominant_multiplicities(family: GroupFamily, hw) -> dict[tuple, int]:
    """Freudenthal multiplicities of the dominant weights of V(hw)."""
    hw = _validate_weight(family, hw)
    key = (family, hw)
    cached = _dominant_cache.get(key)
    if cached is not None:
        return cached

    kind = family.kind
    roots = positive_roots(family)
    r2 = rho2(family)
    top = inner(hw, hw) + inner(hw, r2)
    mult: dict[tuple, int] = {}
    for mu in dominant_weights(family, hw):
        if mu == hw:
            mult[mu] = 1
            continue
        denom = top - inner(mu, mu) - inner(mu, r2)
        total = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mult.get(dominant_representative(kind, nu))
                if m is None:
                    break
                total += inner(nu, alpha) * m
                k += 1
        q, rem = divmod(2 * total, denom)
        if denom <= 0 or rem or q <= 0:
            raise ConsistencyError(f"Freudenthal recursion broke at {mu} in V{hw} of {family}")
        mult[mu] = q
    with _cache_lock:
        _dominant_cache.setdefault(key, mult)
    return mult


def weight_multiplicities(
    family: GroupFamily, hw, max_weights: int = DEFAULT_MAX_WEIGHTS
) -> WeightSystem:
    hw = _validate_weight(family, hw)
    key = (family, hw)
    cached = _system_cache.get(key)
    if cached is not None:
        return cached
    dominant = dominant_multiplicities(family, hw)
    size = sum(orbit_size(family.kind, d) for d in dominant)
    if size > max_weights:
        raise ResourceError(
            f"weight system of V{hw} for {family} has {size} weights (bound {max_weights})"
        )
    entries = {}
    for d, m in dominant.items():
        for w in orbit(family.kind, d):
            entries[w] = m
    system = WeightSystem(family, hw, dominant, entries)
    with _cache_lock:
        _system_cache.setdefault(key, system)
    return system


def clear_caches() -> None:
    with _cache_lock:
        _dominant_cache.clear()
        _system_cache.clear()


def tensor_oracle(
    family: GroupFamily, lhs, rhs, max_weights: int = DEFAULT_MAX_WEIGHTS
) -> Decomposition:
    """Decompose V(lhs) x V(rhs) by the Brauer-Klimyk rule.

    Iterates over the weights of whichever factor has the smaller dimension.
    """
    lhs = _validate_weight(family, lhs)
    rhs = _validate_weight(family, rhs)
    big, small = (lhs, rhs) if dim(family, lhs) >= dim(family, rhs) else (rhs, lhs)
    kind = family.kind
    r2 = rho2(family)
    shift = [2 * a + b for a, b in zip(big, r2)]

    dominant = dominant_multiplicities(family, small)
    size = sum(orbit_size(kind, d) for d in dominant)
    if size > max_weights:
        raise ResourceError(
            f"weight system of V{small} for {family} has {size} weights (bound {max_weights})"
        )

    acc: dict[tuple, int] = defaultdict(int)
    for d, m in dominant.items():
        for nu in orbit(kind, d):
            x = [s + 2 * v for s, v in zip(shift, nu)]
            reduced = reduce_integral(kind, x)
            if reduced.on_wall:
                continue
            w = tuple((a - b) // 2 for a, b in zip(reduced.weight, r2))
            acc[w] += reduced.sign * m

    negative = {w: c for w, c in acc.items() if c < 0}
    if negative:
        raise ConsistencyError(f"Klimyk cancellation left negative terms {negative} in {family}")
    dec = Decomposition(family, acc, engine="klimyk-oracle", lhs=lhs, rhs=rhs)
    return dec.checked()
