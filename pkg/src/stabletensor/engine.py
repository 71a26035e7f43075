"""Tensor products in the stable range via iterated Pieri rules.

For mu of length r with truncation mu' = (mu_1, ..., mu_{r-1}),

    Pi_lam x Pi_mu' x Pi_(mu_r) = Pi_lam x Pi_mu + sum_{nu < mu} N^nu Pi_lam x Pi_nu

where the N^nu are the non-leading terms of Pi_mu' x Pi_(mu_r). The left side
is computed by recursion on mu' followed by one more Pieri step; the terms
nu are strictly smaller than mu in the order of
:func:`~stabletensor.partitions.order_less`, so subtracting them recursively
terminates.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ConsistencyError, InputError, OutOfStableRangeError
from .oracle import Decomposition, tensor_oracle
from .partitions import Partition, format_partition, order_less
from .pieri import classical_pieri, gl_pieri, pieri_last_row
from .rootsystem import CLASSICAL, GroupFamily, Kind

ENGINE_TAG = "pieri-recursive"
ORACLE_TAG = "klimyk-oracle"


class Memo:
    """Subproblem table for the recursion, keyed by (kind, rank, lam, mu)."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key, value):
        """Insert if absent; returns whichever value ends up stored."""
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()
        self.hits = self.misses = 0

    def __len__(self):
        return len(self._data)


DEFAULT_MEMO = Memo()


def weight_length(w) -> int:
    """Index of the last nonzero coordinate (works for SO(2n) negative last entries)."""
    for i in range(len(w) - 1, -1, -1):
        if w[i] != 0:
            return i + 1
    return 0


def stable_threshold(kind, lam, mu) -> int:
    """Least rank from which the coefficient table no longer changes.

    This is l(lam) + l(mu), plus one for SO(2n).
    """
    kind = Kind.parse(kind)
    n0 = Partition(lam).length + Partition(mu).length
    if kind is Kind.SO_EVEN:
        return max(n0 + 1, 2)
    return max(n0, 1)


def _lowest_rank(kind: Kind, lam: Partition, mu: Partition) -> int:
    return max(lam.length, mu.length, 2 if kind is Kind.SO_EVEN else 1)


def _fits(family: GroupFamily, *parts: Partition):
    for p in parts:
        if p.length > family.rank:
            raise InputError(f"({format_partition(p)}) has length {p.length} > rank {family.rank}")


def _descending(partitions: Iterable[Partition]) -> list[Partition]:
    return sorted(partitions, key=lambda p: (p.length, p.last(), tuple(p)), reverse=True)


def _recurse(family: GroupFamily, lam: Partition, mu: Partition, memo: Memo | None):
    key = (family.kind, family.rank, lam, mu)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit

    if not mu:
        result = {lam: 1}
    elif mu.length == 1:
        result = {nu: pc.count for nu, pc in classical_pieri(lam, mu.part(0), family).items()}
    else:
        mu_r = mu.last()
        mu_prime = mu.truncate()
        acc: dict[Partition, int] = defaultdict(int)
        for nu, c in _recurse(family, lam, mu_prime, memo).items():
            for target, pc in classical_pieri(nu, mu_r, family).items():
                acc[target] += c * pc.count

        corrections = pieri_last_row(mu_prime, mu_r, family)
        lower = [Partition(w) for w in corrections if Partition(w) != mu]
        for nt in _descending(lower):
            if not order_less(nt, mu):
                raise ConsistencyError(f"correction term {nt} is not below {mu}")
            coeff = corrections[nt.padded(family.rank)]
            for nu, c in _recurse(family, lam, nt, memo).items():
                acc[nu] -= coeff * c

        negative = {nu: c for nu, c in acc.items() if c < 0}
        if negative:
            raise ConsistencyError(
                f"negative coefficients {negative} in {family} for {lam} x {mu}"
            )
        result = {nu: c for nu, c in acc.items() if c}

    if memo is not None:
        result = memo.put(key, result)
    return result


def tensor_stable_range(
    family: GroupFamily, lam, mu, *, memo: Memo | None = DEFAULT_MEMO
) -> Decomposition:
    """Decompose Pi_lam x Pi_mu for a classical group at or above the stable threshold.

    Pass ``memo=None`` to run without memoization.
    """
    lam, mu = Partition(lam), Partition(mu)
    if family.kind is Kind.GL:
        raise InputError("tensor_stable_range handles Sp/SO only; use gl_tensor for GL")
    _fits(family, lam, mu)
    need = stable_threshold(family.kind, lam, mu)
    if family.rank < need:
        raise OutOfStableRangeError(
            f"{family} is below the stable range for ({format_partition(lam)}) x ({format_partition(mu)})",
            need,
        )
    terms = _recurse(family, lam, mu, memo)
    n = family.rank
    return Decomposition(
        family,
        {nu.padded(n): c for nu, c in terms.items()},
        engine=ENGINE_TAG,
        lhs=lam.padded(n),
        rhs=mu.padded(n),
    ).checked()


def gl_tensor(r: int, lam, mu) -> Decomposition:
    lam, mu = Partition(lam), Partition(mu)
    family = GroupFamily(Kind.GL, r)
    _fits(family, lam, mu)
    return tensor_oracle(family, lam.padded(r), mu.padded(r))


def stable_tensor(lam, mu, *, memo: Memo | None = DEFAULT_MEMO) -> Decomposition:
    """The rank- and group-independent product, computed for Sp at rank l(lam) + l(mu)."""
    lam, mu = Partition(lam), Partition(mu)
    family = GroupFamily(Kind.SP, stable_threshold(Kind.SP, lam, mu))
    dec = tensor_stable_range(family, lam, mu, memo=memo)
    return Decomposition(
        None,
        dec.stripped(),
        engine=ENGINE_TAG,
        lhs=tuple(lam),
        rhs=tuple(mu),
        computed_with=family,
    ).checked()


def decompose(
    family: GroupFamily,
    lam,
    mu,
    *,
    force_oracle: bool = False,
    require_stable: bool = False,
    memo: Memo | None = DEFAULT_MEMO,
) -> Decomposition:
    """Pick the Pieri engine in the stable range and the oracle elsewhere."""
    lam, mu = Partition(lam), Partition(mu)
    _fits(family, lam, mu)
    if family.kind is Kind.GL:
        return gl_tensor(family.rank, lam, mu)
    if force_oracle:
        return tensor_oracle(family, lam.padded(family.rank), mu.padded(family.rank))
    need = stable_threshold(family.kind, lam, mu)
    if family.rank >= need:
        return tensor_stable_range(family, lam, mu, memo=memo)
    if require_stable:
        raise OutOfStableRangeError(f"{family} is below the stable range", need)
    return tensor_oracle(family, lam.padded(family.rank), mu.padded(family.rank))


def restrict_decomposition(dec: Decomposition, from_rank: int) -> Decomposition:
    """GL(n+1) -> GL(n): delete the constituents of length n+1."""
    if dec.family is None or dec.family.kind is not Kind.GL or dec.family.rank != from_rank:
        raise InputError(f"expected a GL({from_rank}) decomposition, got {dec.family}")
    n = from_rank - 1
    target = GroupFamily(Kind.GL, n)
    terms = {}
    for w, m in dec.items():
        if weight_length(w) == from_rank:
            continue
        if weight_length(w) > n:
            raise ConsistencyError(f"retained term {w} does not fit in {target}")
        terms[w[:n]] = m
    for side in (dec.lhs, dec.rhs):
        if side and side[-1] != 0:
            raise InputError(f"factor {side} does not come from {target}")
    return Decomposition(target, terms, engine=dec.engine, lhs=dec.lhs[:n], rhs=dec.rhs[:n]).checked()


def multiplicity_in_sym_chain(lam, r: int) -> int:
    """Multiplicity of Psi_lam in Sym^{lam_1} x ... x Sym^{lam_l} for GL(r)."""
    lam = Partition(lam)
    if lam.length > r:
        raise InputError(f"({format_partition(lam)}) has length > {r}")
    current = {Partition(): 1}
    for part in lam:
        nxt: dict[Partition, int] = defaultdict(int)
        for nu, c in current.items():
            for target in gl_pieri(nu, part, r):
                nxt[target] += c
        current = nxt
    return current.get(lam, 0)


@dataclass
class StabilityReport:
    lam: Partition
    mu: Partition
    families: list[Kind]
    n0: int
    n_max: int
    per_rank: dict = field(default_factory=dict)
    thresholds: dict = field(default_factory=dict)
    stable_from: dict = field(default_factory=dict)
    vanishing_ok: bool = True
    cross_group_ok: bool = True
    oracle_checked: list = field(default_factory=list)

    @property
    def stability_ok(self) -> bool:
        return all(self.stable_from[k] <= self.thresholds[k] for k in self.families)

    @property
    def verified(self) -> bool:
        return self.vanishing_ok and self.stability_ok and self.cross_group_ok

    def table(self, kind, rank) -> Decomposition:
        return self.per_rank[(Kind.parse(kind), rank)]


def stability_report(
    lam,
    mu,
    families: Iterable = CLASSICAL,
    n_max: int | None = None,
    *,
    cross_check: bool = True,
    memo: Memo | None = DEFAULT_MEMO,
) -> StabilityReport:
    """Tabulate Pi_lam x Pi_mu over ranks and test the three stability claims.

    Ranks below a family's threshold go through the oracle, ranks at or
    above it through the Pieri engine. With ``cross_check`` the oracle is
    also run at the threshold rank and must agree with the engine.
    """
    lam, mu = Partition(lam), Partition(mu)
    kinds = sorted({Kind.parse(k) for k in families}, key=list(Kind).index)
    if not kinds:
        raise InputError("no groups selected")
    n0 = lam.length + mu.length
    if n_max is None:
        n_max = n0 + 2
    if n_max < n0 + 2:
        raise InputError(f"n_max must be at least n0 + 2 = {n0 + 2}, got {n_max}")

    report = StabilityReport(lam, mu, kinds, n0, n_max)
    for kind in kinds:
        threshold = stable_threshold(kind, lam, mu)
        report.thresholds[kind] = threshold
        lo = _lowest_rank(kind, lam, mu)
        for n in range(lo, n_max + 1):
            family = GroupFamily(kind, n)
            if kind is Kind.GL:
                dec = gl_tensor(n, lam, mu)
            elif n < threshold:
                dec = tensor_oracle(family, lam.padded(n), mu.padded(n))
            else:
                dec = tensor_stable_range(family, lam, mu, memo=memo)
                if cross_check and n == threshold:
                    check = tensor_oracle(family, lam.padded(n), mu.padded(n))
                    if check != dec:
                        raise ConsistencyError(
                            f"engine and oracle disagree in {family}: {dec.pretty()} vs {check.pretty()}"
                        )
                    report.oracle_checked.append((kind, n))
            report.per_rank[(kind, n)] = dec
            if any(weight_length(w) > n0 for w in dec):
                report.vanishing_ok = False

        top = report.per_rank[(kind, n_max)].stripped()
        stable_from = n_max
        for n in range(n_max - 1, lo - 1, -1):
            if report.per_rank[(kind, n)].stripped() != top:
                break
            stable_from = n
        report.stable_from[kind] = stable_from

    classical = [k for k in kinds if k is not Kind.GL]
    for n in range(n0 + 1, n_max + 1):
        tables = [report.per_rank[(k, n)].stripped() for k in classical if (k, n) in report.per_rank]
        if any(t != tables[0] for t in tables[1:]):
            report.cross_group_ok = False
    return report
