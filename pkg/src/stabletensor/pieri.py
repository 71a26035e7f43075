"""Pieri rules for GL and for the classical groups in the stable range."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from .errors import ConsistencyError, InputError, OutOfStableRangeError
from .oracle import Decomposition
from .partitions import Partition, format_partition, horizontal_strips
from .rootsystem import GroupFamily, Kind


@dataclass(frozen=True)
class PieriCount:
    target: Partition
    count: int
    witnesses: tuple[Partition, ...] | None = None


def _nonneg(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise InputError(f"k must be a nonnegative integer, got {k!r}")
    return k


def gl_pieri(lam, k: int, r: int) -> set[Partition]:
    """Constituents of Psi_lam x Sym^k(V) for GL(r), each of multiplicity one."""
    lam = Partition(lam)
    _nonneg(k)
    if lam.length > r:
        raise InputError(f"({format_partition(lam)}) does not fit in rank {r}")
    return set(horizontal_strips(lam, k, max_length=r))


def pieri_min_rank(kind: Kind, lam) -> int:
    """Least rank at which the classical Pieri formula applies to ``lam``."""
    kind = Kind.parse(kind)
    if kind is Kind.GL:
        raise InputError("the classical Pieri formula does not apply to GL; use gl_pieri")
    extra = 2 if kind is Kind.SO_EVEN else 1
    return Partition(lam).length + extra


def _check_pieri_range(lam: Partition, family: GroupFamily):
    need = pieri_min_rank(family.kind, lam)
    if family.rank < need:
        raise OutOfStableRangeError(
            f"Pieri formula for ({format_partition(lam)}) does not apply in {family}", need
        )


def _inner_shapes(lam: Partition):
    """All xi with lam/xi a horizontal strip: xi_i ranges over [lam_{i+1}, lam_i]."""
    ranges = [range(lam.part(i + 1), lam.part(i) + 1) for i in range(lam.length)]
    for xi in product(*ranges):
        yield Partition(xi)


def pieri_terms(lam, k: int, *, witnesses: bool = False) -> dict[Partition, PieriCount]:
    """Rank-free classical Pieri coefficients N_{lam,k}^mu.

    N counts the xi such that lam/xi and mu/xi are horizontal strips whose
    sizes add up to k.
    """
    lam = Partition(lam)
    _nonneg(k)
    found: dict[Partition, list] = defaultdict(list)
    for xi in _inner_shapes(lam):
        removed = lam.size - xi.size
        if removed > k:
            continue
        for mu in horizontal_strips(xi, k - removed):
            found[mu].append(xi)
    for mu in found:
        if mu.length > lam.length + 1:
            raise ConsistencyError(f"Pieri term {mu} breaks the length bound for {lam}")
    out = {}
    for mu in sorted(found, key=lambda p: tuple(-x for x in p.padded(lam.length + 1))):
        xs = found[mu]
        if len(set(xs)) != len(xs):
            raise ConsistencyError(f"duplicate witness for {mu} in {lam} x ({k})")
        out[mu] = PieriCount(mu, len(xs), tuple(xs) if witnesses else None)
    return out


def classical_pieri(
    lam, k: int, family: GroupFamily, *, witnesses: bool = False
) -> dict[Partition, PieriCount]:
    """Decomposition of Pi_lam x Pi_(k) for Sp, SO(2n+1), SO(2n).

    Only valid when lam has a zero last coordinate (two zeros for SO(2n));
    outside that range this raises :class:`OutOfStableRangeError` instead of
    answering.
    """
    lam = Partition(lam)
    if family.kind is Kind.GL:
        raise InputError("classical_pieri does not handle GL; use gl_pieri")
    _check_pieri_range(lam, family)
    return pieri_terms(lam, k, witnesses=witnesses)


def sym_decomposition(k: int) -> list[Partition]:
    """Sym^k V = Pi(k) + Pi(k-2) + ... for the orthogonal groups."""
    _nonneg(k)
    return [Partition([j] if j else []) for j in range(k, -1, -2)]


def pieri_last_row(mu_prime, mu_r: int, family: GroupFamily) -> Decomposition:
    """Pi_{mu'} x Pi_(mu_r): mu itself once, plus terms with a shorter last row.

    ``mu`` is ``mu_prime`` extended by the row ``mu_r``. Every other
    constituent nu has nu_r < mu_r and length <= r; both facts are checked.
    """
    mu_prime = Partition(mu_prime)
    if isinstance(mu_r, bool) or not isinstance(mu_r, int) or mu_r <= 0:
        raise InputError(f"last row must be a positive integer, got {mu_r!r}")
    if mu_prime and mu_prime[-1] < mu_r:
        raise InputError(f"({format_partition(mu_prime)},{mu_r}) is not a partition")
    mu = Partition(tuple(mu_prime) + (mu_r,))
    r = mu.length
    terms = classical_pieri(mu_prime, mu_r, family)
    if terms.get(mu) is None or terms[mu].count != 1:
        raise ConsistencyError(f"{mu} does not occur exactly once in {mu_prime} x ({mu_r})")
    for nu, pc in terms.items():
        if nu == mu:
            continue
        if nu.length > r or nu.part(r - 1) >= mu_r:
            raise ConsistencyError(f"unexpected term {nu} in {mu_prime} x ({mu_r})")
    n = family.rank
    return Decomposition(
        family,
        {nu.padded(n): pc.count for nu, pc in terms.items()},
        engine="pieri-recursive",
        lhs=mu_prime.padded(n),
        rhs=Partition([mu_r]).padded(n),
    ).checked()

