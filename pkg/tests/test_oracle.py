from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from conftest import partitions_upto
from stabletensor import oracle
from stabletensor.errors import ConsistencyError, InputError, ResourceError
from stabletensor.oracle import (
    Decomposition,
    dim,
    dominant_weights,
    orbit,
    orbit_size,
    tensor_oracle,
    weight_multiplicities,
)
from stabletensor.rootsystem import CLASSICAL, GroupFamily, Kind, dominant_representative
from stabletensor.tables import EXPECTED_ROWS, parse_row

SP3 = GroupFamily(Kind.SP, 3)


def weyl_dimension(kind, hw):
    """Independent Weyl product with explicit root lists and Fraction arithmetic."""
    n = len(hw)
    if kind is Kind.GL:
        rho = [Fraction(n - 1 - i) for i in range(n)]
    elif kind is Kind.SP:
        rho = [Fraction(n - i) for i in range(n)]
    elif kind is Kind.SO_ODD:
        rho = [Fraction(2 * (n - i) - 1, 2) for i in range(n)]
    else:
        rho = [Fraction(n - 1 - i) for i in range(n)]
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = 1, -1
            roots.append(e)
            if kind is not Kind.GL:
                f = [0] * n
                f[i], f[j] = 1, 1
                roots.append(f)
        if kind in (Kind.SP, Kind.SO_ODD):
            e = [0] * n
            e[i] = 2 if kind is Kind.SP else 1
            roots.append(e)
    out = Fraction(1)
    for a in roots:
        num = sum((x + r) * c for x, r, c in zip(hw, rho, a))
        den = sum(r * c for r, c in zip(rho, a))
        out *= num / den
    assert out.denominator == 1
    return int(out)


def kostka(shape, content):
    """Count semistandard tableaux of the given shape and content by filling cells."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    remaining = list(content)
    grid = {}

    def fill(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = grid[(i, j - 1)]
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, len(remaining)):
            if remaining[v]:
                remaining[v] -= 1
                grid[(i, j)] = v
                total += fill(idx + 1)
                remaining[v] += 1
        return total

    return fill(0)


# --- dimensions ---------------------------------------------------------------


def test_dim_examples():
    assert dim(GroupFamily(Kind.GL, 3), (2, 0, 0)) == 6
    assert dim(GroupFamily(Kind.SO_ODD, 3), (1, 0, 0)) == 7
    assert dim(SP3, (2, 1, 1)) == 70 == weyl_dimension(Kind.SP, (2, 1, 1))


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_dim_matches_independent_product(kind, n):
    for p in partitions_upto(4, max_length=n):
        hw = p.padded(n)
        assert dim(GroupFamily(kind, n), hw) == weyl_dimension(kind, hw)


def test_dim_so_even_negative_last():
    d4 = GroupFamily(Kind.SO_EVEN, 4)
    assert dim(d4, (1, 1, 1, 1)) == dim(d4, (1, 1, 1, -1)) == 35
    assert dim(d4, (1, 1, 1, -1)) == weyl_dimension(Kind.SO_EVEN, (1, 1, 1, -1))


def test_dim_rejects_bad_weights():
    with pytest.raises(InputError):
        dim(SP3, (1, 2, 0))
    with pytest.raises(InputError):
        dim(GroupFamily(Kind.GL, 2), (1, -1))


# --- weight systems -----------------------------------------------------------


def test_weight_system_examples():
    ws = weight_multiplicities(GroupFamily(Kind.SP, 2), (1, 1))
    assert dict(ws.entries) == {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1}
    for kind in Kind:
        fam = GroupFamily(kind, 3)
        assert dict(weight_multiplicities(fam, (0, 0, 0)).entries) == {(0, 0, 0): 1}
    gl2 = weight_multiplicities(GroupFamily(Kind.GL, 2), (1, 0))
    assert dict(gl2.entries) == {(1, 0): 1, (0, 1): 1}


@pytest.mark.parametrize("shape", [(2, 1), (2, 1, 1), (3, 1), (2, 2), (3, 2, 1), (4,)])
def test_gl_multiplicities_are_kostka_numbers(shape):
    r = 4
    hw = shape + (0,) * (r - len(shape))
    ws = weight_multiplicities(GroupFamily(Kind.GL, r), hw)
    size = sum(shape)
    for content in product(range(size + 1), repeat=r):
        if sum(content) == size:
            assert ws[content] == kostka(shape, content), content


@pytest.mark.parametrize("kind", list(Kind))
def test_mass_equals_dim_and_orbits_constant(kind):
    n = 3
    fam = GroupFamily(kind, n)
    for p in partitions_upto(4, max_length=n):
        hw = p.padded(n)
        ws = weight_multiplicities(fam, hw)
        assert ws.mass == dim(fam, hw)
        for w, m in ws.entries.items():
            rep = dominant_representative(fam, w)
            assert ws[rep] == m


def test_orbit_size_and_dominant_weights():
    assert orbit_size(Kind.SP, (1, 1)) == 4
    assert sorted(orbit(Kind.SP, (1, 1))) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert orbit_size(Kind.SO_EVEN, (1, 1, 1)) == 4
    assert orbit_size(Kind.SO_EVEN, (1, 1, 0)) == 12
    for kind in Kind:
        for w in [(2, 1, 0), (1, 1, 1), (3, 0, 0)]:
            assert orbit_size(kind, w) == len(set(orbit(kind, w)))
    assert set(dominant_weights(GroupFamily(Kind.SP, 2), (1, 1))) == {(1, 1), (0, 0)}


def test_resource_bound():
    oracle.clear_caches()
    with pytest.raises(ResourceError):
        weight_multiplicities(GroupFamily(Kind.SP, 3), (3, 2, 1), max_weights=10)


# --- tensor products ----------------------------------------------------------


def test_tensor_examples_from_tables():
    dec = tensor_oracle(SP3, (2, 1, 1), (1, 1, 0))
    assert dec.terms == parse_row(EXPECTED_ROWS[(Kind.SP, 3)])
    assert len(dec) == 7 and set(dec.terms.values()) == {1}
    d4 = tensor_oracle(GroupFamily(Kind.SO_EVEN, 4), (2, 1, 1, 0), (1, 1, 0, 0))
    assert len(d4) == 13
    assert d4[(2, 1, 1, 0)] == 3
    for w in [(1, 1, 1, -1), (2, 2, 1, -1), (3, 1, 1, -1)]:
        assert d4[w] == 1


@pytest.mark.parametrize("kind", list(Kind))
def test_tensor_with_trivial(kind):
    fam = GroupFamily(kind, 3)
    assert tensor_oracle(fam, (2, 1, 0), (0, 0, 0)).terms == {(2, 1, 0): 1}
    assert tensor_oracle(fam, (0, 0, 0), (2, 1, 0)).terms == {(2, 1, 0): 1}


@pytest.mark.parametrize("kind", list(Kind))
def test_character_identity(kind):
    """Weights of V(a) x V(b) equal the union of weights of the summands."""
    n = 2 if kind is Kind.GL else 3
    fam = GroupFamily(kind, n)
    pairs = [((1,), (1,)), ((2, 1), (1,)), ((1, 1), (2,)), ((2,), (2,))]
    for a, b in pairs:
        a, b = tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b))
        wa, wb = weight_multiplicities(fam, a), weight_multiplicities(fam, b)
        lhs = Counter()
        for x, m in wa.entries.items():
            for y, k in wb.entries.items():
                lhs[tuple(p + q for p, q in zip(x, y))] += m * k
        rhs = Counter()
        for nu, c in tensor_oracle(fam, a, b).items():
            for w, m in weight_multiplicities(fam, nu).entries.items():
                rhs[w] += c * m
        assert lhs == rhs


@pytest.mark.parametrize("kind", CLASSICAL)
def test_symmetry_and_cartan_component(kind):
    fam = GroupFamily(kind, 3)
    small = [p.padded(3) for p in partitions_upto(3, max_length=3)]
    for a in small:
        for b in small:
            ab = tensor_oracle(fam, a, b)
            assert ab == tensor_oracle(fam, b, a)
            top = tuple(x + y for x, y in zip(a, b))
            assert ab[top] == 1
            assert max(ab.terms) == top


def test_decomposition_validation():
    with pytest.raises(ConsistencyError):
        Decomposition(SP3, {(1, 0, 0): -1})
    with pytest.raises(ConsistencyError):
        Decomposition(SP3, {(0, 1, 0): 1})
    dec = Decomposition(SP3, {(1, 0, 0): 1, (2, 0, 0): 0, (1, 1, 0): 2})
    assert list(dec.terms) == [(1, 1, 0), (1, 0, 0)]
    assert dec.total == 3
    bad = Decomposition(SP3, {(2, 0, 0): 1}, lhs=(1, 0, 0), rhs=(1, 0, 0))
    with pytest.raises(ConsistencyError):
        bad.checked()
