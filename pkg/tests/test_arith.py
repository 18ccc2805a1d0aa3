import math

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from orderlattice.errors import SizeLimitError
from orderlattice.util.arith import (
    DivisorLattice,
    Factorization,
    divisor_lattice,
    divisors,
    factorize,
    integer_root,
    is_prime,
    lattice_shape,
    prime_power,
)


def hasse_digraph(lattice: DivisorLattice) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(lattice.values)
    graph.add_edges_from(lattice.covers())

    return graph


def test_factorize_examples():
    assert factorize(1).pairs == ()
    assert factorize(2).pairs == ((2, 1),)
    assert factorize(720).pairs == ((2, 4), (3, 2), (5, 1))
    assert str(factorize(720)) == "2^4 * 3^2 * 5"
    assert str(factorize(1)) == "1"
    assert factorize(2**61 - 1).pairs == ((2**61 - 1, 1),)


@pytest.mark.parametrize("n", [0, -1, -720])
def test_factorize_rejects_non_positive(n):
    with pytest.raises(ValueError):
        factorize(n)


def test_factorize_agrees_with_sympy():
    for n in range(1, 5001):
        fact = factorize(n)
        assert dict(fact.pairs) == sympy.factorint(n)
        assert fact.value == n
        assert fact.divisor_count == sympy.divisor_count(n)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=10**10))
def test_factorize_reproduces_n(n):
    fact = factorize(n)

    assert fact.value == n
    assert all(is_prime(p) for p in fact.primes)


def test_factorization_validates_pairs():
    with pytest.raises(ValueError):
        Factorization([(3, 1), (2, 1)])

    with pytest.raises(ValueError):
        Factorization([(2, 0)])


def test_is_prime_agrees_with_sympy():
    for n in range(-5, 10001):
        assert is_prime(n) == sympy.isprime(n), n


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**89 - 1, True),
        (2**67 - 1, False),
        (3215031751, False),
        (3825123056546413051, False),
        (1000000007 * 1000000009, False),
    ],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_integer_root_agrees_with_sympy():
    for n in list(range(200)) + [2**64 - 1, 2**64, 3**100 + 1, 10**50]:
        for k in range(1, 8):
            assert integer_root(n, k) == sympy.integer_nthroot(n, k)[0], (n, k)


def test_prime_power():
    for n in range(1, 3001):
        factors = sympy.factorint(n)
        expected = next(iter(factors.items())) if len(factors) == 1 else None
        assert prime_power(n) == expected, n

    assert prime_power(3**200) == (3, 200)
    assert prime_power((2**61 - 1) ** 3) == (2**61 - 1, 3)
    assert prime_power(4294967291 * 4294967279) is None


def test_divisor_lattice_12():
    lattice = divisor_lattice(12)

    assert lattice.values == (1, 2, 3, 4, 6, 12)
    assert lattice.bottom == 1
    assert lattice.top == 12
    assert lattice.vector(6) == (1, 1)
    assert lattice.value((2, 1)) == 12
    assert lattice.meet(4, 6) == 2
    assert lattice.join(4, 6) == 12
    assert lattice.join(3, 4) == 12
    assert 5 not in lattice
    assert sorted(lattice.covers()) == [
        (1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)
    ]

    with pytest.raises(ValueError):
        lattice.index(5)


def test_divisor_lattice_of_one_and_prime_power():
    assert divisor_lattice(1).values == (1,)
    assert divisor_lattice(1).covers() == []
    assert divisors(16) == [1, 2, 4, 8, 16]
    assert lattice_shape(divisor_lattice(16)) == (4,)

    with pytest.raises(ValueError):
        divisor_lattice(0)


def test_divisor_cap():
    with pytest.raises(SizeLimitError) as e:
        divisor_lattice(720720, cap=10)

    assert e.value.requested == 240
    assert e.value.limit == 10


def test_meet_and_join_are_gcd_and_lcm():
    for n in range(1, 201):
        lattice = divisor_lattice(n)

        for a in lattice.values:
            for b in lattice.values:
                assert lattice.meet(a, b) == math.gcd(a, b)
                assert lattice.join(a, b) == math.lcm(a, b)


def test_lattice_axioms():
    for n in range(1, 201):
        lattice = divisor_lattice(n)
        k = len(lattice)
        meet = [[lattice.meet_index(i, j) for j in range(k)] for i in range(k)]
        join = [[lattice.join_index(i, j) for j in range(k)] for i in range(k)]

        for a in range(k):
            assert meet[a][a] == join[a][a] == a

            for b in range(k):
                assert meet[a][b] == meet[b][a]
                assert join[a][b] == join[b][a]
                assert meet[a][join[a][b]] == a
                assert join[a][meet[a][b]] == a

                for c in range(k):
                    assert meet[meet[a][b]][c] == meet[a][meet[b][c]]
                    assert join[join[a][b]][c] == join[a][join[b][c]]


def test_shape_decides_lattice_isomorphism():
    lattices = {n: divisor_lattice(n) for n in range(1, 61)}
    graphs = {n: hasse_digraph(lattice) for n, lattice in lattices.items()}

    for a in range(1, 61):
        for b in range(a, 61):
            same_shape = lattice_shape(lattices[a]) == lattice_shape(lattices[b])
            assert same_shape == nx.is_isomorphic(graphs[a], graphs[b]), (a, b)


def test_lattice_equality_is_by_base():
    assert divisor_lattice(12) == DivisorLattice.from_factorization(factorize(12))
    assert divisor_lattice(12) != divisor_lattice(18)
    assert lattice_shape(divisor_lattice(12)) == lattice_shape(divisor_lattice(18))
