"""Exact integer arithmetic and divisor lattices.

Factorization is deterministic trial division on a 2-3 wheel (candidates
6k - 1 and 6k + 1). It is meant for group orders and exponents at desk
scale: any value whose second-largest prime factor is below ~10**7 factors
in well under a second. There is no hard cap on the input, only on the
number of divisors a lattice may materialize.
"""

import itertools
import logging
import math
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import attr

from orderlattice.errors import SizeLimitError

logger = logging.getLogger(__name__)

DEFAULT_DIVISOR_CAP = 10**6

Vector = Tuple[int, ...]


def _wheel_candidates() -> Iterator[int]:
    yield 2
    yield 3
    k = 6

    while True:
        yield k - 1
        yield k + 1
        k += 6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The base set is exact for n < 3.3 * 10**24; above that the first
    thirteen primes are used as witnesses."""

    if n < 2:
        return False

    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

    for p in small:
        if n % p == 0:
            return n == p

    d = n - 1
    s = 0

    while d % 2 == 0:
        d //= 2
        s += 1

    for a in small:
        x = pow(a, d, n)

        if x in (1, n - 1):
            continue

        for _ in range(s - 1):
            x = x * x % n

            if x == n - 1:
                break
        else:
            return False

    return True


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1 / k)) for n >= 0, k >= 1, without floats."""

    if n < 2 or k == 1:
        return n

    x = 1 << -(-n.bit_length() // k)

    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k

        if y >= x:
            return x
        x = y


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """(p, k) with p**k == n and p prime, or None. Never trial-divides n."""

    if n < 2:
        return None

    for k in range(1, n.bit_length() + 1):
        root = integer_root(n, k)

        if root < 2:
            break

        if root**k == n and is_prime(root):
            return root, k

    return None


@attr.s(frozen=True, auto_attribs=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs."""

    pairs: Tuple[Tuple[int, int], ...] = attr.ib(converter=tuple)

    @pairs.validator
    def _check_pairs(self, attribute, value) -> None:
        previous = 1

        for prime, exponent in value:
            if prime <= previous:
                raise ValueError(
                    f"[Factorization] primes must be strictly ascending, got {value}"
                )

            if exponent < 1:
                raise ValueError(f"[Factorization] exponent of {prime} must be >= 1")
            previous = prime

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for _, e in self.pairs)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.pairs)

    @property
    def divisor_count(self) -> int:
        return math.prod(e + 1 for _, e in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"

        return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.pairs)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"[factorize] n must be >= 1, got {n}")

    pairs: List[Tuple[int, int]] = []
    remaining = n
    done = is_prime(n)

    for d in _wheel_candidates():
        if done or d * d > remaining:
            break

        if remaining % d == 0:
            exponent = 0

            while remaining % d == 0:
                remaining //= d
                exponent += 1
            pairs.append((d, exponent))
            done = is_prime(remaining)

    if remaining > 1:
        pairs.append((remaining, 1))

    return Factorization(pairs)


@attr.s(frozen=True, auto_attribs=True, eq=False)
class DivisorLattice:
    """All divisors of `base.value`, ordered by numeric value.

    Divisors are stored as exponent vectors over `base.primes`, so meet and
    join are componentwise min and max."""

    base: Factorization
    elements: Tuple[Vector, ...]
    values: Tuple[int, ...]
    _index: Dict[int, int] = attr.ib(repr=False)

    @classmethod
    def from_factorization(
        cls, base: Factorization, cap: int = DEFAULT_DIVISOR_CAP
    ) -> "DivisorLattice":
        count = base.divisor_count

        if count > cap:
            raise SizeLimitError(f"divisors of {base.value}", count, cap)

        primes = base.primes
        vectors = itertools.product(*(range(e + 1) for e in base.exponents))
        pairs = sorted(
            (math.prod(p**k for p, k in zip(primes, vector)), vector)
            for vector in vectors
        )
        values = tuple(v for v, _ in pairs)

        return cls(
            base=base,
            elements=tuple(vector for _, vector in pairs),
            values=values,
            index={v: ix for ix, v in enumerate(values)},
        )

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DivisorLattice):
            return NotImplemented

        return self.base == other.base

    def __hash__(self) -> int:
        return hash(self.base)

    def __contains__(self, d: int) -> bool:
        return d in self._index

    @property
    def bottom(self) -> int:
        return self.values[0]

    @property
    def top(self) -> int:
        return self.values[-1]

    def index(self, d: int) -> int:
        try:
            return self._index[d]
        except KeyError:
            raise ValueError(f"[DivisorLattice.index] {d} does not divide {self.top}")

    def vector(self, d: int) -> Vector:
        return self.elements[self.index(d)]

    def value(self, vector: Sequence[int]) -> int:
        return math.prod(p**k for p, k in zip(self.base.primes, vector))

    def meet_index(self, i: int, j: int) -> int:
        vector = tuple(map(min, self.elements[i], self.elements[j]))

        return self._index[self.value(vector)]

    def join_index(self, i: int, j: int) -> int:
        vector = tuple(map(max, self.elements[i], self.elements[j]))

        return self._index[self.value(vector)]

    def meet(self, a: int, b: int) -> int:
        return self.values[self.meet_index(self.index(a), self.index(b))]

    def join(self, a: int, b: int) -> int:
        return self.values[self.join_index(self.index(a), self.index(b))]

    def covers(self) -> List[Tuple[int, int]]:
        """Covering pairs (d, d * p) of the Hasse diagram, ascending."""
        edges = []

        for d in self.values:
            for p in self.base.primes:
                if self.top % (d * p) == 0:
                    edges.append((d, d * p))

        return edges


@lru_cache(maxsize=1024)
def divisor_lattice(n: int, cap: int = DEFAULT_DIVISOR_CAP) -> DivisorLattice:
    if n < 1:
        raise ValueError(f"[divisor_lattice] n must be >= 1, got {n}")

    return DivisorLattice.from_factorization(factorize(n), cap=cap)


def divisors(n: int, cap: int = DEFAULT_DIVISOR_CAP) -> List[int]:
    return list(divisor_lattice(n, cap).values)


def lattice_shape(lattice: DivisorLattice) -> Tuple[int, ...]:
    """Multiset of chain lengths, as an ascending tuple.

    Two divisor lattices are isomorphic iff their shapes are equal."""

    return tuple(sorted(lattice.base.exponents))
