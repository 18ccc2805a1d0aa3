import itertools
import logging
import math
from collections import defaultdict
from functools import cached_property
from types import MappingProxyType
from typing import (
    DefaultDict,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
)

import attr

from orderlattice.util.arith import Factorization, factorize

logger = logging.getLogger(__name__)


def _as_partition(parts: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(parts))


@attr.s(frozen=True, auto_attribs=True)
class PrimaryComponent:
    """The p-part Z_{p^a1} x ... x Z_{p^am} with a1 <= ... <= am."""

    prime: int
    partition: Tuple[int, ...] = attr.ib(converter=_as_partition)

    @partition.validator
    def _check_partition(self, attribute, value) -> None:
        if not value:
            raise ValueError(f"[PrimaryComponent] partition for {self.prime} is empty")

        if value[0] < 1:
            raise ValueError(
                f"[PrimaryComponent] parts must be >= 1, got {list(value)}"
            )

    @property
    def length(self) -> int:
        return len(self.partition)

    @property
    def largest(self) -> int:
        return self.partition[-1]

    @property
    def weight(self) -> int:
        return sum(self.partition)

    @property
    def order(self) -> int:
        return self.prime**self.weight

    @property
    def exponent(self) -> int:
        return self.prime**self.largest

    def cyclic_factors(self) -> List[int]:
        return [self.prime**a for a in self.partition]


def _as_components(
    components: Iterable[PrimaryComponent],
) -> Tuple[PrimaryComponent, ...]:
    return tuple(components)


@attr.s(frozen=True, auto_attribs=True)
class AbelianGroup:
    """A finite abelian group in primary-decomposition form.

    The component tuple is the canonical value: two isomorphic groups compare
    equal. The trivial group has no components."""

    components: Tuple[PrimaryComponent, ...] = attr.ib(
        default=(), converter=_as_components
    )

    @components.validator
    def _check_components(self, attribute, value) -> None:
        primes = [c.prime for c in value]

        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError(
                f"[AbelianGroup] primes must be strictly ascending, got {primes}"
            )

    @cached_property
    def invariant_factors(self) -> Tuple[int, ...]:
        rank = self.rank
        factors = [1] * rank

        # right-align every partition, so the largest parts meet in d_m
        for c in self.components:
            padded = (0,) * (rank - c.length) + c.partition

            for i, a in enumerate(padded):
                factors[i] *= c.prime**a

        return tuple(factors)

    @cached_property
    def order(self) -> int:
        return math.prod(c.order for c in self.components)

    @cached_property
    def exponent(self) -> int:
        return math.prod(c.exponent for c in self.components)

    @property
    def exponent_factorization(self) -> Factorization:
        return Factorization((c.prime, c.largest) for c in self.components)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(c.prime for c in self.components)

    @property
    def rank(self) -> int:
        return max((c.length for c in self.components), default=0)

    @property
    def is_cyclic(self) -> bool:
        return self.rank <= 1

    @property
    def is_trivial(self) -> bool:
        return not self.components

    def component(self, p: int) -> Optional[PrimaryComponent]:
        for c in self.components:
            if c.prime == p:
                return c

        return None

    @property
    def spec(self) -> str:
        """Canonical spec string, e.g. "Z4 x Z16"."""

        if self.is_trivial:
            return "trivial"

        return " x ".join(f"Z{d}" for d in self.invariant_factors)

    def __str__(self) -> str:
        return self.spec


def from_cyclic_factors(factors: Iterable[int]) -> AbelianGroup:
    """Canonical group isomorphic to the direct product of Z_d for d in factors."""
    parts: DefaultDict[int, List[int]] = defaultdict(list)

    for d in factors:
        if d <= 1:
            raise ValueError(
                f"[from_cyclic_factors] cyclic factors must be >= 2, got {d}"
            )

        # split into elementary divisors
        for p, e in factorize(d):
            parts[p].append(e)

    return AbelianGroup(PrimaryComponent(p, parts[p]) for p in sorted(parts))


def invariant_factors(group: AbelianGroup) -> List[int]:
    return list(group.invariant_factors)


def order(group: AbelianGroup) -> int:
    return group.order


def exponent(group: AbelianGroup) -> int:
    return group.exponent


def partitions(weight: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing partitions of `weight` with parts <= `largest`."""

    if largest is None:
        largest = weight

    if weight == 0:
        yield ()

        return

    for x in range(min(largest, weight), 0, -1):
        for rest in partitions(weight - x, x):
            yield rest + (x,)


def groups_of_order(n: int) -> List[AbelianGroup]:
    """Every abelian group of order n, each isomorphism class once."""
    fact = factorize(n)
    per_prime = [
        [PrimaryComponent(p, parts) for parts in partitions(e)] for p, e in fact
    ]

    return [AbelianGroup(combo) for combo in itertools.product(*per_prime)]


def iter_groups(max_order: int, min_order: int = 1) -> Iterator[AbelianGroup]:
    for n in range(min_order, max_order + 1):
        yield from groups_of_order(n)


def _frozen_entries(entries: Mapping[int, int]) -> Mapping[int, int]:
    return MappingProxyType(dict(sorted(entries.items())))


@attr.s(frozen=True, auto_attribs=True)
class OrderSpectrum:
    """Number of elements of each order, keyed by ascending order.

    `group` is None when the spectrum was tallied from raw cyclic factors."""

    entries: Mapping[int, int] = attr.ib(converter=_frozen_entries)
    group: Optional[AbelianGroup] = None

    def count(self, d: int) -> int:
        return self.entries.get(d, 0)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def exponent(self) -> int:
        return max(self.entries, default=1)

    def p_power_counts(self, p: int) -> Dict[int, int]:
        """Counts at orders p**a, keyed by a."""
        counts = {}
        a, q = 0, 1

        while q <= self.exponent:
            if q in self.entries:
                counts[a] = self.entries[q]
            a, q = a + 1, q * p

        return counts

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)
