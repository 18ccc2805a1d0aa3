"""Recover an abelian group from its order spectrum.

Per prime, the cumulative counts g(a) are powers of p with exponent
s(a) = min(a, a1) + ... + min(a, am); the first differences
c(a) = s(a) - s(a - 1) count the parts >= a, i.e. they form the conjugate
partition. The result is then re-verified against the full input.
"""

import logging
from typing import Dict, Iterable, List, Mapping

import attr

from orderlattice.errors import NotRealizable, Reason
from orderlattice.group.model import AbelianGroup, OrderSpectrum, PrimaryComponent
from orderlattice.group.spectra import spectrum
from orderlattice.util.arith import DEFAULT_DIVISOR_CAP, is_prime, prime_power

logger = logging.getLogger(__name__)


@attr.s(frozen=True, auto_attribs=True)
class SpectrumCandidate:
    """Claimed order -> count map, unvalidated."""

    entries: Dict[int, int] = attr.ib(converter=dict)

    def validate(self) -> None:
        for order, count in self.entries.items():
            if order < 1:
                raise NotRealizable(Reason.MALFORMED, f"order {order} is not >= 1")

            if count == 0:
                raise NotRealizable(
                    Reason.MALFORMED, f"explicit zero count at order {order}"
                )

            if count < 0:
                raise NotRealizable(
                    Reason.MALFORMED, f"negative count {count} at order {order}"
                )

        if self.entries.get(1) != 1:
            raise NotRealizable(
                Reason.MALFORMED,
                f"order 1 must have exactly one element, got {self.entries.get(1, 0)}",
            )


def log_exact(value: int, p: int) -> int:
    """k with p**k == value, or -1 when value is not a power of p."""
    k = 0

    while value > 1:
        value, remainder = divmod(value, p)

        if remainder:
            return -1
        k += 1

    return k if value == 1 else -1


def conjugate(columns: List[int]) -> List[int]:
    """Transpose of a Young diagram given by non-increasing column heights."""

    if not columns:
        return []

    return sorted(sum(1 for c in columns if c >= i) for i in range(1, columns[0] + 1))


def reconstruct_p_component(p: int, counts: Mapping[int, int]) -> PrimaryComponent:
    """The p-group with `counts[a]` elements of order p**a."""

    if counts.get(0) != 1:
        raise NotRealizable(
            Reason.MALFORMED, f"order {p}^0 must have exactly one element", prime=p
        )

    top = max(a for a, count in counts.items() if count)

    if top == 0:
        raise NotRealizable(Reason.MALFORMED, f"no elements of order {p}^a, a >= 1", p)

    cumulative = 0
    previous_s = 0
    columns: List[int] = []

    for a in range(top + 1):
        cumulative += counts.get(a, 0)
        s = log_exact(cumulative, p)

        if s < 0:
            raise NotRealizable(
                Reason.NON_PRIME_POWER_CUMULATIVE,
                f"{cumulative} elements of order dividing {p}^{a} "
                f"is not a power of {p}",
                prime=p,
            )

        if a == 0:
            continue

        c = s - previous_s
        previous_s = s

        if c == 0:
            raise NotRealizable(
                Reason.TRAILING_COUNTS,
                f"no elements of order {p}^{a} but some of higher {p}-power order",
                prime=p,
            )

        if columns and c > columns[-1]:
            raise NotRealizable(
                Reason.NON_MONOTONE_CONJUGATE,
                f"parts >= {a} ({c}) outnumber parts >= {a - 1} ({columns[-1]})",
                prime=p,
            )
        columns.append(c)

    return PrimaryComponent(p, conjugate(columns))


def candidate_primes(orders: Iterable[int]) -> List[int]:
    """Primes of the group a set of orders could come from.

    Prime keys are taken first; every order is then divided by them, and a
    cofactor left over must itself be a prime power. Orders are never
    factored by trial division."""
    orders = sorted(orders)
    primes = {d for d in orders if is_prime(d)}

    for order in orders:
        d = order

        for p in primes:
            while d % p == 0:
                d //= p

        if d == 1:
            continue

        found = prime_power(d)

        if found is None:
            raise NotRealizable(
                Reason.KEY_SET_MISMATCH,
                f"order {order} has a prime factor with no element of that prime order",
            )
        primes.add(found[0])

    return sorted(primes)


def reconstruct(
    candidate: SpectrumCandidate, cap: int = DEFAULT_DIVISOR_CAP
) -> AbelianGroup:
    candidate.validate()
    primes = candidate_primes(candidate.entries)
    claimed = OrderSpectrum(candidate.entries)
    components = []

    for p in primes:
        counts = claimed.p_power_counts(p)

        if len(counts) == 1:
            # p divides some order but no p-power order is listed
            raise NotRealizable(
                Reason.KEY_SET_MISMATCH, f"no orders {p}^a listed for a >= 1", prime=p
            )
        components.append(reconstruct_p_component(p, counts))

    group = AbelianGroup(components)
    expected = spectrum(group, cap).entries
    logger.info(f"[reconstruct] candidate group {group.spec}, verifying")

    if set(expected) != set(candidate.entries):
        missing = sorted(set(expected) - set(candidate.entries))
        extra = sorted(set(candidate.entries) - set(expected))
        raise NotRealizable(
            Reason.KEY_SET_MISMATCH,
            f"orders missing: {missing[:5]}, unexpected: {extra[:5]}",
        )

    for order, count in expected.items():
        if candidate.entries[order] != count:
            raise NotRealizable(
                Reason.COUNT_MISMATCH,
                f"{candidate.entries[order]} elements of order {order}, "
                f"{group.spec} has {count}",
            )

    return group
