"""Exact element-order counts for finite abelian groups.

For a p-component Z_{p^a1} x ... x Z_{p^am} the number of elements of order
dividing p^a is g(a) = p^(min(a, a1) + ... + min(a, am)), so the number of
elements of order exactly p^a is g(a) - g(a - 1). Counts at a composite
order are the product of the per-prime counts.
"""

import logging
import math
from functools import lru_cache
from typing import Dict, List, Tuple

from orderlattice.group.model import AbelianGroup, OrderSpectrum, PrimaryComponent
from orderlattice.util.arith import DEFAULT_DIVISOR_CAP, DivisorLattice, is_prime

logger = logging.getLogger(__name__)


def _check_alpha(alpha: int, caller: str) -> None:
    if alpha < 0:
        raise ValueError(f"[{caller}] alpha must be >= 0, got {alpha}")


def cumulative_g(component: PrimaryComponent, alpha: int) -> int:
    """Number of elements whose order divides p**alpha."""
    _check_alpha(alpha, "cumulative_g")

    return component.prime ** sum(min(alpha, a) for a in component.partition)


def count_p_power(component: PrimaryComponent, alpha: int) -> int:
    """Number of elements of order exactly p**alpha."""
    _check_alpha(alpha, "count_p_power")

    if alpha == 0:
        return 1

    if alpha > component.largest:
        return 0

    return cumulative_g(component, alpha) - cumulative_g(component, alpha - 1)


@lru_cache(maxsize=4096)
def p_power_counts(component: PrimaryComponent) -> Tuple[int, ...]:
    """f(0), f(1), ..., f(a_m) for the component."""

    return tuple(count_p_power(component, a) for a in range(component.largest + 1))


def count_p_power_by_recurrence(component: PrimaryComponent, alpha: int) -> int:
    """Same count as `count_p_power`, folding in one cyclic factor at a time.

    Starts from Z_{p^a1}, where f(b) = p^b - p^(b-1), and applies
    f'(b) = p^b * g(b) - p^(b-1) * g(b-1) for every further factor, g being
    the running sums of the previous f. A factor Z_{p^a} contributes p^b
    choices of order dividing p^b only up to b = a, so the recurrence uses
    p^min(b, a) for the new factor."""
    _check_alpha(alpha, "count_p_power_by_recurrence")
    p = component.prime
    top = component.largest

    if alpha > top:
        return 0

    first, *rest = component.partition
    f = [1] + [p**b - p ** (b - 1) if b <= first else 0 for b in range(1, top + 1)]

    for a in rest:
        g = _running_sums(f)
        f = [1] + [
            p ** min(b, a) * g[b] - p ** min(b - 1, a) * g[b - 1]
            for b in range(1, top + 1)
        ]

    return f[alpha]


def _running_sums(values: List[int]) -> List[int]:
    sums, total = [], 0

    for v in values:
        total += v
        sums.append(total)

    return sums


def count_order(group: AbelianGroup, d: int) -> int:
    """Number of elements of order d; 0 when d does not divide the exponent."""

    if d < 1:
        raise ValueError(f"[count_order] d must be >= 1, got {d}")

    if group.exponent % d:
        return 0

    # d divides the exponent, so its primes are among the component primes
    count = 1

    for component in group.components:
        beta = 0

        while d % component.prime == 0:
            d //= component.prime
            beta += 1
        count *= count_p_power(component, beta)

    return count


def count_prime_power_order(group: AbelianGroup, p: int, alpha: int) -> int:
    if not is_prime(p):
        raise ValueError(f"[count_prime_power_order] {p} is not prime")
    _check_alpha(alpha, "count_prime_power_order")
    component = group.component(p)

    if component is None:
        return 1 if alpha == 0 else 0

    return count_p_power(component, alpha)


def count_prime_order(group: AbelianGroup, p: int) -> int:
    """p**m - 1 elements of order p, m being the length of the p-partition."""

    if not is_prime(p):
        raise ValueError(f"[count_prime_order] {p} is not prime")
    component = group.component(p)

    if component is None:
        return 0

    return p**component.length - 1


@lru_cache(maxsize=8192)
def spectrum(group: AbelianGroup, cap: int = DEFAULT_DIVISOR_CAP) -> OrderSpectrum:
    """One entry per divisor of the exponent."""
    lattice = DivisorLattice.from_factorization(group.exponent_factorization, cap)
    tables = [p_power_counts(c) for c in group.components]
    entries: Dict[int, int] = {}

    for d, vector in zip(lattice.values, lattice.elements):
        entries[d] = math.prod(table[b] for table, b in zip(tables, vector))

    logger.info(f"[spectrum] {group.spec}: {len(entries)} orders")

    return OrderSpectrum(entries, group=group)
