"""Brute-force element-order tallies.

Nothing here consults the counting formulas: every element of
Z_{d1} x ... x Z_{dk} is visited and its order computed directly.
"""

import itertools
import logging
import math
import multiprocessing as mp
from collections import Counter
from functools import partial
from typing import Iterator, List, Sequence, Tuple

from tqdm import tqdm

from orderlattice.errors import SizeLimitError
from orderlattice.group.model import OrderSpectrum

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 10**5

ElementTuple = Tuple[int, ...]


def _check_factors(factors: Sequence[int], caller: str) -> None:
    for d in factors:
        if d < 1:
            raise ValueError(f"[{caller}] moduli must be >= 1, got {d}")


def residue_orders(d: int) -> List[int]:
    """Order of r in Z_d for r = 0..d-1."""

    return [d // math.gcd(d, r) for r in range(d)]


def element_order(x: Sequence[int], factors: Sequence[int]) -> int:
    if len(x) != len(factors):
        raise ValueError(
            f"[element_order] element has {len(x)} residues for {len(factors)} factors"
        )

    for r, d in zip(x, factors):
        if not 0 <= r < d:
            raise ValueError(f"[element_order] residue {r} is not in [0, {d})")

    return math.lcm(*(d // math.gcd(d, r) for r, d in zip(x, factors)))


def iter_elements(factors: Sequence[int]) -> Iterator[ElementTuple]:
    """Row-major residue tuples."""

    return itertools.product(*(range(d) for d in factors))


def iter_element_orders(factors: Sequence[int]) -> Iterator[int]:
    """Orders of the elements of `iter_elements(factors)`, in the same order."""
    tables = [residue_orders(d) for d in factors]

    return (math.lcm(*orders) for orders in itertools.product(*tables))


def _tally_leading(leading: int, factors: Tuple[int, ...]) -> Counter:
    head = factors[0] // math.gcd(factors[0], leading)
    tables = [residue_orders(d) for d in factors[1:]]

    return Counter(
        math.lcm(head, *orders) for orders in itertools.product(*tables)
    )


def enumerate_spectrum(
    factors: Sequence[int],
    cap: int = DEFAULT_ORACLE_CAP,
    num_workers: int = 1,
    progress: bool = False,
) -> OrderSpectrum:
    """Tally element orders of the product of Z_d over `factors`.

    With `num_workers > 1` the work is split by leading residue."""
    factors = tuple(factors)
    _check_factors(factors, "enumerate_spectrum")
    n_elements = math.prod(factors)

    if n_elements > cap:
        raise SizeLimitError("oracle enumeration", n_elements, cap)

    if not factors:
        return OrderSpectrum({1: 1})

    logger.info(
        f"[enumerate_spectrum] Enumerating {n_elements} elements of "
        f"{' x '.join(f'Z{d}' for d in factors)} with {num_workers} worker(s)"
    )

    leading = range(factors[0])
    _tally = partial(_tally_leading, factors=factors)

    if num_workers == 1:
        leading_iter = tqdm(leading, disable=None if progress else True, leave=False)
        tallies = [_tally(r) for r in leading_iter]
    else:
        with mp.Pool(num_workers) as pool:
            tallies = pool.map(_tally, leading)

    total: Counter = Counter()

    for tally in tallies:
        total.update(tally)

    tallied = sum(total.values())

    if tallied != n_elements:
        raise RuntimeError(
            f"[enumerate_spectrum] tallied {tallied} of {n_elements} elements"
        )

    return OrderSpectrum(dict(total))
