from functools import lru_cache
from typing import Tuple

import pytest

from orderlattice.group.model import AbelianGroup, iter_groups


@lru_cache(maxsize=None)
def _groups_up_to(max_order: int) -> Tuple[AbelianGroup, ...]:
    return tuple(iter_groups(max_order))


@pytest.fixture(scope="session")
def groups_up_to():
    """groups_up_to(n): every abelian group of order 1..n, canonical."""

    return _groups_up_to
