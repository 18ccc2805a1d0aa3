"""Group-spec text: cyclic factors joined by `x`, `*` or `,`.

Each factor is `Z<n>`, `C<n>` or a bare `<n>`; whitespace is ignored and
letters are case-insensitive. `trivial` names the trivial group.

    Z4 x Z16    12*720    4,16    c2 X c2
"""

import re
from typing import List

from orderlattice.errors import GroupSpecError
from orderlattice.group.model import AbelianGroup, from_cyclic_factors

re_space = re.compile(r"\s*")
re_factor = re.compile(r"([zc]?)(\s*)([0-9]+)", re.IGNORECASE)
re_separator = re.compile(r"[x*,]", re.IGNORECASE)
re_trivial = re.compile(r"\s*trivial\s*", re.IGNORECASE)


def _skip_space(text: str, pos: int) -> int:
    return re_space.match(text, pos).end()  # type: ignore[union-attr]


def parse_cyclic_factors(text: str) -> List[int]:
    factors: List[int] = []
    pos = _skip_space(text, 0)

    if pos == len(text):
        raise GroupSpecError("empty group spec", text, pos)

    while True:
        match = re_factor.match(text, pos)

        if match is None:
            raise GroupSpecError("expected a cyclic factor such as Z4", text, pos)

        value = int(match.group(3))

        if value <= 1:
            raise GroupSpecError(
                f"cyclic factor must be >= 2, got {value}", text, match.start(3)
            )
        factors.append(value)
        pos = _skip_space(text, match.end())

        if pos == len(text):
            return factors

        if not re_separator.match(text, pos):
            raise GroupSpecError(
                f"unexpected character {text[pos]!r}, expected x, * or ,", text, pos
            )
        pos = _skip_space(text, pos + 1)

        if pos == len(text):
            raise GroupSpecError("missing cyclic factor after separator", text, pos)


def parse_group_spec(text: str) -> AbelianGroup:
    if re_trivial.fullmatch(text):
        return AbelianGroup()

    return from_cyclic_factors(parse_cyclic_factors(text))
