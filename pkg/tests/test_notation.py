import pytest

from orderlattice.errors import GroupSpecError
from orderlattice.group.model import AbelianGroup, from_cyclic_factors
from orderlattice.group.notation import parse_cyclic_factors, parse_group_spec


@pytest.mark.parametrize(
    "text, factors",
    [
        ("Z4 x Z16", [4, 16]),
        ("Z4xZ16", [4, 16]),
        ("12*720", [12, 720]),
        ("4,16", [4, 16]),
        ("c2 X c2", [2, 2]),
        ("  Z 6 ,  C10 ", [6, 10]),
        ("Z2", [2]),
    ],
)
def test_parse_cyclic_factors(text, factors):
    assert parse_cyclic_factors(text) == factors


def test_parse_group_spec():
    assert parse_group_spec("Z4 x Z16") == from_cyclic_factors([4, 16])
    assert parse_group_spec("6 x 4").spec == "Z2 x Z12"
    assert parse_group_spec("trivial") == AbelianGroup()
    assert parse_group_spec(" Trivial ") == AbelianGroup()


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("   ", 3),
        ("Z0 x Z5", 1),
        ("Z4 x Z1", 6),
        ("Z4 + Z2", 3),
        ("Z4 x", 4),
        ("Z4 x x Z2", 5),
        ("Q8", 0),
        ("Z-4", 0),
    ],
)
def test_parse_errors(text, position):
    with pytest.raises(GroupSpecError) as e:
        parse_group_spec(text)

    assert e.value.position == position
    assert isinstance(e.value, ValueError)


def test_parse_error_shows_caret():
    with pytest.raises(GroupSpecError) as e:
        parse_group_spec("Z4 + Z2")

    lines = str(e.value).splitlines()
    assert lines[0].endswith("at position 3")
    assert lines[1] == "  Z4 + Z2"
    assert lines[2] == "     ^"
