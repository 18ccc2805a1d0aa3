import logging
import re
import sys
from typing import Any, Iterable, Tuple, Union

import orjson
from rich.console import Console
from rich.logging import RichHandler

re_natural = re.compile(r"[0-9]+")

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def allow_long_decimals() -> None:
    """Lifts the interpreter cap on int <-> str conversion length.

    Counts of large groups run past 4300 decimal digits."""

    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


allow_long_decimals()


def orjson_dump(d: Any) -> str:
    """Dumps a JSON-compatible value in UTF-8 using orjson.

    Keys are sorted and the indentation is fixed, so equal inputs always
    produce byte-identical output."""
    json_bytes: bytes = orjson.dumps(d, option=JSON_OPTIONS)
    json_utf8 = json_bytes.decode("utf8")

    return json_utf8


def decimal(n: int) -> str:
    return str(int(n))


def decimals(values: Iterable[int]) -> Tuple[str, ...]:
    return tuple(decimal(v) for v in values)


def stderr_console() -> Console:
    return Console(stderr=True)


def configure_logging(verbose: bool = False) -> None:
    """Route orderlattice logs to stderr through rich."""
    handler = RichHandler(console=stderr_console(), show_path=False)
    logger = logging.getLogger("orderlattice")
    logger.handlers = [handler]
    logger.setLevel(logging.INFO if verbose else logging.WARNING)
    logger.propagate = False


def parse_natural(value: Union[str, int, Any], what: str = "value") -> int:
    """Parses a JSON natural given as a decimal string or an integer."""

    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"[parse_natural] {what} must be a decimal string or integer")

    if isinstance(value, str):
        text = value.strip()

        if not re_natural.fullmatch(text):
            raise ValueError(
                f"[parse_natural] {what} is not a decimal natural: {value!r}"
            )

        return int(text)

    if value < 0:
        raise ValueError(f"[parse_natural] {what} must be >= 0, got {value}")

    return value
