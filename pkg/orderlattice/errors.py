from enum import Enum
from typing import Optional


class OrderLatticeError(Exception):
    """Base class for every error raised by orderlattice."""


class SizeLimitError(OrderLatticeError, ValueError):
    def __init__(self, what: str, requested: int, limit: int) -> None:
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: {requested} exceeds the configured cap of {limit}")


class GroupSpecError(OrderLatticeError, ValueError):
    def __init__(self, message: str, text: str, position: int) -> None:
        self.message = message
        self.text = text
        self.position = position
        super().__init__(message)

    def __str__(self) -> str:
        caret = " " * self.position + "^"

        return f"{self.message} at position {self.position}\n  {self.text}\n  {caret}"


class Reason(str, Enum):
    MALFORMED = "malformed"
    NON_PRIME_POWER_CUMULATIVE = "non_prime_power_cumulative"
    NON_MONOTONE_CONJUGATE = "non_monotone_conjugate"
    TRAILING_COUNTS = "trailing_counts"
    KEY_SET_MISMATCH = "key_set_mismatch"
    COUNT_MISMATCH = "count_mismatch"


class NotRealizable(OrderLatticeError):
    """The spectrum is not the order spectrum of any finite abelian group."""

    def __init__(
        self, reason: Reason, detail: str, prime: Optional[int] = None
    ) -> None:
        self.reason = reason
        self.detail = detail
        self.prime = prime
        super().__init__(f"{reason.value}: {detail}")
