class ZeroDivGraphError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ZeroDivGraphError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(ZeroDivGraphError):
    """The brute-force engine was asked to materialize a graph above its cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"n={n} exceeds the oracle cap of {cap}; "
            "use the theorem engine or raise the cap (ZDG_ORACLE_MAX_N)"
        )
        self.n = n
        self.cap = cap
