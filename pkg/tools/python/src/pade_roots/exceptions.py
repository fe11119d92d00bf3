"""Exception hierarchy shared by the pade_roots modules.

Every error raised deliberately by the library derives from
:class:`PadeRootsError`, so callers (and the command line front end) can catch a
single type. Each subclass also inherits from the closest built-in exception so
that generic handlers such as ``except ValueError`` keep working.
"""


class PadeRootsError(Exception):
    """Base class for all errors raised by pade_roots."""


class DomainError(PadeRootsError, ValueError):
    """An input lies outside the domain of the requested operation."""


class UnsupportedError(DomainError):
    """The requested method is not defined for the given parameters."""


class SeriesDivisionError(PadeRootsError, ZeroDivisionError):
    """A power series cannot be divided by another one."""


class PoleError(PadeRootsError, ZeroDivisionError):
    """A rational approximant was evaluated at (or next to) a pole."""


class SingularSystemError(PadeRootsError, ArithmeticError):
    """An exact linear system has no unique solution.

    Args:
        rank: Number of pivots found before elimination broke down.
        size: Number of unknowns.

    """

    def __init__(self, rank: int, size: int, message: str | None = None):
        self.rank = rank
        self.size = size
        super().__init__(message or f"singular system: rank {rank} < {size}")


class DegeneratePadeError(SingularSystemError):
    """The Padé linear system is singular.

    Args:
        p: Numerator degree requested.
        q: Denominator degree requested.
        rank: Rank of the denominator system that was found.

    """

    def __init__(self, p: int, q: int, rank: int):
        self.p = p
        self.q = q
        super().__init__(
            rank,
            q,
            f"degenerate [{p},{q}] Padé approximant: denominator system has rank "
            f"{rank} < {q}, the series is deficient at order {p + rank + 1}"
        )


class ConvergenceError(PadeRootsError, RuntimeError):
    """An iterative method failed to reach its tolerance."""


class BracketError(PadeRootsError, RuntimeError):
    """A root bracket does not enclose a sign change."""


class ConfigurationError(PadeRootsError, KeyError):
    """A settings file contains unknown sections or keys."""

    def __str__(self) -> str:
        # KeyError would otherwise repr() the message
        return str(self.args[0]) if self.args else ""
