"""
This module contains the exceptions raised by tsnc.
"""
from typing import Optional, Sequence

__all__ = [
    "NetworkCalculusError",
    "DomainError",
    "UnstableError",
    "DivergenceError",
    "NetworkError",
    "FormatError",
    "UnitError",
    "ReportError",
]


class NetworkCalculusError(Exception):
    """Base class of all errors raised by tsnc."""


class DomainError(NetworkCalculusError, ValueError):
    """A value lies outside the domain of an operation (e.g. a negative duration)."""


class UnstableError(NetworkCalculusError):
    """The long-run arrival rate reaches the long-run service rate, the bound is infinite.

    Args:
        message (str): Description of the instability.
        servers (Sequence[str], optional): Names of the unstable servers. Defaults to `None`.
    """

    def __init__(self, message: str, servers: Optional[Sequence[str]] = None):
        super().__init__(message)
        self.servers = list(servers) if servers is not None else []


class DivergenceError(NetworkCalculusError):
    """The fixed-point iteration over a cyclic network found no finite bound.

    Args:
        message (str): Description of the divergence.
        cycle (Sequence[str], optional): Servers forming a cycle of the induced graph.
    """

    def __init__(self, message: str, cycle: Optional[Sequence[str]] = None):
        super().__init__(message)
        self.cycle = list(cycle) if cycle is not None else []


class NetworkError(NetworkCalculusError, ValueError):
    """A network description is inconsistent (unknown server, missing link, ...)."""


class FormatError(NetworkCalculusError, ValueError):
    """A network or report document cannot be parsed."""


class UnitError(FormatError):
    """A quantity has an unknown unit, a unit of the wrong dimension, or no unit in scope."""


class ReportError(NetworkCalculusError, ValueError):
    """A set of analysis results cannot be reported (duplicate labels, no result)."""
