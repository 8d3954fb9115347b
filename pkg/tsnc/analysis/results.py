"""
This module contains the outcome of an analysis: the state of every analysed server and the
delay bounds of a network.
"""
from dataclasses import dataclass, field
from typing import Dict

from tsnc.minplus import ConcaveCurve

__all__ = ["ServerState", "NetworkResult"]


@dataclass(frozen=True)
class ServerState:
    """Bounds at one server.

    Args:
        arrivals (Dict[str, ConcaveCurve]): Arrival curve of every flow entering the server,
            before input shaping.
        aggregate (ConcaveCurve): Arrival curve of the aggregate the bounds are computed from.
        delay (float): Delay bound of the aggregate in seconds.
        backlog (float): Backlog bound in bits.
    """
    arrivals: Dict[str, ConcaveCurve]
    aggregate: ConcaveCurve
    delay: float
    backlog: float


@dataclass
class NetworkResult:
    """Delay bounds of one analysis of a network, all durations in seconds.

    Args:
        method (str): Label of the analysis, e.g. "native_TFA".
        server_delays (Dict[str, float]): Delay bound per analysed server.
        flow_delays (Dict[str, float]): End-to-end delay bound per flow.
        execution_time (float): Wall-clock duration of the analysis.
        server_backlogs (Dict[str, float]): Backlog bound in bits per analysed server.
    """
    method: str
    server_delays: Dict[str, float]
    flow_delays: Dict[str, float]
    execution_time: float = 0.
    server_backlogs: Dict[str, float] = field(default_factory=dict)

    @property
    def units(self) -> Dict[str, str]:
        return {"flow_delay": "s", "server_delay": "s", "execution_time": "s", "backlog": "b"}

    def __repr__(self):
        return (f"NetworkResult({self.method}: {len(self.flow_delays)} flows, "
                f"{len(self.server_delays)} servers)")
