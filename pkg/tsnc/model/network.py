"""
This module contains the output-port network: servers (output ports), flows with their paths,
and the analysis options.
"""
import dataclasses
import enum
import functools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from tsnc.minplus import ConcaveCurve, ConvexCurve, Unbounded, UNBOUNDED
from tsnc.utils.errors import NetworkError
from tsnc.utils.validators import validate_non_negative, validate_positive

__all__ = [
    "DEFAULT_CEIL_PRECISION",
    "Multiplexing",
    "AnalysisOptions",
    "Server",
    "Flow",
    "OutputPortNetwork",
]

DEFAULT_CEIL_PRECISION = 1e-12  # seconds


class Multiplexing(str, enum.Enum):
    FIFO = "FIFO"
    ARBITRARY = "ARBITRARY"


@dataclass(frozen=True)
class AnalysisOptions:
    """Options of an analysis.

    Args:
        multiplexing (Multiplexing): FIFO or arbitrary multiplexing at every server.
            Defaults to FIFO.
        input_shaping (bool): Bound the input of a server by the shapers of its upstream links.
            Defaults to `False`.
        packetizer (bool): Account for store-and-forward packetization. Defaults to `False`.
        ceil_precision (float, optional): Quantum in seconds to which per-server delays are
            rounded up during fixed-point iterations. Defaults to `None` (no rounding).
    """
    multiplexing: Multiplexing = Multiplexing.FIFO
    input_shaping: bool = False
    packetizer: bool = False
    ceil_precision: Optional[float] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "multiplexing", Multiplexing(self.multiplexing))
        except ValueError:
            raise NetworkError(f"The multiplexing must be either 'FIFO' or 'ARBITRARY' and not "
                               f"'{self.multiplexing}'.") from None
        if self.ceil_precision is not None:
            object.__setattr__(self, "ceil_precision",
                               validate_positive(self.ceil_precision, "ceil_precision"))

    def replace(self, **changes) -> "AnalysisOptions":
        """Copy of the options with some fields overridden."""
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class Server:
    """An output port offering a service curve.

    Args:
        name (str): Unique name within the network, e.g. "s0-o0".
        service (ConvexCurve): Service curve of the port.
        capacity (float or UNBOUNDED): Transmission capacity of the attached link in bits per
            second, used for input shaping downstream. Defaults to `UNBOUNDED`.
    """
    name: str
    service: ConvexCurve
    capacity: Union[float, Unbounded] = UNBOUNDED

    def __post_init__(self):
        if self.capacity is not UNBOUNDED:
            object.__setattr__(self, "capacity", validate_positive(self.capacity, "capacity"))


@dataclass(frozen=True)
class Flow:
    """A unicast flow.

    Args:
        name (str): Unique name within the network.
        path (Tuple[str, ...]): Names of the servers visited, in order, without repetition.
        arrival (ConcaveCurve): Arrival curve at the source.
        max_packet_length (float): Largest packet in bits. Defaults to 0.
        min_packet_length (float): Smallest packet in bits. Defaults to 0.
    """
    name: str
    path: Tuple[str, ...]
    arrival: ConcaveCurve
    max_packet_length: float = 0.
    min_packet_length: float = 0.

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))
        if not self.path:
            raise NetworkError(f"The path of flow '{self.name}' is empty.")
        if len(set(self.path)) != len(self.path):
            raise NetworkError(f"The path of flow '{self.name}' visits a server twice: "
                               f"{list(self.path)}.")
        max_length = validate_non_negative(self.max_packet_length, "max_packet_length")
        min_length = validate_non_negative(self.min_packet_length, "min_packet_length")
        if max_length < min_length:
            raise NetworkError(f"Flow '{self.name}' has max_packet_length {max_length} below "
                               f"min_packet_length {min_length}.")
        object.__setattr__(self, "max_packet_length", max_length)
        object.__setattr__(self, "min_packet_length", min_length)


@dataclass(frozen=True)
class OutputPortNetwork:
    """A network reduced to the output ports traversed by flows.

    Args:
        name (str): Name of the network.
        options (AnalysisOptions): Analysis options carried by the network description.
        servers (Tuple[Server, ...]): The servers, with unique names.
        flows (Tuple[Flow, ...]): The flows; every path entry names an existing server.
    """
    name: str
    options: AnalysisOptions = field(default_factory=AnalysisOptions)
    servers: Tuple[Server, ...] = ()
    flows: Tuple[Flow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "servers", tuple(self.servers))
        object.__setattr__(self, "flows", tuple(self.flows))
        server_names = [server.name for server in self.servers]
        if len(set(server_names)) != len(server_names):
            raise NetworkError(f"Server names are not unique in network '{self.name}'.")
        flow_names = [flow.name for flow in self.flows]
        if len(set(flow_names)) != len(flow_names):
            raise NetworkError(f"Flow names are not unique in network '{self.name}'.")
        known = set(server_names)
        for flow in self.flows:
            unknown = [name for name in flow.path if name not in known]
            if unknown:
                raise NetworkError(f"The path of flow '{flow.name}' references undefined "
                                   f"servers {unknown}.")

    @functools.cached_property
    def _servers_by_name(self) -> Dict[str, Server]:
        return {server.name: server for server in self.servers}

    def server(self, name: str) -> Server:
        """The server called `name`."""
        try:
            return self._servers_by_name[name]
        except KeyError:
            raise NetworkError(f"Unknown server '{name}'.") from None

    def flows_through(self, server_name: str) -> List[Flow]:
        """Flows whose path contains `server_name`, in network order."""
        return [flow for flow in self.flows if server_name in flow.path]

    def with_options(self, options: AnalysisOptions) -> "OutputPortNetwork":
        """Copy of the network with other analysis options."""
        return dataclasses.replace(self, options=options)
