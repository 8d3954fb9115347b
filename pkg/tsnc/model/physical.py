"""
This module contains the physical network: stations and switches connected by links between
their ports, with flows routed node by node from a source to one or more targets.

Service parameters are inherited: a value missing on a link is taken from the node the link
leaves, then from the network defaults.
"""
import enum
import functools
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from tsnc.minplus import ConcaveCurve, ConvexCurve, RateLatency, Unbounded, UNBOUNDED
from tsnc.model.network import AnalysisOptions
from tsnc.utils.errors import NetworkError
from tsnc.utils.validators import validate_non_negative, validate_positive

__all__ = [
    "NodeKind",
    "ServiceParameters",
    "Node",
    "Link",
    "PhysicalFlow",
    "PhysicalNetwork",
]


class NodeKind(str, enum.Enum):
    STATION = "station"
    SWITCH = "switch"


@dataclass(frozen=True)
class ServiceParameters:
    """Service parameters of an output port, each of them optional.

    Latencies and rates are paired by index, every pair is one rate-latency curve and the
    service curve is their maximum.

    Args:
        latencies (Tuple[float, ...], optional): Latencies in seconds.
        rates (Tuple[float, ...], optional): Service rates in bits per second.
        capacity (float, optional): Transmission capacity of the link in bits per second.
    """
    latencies: Optional[Tuple[float, ...]] = None
    rates: Optional[Tuple[float, ...]] = None
    capacity: Optional[float] = None

    def __post_init__(self):
        if self.latencies is not None:
            object.__setattr__(self, "latencies", tuple(
                validate_non_negative(latency, "latency") for latency in self.latencies))
        if self.rates is not None:
            object.__setattr__(self, "rates", tuple(
                validate_positive(rate, "rate") for rate in self.rates))
        if self.capacity is not None:
            object.__setattr__(self, "capacity", validate_positive(self.capacity, "capacity"))

    @property
    def is_empty(self) -> bool:
        return self.latencies is None and self.rates is None and self.capacity is None

    def inherit(self, parent: "ServiceParameters") -> "ServiceParameters":
        """Fills every missing field from `parent`."""
        return ServiceParameters(
            latencies=self.latencies if self.latencies is not None else parent.latencies,
            rates=self.rates if self.rates is not None else parent.rates,
            capacity=self.capacity if self.capacity is not None else parent.capacity,
        )

    def service_curve(self) -> Optional[ConvexCurve]:
        """The service curve, or `None` when latencies or rates are missing (dummy port)."""
        if not self.latencies or not self.rates:
            return None
        if len(self.latencies) != len(self.rates):
            raise NetworkError(f"{len(self.latencies)} service latencies cannot be paired with "
                               f"{len(self.rates)} service rates.")
        return ConvexCurve(RateLatency(rate=rate, latency=latency)
                           for latency, rate in zip(self.latencies, self.rates))

    def transmission_capacity(self) -> Union[float, Unbounded]:
        return UNBOUNDED if self.capacity is None else self.capacity


@dataclass(frozen=True)
class Node:
    """A station or a switch; its parameters are the defaults of the links leaving it."""
    name: str
    kind: NodeKind = NodeKind.SWITCH
    parameters: ServiceParameters = field(default_factory=ServiceParameters)

    def __post_init__(self):
        object.__setattr__(self, "kind", NodeKind(self.kind))


@dataclass(frozen=True)
class Link:
    """A directed link from the output port `source_port` of `source` to the input port
    `target_port` of `target`."""
    name: str
    source: str
    target: str
    source_port: str
    target_port: str
    parameters: ServiceParameters = field(default_factory=ServiceParameters)


@dataclass(frozen=True)
class PhysicalFlow:
    """A flow leaving `source` towards one or more targets.

    Args:
        name (str): Unique name of the flow.
        source (str): The emitting node.
        targets (Tuple[Tuple[str, ...], ...]): One node sequence per target, starting with the
            node after `source`. Several targets make a multicast flow.
        arrival (ConcaveCurve): Arrival curve at the source.
        max_packet_length (float, optional): Largest packet in bits, network default if `None`.
        min_packet_length (float, optional): Smallest packet in bits, network default if `None`.
    """
    name: str
    source: str
    targets: Tuple[Tuple[str, ...], ...]
    arrival: ConcaveCurve
    max_packet_length: Optional[float] = None
    min_packet_length: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(tuple(target) for target in self.targets))
        if not self.targets or any(not target for target in self.targets):
            raise NetworkError(f"Flow '{self.name}' needs at least one non-empty target path.")
        for name in ("max_packet_length", "min_packet_length"):
            if getattr(self, name) is not None:
                object.__setattr__(self, name, validate_non_negative(getattr(self, name), name))

    def node_paths(self) -> Tuple[Tuple[str, ...], ...]:
        """Full node sequences, source included, one per target."""
        return tuple((self.source,) + target for target in self.targets)


@dataclass(frozen=True)
class PhysicalNetwork:
    """Stations, switches, links and flows with network-wide defaults.

    Args:
        name (str): Name of the network.
        options (AnalysisOptions): Analysis options.
        nodes (Tuple[Node, ...]): Stations and switches with unique names.
        links (Tuple[Link, ...]): Links with unique names. A port may feed several links, but
            only one per target node.
        flows (Tuple[PhysicalFlow, ...]): Flows whose consecutive nodes are all linked.
        defaults (ServiceParameters): Network-level service parameters.
        max_packet_length (float, optional): Default largest packet in bits.
        min_packet_length (float, optional): Default smallest packet in bits.
    """
    name: str
    options: AnalysisOptions = field(default_factory=AnalysisOptions)
    nodes: Tuple[Node, ...] = ()
    links: Tuple[Link, ...] = ()
    flows: Tuple[PhysicalFlow, ...] = ()
    defaults: ServiceParameters = field(default_factory=ServiceParameters)
    max_packet_length: Optional[float] = None
    min_packet_length: Optional[float] = None

    def __post_init__(self):
        for name in ("nodes", "links", "flows"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for name in ("max_packet_length", "min_packet_length"):
            if getattr(self, name) is not None:
                object.__setattr__(self, name, validate_non_negative(getattr(self, name), name))
        _check_unique([node.name for node in self.nodes], "node", self.name)
        _check_unique([link.name for link in self.links], "link", self.name)
        _check_unique([flow.name for flow in self.flows], "flow", self.name)
        nodes = {node.name for node in self.nodes}
        ports = set()
        for link in self.links:
            for endpoint in (link.source, link.target):
                if endpoint not in nodes:
                    raise NetworkError(f"Link '{link.name}' references the undefined node "
                                       f"'{endpoint}'.")
            port = (link.source, link.source_port, link.target)
            if port in ports:
                raise NetworkError(f"Port '{link.source_port}' of node '{link.source}' is "
                                   f"linked twice to node '{link.target}'.")
            ports.add(port)
        for flow in self.flows:
            if flow.source not in nodes:
                raise NetworkError(f"Flow '{flow.name}' starts at the undefined node "
                                   f"'{flow.source}'.")
            for path in flow.node_paths():
                if len(set(path)) != len(path):
                    raise NetworkError(f"A path of flow '{flow.name}' visits a node twice: "
                                       f"{list(path)}.")
                for source, target in zip(path[:-1], path[1:]):
                    self.link_between(source, target, flow_name=flow.name)

    @functools.cached_property
    def _nodes_by_name(self) -> Dict[str, Node]:
        return {node.name: node for node in self.nodes}

    def node(self, name: str) -> Node:
        try:
            return self._nodes_by_name[name]
        except KeyError:
            raise NetworkError(f"Unknown node '{name}'.") from None

    def link_between(self, source: str, target: str, flow_name: Optional[str] = None) -> Link:
        """First link (in definition order) from `source` to `target`."""
        for link in self.links:
            if link.source == source and link.target == target:
                return link
        owner = f" on the path of flow '{flow_name}'" if flow_name is not None else ""
        raise NetworkError(f"No link connects node '{source}' to node '{target}'{owner}.")

    def resolve_parameters(self, link: Link) -> ServiceParameters:
        """Service parameters of `link` after inheritance link -> node -> network."""
        return link.parameters.inherit(self.node(link.source).parameters).inherit(self.defaults)

    def packet_lengths(self, flow: PhysicalFlow) -> Tuple[float, float]:
        """(max, min) packet lengths of `flow` in bits after inheritance, 0 when undefined."""
        max_length = flow.max_packet_length
        if max_length is None:
            max_length = self.max_packet_length if self.max_packet_length is not None else 0.
        min_length = flow.min_packet_length
        if min_length is None:
            min_length = self.min_packet_length if self.min_packet_length is not None else 0.
        return max_length, min_length


def _check_unique(names, kind: str, network_name: str) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise NetworkError(f"The {kind} name '{name}' is used twice in network "
                               f"'{network_name}'.")
        seen.add(name)
