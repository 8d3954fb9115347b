"""
This module contains the conversion between physical networks and output-port networks.
"""
import logging
import warnings
from typing import Dict, List

from tsnc.minplus import UNBOUNDED
from tsnc.model.graph import induced_graph
from tsnc.model.network import Flow, OutputPortNetwork, Server
from tsnc.model.physical import (
    Link, Node, NodeKind, PhysicalFlow, PhysicalNetwork, ServiceParameters
)
from tsnc.utils.errors import NetworkError

__all__ = ["server_name", "physical_to_output_port", "output_port_to_physical"]

logger = logging.getLogger(__name__)

OUTPUT_PORT = "o0"


def _escape(name: str) -> str:
    return name.replace("-", "--")


def server_name(node: str, port: str) -> str:
    """Name of the server modelling output port `port` of `node`, e.g. "s0-o0".

    Hyphens inside the node or port name are doubled so that distinct ports never collide.
    """
    return f"{_escape(node)}-{_escape(port)}"


def physical_to_output_port(phys: PhysicalNetwork) -> OutputPortNetwork:
    """Keeps the output ports traversed by flows as servers.

    An output port becomes a server if its link resolves service parameters through the
    inheritance link -> node -> network. Links without service parameters at every level are
    dummies and their ports are skipped. A flow with several targets is split into unicast flows
    named "<flow>_<k>" (k = 0, 1, ... in target order) sharing the source arrival curve.

    Args:
        phys (PhysicalNetwork): The physical network.

    Returns:
        (OutputPortNetwork): The output-port network with the options of `phys`.
    """
    servers: Dict[str, Server] = {}
    flows: List[Flow] = []
    for physical_flow in phys.flows:
        max_length, min_length = phys.packet_lengths(physical_flow)
        node_paths = physical_flow.node_paths()
        for index, node_path in enumerate(node_paths):
            name = physical_flow.name if len(node_paths) == 1 else f"{physical_flow.name}_{index}"
            path = []
            for hop, (source, target) in enumerate(zip(node_path[:-1], node_path[1:])):
                link = phys.link_between(source, target, flow_name=physical_flow.name)
                server = _port_server(phys, link)
                if server is None:
                    if hop == 0:
                        logger.debug(f"Source link '{link.name}' of flow '{name}' is a dummy.")
                    else:
                        warnings.warn(f"Link '{link.name}' has no service parameters, the "
                                      f"output port '{link.source_port}' of node "
                                      f"'{link.source}' is skipped for flow '{name}'.",
                                      UserWarning)
                    continue
                known = servers.setdefault(server.name, server)
                if known != server:
                    raise NetworkError(f"The links leaving port '{link.source_port}' of node "
                                       f"'{link.source}' resolve different service parameters.")
                path.append(server.name)
            if not path:
                warnings.warn(f"Flow '{name}' crosses no output port with service parameters "
                              f"and is dropped.", UserWarning)
                continue
            flows.append(Flow(name=name, path=tuple(path), arrival=physical_flow.arrival,
                              max_packet_length=max_length, min_packet_length=min_length))
    logger.debug(f"Network '{phys.name}' has {len(servers)} output ports with service.")
    return OutputPortNetwork(name=phys.name, options=phys.options,
                             servers=tuple(servers.values()), flows=tuple(flows))


def _port_server(phys: PhysicalNetwork, link: Link):
    parameters = phys.resolve_parameters(link)
    service = parameters.service_curve()
    if service is None:
        return None
    return Server(name=server_name(link.source, link.source_port), service=service,
                  capacity=parameters.transmission_capacity())


def output_port_to_physical(opnet: OutputPortNetwork) -> PhysicalNetwork:
    """Builds a physical network in which every server is a switch with a single output port.

    The service of a server is carried by its switch (port "o0"), its capacity by the links
    leaving the switch. Every flow gets a source station "src-<flow>" with a dummy link to its
    first server, every last hop a sink station "sink-<server>".

    Args:
        opnet (OutputPortNetwork): The output-port network.

    Returns:
        (PhysicalNetwork): A physical network that converts back to the same servers (up to
            renaming), paths and curves.
    """
    nodes = [
        Node(name=server.name, kind=NodeKind.SWITCH, parameters=ServiceParameters(
            latencies=tuple(piece.latency for piece in server.service.pieces),
            rates=tuple(piece.rate for piece in server.service.pieces)))
        for server in opnet.servers
    ]
    input_ports: Dict[str, int] = {}
    links: List[Link] = []

    def connect(source: str, target: str, capacity) -> None:
        port = input_ports.get(target, 0)
        input_ports[target] = port + 1
        links.append(Link(
            name=f"lk:{source}-{target}", source=source, target=target,
            source_port=OUTPUT_PORT, target_port=f"i{port}",
            parameters=ServiceParameters(capacity=None if capacity is UNBOUNDED else capacity)))

    for flow in opnet.flows:
        source = f"src-{flow.name}"
        nodes.append(Node(name=source, kind=NodeKind.STATION))
        connect(source, flow.path[0], UNBOUNDED)
    for source, target in induced_graph(opnet).edges:
        connect(source, target, opnet.server(source).capacity)
    sinks: List[str] = []
    for flow in opnet.flows:
        if flow.path[-1] not in sinks:
            sinks.append(flow.path[-1])
    for last_hop in sinks:
        sink = f"sink-{last_hop}"
        nodes.append(Node(name=sink, kind=NodeKind.STATION))
        connect(last_hop, sink, opnet.server(last_hop).capacity)

    physical_flows: List[PhysicalFlow] = [
        PhysicalFlow(name=flow.name, source=f"src-{flow.name}",
                     targets=(flow.path + (f"sink-{flow.path[-1]}",),),
                     arrival=flow.arrival, max_packet_length=flow.max_packet_length,
                     min_packet_length=flow.min_packet_length)
        for flow in opnet.flows
    ]
    return PhysicalNetwork(name=opnet.name, options=opnet.options, nodes=tuple(nodes),
                           links=tuple(links), flows=tuple(physical_flows))

