"""
This module contains the views of an output-port network as a graph: the directed graph induced
by the flow paths, the link utilization of every server and the stability check.
"""
from typing import Dict, List

import networkx as nx

from tsnc.model.network import OutputPortNetwork

__all__ = ["induced_graph", "link_utilization", "check_stability", "is_feed_forward"]


def induced_graph(net: OutputPortNetwork) -> nx.DiGraph:
    """Directed graph over the server names with an edge `A -> B` iff some flow goes from `A`
    straight to `B`.

    Every server of the network is a node, also those without flows. Each edge carries the
    names of the flows using it in the attribute ``flows``.
    """
    graph = nx.DiGraph(name=net.name)
    graph.add_nodes_from(server.name for server in net.servers)
    for flow in net.flows:
        for source, target in zip(flow.path[:-1], flow.path[1:]):
            if graph.has_edge(source, target):
                graph.edges[source, target]["flows"].append(flow.name)
            else:
                graph.add_edge(source, target, flows=[flow.name])
    return graph


def is_feed_forward(net: OutputPortNetwork) -> bool:
    """`True` if the induced graph has no cyclic dependency."""
    return nx.is_directed_acyclic_graph(induced_graph(net))


def link_utilization(net: OutputPortNetwork) -> Dict[str, float]:
    """Aggregate long-run arrival rate at each server divided by its long-run service rate.

    Args:
        net (OutputPortNetwork): The network.

    Returns:
        (Dict[str, float]): Utilization per server name, 0 for servers without flows.
    """
    utilization = {}
    for server in net.servers:
        arrival_rate = sum(flow.arrival.rate for flow in net.flows_through(server.name))
        utilization[server.name] = arrival_rate / server.service.rate
    return utilization


def check_stability(net: OutputPortNetwork) -> List[str]:
    """Servers whose utilization is not strictly below one, an empty list if the network is
    stable."""
    return [name for name, ratio in link_utilization(net).items() if ratio >= 1.]
