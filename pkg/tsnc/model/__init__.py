"""
This module gathers the network models: the output-port network analysed by `tsnc.analysis`,
the physical network of stations, switches and links, their conversion and the unit system.
"""
from .units import Dimension, Quantity, parse_quantity, unit_dimension, to_unit, format_quantity
from .network import (
    DEFAULT_CEIL_PRECISION, Multiplexing, AnalysisOptions, Server, Flow, OutputPortNetwork
)
from .physical import NodeKind, ServiceParameters, Node, Link, PhysicalFlow, PhysicalNetwork
from .graph import induced_graph, is_feed_forward, link_utilization, check_stability
from .conversion import server_name, physical_to_output_port, output_port_to_physical

__all__ = [
    "Dimension",
    "Quantity",
    "parse_quantity",
    "unit_dimension",
    "to_unit",
    "format_quantity",
    "DEFAULT_CEIL_PRECISION",
    "Multiplexing",
    "AnalysisOptions",
    "Server",
    "Flow",
    "OutputPortNetwork",
    "NodeKind",
    "ServiceParameters",
    "Node",
    "Link",
    "PhysicalFlow",
    "PhysicalNetwork",
    "induced_graph",
    "is_feed_forward",
    "link_utilization",
    "check_stability",
    "server_name",
    "physical_to_output_port",
    "output_port_to_physical",
]
