"""
This module contains the total flow analysis (TFA).
"""
import logging
from typing import Dict, Optional

import networkx as nx

from tsnc.analysis.aggregate import analysed_servers, server_state
from tsnc.analysis.base import BaseAnalysis
from tsnc.analysis.fixed_point import fixed_point
from tsnc.analysis.results import NetworkResult, ServerState
from tsnc.model import AnalysisOptions, OutputPortNetwork, induced_graph

__all__ = ["TotalFlowAnalysis", "analyze_tfa"]

logger = logging.getLogger(__name__)


class TotalFlowAnalysis(BaseAnalysis):
    """Total flow analysis.

    Every server bounds the delay of its whole aggregate: the horizontal deviation under FIFO
    multiplexing, the time to clear the backlog under arbitrary multiplexing. The arrival curve
    of a flow at a server is its source curve shifted by the delays of the servers upstream, and
    the end-to-end delay of a flow is the sum of the delays of its servers.

    Feed-forward networks are analysed in one pass in topological order; networks with cyclic
    dependencies by `fixed_point`.

    Args:
        options (AnalysisOptions, optional): Options overriding those of the network.
            Defaults to `None`.
        **kwargs: Further arguments of `BaseAnalysis`.

    Examples:
        >>> result = TotalFlowAnalysis().analyze(network)
        >>> result.flow_delays["f0"]
    """

    method = "TFA"

    def __init__(self, options: Optional[AnalysisOptions] = None, **kwargs):
        super().__init__(options, **kwargs)

    def states(self, net: OutputPortNetwork, options: AnalysisOptions) -> Dict[str, ServerState]:
        """State of every server crossed by a flow."""
        graph = induced_graph(net)
        if not nx.is_directed_acyclic_graph(graph):
            logger.info(f"Network '{net.name}' has cyclic dependencies, iterating to a fixed "
                        f"point.")
            return fixed_point(net, options, max_iterations=self.max_iterations,
                               explosion_factor=self.explosion_factor, rel_tol=self.rel_tol,
                               verbose=self.verbose)
        crossed = set(analysed_servers(net))
        states: Dict[str, ServerState] = {}
        delays: Dict[str, float] = {}
        for name in nx.topological_sort(graph):
            if name not in crossed:
                continue
            states[name] = server_state(net, name, options, delays)
            delays[name] = states[name].delay
        return states

    def _analyze(self, net: OutputPortNetwork, options: AnalysisOptions) -> NetworkResult:
        states = self.states(net, options)
        self.server_states = states
        return NetworkResult(
            method=self.label,
            server_delays={name: states[name].delay for name in analysed_servers(net)},
            flow_delays={flow.name: sum(states[name].delay for name in flow.path)
                         for flow in net.flows},
            server_backlogs={name: states[name].backlog for name in analysed_servers(net)},
        )


def analyze_tfa(
        net: OutputPortNetwork,
        options: Optional[AnalysisOptions] = None,
        **kwargs
) -> NetworkResult:
    """Runs `TotalFlowAnalysis` on `net` with `options` (the network's own by default)."""
    return TotalFlowAnalysis(options, **kwargs).analyze(net)
