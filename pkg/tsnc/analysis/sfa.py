"""
This module contains the separate flow analysis (SFA).
"""
import logging
from typing import Dict, Optional

from tqdm import tqdm

from tsnc.analysis.aggregate import analysed_servers, source_arrival
from tsnc.analysis.base import BaseAnalysis
from tsnc.analysis.results import NetworkResult
from tsnc.analysis.tfa import TotalFlowAnalysis
from tsnc.minplus import (
    UNBOUNDED, ConcaveCurve, add_concave, convolve_service, h_dev, residual_service
)
from tsnc.model import AnalysisOptions, OutputPortNetwork

__all__ = ["SeparateFlowAnalysis", "analyze_sfa"]

logger = logging.getLogger(__name__)


class SeparateFlowAnalysis(BaseAnalysis):
    """Separate flow analysis.

    A total flow analysis first bounds the arrival curves of all flows at every server. Then,
    for each flow, every server of its path offers the left-over service of blind multiplexing
    once the other flows are served, these residual services are convolved along the path and
    the end-to-end delay is the horizontal deviation between the source arrival curve of the
    flow and the path service.

    The server delays of the result are those of the total flow analysis.

    Args:
        options (AnalysisOptions, optional): Options overriding those of the network.
            Defaults to `None`.
        **kwargs: Further arguments of `BaseAnalysis`.
    """

    method = "SFA"

    def __init__(self, options: Optional[AnalysisOptions] = None, **kwargs):
        super().__init__(options, **kwargs)

    def _analyze(self, net: OutputPortNetwork, options: AnalysisOptions) -> NetworkResult:
        tfa = TotalFlowAnalysis(options, max_iterations=self.max_iterations,
                                explosion_factor=self.explosion_factor, rel_tol=self.rel_tol,
                                verbose=self.verbose)
        states = tfa.states(net, options)
        self.server_states = states
        flow_delays: Dict[str, float] = {}
        for flow in tqdm(net.flows, desc="flows", disable=not self.verbose):
            service = UNBOUNDED
            for name in flow.path:
                cross = ConcaveCurve.zero()
                for other, arrival in states[name].arrivals.items():
                    if other != flow.name:
                        cross = add_concave(cross, arrival)
                service = convolve_service(
                    service, residual_service(net.server(name).service, cross))
            flow_delays[flow.name] = h_dev(source_arrival(flow, options), service)
            logger.debug(f"{flow.name}: end-to-end service {service}.")
        return NetworkResult(
            method=self.label,
            server_delays={name: states[name].delay for name in analysed_servers(net)},
            flow_delays=flow_delays,
            server_backlogs={name: states[name].backlog for name in analysed_servers(net)},
        )


def analyze_sfa(
        net: OutputPortNetwork,
        options: Optional[AnalysisOptions] = None,
        **kwargs
) -> NetworkResult:
    """Runs `SeparateFlowAnalysis` on `net` with `options` (the network's own by default)."""
    return SeparateFlowAnalysis(options, **kwargs).analyze(net)
