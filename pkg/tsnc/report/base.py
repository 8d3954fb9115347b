"""
This module contains the buffer of analysis results of one network.
"""
from dataclasses import dataclass, field
from typing import Dict, List

import pandas as pd

from tsnc.analysis import NetworkResult
from tsnc.model import OutputPortNetwork, induced_graph, link_utilization
from tsnc.utils.errors import ReportError

__all__ = ["ResultSet"]


@dataclass
class ResultSet:
    """The results of several analyses of the same network.

    The network is kept as the snapshot the reports describe: its induced graph, the flow paths
    and the link utilization.

    Args:
        network (OutputPortNetwork): The analysed network.
        results (List[NetworkResult]): One result per method, labels must be unique.
            Defaults to an empty list.
    """
    network: OutputPortNetwork
    results: List[NetworkResult] = field(default_factory=list)

    def __post_init__(self):
        labels = self.labels
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise ReportError(f"The result labels {duplicates} appear more than once.")

    @property
    def name(self) -> str:
        return self.network.name

    @property
    def labels(self) -> List[str]:
        return [result.method for result in self.results]

    def add(self, result: NetworkResult) -> None:
        """Buffers a result, a result with the label of a buffered one replaces it."""
        self.results = [old for old in self.results if old.method != result.method]
        self.results.append(result)

    def check_not_empty(self) -> None:
        """Raises a `ReportError` if no result is buffered."""
        if not self.results:
            raise ReportError(f"No analysis result of network '{self.name}' to report.")

    def flow_delays(self) -> pd.DataFrame:
        """End-to-end delays in seconds, one row per flow and one column per label."""
        return pd.DataFrame(
            {result.method: pd.Series(result.flow_delays, dtype=float)
             for result in self.results},
            index=pd.Index([flow.name for flow in self.network.flows], name="flow"),
            columns=self.labels,
        )

    def server_delays(self) -> pd.DataFrame:
        """Server delays in seconds, one row per analysed server and one column per label."""
        analysed = {name for result in self.results for name in result.server_delays}
        index = [server.name for server in self.network.servers if server.name in analysed]
        return pd.DataFrame(
            {result.method: pd.Series(result.server_delays, dtype=float)
             for result in self.results},
            index=pd.Index(index, name="server"),
            columns=self.labels,
        )

    def execution_times(self) -> pd.Series:
        """Execution time in seconds per label."""
        return pd.Series({result.method: result.execution_time for result in self.results},
                         dtype=float, name="execution time")

    def topology(self) -> Dict[str, List[str]]:
        """Adjacency list of the induced graph."""
        graph = induced_graph(self.network)
        return {name: list(graph.successors(name)) for name in graph.nodes}

    def paths(self) -> Dict[str, List[str]]:
        return {flow.name: list(flow.path) for flow in self.network.flows}

    def utilization(self) -> Dict[str, float]:
        return link_utilization(self.network)

    def __repr__(self):
        return f"ResultSet({self.name!r}, labels={self.labels})"
