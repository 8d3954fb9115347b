"""
This module contains the parameters of generated networks and the assembly of their servers and
flows.
"""
import logging
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from tsnc.formats import write_json
from tsnc.minplus import UNBOUNDED, ConcaveCurve, ConvexCurve
from tsnc.model import (
    AnalysisOptions, Dimension, Flow, OutputPortNetwork, Quantity, Server, parse_quantity
)
from tsnc.utils.errors import DomainError
from tsnc.utils.files import write_atomic
from tsnc.utils.validators import validate_range

__all__ = ["GenParams", "ParameterValue", "build_network", "save_network"]

logger = logging.getLogger(__name__)

ParameterValue = Union[str, float, Quantity, Tuple[Union[str, float, Quantity],
                                                    Union[str, float, Quantity]]]

_DIMENSIONS = {
    "burst": Dimension.DATA,
    "arrival_rate": Dimension.RATE,
    "max_packet_length": Dimension.DATA,
    "latency": Dimension.TIME,
    "service_rate": Dimension.RATE,
    "capacity": Dimension.RATE,
}
_BASE_UNITS = {Dimension.TIME: "s", Dimension.DATA: "b", Dimension.RATE: "bps"}


@dataclass(frozen=True)
class GenParams:
    """Flow and server parameters of a generated network.

    Every parameter is either a fixed value ("10B", `Quantity(10, "B")`, or a bare number in
    b, s or bps) or an inclusive range `(low, high)` of such values, sampled uniformly.

    Args:
        burst (ParameterValue): Burst of the flows. Defaults to "10B".
        arrival_rate (ParameterValue): Arrival rate of the flows. Defaults to "10kbps".
        max_packet_length (ParameterValue): Largest packet of the flows. Defaults to "50B".
        latency (ParameterValue): Latency of the servers. Defaults to "10us".
        service_rate (ParameterValue): Service rate of the servers. Defaults to "1Mbps".
        capacity (ParameterValue, optional): Transmission capacity of the servers.
            Defaults to `None` (unbounded).
        seed (int, optional): Seed of the PCG64 generator. Defaults to `None`.
    """
    burst: ParameterValue = "10B"
    arrival_rate: ParameterValue = "10kbps"
    max_packet_length: ParameterValue = "50B"
    latency: ParameterValue = "10us"
    service_rate: ParameterValue = "1Mbps"
    capacity: Optional[ParameterValue] = None
    seed: Optional[int] = None

    def __post_init__(self):
        for name in _DIMENSIONS:
            if getattr(self, name) is not None:
                self.range(name)
        if self.range("service_rate")[0] == 0.:
            raise DomainError("The service rate must be > 0.")

    def range(self, name: str) -> Tuple[float, float]:
        """Normalized `(low, high)` of a parameter, `low == high` for a fixed value."""
        value = getattr(self, name)
        dimension = _DIMENSIONS[name]
        if isinstance(value, tuple):
            if len(value) != 2:
                raise DomainError(f"The range of '{name}' must be a pair and not '{value}'.")
            low, high = (parse_quantity(end, dimension, _BASE_UNITS[dimension]) for end in value)
            return validate_range(low, high, name)
        value = parse_quantity(value, dimension, _BASE_UNITS[dimension])
        return value, value

    @property
    def is_fixed(self) -> bool:
        return all(low == high for low, high in
                   (self.range(name) for name in _DIMENSIONS if getattr(self, name) is not None))

    def sample(self, name: str, rng: np.random.Generator) -> float:
        """A value of the parameter, drawn uniformly from its range."""
        low, high = self.range(name)
        if low == high:
            return low
        return float(rng.uniform(low, high))

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def build_network(
        name: str,
        server_names: Sequence[str],
        paths: Sequence[Sequence[str]],
        params: GenParams,
        options: Optional[AnalysisOptions] = None,
        rate_factors: Optional[Dict[str, float]] = None,
        rng: Optional[np.random.Generator] = None
) -> OutputPortNetwork:
    """Creates servers and flows from names and paths, drawing parameters from `params`.

    Server parameters are drawn first (in server order), then flow parameters (in path order).

    Args:
        name (str): Name of the network.
        server_names (Sequence[str]): The servers.
        paths (Sequence[Sequence[str]]): One path per flow; flow `i` is named "f<i>".
        params (GenParams): The parameters.
        options (AnalysisOptions, optional): Analysis options. Defaults to FIFO without shaping.
        rate_factors (Dict[str, float], optional): Multipliers of the service rate of some
            servers. Defaults to `None`.
        rng (numpy.random.Generator, optional): Generator to draw from, a fresh one seeded with
            `params.seed` by default.

    Returns:
        (OutputPortNetwork): The network.
    """
    rng = params.rng() if rng is None else rng
    rate_factors = rate_factors or {}
    servers: List[Server] = []
    for server_name in server_names:
        latency = params.sample("latency", rng)
        rate = params.sample("service_rate", rng) * rate_factors.get(server_name, 1.)
        capacity = UNBOUNDED if params.capacity is None else params.sample("capacity", rng)
        servers.append(Server(name=server_name, service=ConvexCurve.rate_latency(rate, latency),
                              capacity=capacity))
    flows: List[Flow] = []
    for index, path in enumerate(paths):
        burst = params.sample("burst", rng)
        rate = params.sample("arrival_rate", rng)
        flows.append(Flow(name=f"f{index}", path=tuple(path),
                          arrival=ConcaveCurve.token_bucket(rate=rate, burst=burst),
                          max_packet_length=params.sample("max_packet_length", rng)))
    network = OutputPortNetwork(name=name, options=options or AnalysisOptions(),
                                servers=tuple(servers), flows=tuple(flows))
    logger.info(f"Generated network '{name}' with {len(servers)} servers and {len(flows)} flows.")
    return network


def save_network(network: OutputPortNetwork, path: Union[str, os.PathLike]) -> None:
    """Writes a generated network as a JSON document."""
    write_atomic(path, write_json(network))
