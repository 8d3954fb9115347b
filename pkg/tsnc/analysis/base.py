"""
This module contains the base analysis.
"""
import abc
import logging
import time
from typing import Dict, Optional

from tsnc.analysis.aggregate import check_network
from tsnc.analysis.fixed_point import (
    DEFAULT_EXPLOSION_FACTOR, DEFAULT_MAX_ITERATIONS, DEFAULT_REL_TOL
)
from tsnc.analysis.results import NetworkResult, ServerState
from tsnc.model import AnalysisOptions, OutputPortNetwork

__all__ = ["DEFAULT_PREFIX", "BaseAnalysis"]

logger = logging.getLogger(__name__)

DEFAULT_PREFIX = "native"


class BaseAnalysis(metaclass=abc.ABCMeta):
    """Base class for delay analyses of output-port networks.

    Warning: This class should not be used directly.
    Use derived classes instead.

    Args:
        options (AnalysisOptions, optional): Options overriding those carried by the analysed
            network. Defaults to `None`.
        prefix (str): Prefix of the result label "<prefix>_<METHOD>". Defaults to "native".
        max_iterations (int): Passes of the fixed-point iteration on cyclic networks before
            giving up. Defaults to 10000.
        explosion_factor (float): Factor of the source burst beyond which the fixed-point
            iteration is declared divergent. Defaults to 1e12.
        rel_tol (float): Relative tolerance of the fixed-point stopping test. Defaults to 1e-9.
        verbose (bool): Show progress bars. Defaults to `False`.

    Attributes:
        method (str): Short name of the method, e.g. "TFA".
        server_states (Dict[str, ServerState]): States of the last analysed network.
    """

    method: str = ""

    @abc.abstractmethod
    def __init__(
            self,
            options: Optional[AnalysisOptions] = None,
            *,
            prefix: str = DEFAULT_PREFIX,
            max_iterations: int = DEFAULT_MAX_ITERATIONS,
            explosion_factor: float = DEFAULT_EXPLOSION_FACTOR,
            rel_tol: float = DEFAULT_REL_TOL,
            verbose: bool = False
    ):
        self.options = options
        self.prefix = prefix
        self.max_iterations = max_iterations
        self.explosion_factor = explosion_factor
        self.rel_tol = rel_tol
        self.verbose = verbose
        self.server_states: Dict[str, ServerState] = {}

    @property
    def label(self) -> str:
        return f"{self.prefix}_{self.method}"

    def analyze(self, net: OutputPortNetwork) -> NetworkResult:
        """Computes the delay bounds of a network.

        Args:
            net (OutputPortNetwork): The network.

        Returns:
            (NetworkResult): The bounds together with the execution time.
        """
        options = net.options if self.options is None else self.options
        start = time.perf_counter()
        check_network(net)
        result = self._analyze(net, options)
        result.execution_time = time.perf_counter() - start
        logger.info(f"{self.label} analysed network '{net.name}' in "
                    f"{result.execution_time * 1e3:.3f} ms.")
        return result

    @abc.abstractmethod
    def _analyze(self, net: OutputPortNetwork, options: AnalysisOptions) -> NetworkResult:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(label={self.label!r})"
