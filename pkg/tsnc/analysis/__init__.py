"""
This module gathers the delay analyses of output-port networks.
"""
from .results import ServerState, NetworkResult
from .base import BaseAnalysis
from .fixed_point import fixed_point
from .tfa import TotalFlowAnalysis, analyze_tfa
from .sfa import SeparateFlowAnalysis, analyze_sfa

METHODS = {
    TotalFlowAnalysis.method: TotalFlowAnalysis,
    SeparateFlowAnalysis.method: SeparateFlowAnalysis,
}

__all__ = [
    "ServerState",
    "NetworkResult",
    "BaseAnalysis",
    "fixed_point",
    "TotalFlowAnalysis",
    "analyze_tfa",
    "SeparateFlowAnalysis",
    "analyze_sfa",
    "METHODS",
]
