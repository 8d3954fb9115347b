"""tsnc computes worst-case delay bounds of time-sensitive networks with network calculus. It
reads networks described as physical networks (XML) or output-port networks (JSON), analyses
them with total flow analysis and separate flow analysis, generates benchmark topologies and
writes Markdown and JSON reports.
"""
from .__version__ import __version__

# min-plus curves
from .minplus import ConcaveCurve
from .minplus import ConvexCurve
from .minplus import UNBOUNDED

# network models
from .model import AnalysisOptions
from .model import Multiplexing
from .model import Server
from .model import Flow
from .model import OutputPortNetwork
from .model import PhysicalNetwork
from .model import Quantity

# formats
from .formats import read_document
from .formats import parse_json
from .formats import parse_xml
from .formats import write_json
from .formats import write_xml

# analyses
from .analysis import TotalFlowAnalysis
from .analysis import SeparateFlowAnalysis
from .analysis import NetworkResult

# generators
from .generators import GenParams
from .generators import gen_interleave
from .generators import gen_ring
from .generators import gen_mesh
from .generators import gen_fixed_topology

# reports
from .report import ResultSet
from .report import export_json
from .report import export_markdown

from .analyzer import Analyzer

__all__ = [
    "__version__",
    # curves
    "ConcaveCurve",
    "ConvexCurve",
    "UNBOUNDED",
    # models
    "AnalysisOptions",
    "Multiplexing",
    "Server",
    "Flow",
    "OutputPortNetwork",
    "PhysicalNetwork",
    "Quantity",
    # formats
    "read_document",
    "parse_json",
    "parse_xml",
    "write_json",
    "write_xml",
    # analyses
    "TotalFlowAnalysis",
    "SeparateFlowAnalysis",
    "NetworkResult",
    # generators
    "GenParams",
    "gen_interleave",
    "gen_ring",
    "gen_mesh",
    "gen_fixed_topology",
    # reports
    "ResultSet",
    "export_json",
    "export_markdown",
    "Analyzer",
]
