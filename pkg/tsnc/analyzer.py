"""
This module contains the analyzer: it loads a network file, runs delay analyses on it, buffers
their results and exports the reports.
"""
import logging
import os
from typing import Iterable, List, Optional, Tuple, Type, Union

from tsnc.analysis import METHODS, BaseAnalysis, NetworkResult
from tsnc.formats import DocumentKind, as_output_port, read_document
from tsnc.model import AnalysisOptions, OutputPortNetwork
from tsnc.report import ResultSet, export_json, export_markdown
from tsnc.utils.files import write_atomic

__all__ = ["ALL_METHODS", "resolve_methods", "Analyzer"]

logger = logging.getLogger(__name__)

ALL_METHODS = "all"


def resolve_methods(names: Optional[Iterable[str]] = None) -> List[Type[BaseAnalysis]]:
    """Analysis classes from method names.

    Args:
        names (Iterable[str], optional): Names such as "TFA" and "SFA", case-insensitive, or
            "all". Defaults to `None`, meaning all methods.

    Returns:
        (List[Type[BaseAnalysis]]): The classes without duplicates, in the given order.
    """
    names = [ALL_METHODS] if names is None else list(names)
    if not names:
        raise ValueError("At least one analysis method is needed.")
    classes: List[Type[BaseAnalysis]] = []
    for name in names:
        key = name.upper()
        if key == ALL_METHODS.upper():
            selected = list(METHODS.values())
        elif key in METHODS:
            selected = [METHODS[key]]
        else:
            raise ValueError(f"Unknown analysis method '{name}', use one of "
                             f"{sorted(METHODS)} or '{ALL_METHODS}'.")
        classes.extend(cls for cls in selected if cls not in classes)
    return classes


class Analyzer:
    """Loads a network, analyses it with several methods and exports the reports.

    Args:
        options (AnalysisOptions, optional): Options overriding those of the loaded network.
            Defaults to `None`.
        verbose (bool): Show progress bars. Defaults to `False`.
        **analysis_kwargs: Further arguments of the analyses, e.g. `max_iterations`.

    Attributes:
        network (OutputPortNetwork): The loaded network.
        result_set (ResultSet): The buffered results of the loaded network.

    Examples:
        >>> analyzer = Analyzer()
        >>> analyzer.load("demo.json")
        >>> analyzer.analyze_all()
        >>> analyzer.export("demo")
    """

    def __init__(self, options: Optional[AnalysisOptions] = None, verbose: bool = False,
                 **analysis_kwargs):
        self.options = options
        self.verbose = verbose
        self.analysis_kwargs = analysis_kwargs
        self.network: Optional[OutputPortNetwork] = None
        self.result_set: Optional[ResultSet] = None

    def load(self, path: Union[str, os.PathLike], kind: Optional[DocumentKind] = None,
             strict: bool = True) -> OutputPortNetwork:
        """Reads a network file, converting a physical network into its output-port network,
        and clears the buffered results."""
        return self.set_network(as_output_port(read_document(path, kind=kind, strict=strict)))

    def set_network(self, network: OutputPortNetwork) -> OutputPortNetwork:
        self.network = network
        self.result_set = ResultSet(network)
        logger.info(f"Loaded network '{network.name}' with {len(network.servers)} servers and "
                    f"{len(network.flows)} flows.")
        return network

    def analyze(self, methods: Optional[Iterable[str]] = None) -> ResultSet:
        """Runs analyses on the loaded network and buffers their results.

        Args:
            methods (Iterable[str], optional): Method names or "all". Defaults to `None`,
                meaning all methods.

        Returns:
            (ResultSet): The buffered results.
        """
        for cls in resolve_methods(methods):
            self.run(cls)
        return self.result_set

    def run(self, cls: Type[BaseAnalysis]) -> NetworkResult:
        """Runs one analysis on the loaded network and buffers its result.

        Args:
            cls (Type[BaseAnalysis]): The analysis class, see `resolve_methods`.

        Returns:
            (NetworkResult): The result, also buffered in `result_set`.
        """
        if self.network is None:
            raise ValueError("No network loaded, call load() first.")
        analysis = cls(self.options, verbose=self.verbose, **self.analysis_kwargs)
        result = analysis.analyze(self.network)
        self.result_set.add(result)
        return result

    def analyze_all(self) -> ResultSet:
        return self.analyze([ALL_METHODS])

    def export(self, base: Union[str, os.PathLike]) -> Tuple[str, str]:
        """Writes "<base>.json" and "<base>.md".

        Args:
            base (str or PathLike): Path of the reports without extension.

        Returns:
            (Tuple[str, str]): The paths of the JSON and the Markdown report.
        """
        if self.result_set is None:
            raise ValueError("No network loaded, call load() first.")
        json_text, markdown_text = export_json(self.result_set), export_markdown(self.result_set)
        json_path, markdown_path = f"{os.fspath(base)}.json", f"{os.fspath(base)}.md"
        write_atomic(json_path, json_text)
        write_atomic(markdown_path, markdown_text)
        logger.info(f"Wrote reports '{json_path}' and '{markdown_path}'.")
        return json_path, markdown_path
