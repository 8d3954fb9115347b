"""
This module contains the base network format and the network document container.
"""
import enum
import os
import warnings
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional, Union

from tsnc.model import (
    DEFAULT_CEIL_PRECISION, AnalysisOptions, Multiplexing, OutputPortNetwork, PhysicalNetwork
)
from tsnc.utils.errors import FormatError

__all__ = [
    "DocumentKind",
    "NetworkDocument",
    "BaseNetworkFormat",
    "TECHNOLOGY_TOKENS",
    "options_from_tokens",
    "options_to_tokens",
]


class DocumentKind(str, enum.Enum):
    PHYSICAL_XML = "physical-xml"
    OUTPUT_PORT_JSON = "outputport-json"

    @property
    def extension(self) -> str:
        return ".xml" if self is DocumentKind.PHYSICAL_XML else ".json"

    @classmethod
    def from_path(cls, path: Union[str, os.PathLike]) -> "DocumentKind":
        """Kind of a network file according to its extension (.xml or .json)."""
        extension = os.path.splitext(os.fspath(path))[1].lower()
        for kind in cls:
            if kind.extension == extension:
                return kind
        raise FormatError(f"Cannot infer the format of '{os.fspath(path)}', the extension must be "
                          f"'.xml' or '.json'.")

    @classmethod
    def from_name(cls, name: str) -> "DocumentKind":
        """Kind from "xml", "json" or a kind value such as "physical-xml"."""
        name = name.lower()
        for kind in cls:
            if name in (kind.value, kind.extension[1:]):
                return kind
        raise FormatError(f"Unknown network format '{name}', use 'xml' or 'json'.")


@dataclass(frozen=True)
class NetworkDocument:
    """A parsed network description together with its format.

    Args:
        kind (DocumentKind): The format of the document.
        payload (PhysicalNetwork or OutputPortNetwork): The network, a `PhysicalNetwork` for
            XML and an `OutputPortNetwork` for JSON.
    """
    kind: DocumentKind
    payload: Union[PhysicalNetwork, OutputPortNetwork]

    def __post_init__(self):
        object.__setattr__(self, "kind", DocumentKind(self.kind))
        expected = PhysicalNetwork if self.kind is DocumentKind.PHYSICAL_XML else OutputPortNetwork
        if not isinstance(self.payload, expected):
            raise FormatError(f"A {self.kind.value} document holds a {expected.__name__} and not "
                              f"a {type(self.payload).__name__}.")


class BaseNetworkFormat(ABC):
    """Base class of the network description formats.

    Warning: This class should not be used directly.
    Use derived classes instead.

    Args:
        strict (bool): Reject unknown elements, attributes and keys. If `False` they are
            ignored with a warning. Defaults to `True`.
    """

    kind: DocumentKind

    @abstractmethod
    def __init__(self, strict: bool = True):
        self.strict = strict

    @abstractmethod
    def parse(self, text: str) -> Union[PhysicalNetwork, OutputPortNetwork]:
        """Reads a network from the text of a document."""
        raise NotImplementedError

    @abstractmethod
    def write(self, network: Union[PhysicalNetwork, OutputPortNetwork]) -> str:
        """Serializes a network into the text of a document."""
        raise NotImplementedError

    def parse_document(self, text: str) -> NetworkDocument:
        return NetworkDocument(kind=self.kind, payload=self.parse(text))

    def _unknown(self, names, where: str) -> None:
        names = sorted(names)
        if not names:
            return
        message = f"Unknown {where}: {names}."
        if self.strict:
            raise FormatError(message)
        warnings.warn(f"{message} They are ignored.", UserWarning)


TECHNOLOGY_TOKENS = ("FIFO", "ARBITRARY", "IS", "PK", "CEIL")


def options_from_tokens(
        tokens,
        ceil_precision: Optional[float] = None
) -> AnalysisOptions:
    """Analysis options from technology keywords such as ["FIFO", "IS"].

    Args:
        tokens (Iterable[str]): Keywords among FIFO, ARBITRARY, IS, PK and CEIL.
        ceil_precision (float, optional): Quantum of CEIL. Defaults to `None`, in which case
            CEIL uses `DEFAULT_CEIL_PRECISION`. A precision without CEIL enables it.

    Returns:
        (AnalysisOptions): The options, FIFO multiplexing unless ARBITRARY is given.
    """
    tokens = [token.strip() for token in tokens if token.strip()]
    unknown = [token for token in tokens if token not in TECHNOLOGY_TOKENS]
    if unknown:
        raise FormatError(f"Unknown technology keywords {unknown}, the known keywords are "
                          f"{list(TECHNOLOGY_TOKENS)}.")
    if "FIFO" in tokens and "ARBITRARY" in tokens:
        raise FormatError("FIFO and ARBITRARY multiplexing cannot be combined.")
    if "CEIL" in tokens and ceil_precision is None:
        ceil_precision = DEFAULT_CEIL_PRECISION
    return AnalysisOptions(
        multiplexing=Multiplexing.ARBITRARY if "ARBITRARY" in tokens else Multiplexing.FIFO,
        input_shaping="IS" in tokens,
        packetizer="PK" in tokens,
        ceil_precision=ceil_precision,
    )


def options_to_tokens(options: AnalysisOptions) -> List[str]:
    """Inverse of `options_from_tokens`, the multiplexing keyword always comes first."""
    tokens = [options.multiplexing.value]
    if options.input_shaping:
        tokens.append("IS")
    if options.packetizer:
        tokens.append("PK")
    if options.ceil_precision is not None:
        tokens.append("CEIL")
    return tokens
