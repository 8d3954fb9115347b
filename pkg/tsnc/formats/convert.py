"""
This module contains the conversion of network documents between the XML physical format and
the JSON output-port format, and the reading of network files.
"""
import logging
import os
from typing import Optional, Union

from tsnc.formats.base import BaseNetworkFormat, DocumentKind, NetworkDocument
from tsnc.formats.json_format import JsonFormat
from tsnc.formats.xml_format import XmlFormat
from tsnc.model import OutputPortNetwork, output_port_to_physical, physical_to_output_port

__all__ = ["get_format", "convert", "serialize", "read_document", "as_output_port"]

logger = logging.getLogger(__name__)


def get_format(kind: DocumentKind, strict: bool = True) -> BaseNetworkFormat:
    """The reader and writer of a document kind."""
    if DocumentKind(kind) is DocumentKind.PHYSICAL_XML:
        return XmlFormat(strict=strict)
    return JsonFormat(strict=strict)


def convert(document: NetworkDocument, target_kind: DocumentKind) -> NetworkDocument:
    """Converts a document into `target_kind`.

    A physical network becomes an output-port network through `physical_to_output_port`, an
    output-port network a physical one through `output_port_to_physical`. Converting to the same
    kind returns the document unchanged.

    Args:
        document (NetworkDocument): The source document.
        target_kind (DocumentKind): The kind of the result.

    Returns:
        (NetworkDocument): The converted document.
    """
    target_kind = DocumentKind(target_kind)
    if document.kind is target_kind:
        return document
    if target_kind is DocumentKind.OUTPUT_PORT_JSON:
        payload = physical_to_output_port(document.payload)
    else:
        payload = output_port_to_physical(document.payload)
    logger.info(f"Converted network '{document.payload.name}' from {document.kind.value} to "
                f"{target_kind.value}.")
    return NetworkDocument(kind=target_kind, payload=payload)


def serialize(document: NetworkDocument) -> str:
    """Text of a document in its own format."""
    return get_format(document.kind).write(document.payload)


def read_document(
        path: Union[str, os.PathLike],
        kind: Optional[DocumentKind] = None,
        strict: bool = True
) -> NetworkDocument:
    """Reads a network file.

    Args:
        path (str or PathLike): The file.
        kind (DocumentKind, optional): Its format. Defaults to `None`, in which case it is
            inferred from the extension.
        strict (bool): Reject unknown elements and keys. Defaults to `True`.

    Returns:
        (NetworkDocument): The parsed document.
    """
    kind = DocumentKind.from_path(path) if kind is None else DocumentKind(kind)
    with open(path, encoding="utf-8") as file:
        text = file.read()
    return get_format(kind, strict=strict).parse_document(text)


def as_output_port(document: NetworkDocument) -> OutputPortNetwork:
    """The output-port network of a document, converting a physical network if needed."""
    return convert(document, DocumentKind.OUTPUT_PORT_JSON).payload
