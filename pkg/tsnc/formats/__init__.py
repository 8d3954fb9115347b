"""
This module gathers the network description formats: XML for physical networks and JSON for
output-port networks.
"""
from .base import (
    DocumentKind, NetworkDocument, BaseNetworkFormat, options_from_tokens, options_to_tokens
)
from .xml_format import XmlFormat, parse_xml, write_xml
from .json_format import JsonFormat, parse_json, write_json
from .convert import get_format, convert, serialize, read_document, as_output_port

__all__ = [
    "DocumentKind",
    "NetworkDocument",
    "BaseNetworkFormat",
    "options_from_tokens",
    "options_to_tokens",
    "XmlFormat",
    "parse_xml",
    "write_xml",
    "JsonFormat",
    "parse_json",
    "write_json",
    "get_format",
    "convert",
    "serialize",
    "read_document",
    "as_output_port",
]
