"""
This module contains the XML format of physical networks.

A document has a root ``elements`` holding exactly one ``network`` element followed by
``station``, ``switch``, ``link`` and ``flow`` elements. Quantities carry their unit, e.g.
``service-latency="10us"``; several rate-latency curves or token buckets are written as
whitespace-separated lists paired by position.
"""
import logging
from typing import Dict, Optional, Tuple

from lxml import etree

from tsnc.formats.base import (
    BaseNetworkFormat, DocumentKind, options_from_tokens, options_to_tokens
)
from tsnc.minplus import ConcaveCurve, TokenBucket
from tsnc.model import (
    DEFAULT_CEIL_PRECISION, Dimension, Link, Node, NodeKind, PhysicalFlow, PhysicalNetwork,
    ServiceParameters, format_quantity, parse_quantity
)
from tsnc.utils.errors import DomainError, FormatError, NetworkError

__all__ = ["XmlFormat", "parse_xml", "write_xml"]

logger = logging.getLogger(__name__)

_BASE_UNITS = {Dimension.TIME: "s", Dimension.DATA: "b", Dimension.RATE: "bps"}

_SERVICE_ATTRIBUTES = ("service-latency", "service-rate", "transmission-capacity")
_NETWORK_ATTRIBUTES = ("name", "technology", "maximum-packet-size", "minimum-packet-size",
                       "ceil-precision") + _SERVICE_ATTRIBUTES
_NODE_ATTRIBUTES = ("name",) + _SERVICE_ATTRIBUTES
_LINK_ATTRIBUTES = ("name", "from", "to", "fromPort", "toPort") + _SERVICE_ATTRIBUTES
_FLOW_ATTRIBUTES = ("name", "arrival-curve", "lb-burst", "lb-rate", "maximum-packet-size",
                    "minimum-packet-size", "source")
_ELEMENTS = ("network", "station", "switch", "link", "flow")


class XmlFormat(BaseNetworkFormat):
    """Reader and writer of physical networks as XML documents.

    Args:
        strict (bool): Reject unknown elements and attributes. If `False` they are ignored
            with a warning. Defaults to `True`.

    Examples:
        >>> network = XmlFormat().parse(open("demo.xml").read())
        >>> text = XmlFormat().write(network)
    """

    kind = DocumentKind.PHYSICAL_XML

    def __init__(self, strict: bool = True):
        super().__init__(strict=strict)

    def parse(self, text: str) -> PhysicalNetwork:
        """Reads a physical network.

        Args:
            text (str): The XML document.

        Returns:
            (PhysicalNetwork): The network with every quantity normalized.
        """
        root = _read_tree(text)
        if root.tag != "elements":
            raise FormatError(f"The root element must be 'elements' and not '{root.tag}'.")
        children = [child for child in root if isinstance(child.tag, str)]
        self._unknown({child.tag for child in children if child.tag not in _ELEMENTS},
                      "elements")
        networks = [child for child in children if child.tag == "network"]
        if len(networks) != 1:
            raise FormatError(f"A physical network must have exactly one 'network' element, "
                              f"found {len(networks)}.")
        try:
            return self._build(networks[0], children)
        except (NetworkError, DomainError) as error:
            raise FormatError(str(error)) from error

    def _build(self, network, children) -> PhysicalNetwork:
        attributes = self._attributes(network, _NETWORK_ATTRIBUTES)
        name = _required(attributes, "name", "network")
        precision = _single(attributes.get("ceil-precision"), Dimension.TIME, "ceil-precision")
        options = options_from_tokens(attributes.get("technology", "").split("+"),
                                      ceil_precision=precision)
        nodes, links, flows = [], [], []
        for child in children:
            if child.tag in ("station", "switch"):
                nodes.append(self._node(child))
            elif child.tag == "link":
                links.append(self._link(child))
            elif child.tag == "flow":
                flows.append(self._flow(child))
        logger.debug(f"Read network '{name}' with {len(nodes)} nodes, {len(links)} links and "
                     f"{len(flows)} flows.")
        return PhysicalNetwork(
            name=name,
            options=options,
            nodes=tuple(nodes),
            links=tuple(links),
            flows=tuple(flows),
            defaults=_service_parameters(attributes),
            max_packet_length=_single(attributes.get("maximum-packet-size"), Dimension.DATA,
                                      "maximum-packet-size"),
            min_packet_length=_single(attributes.get("minimum-packet-size"), Dimension.DATA,
                                      "minimum-packet-size"),
        )

    def _attributes(self, element, known) -> Dict[str, str]:
        attributes = dict(element.attrib)
        self._unknown({key for key in attributes if key not in known},
                      f"attributes of '{element.tag}'")
        return {key: value for key, value in attributes.items() if key in known}

    def _node(self, element) -> Node:
        attributes = self._attributes(element, _NODE_ATTRIBUTES)
        return Node(name=_required(attributes, "name", element.tag), kind=NodeKind(element.tag),
                    parameters=_service_parameters(attributes))

    def _link(self, element) -> Link:
        attributes = self._attributes(element, _LINK_ATTRIBUTES)
        return Link(
            name=_required(attributes, "name", "link"),
            source=_required(attributes, "from", "link"),
            target=_required(attributes, "to", "link"),
            source_port=_required(attributes, "fromPort", "link"),
            target_port=_required(attributes, "toPort", "link"),
            parameters=_service_parameters(attributes),
        )

    def _flow(self, element) -> PhysicalFlow:
        attributes = self._attributes(element, _FLOW_ATTRIBUTES)
        name = _required(attributes, "name", "flow")
        curve = attributes.get("arrival-curve", "leaky-bucket")
        if curve != "leaky-bucket":
            raise FormatError(f"Flow '{name}' has the arrival curve '{curve}', only "
                              f"'leaky-bucket' is supported.")
        bursts = _multiple(_required(attributes, "lb-burst", "flow"), Dimension.DATA, "lb-burst")
        rates = _multiple(_required(attributes, "lb-rate", "flow"), Dimension.RATE, "lb-rate")
        if len(bursts) != len(rates):
            raise FormatError(f"Flow '{name}' has {len(bursts)} bursts but {len(rates)} rates.")
        targets = []
        for child in element:
            if not isinstance(child.tag, str):
                continue
            if child.tag != "target":
                self._unknown({child.tag}, f"elements of flow '{name}'")
                continue
            self._attributes(child, ())
            path = []
            for hop in child:
                if not isinstance(hop.tag, str):
                    continue
                if hop.tag != "path":
                    self._unknown({hop.tag}, f"elements of a target of flow '{name}'")
                    continue
                path.append(_required(self._attributes(hop, ("node",)), "node", "path"))
            targets.append(tuple(path))
        return PhysicalFlow(
            name=name,
            source=_required(attributes, "source", "flow"),
            targets=tuple(targets),
            arrival=ConcaveCurve(TokenBucket(rate=rate, burst=burst)
                                 for burst, rate in zip(bursts, rates)),
            max_packet_length=_single(attributes.get("maximum-packet-size"), Dimension.DATA,
                                      "maximum-packet-size"),
            min_packet_length=_single(attributes.get("minimum-packet-size"), Dimension.DATA,
                                      "minimum-packet-size"),
        )

    def write(self, network: PhysicalNetwork) -> str:
        """Serializes a physical network, quantities in s, b and bps.

        Args:
            network (PhysicalNetwork): The network.

        Returns:
            (str): The XML document, re-read into an equal network by `parse`.
        """
        root = etree.Element("elements")
        element = etree.SubElement(root, "network")
        element.set("name", network.name)
        element.set("technology", "+".join(options_to_tokens(network.options)))
        precision = network.options.ceil_precision
        if precision is not None and precision != DEFAULT_CEIL_PRECISION:
            element.set("ceil-precision", _format(precision, Dimension.TIME))
        _set_optional(element, "maximum-packet-size", network.max_packet_length, Dimension.DATA)
        _set_optional(element, "minimum-packet-size", network.min_packet_length, Dimension.DATA)
        _set_service_parameters(element, network.defaults)
        for node in network.nodes:
            element = etree.SubElement(root, node.kind.value)
            element.set("name", node.name)
            _set_service_parameters(element, node.parameters)
        for link in network.links:
            element = etree.SubElement(root, "link")
            for key, value in (("name", link.name), ("from", link.source), ("to", link.target),
                               ("fromPort", link.source_port), ("toPort", link.target_port)):
                element.set(key, value)
            _set_service_parameters(element, link.parameters)
        for flow in network.flows:
            element = etree.SubElement(root, "flow")
            element.set("name", flow.name)
            element.set("arrival-curve", "leaky-bucket")
            element.set("lb-burst", " ".join(_format(piece.burst, Dimension.DATA)
                                             for piece in flow.arrival.pieces))
            element.set("lb-rate", " ".join(_format(piece.rate, Dimension.RATE)
                                            for piece in flow.arrival.pieces))
            _set_optional(element, "maximum-packet-size", flow.max_packet_length, Dimension.DATA)
            _set_optional(element, "minimum-packet-size", flow.min_packet_length, Dimension.DATA)
            element.set("source", flow.source)
            for target in flow.targets:
                target_element = etree.SubElement(element, "target")
                for node in target:
                    etree.SubElement(target_element, "path").set("node", node)
        return etree.tostring(root, pretty_print=True, xml_declaration=True,
                              encoding="UTF-8").decode("utf-8")


def _read_tree(text):
    if isinstance(text, str):
        text = text.encode("utf-8")
    parser = etree.XMLParser(remove_blank_text=True, remove_comments=True, resolve_entities=False)
    try:
        return etree.fromstring(text, parser)
    except etree.XMLSyntaxError as error:
        raise FormatError(f"Malformed XML document: {error}") from error


def _required(attributes: Dict[str, str], key: str, tag: str) -> str:
    try:
        return attributes[key]
    except KeyError:
        raise FormatError(f"The '{tag}' element misses the attribute '{key}'.") from None


def _multiple(text: str, dimension: Dimension, key: str) -> Tuple[float, ...]:
    values = text.split()
    if not values:
        raise FormatError(f"The attribute '{key}' is empty.")
    return tuple(parse_quantity(value, dimension) for value in values)


def _single(text: Optional[str], dimension: Dimension, key: str) -> Optional[float]:
    if text is None:
        return None
    values = _multiple(text, dimension, key)
    if len(values) != 1:
        raise FormatError(f"The attribute '{key}' takes a single value and not '{text}'.")
    return values[0]


def _service_parameters(attributes: Dict[str, str]) -> ServiceParameters:
    latencies = attributes.get("service-latency")
    rates = attributes.get("service-rate")
    return ServiceParameters(
        latencies=None if latencies is None else _multiple(latencies, Dimension.TIME,
                                                           "service-latency"),
        rates=None if rates is None else _multiple(rates, Dimension.RATE, "service-rate"),
        capacity=_single(attributes.get("transmission-capacity"), Dimension.RATE,
                         "transmission-capacity"),
    )


def _format(value: float, dimension: Dimension) -> str:
    return format_quantity(value, _BASE_UNITS[dimension])


def _set_optional(element, key: str, value: Optional[float], dimension: Dimension) -> None:
    if value is not None:
        element.set(key, _format(value, dimension))


def _set_service_parameters(element, parameters: ServiceParameters) -> None:
    if parameters.latencies is not None:
        element.set("service-latency", " ".join(_format(latency, Dimension.TIME)
                                                for latency in parameters.latencies))
    if parameters.rates is not None:
        element.set("service-rate", " ".join(_format(rate, Dimension.RATE)
                                             for rate in parameters.rates))
    _set_optional(element, "transmission-capacity", parameters.capacity, Dimension.RATE)


def parse_xml(text: str, strict: bool = True) -> PhysicalNetwork:
    """Reads a physical network from an XML document, see `XmlFormat.parse`."""
    return XmlFormat(strict=strict).parse(text)


def write_xml(phys: PhysicalNetwork) -> str:
    """Writes a physical network as an XML document, see `XmlFormat.write`."""
    return XmlFormat().write(phys)
