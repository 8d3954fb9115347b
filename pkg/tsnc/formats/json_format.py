"""
This module contains the JSON format of output-port networks.

A document is one object with a ``network`` object, a ``servers`` array and a ``flows`` array.
Quantities are strings with a unit ("10us", "50Mbps", "2kB") or bare numbers read in the unit
of the closest scope: the server or flow object first, then the network.
"""
import json
import logging
from typing import Any, Dict, List, Tuple

from tsnc.formats.base import (
    BaseNetworkFormat, DocumentKind, options_from_tokens, options_to_tokens
)
from tsnc.minplus import UNBOUNDED, ConcaveCurve, ConvexCurve, RateLatency, TokenBucket
from tsnc.model import (
    DEFAULT_CEIL_PRECISION, AnalysisOptions, Dimension, Flow, Multiplexing, OutputPortNetwork,
    Server, format_quantity, parse_quantity, to_unit, unit_dimension
)
from tsnc.utils.errors import DomainError, FormatError, NetworkError

__all__ = ["JsonFormat", "parse_json", "write_json"]

logger = logging.getLogger(__name__)

_UNIT_KEYS = {"time_unit": Dimension.TIME, "data_unit": Dimension.DATA,
              "rate_unit": Dimension.RATE}
_NETWORK_KEYS = ("name", "packetizer", "multiplexing", "analysis_option", "ceil_precision",
                 "service_curve", "capacity", "max_packet_length", "min_packet_length",
                 *_UNIT_KEYS)
_SERVER_KEYS = ("name", "service_curve", "capacity", *_UNIT_KEYS)
_FLOW_KEYS = ("name", "path", "arrival_curve", "max_packet_length", "min_packet_length",
              *_UNIT_KEYS)

Units = Dict[Dimension, str]


def _reject_constant(constant: str):
    raise FormatError(f"'{constant}' is not a valid quantity.")


class JsonFormat(BaseNetworkFormat):
    """Reader and writer of output-port networks as JSON documents.

    Args:
        strict (bool): Reject unknown keys. If `False` they are ignored with a warning.
            Defaults to `True`.
        time_unit (str): Unit of the durations written by `write`. Defaults to "us".
        data_unit (str): Unit of the data amounts written by `write`. Defaults to "B".
        rate_unit (str): Unit of the rates written by `write`. Defaults to "Mbps".
    """

    kind = DocumentKind.OUTPUT_PORT_JSON

    def __init__(
            self,
            strict: bool = True,
            *,
            time_unit: str = "us",
            data_unit: str = "B",
            rate_unit: str = "Mbps"
    ):
        super().__init__(strict=strict)
        self.units: Units = {Dimension.TIME: time_unit, Dimension.DATA: data_unit,
                             Dimension.RATE: rate_unit}
        for dimension, unit in self.units.items():
            if unit_dimension(unit) is not dimension:
                raise FormatError(f"'{unit}' is not a {dimension.value} unit.")

    def parse(self, text: str) -> OutputPortNetwork:
        """Reads an output-port network.

        Args:
            text (str): The JSON document.

        Returns:
            (OutputPortNetwork): The network with every quantity normalized.
        """
        try:
            document = json.loads(text, parse_constant=_reject_constant)
        except json.JSONDecodeError as error:
            raise FormatError(f"Malformed JSON document: {error}") from error
        if not isinstance(document, dict):
            raise FormatError("A network document must be a JSON object.")
        self._unknown({key for key in document if key not in ("network", "servers", "flows")},
                      "top-level keys")
        if "network" not in document:
            raise FormatError("The document misses the 'network' object.")
        try:
            return self._build(document)
        except (NetworkError, DomainError) as error:
            raise FormatError(str(error)) from error

    def _build(self, document: Dict[str, Any]) -> OutputPortNetwork:
        network = self._object(document["network"], _NETWORK_KEYS, "network")
        name = _required(network, "name", "network")
        units = _scope({}, network)
        options = self._options(network, units)
        default_service = None
        if "service_curve" in network:
            default_service = self._service_curve(network["service_curve"], units, "network")
        default_capacity = UNBOUNDED
        if "capacity" in network:
            default_capacity = _quantity(network["capacity"], Dimension.RATE, units)
        default_lengths = {key: network[key] for key in ("max_packet_length", "min_packet_length")
                           if key in network}

        servers = []
        for index, entry in enumerate(_array(document, "servers")):
            entry = self._object(entry, _SERVER_KEYS, f"server #{index}")
            server_name = _required(entry, "name", f"server #{index}")
            scope = _scope(units, entry)
            if "service_curve" in entry:
                service = self._service_curve(entry["service_curve"], scope, server_name)
            elif default_service is not None:
                service = default_service
            else:
                raise FormatError(f"Server '{server_name}' has no service curve and the network "
                                  f"defines no default.")
            capacity = default_capacity
            if "capacity" in entry:
                capacity = _quantity(entry["capacity"], Dimension.RATE, scope)
            servers.append(Server(name=server_name, service=service, capacity=capacity))

        flows = []
        for index, entry in enumerate(_array(document, "flows")):
            entry = self._object(entry, _FLOW_KEYS, f"flow #{index}")
            flow_name = _required(entry, "name", f"flow #{index}")
            path = _required(entry, "path", flow_name)
            if not isinstance(path, list) or not all(isinstance(hop, str) for hop in path):
                raise FormatError(f"The path of flow '{flow_name}' must be an array of server "
                                  f"names.")
            scope = _scope(units, entry)
            lengths = {}
            for key in ("max_packet_length", "min_packet_length"):
                if key in entry:
                    lengths[key] = _quantity(entry[key], Dimension.DATA, scope)
                elif key in default_lengths:
                    lengths[key] = _quantity(default_lengths[key], Dimension.DATA, units)
            flows.append(Flow(
                name=flow_name, path=tuple(path),
                arrival=self._arrival_curve(_required(entry, "arrival_curve", flow_name),
                                            scope, flow_name),
                **lengths))
        logger.debug(f"Read network '{name}' with {len(servers)} servers and {len(flows)} flows.")
        return OutputPortNetwork(name=name, options=options, servers=tuple(servers),
                                 flows=tuple(flows))

    def _object(self, value: Any, known, where: str) -> Dict[str, Any]:
        if not isinstance(value, dict):
            raise FormatError(f"The {where} must be a JSON object.")
        self._unknown({key for key in value if key not in known}, f"keys of the {where}")
        return {key: item for key, item in value.items() if key in known}

    def _pairs(self, curve: Any, keys: Tuple[str, str],
               dimensions: Tuple[Dimension, Dimension], units: Units,
               owner: str) -> List[Tuple[float, float]]:
        if not isinstance(curve, dict):
            raise FormatError(f"The curve of '{owner}' must be a JSON object.")
        self._unknown({key for key in curve if key not in keys}, f"keys in the curve of '{owner}'")
        columns = []
        for key, dimension in zip(keys, dimensions):
            values = _required(curve, key, owner)
            if not isinstance(values, list) or not values:
                raise FormatError(f"'{key}' of '{owner}' must be a non-empty array.")
            columns.append([_quantity(value, dimension, units) for value in values])
        if len(columns[0]) != len(columns[1]):
            raise FormatError(f"'{owner}' pairs {len(columns[0])} {keys[0]} with "
                              f"{len(columns[1])} {keys[1]}.")
        return list(zip(*columns))

    def _service_curve(self, curve: Any, units: Units, owner: str) -> ConvexCurve:
        pairs = self._pairs(curve, ("latencies", "rates"), (Dimension.TIME, Dimension.RATE),
                            units, owner)
        return ConvexCurve(RateLatency(rate=rate, latency=latency) for latency, rate in pairs)

    def _arrival_curve(self, curve: Any, units: Units, owner: str) -> ConcaveCurve:
        pairs = self._pairs(curve, ("bursts", "rates"), (Dimension.DATA, Dimension.RATE),
                            units, owner)
        return ConcaveCurve(TokenBucket(rate=rate, burst=burst) for burst, rate in pairs)

    def _options(self, network: Dict[str, Any], units: Units) -> AnalysisOptions:
        tokens = network.get("analysis_option", [])
        if isinstance(tokens, str):
            tokens = [tokens]
        if not isinstance(tokens, list) or not all(isinstance(token, str) for token in tokens):
            raise FormatError("The 'analysis_option' must be an array of keywords.")
        misplaced = [token for token in tokens if token in ("FIFO", "ARBITRARY")]
        if misplaced:
            raise FormatError(f"The multiplexing {misplaced} belongs to 'multiplexing' and not "
                              f"to 'analysis_option'.")
        packetizer = network.get("packetizer", False)
        if not isinstance(packetizer, bool):
            raise FormatError(f"'packetizer' must be true or false and not '{packetizer}'.")
        precision = network.get("ceil_precision")
        if precision is not None:
            precision = _quantity(precision, Dimension.TIME, units)
        options = options_from_tokens(tokens, ceil_precision=precision)
        multiplexing = network.get("multiplexing", Multiplexing.FIFO.value)
        if multiplexing not in (Multiplexing.FIFO.value, Multiplexing.ARBITRARY.value):
            raise FormatError(f"The multiplexing must be 'FIFO' or 'ARBITRARY' and not "
                              f"'{multiplexing}'.")
        return options.replace(multiplexing=Multiplexing(multiplexing),
                               packetizer=options.packetizer or packetizer)

    def write(self, network: OutputPortNetwork) -> str:
        """Serializes an output-port network as bare numbers in the units of the formatter.

        Args:
            network (OutputPortNetwork): The network.

        Returns:
            (str): The JSON document, indented by 4 spaces.
        """
        options = network.options
        header: Dict[str, Any] = {
            "name": network.name,
            "packetizer": options.packetizer,
            "multiplexing": options.multiplexing.value,
            "analysis_option": [token for token in options_to_tokens(options)[1:] if token != "PK"],
        }
        if options.ceil_precision is not None and options.ceil_precision != DEFAULT_CEIL_PRECISION:
            header["ceil_precision"] = format_quantity(options.ceil_precision, "s")
        header.update({key: self.units[dimension] for key, dimension in _UNIT_KEYS.items()})

        servers: List[Dict[str, Any]] = []
        for server in network.servers:
            entry: Dict[str, Any] = {
                "name": server.name,
                "service_curve": {
                    "latencies": [self._number(piece.latency, Dimension.TIME)
                                  for piece in server.service.pieces],
                    "rates": [self._number(piece.rate, Dimension.RATE)
                              for piece in server.service.pieces],
                },
            }
            if server.capacity is not UNBOUNDED:
                entry["capacity"] = self._number(server.capacity, Dimension.RATE)
            servers.append(entry)

        flows: List[Dict[str, Any]] = []
        for flow in network.flows:
            flows.append({
                "name": flow.name,
                "path": list(flow.path),
                "arrival_curve": {
                    "bursts": [self._number(piece.burst, Dimension.DATA)
                               for piece in flow.arrival.pieces],
                    "rates": [self._number(piece.rate, Dimension.RATE)
                              for piece in flow.arrival.pieces],
                },
                "max_packet_length": self._number(flow.max_packet_length, Dimension.DATA),
                "min_packet_length": self._number(flow.min_packet_length, Dimension.DATA),
            })
        document = {"network": header, "servers": servers, "flows": flows}
        return json.dumps(document, indent=4) + "\n"

    def _number(self, value: float, dimension: Dimension) -> float:
        return to_unit(value, self.units[dimension])


def _required(entry: Dict[str, Any], key: str, owner: str) -> Any:
    try:
        return entry[key]
    except KeyError:
        raise FormatError(f"'{owner}' misses the key '{key}'.") from None


def _array(document: Dict[str, Any], key: str) -> List[Any]:
    value = document.get(key, [])
    if not isinstance(value, list):
        raise FormatError(f"'{key}' must be a JSON array.")
    return value


def _scope(parent: Units, entry: Dict[str, Any]) -> Units:
    units = dict(parent)
    for key, dimension in _UNIT_KEYS.items():
        if key in entry:
            unit = entry[key]
            if not isinstance(unit, str) or unit_dimension(unit) is not dimension:
                raise FormatError(f"'{key}' must be a {dimension.value} unit and not '{unit}'.")
            units[dimension] = unit
    return units


def _quantity(value: Any, dimension: Dimension, units: Units) -> float:
    return parse_quantity(value, dimension, default_unit=units.get(dimension))


def parse_json(text: str, strict: bool = True) -> OutputPortNetwork:
    """Reads an output-port network from a JSON document, see `JsonFormat.parse`."""
    return JsonFormat(strict=strict).parse(text)


def write_json(opnet: OutputPortNetwork) -> str:
    """Writes an output-port network as a JSON document, see `JsonFormat.write`."""
    return JsonFormat().write(opnet)
