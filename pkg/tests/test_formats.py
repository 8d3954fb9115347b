import json

import pytest

from tsnc.formats import (
    DocumentKind, JsonFormat, NetworkDocument, convert, options_from_tokens, options_to_tokens,
    parse_json, parse_xml, read_document, serialize, write_json, write_xml
)
from tsnc.model import DEFAULT_CEIL_PRECISION, AnalysisOptions, Multiplexing
from tsnc.utils.errors import FormatError


def _json_document(network=None, servers=None, flows=None):
    header = {"name": "tiny"}
    header.update(network or {})
    servers = servers if servers is not None else [
        {"name": "s0", "service_curve": {"latencies": ["10us"], "rates": ["1Mbps"]}}]
    flows = flows if flows is not None else [
        {"name": "f0", "path": ["s0"], "arrival_curve": {"bursts": ["10B"], "rates": ["10kbps"]}}]
    return json.dumps({"network": header, "servers": servers, "flows": flows})


def test_xml_demo(demo_physical):
    assert demo_physical.name == "demo"
    assert demo_physical.options == AnalysisOptions(input_shaping=True)
    assert len(demo_physical.nodes) == 7
    assert len(demo_physical.links) == 6
    assert [flow.name for flow in demo_physical.flows] == ["f0", "f1", "f2"]
    assert demo_physical.min_packet_length == pytest.approx(32.)
    s0 = demo_physical.node("s0")
    assert s0.parameters.latencies == pytest.approx((10e-6,))
    assert s0.parameters.rates == pytest.approx((4e6,))
    f0 = demo_physical.flows[0]
    assert f0.targets == (("s0", "s1", "sink0"),)
    assert f0.max_packet_length == pytest.approx(400.)


@pytest.mark.parametrize("technology,expected", [
    ("FIFO", AnalysisOptions()),
    ("FIFO+IS", AnalysisOptions(input_shaping=True)),
    ("ARBITRARY+IS+PK+CEIL", AnalysisOptions(multiplexing=Multiplexing.ARBITRARY,
                                              input_shaping=True, packetizer=True,
                                              ceil_precision=DEFAULT_CEIL_PRECISION)),
    ("", AnalysisOptions()),
])
def test_technology(technology, expected):
    assert options_from_tokens(technology.split("+")) == expected


@pytest.mark.parametrize("tokens", [["FIFO", "ARBITRARY"], ["FIFO", "SHAPING"]])
def test_technology_invalid(tokens):
    with pytest.raises(FormatError):
        options_from_tokens(tokens)


def test_technology_inverse():
    options = AnalysisOptions(multiplexing=Multiplexing.ARBITRARY, packetizer=True)
    assert options_to_tokens(options) == ["ARBITRARY", "PK"]
    assert options_from_tokens(options_to_tokens(options)) == options


def test_xml_ceil_precision():
    text = '<elements><network name="n" technology="FIFO+CEIL" ceil-precision="1ns"/></elements>'
    assert parse_xml(text).options.ceil_precision == pytest.approx(1e-9)


@pytest.mark.parametrize("text", [
    "<elements/>",
    '<elements><network name="a"/><network name="b"/></elements>',
    '<network name="a"/>',
    "<elements><network",
])
def test_xml_invalid_documents(text):
    with pytest.raises(FormatError):
        parse_xml(text)


def test_xml_unknown_element(demo_xml_text):
    text = demo_xml_text.replace("<station name=\"src0\"/>",
                                 "<station name=\"src0\"/><router name=\"r0\"/>")
    with pytest.raises(FormatError):
        parse_xml(text)
    with pytest.warns(UserWarning):
        network = parse_xml(text, strict=False)
    assert "r0" not in {node.name for node in network.nodes}


def test_xml_burst_rate_mismatch(demo_xml_text):
    text = demo_xml_text.replace('lb-burst="10B"', 'lb-burst="10B 20B"', 1)
    assert text != demo_xml_text
    with pytest.raises(FormatError):
        parse_xml(text)


def test_xml_undefined_node(demo_xml_text):
    text = demo_xml_text.replace('to="sink1"', 'to="sink9"')
    with pytest.raises(FormatError):
        parse_xml(text)


def test_xml_round_trip(demo_physical):
    assert parse_xml(write_xml(demo_physical)) == demo_physical


def test_json_demo(demo_network):
    assert demo_network.name == "demo"
    assert demo_network.options == AnalysisOptions(input_shaping=True)
    assert [server.name for server in demo_network.servers] == ["s0-o0", "s1-o0", "s1-o1"]
    s0 = demo_network.server("s0-o0")
    assert [piece.rate for piece in s0.service.pieces] == pytest.approx([4e6, 50e6])
    assert [piece.latency for piece in s0.service.pieces] == pytest.approx([10e-6, 1e-3])
    assert s0.capacity == pytest.approx(100e6)
    s1 = demo_network.server("s1-o0")
    assert [piece.latency for piece in s1.service.pieces] == pytest.approx([10e-6, 1e-3])
    f0 = demo_network.flows[0]
    assert [piece.rate for piece in f0.arrival.pieces] == pytest.approx([10e3, 500.])
    assert [piece.burst for piece in f0.arrival.pieces] == pytest.approx([80., 16000.])
    assert f0.max_packet_length == pytest.approx(400.)
    assert f0.min_packet_length == pytest.approx(32.)
    f2 = demo_network.flows[2]
    assert f2.path == ("s1-o0",)
    assert f2.min_packet_length == pytest.approx(32.)


def test_json_network_defaults():
    text = _json_document(
        network={"service_curve": {"latencies": ["1us"], "rates": ["2Mbps"]},
                 "capacity": "10Mbps", "max_packet_length": "8B"},
        servers=[{"name": "s0"}])
    network = parse_json(text)
    server = network.server("s0")
    assert server.service.latency == pytest.approx(1e-6)
    assert server.service.rate == pytest.approx(2e6)
    assert server.capacity == pytest.approx(10e6)
    assert network.flows[0].max_packet_length == pytest.approx(64.)


def test_json_missing_service_curve():
    with pytest.raises(FormatError):
        parse_json(_json_document(servers=[{"name": "s0"}]))


def test_json_empty_sections():
    network = parse_json(json.dumps({"network": {"name": "empty"}}))
    assert network.servers == ()
    assert network.flows == ()


@pytest.mark.parametrize("curve", [
    {"bursts": ["10B", "20B"], "rates": ["10kbps"]},
    {"bursts": [], "rates": []},
    {"bursts": ["10B"], "rates": ["10kbps"], "shape": "leaky-bucket"},
    {"bursts": ["10s"], "rates": ["10kbps"]},
])
def test_json_invalid_arrival_curve(curve):
    flows = [{"name": "f0", "path": ["s0"], "arrival_curve": curve}]
    with pytest.raises(FormatError):
        parse_json(_json_document(flows=flows))


@pytest.mark.parametrize("network", [
    {"analysis_option": ["FIFO", "IS"]},
    {"multiplexing": "PRIORITY"},
    {"packetizer": "yes"},
    {"time_unit": "Mbps"},
])
def test_json_invalid_options(network):
    with pytest.raises(FormatError):
        parse_json(_json_document(network=network))


def test_json_options():
    network = parse_json(_json_document(network={
        "multiplexing": "ARBITRARY", "packetizer": True, "analysis_option": ["IS", "CEIL"]}))
    assert network.options == AnalysisOptions(
        multiplexing=Multiplexing.ARBITRARY, input_shaping=True, packetizer=True,
        ceil_precision=DEFAULT_CEIL_PRECISION)


@pytest.mark.parametrize("text", ["[]", "{", '{"servers": []}', '{"network": {"name": NaN}}'])
def test_json_invalid_documents(text):
    with pytest.raises(FormatError):
        parse_json(text)


def test_json_unknown_keys():
    text = _json_document(network={"owner": "lab"})
    with pytest.raises(FormatError):
        parse_json(text)
    with pytest.warns(UserWarning):
        network = parse_json(text, strict=False)
    assert network.name == "tiny"


@pytest.mark.parametrize("servers,flows", [
    ([{"name": "s0", "service_curve": {"latencies": ["10us"], "rates": ["1Mbps"], "foo": 1}}],
     None),
    (None, [{"name": "f0", "path": ["s0"],
             "arrival_curve": {"bursts": ["10B"], "rates": ["10kbps"], "shape": "leaky"}}]),
])
def test_json_unknown_curve_keys(servers, flows):
    text = _json_document(servers=servers, flows=flows)
    with pytest.raises(FormatError):
        parse_json(text)
    with pytest.warns(UserWarning, match="curve"):
        network = parse_json(text, strict=False)
    assert network.servers[0].service.pieces[0].rate == pytest.approx(1e6)
    assert network.flows[0].arrival.pieces[0].burst == pytest.approx(80.)


def test_json_unknown_server_on_path():
    flows = [{"name": "f0", "path": ["s9"],
              "arrival_curve": {"bursts": ["10B"], "rates": ["10kbps"]}}]
    with pytest.raises(FormatError):
        parse_json(_json_document(flows=flows))


def test_json_round_trip(demo_network):
    text = write_json(demo_network)
    assert json.loads(text)["network"]["analysis_option"] == ["IS"]
    network = parse_json(text)
    assert network.options == demo_network.options
    assert [server.name for server in network.servers] == \
        [server.name for server in demo_network.servers]
    for read, original in zip(network.servers, demo_network.servers):
        assert [piece.rate for piece in read.service.pieces] == \
            pytest.approx([piece.rate for piece in original.service.pieces])
        assert [piece.latency for piece in read.service.pieces] == \
            pytest.approx([piece.latency for piece in original.service.pieces])
    for read, original in zip(network.flows, demo_network.flows):
        assert read.path == original.path
        assert read.arrival.burst == pytest.approx(original.arrival.burst)
        assert read.arrival.rate == pytest.approx(original.arrival.rate)
        assert read.max_packet_length == pytest.approx(original.max_packet_length)


def test_json_writer_units(demo_network):
    document = json.loads(JsonFormat(time_unit="ns", data_unit="b", rate_unit="bps")
                          .write(demo_network))
    assert document["network"]["time_unit"] == "ns"
    assert document["servers"][0]["service_curve"]["latencies"][0] == pytest.approx(10000.)
    assert document["flows"][0]["arrival_curve"]["bursts"][0] == pytest.approx(80.)
    with pytest.raises(FormatError):
        JsonFormat(time_unit="kB")


def test_convert_xml_to_json(demo_physical):
    document = convert(NetworkDocument(DocumentKind.PHYSICAL_XML, demo_physical),
                       DocumentKind.OUTPUT_PORT_JSON)
    assert document.kind is DocumentKind.OUTPUT_PORT_JSON
    assert {server.name for server in document.payload.servers} == {"s0-o0", "s1-o0", "s1-o1"}
    assert json.loads(serialize(document))["network"]["name"] == "demo"


def test_convert_same_kind(demo_network):
    document = NetworkDocument(DocumentKind.OUTPUT_PORT_JSON, demo_network)
    assert convert(document, DocumentKind.OUTPUT_PORT_JSON) is document


def test_document_payload_mismatch(demo_network):
    with pytest.raises(FormatError):
        NetworkDocument(DocumentKind.PHYSICAL_XML, demo_network)


def test_read_document(demo_files, tmp_path):
    json_path, xml_path = demo_files
    assert read_document(json_path).kind is DocumentKind.OUTPUT_PORT_JSON
    assert read_document(xml_path).kind is DocumentKind.PHYSICAL_XML
    other = tmp_path / "demo.txt"
    other.write_text(json_path.read_text())
    with pytest.raises(FormatError):
        read_document(other)
    assert read_document(other, kind=DocumentKind.from_name("json")).payload.name == "demo"


@pytest.mark.parametrize("name,kind", [
    ("xml", DocumentKind.PHYSICAL_XML),
    ("JSON", DocumentKind.OUTPUT_PORT_JSON),
    ("outputport-json", DocumentKind.OUTPUT_PORT_JSON),
])
def test_document_kind_from_name(name, kind):
    assert DocumentKind.from_name(name) is kind
