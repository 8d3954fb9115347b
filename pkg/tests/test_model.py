"""Test for the network models, the unit system and the conversions."""
import networkx as nx
import pytest

from tsnc.minplus import UNBOUNDED, ConcaveCurve, ConvexCurve
from tsnc.model import (
    AnalysisOptions, Dimension, Flow, Link, Multiplexing, Node, NodeKind, OutputPortNetwork,
    PhysicalFlow, PhysicalNetwork, Quantity, Server, ServiceParameters, check_stability,
    format_quantity, induced_graph, is_feed_forward, link_utilization, output_port_to_physical,
    parse_quantity, physical_to_output_port, server_name, to_unit
)
from tsnc.utils.errors import DomainError, NetworkError, UnitError


def _server(name, rate=1e6, latency=1e-5, capacity=UNBOUNDED):
    return Server(name=name, service=ConvexCurve.rate_latency(rate, latency), capacity=capacity)


def _flow(name, path, rate=1e4, burst=80.):
    return Flow(name=name, path=tuple(path), arrival=ConcaveCurve.token_bucket(rate, burst))


@pytest.mark.parametrize("value, dimension, default_unit, expected", [
    ("10us", Dimension.TIME, None, 1e-5),
    ("1ms", Dimension.TIME, "us", 1e-3),
    (10, Dimension.TIME, "us", 1e-5),
    ("2kB", Dimension.DATA, None, 16000.),
    ("50B", Dimension.DATA, "b", 400.),
    ("4Mbps", Dimension.RATE, None, 4e6),
    (0.5, Dimension.RATE, "Mbps", 5e5),
    ("10", Dimension.RATE, "kbps", 1e4),
    (Quantity(3, "ns"), Dimension.TIME, None, 3e-9),
])
def test_parse_quantity(value, dimension, default_unit, expected):
    assert parse_quantity(value, dimension, default_unit) == pytest.approx(expected)


@pytest.mark.parametrize("value, dimension, default_unit", [
    ("10us", Dimension.DATA, None),
    ("10", Dimension.TIME, None),
    (10, Dimension.TIME, None),
    ("10 parsecs", Dimension.TIME, None),
    ("-1us", Dimension.TIME, None),
    (True, Dimension.TIME, "us"),
    ("us", Dimension.TIME, None),
])
def test_parse_quantity_rejects(value, dimension, default_unit):
    with pytest.raises(UnitError):
        parse_quantity(value, dimension, default_unit)


def test_explicit_unit_equal_to_scope_changes_nothing():
    assert parse_quantity("10us", Dimension.TIME, "us") == parse_quantity(10, Dimension.TIME, "us")


def test_to_unit_and_format():
    assert to_unit(1e-5, "us") == pytest.approx(10.)
    assert to_unit(400., "B") == pytest.approx(50.)
    assert format_quantity(1e6, "Mbps") == "1.0Mbps"
    assert str(Quantity(10, "us")) == "10us"
    assert Quantity(10, "us").normalized == pytest.approx(1e-5)


def test_analysis_options():
    options = AnalysisOptions(multiplexing="ARBITRARY", input_shaping=True)
    assert options.multiplexing is Multiplexing.ARBITRARY
    assert options.replace(packetizer=True).packetizer
    assert not options.packetizer
    with pytest.raises(NetworkError):
        AnalysisOptions(multiplexing="LIFO")
    with pytest.raises(DomainError):
        AnalysisOptions(ceil_precision=0.)


def test_flow_validation():
    with pytest.raises(NetworkError):
        _flow("f0", [])
    with pytest.raises(NetworkError, match="twice"):
        _flow("f0", ["s0", "s1", "s0"])
    with pytest.raises(NetworkError):
        Flow(name="f0", path=("s0",), arrival=ConcaveCurve.zero(), max_packet_length=8.,
             min_packet_length=16.)


def test_output_port_network_validation():
    with pytest.raises(NetworkError, match="undefined"):
        OutputPortNetwork(name="n", servers=(_server("s0"),), flows=(_flow("f0", ["s0", "s1"]),))
    with pytest.raises(NetworkError):
        OutputPortNetwork(name="n", servers=(_server("s0"), _server("s0")))
    with pytest.raises(NetworkError):
        OutputPortNetwork(name="n", servers=(_server("s0"),),
                          flows=(_flow("f0", ["s0"]), _flow("f0", ["s0"])))
    with pytest.raises(DomainError):
        _server("s0", capacity=0.)


def test_output_port_network_lookups(demo_network):
    assert demo_network.server("s1-o1").service == ConvexCurve.rate_latency(4e6, 1e-5)
    assert [flow.name for flow in demo_network.flows_through("s1-o0")] == ["f0", "f2"]
    with pytest.raises(NetworkError):
        demo_network.server("s9")
    arbitrary = demo_network.with_options(AnalysisOptions(multiplexing=Multiplexing.ARBITRARY))
    assert arbitrary.options.multiplexing is Multiplexing.ARBITRARY
    assert arbitrary.flows == demo_network.flows


def test_induced_graph(demo_network):
    graph = induced_graph(demo_network)
    assert set(graph.nodes) == {"s0-o0", "s1-o0", "s1-o1"}
    assert set(graph.edges) == {("s0-o0", "s1-o0"), ("s0-o0", "s1-o1")}
    assert graph.edges["s0-o0", "s1-o0"]["flows"] == ["f0"]
    assert is_feed_forward(demo_network)


def test_induced_graph_cycle():
    net = OutputPortNetwork(name="ring", servers=(_server("a"), _server("b")),
                            flows=(_flow("f0", ["a", "b"]), _flow("f1", ["b", "a"])))
    assert not is_feed_forward(net)
    assert nx.find_cycle(induced_graph(net))


def test_link_utilization():
    net = OutputPortNetwork(
        name="n", servers=(_server("s0", rate=1e4), _server("idle")),
        flows=(_flow("f0", ["s0"], rate=2e3), _flow("f1", ["s0"], rate=3e3)))
    assert link_utilization(net) == {"s0": 0.5, "idle": 0.}
    assert check_stability(net) == []


def test_demo_utilization(demo_network):
    # long-run rates of f0 (0.5 kbps) and f2 (10 kbps) into 50 Mbps
    assert link_utilization(demo_network)["s1-o0"] == pytest.approx(2.1e-4)


def test_check_stability():
    net = OutputPortNetwork(name="n", servers=(_server("s0", rate=1e4), _server("s1")),
                            flows=(_flow("f0", ["s0", "s1"], rate=1e4),))
    assert check_stability(net) == ["s0"]


def test_service_parameters():
    node = ServiceParameters(latencies=(1e-5,), rates=(4e6,))
    link = ServiceParameters(capacity=1e7)
    resolved = link.inherit(node)
    assert resolved.service_curve() == ConvexCurve.rate_latency(4e6, 1e-5)
    assert resolved.transmission_capacity() == 1e7
    assert ServiceParameters().is_empty
    assert ServiceParameters().service_curve() is None
    assert ServiceParameters().transmission_capacity() is UNBOUNDED
    with pytest.raises(NetworkError):
        ServiceParameters(latencies=(1e-5, 2e-5), rates=(4e6,)).service_curve()


def test_server_name():
    assert server_name("s0", "o0") == "s0-o0"
    assert server_name("a-b", "o0") != server_name("a", "b-o0")


def test_physical_network(demo_physical):
    assert demo_physical.options == AnalysisOptions(input_shaping=True)
    assert demo_physical.min_packet_length == pytest.approx(32.)
    stations = [node.name for node in demo_physical.nodes if node.kind is NodeKind.STATION]
    assert len(stations) == 5
    assert len(demo_physical.links) == 6
    assert len(demo_physical.flows) == 3
    link = demo_physical.link_between("s0", "s1")
    assert link.name == "lk:s0-s1"
    assert demo_physical.resolve_parameters(link).capacity == pytest.approx(1e7)
    assert demo_physical.packet_lengths(demo_physical.flows[0]) == pytest.approx((400., 32.))


def test_physical_network_validation():
    nodes = (Node("a", NodeKind.STATION), Node("b"))
    arrival = ConcaveCurve.token_bucket(1., 1.)
    with pytest.raises(NetworkError, match="undefined"):
        PhysicalNetwork(name="n", nodes=nodes, links=(Link("l", "a", "c", "o0", "i0"),))
    with pytest.raises(NetworkError, match="linked twice"):
        PhysicalNetwork(name="n", nodes=nodes, links=(Link("l0", "a", "b", "o0", "i0"),
                                                      Link("l1", "a", "b", "o0", "i1")))
    with pytest.raises(NetworkError, match="No link"):
        PhysicalNetwork(name="n", nodes=nodes,
                        flows=(PhysicalFlow("f", "a", (("b",),), arrival),))
    with pytest.raises(NetworkError, match="used twice"):
        PhysicalNetwork(name="n", nodes=nodes + (Node("a"),))


def test_physical_to_output_port(demo_physical):
    net = physical_to_output_port(demo_physical)
    assert [server.name for server in net.servers] == ["s0-o0", "s1-o0", "s1-o1"]
    assert net.server("s0-o0").service == ConvexCurve.rate_latency(4e6, 1e-5)
    assert net.server("s1-o1").capacity == pytest.approx(1e7)
    paths = {flow.name: flow.path for flow in net.flows}
    assert paths == {"f0": ("s0-o0", "s1-o0"), "f1": ("s0-o0", "s1-o1"), "f2": ("s1-o0",)}
    assert net.flows[2].min_packet_length == pytest.approx(32.)
    assert net.options.input_shaping


def _multicast_network(defaults=ServiceParameters(latencies=(1e-5,), rates=(1e6,))):
    nodes = (Node("src", NodeKind.STATION), Node("sw"), Node("d0", NodeKind.STATION),
             Node("d1", NodeKind.STATION))
    links = (Link("l0", "src", "sw", "o0", "i0"), Link("l1", "sw", "d0", "o0", "i0"),
             Link("l2", "sw", "d1", "o1", "i0"))
    flow = PhysicalFlow("f", "src", (("sw", "d0"), ("sw", "d1")),
                        ConcaveCurve.token_bucket(1e3, 8.))
    return PhysicalNetwork(name="mc", nodes=nodes, links=links, flows=(flow,), defaults=defaults)


def test_physical_to_output_port_multicast():
    net = physical_to_output_port(_multicast_network())
    # the network defaults make the source port a server as well
    assert {flow.name: flow.path for flow in net.flows} == {
        "f_0": ("src-o0", "sw-o0"), "f_1": ("src-o0", "sw-o1")}


def test_physical_to_output_port_drops_dummies():
    with pytest.warns(UserWarning, match="dropped"):
        net = physical_to_output_port(_multicast_network(defaults=ServiceParameters()))
    assert net.flows == ()
    assert net.servers == ()


def test_output_port_to_physical(demo_network):
    phys = output_port_to_physical(demo_network)
    assert {node.name for node in phys.nodes if node.kind is NodeKind.SWITCH} == {
        "s0-o0", "s1-o0", "s1-o1"}
    assert {node.name for node in phys.nodes if node.kind is NodeKind.STATION} == {
        "src-f0", "src-f1", "src-f2", "sink-s1-o0", "sink-s1-o1"}
    back = physical_to_output_port(phys)
    assert [flow.path for flow in back.flows] == [
        tuple(server_name(hop, "o0") for hop in flow.path) for flow in demo_network.flows]
    for server in demo_network.servers:
        converted = back.server(server_name(server.name, "o0"))
        assert converted.service == server.service
        assert converted.capacity == server.capacity
    assert [flow.arrival for flow in back.flows] == [flow.arrival for flow in demo_network.flows]
