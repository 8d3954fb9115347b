"""
This module gathers the network generators: symmetric interleave tandem, ring and mesh
topologies, and random routing over a fixed topology of switches.
"""
from .base import GenParams, ParameterValue, build_network, save_network
from .topologies import gen_interleave, gen_ring, gen_mesh
from .fixed_topology import STOP_PROBABILITY, gen_fixed_topology

__all__ = [
    "GenParams",
    "ParameterValue",
    "build_network",
    "save_network",
    "gen_interleave",
    "gen_ring",
    "gen_mesh",
    "STOP_PROBABILITY",
    "gen_fixed_topology",
]
