"""
This module contains the generators of symmetric topologies: interleave tandem, ring and mesh
networks with identical flows and identical servers.
"""
import itertools
import os
from typing import Optional, Union

from tsnc.generators.base import GenParams, build_network, save_network
from tsnc.model import AnalysisOptions, OutputPortNetwork
from tsnc.utils.errors import DomainError

__all__ = ["gen_interleave", "gen_ring", "gen_mesh"]


def _check_size(n: int, minimum: int, topology: str) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise DomainError(f"A {topology} network needs an integer size >= {minimum} and not "
                          f"'{n}'.")


def _check_fixed(params: GenParams, topology: str) -> None:
    if not params.is_fixed:
        raise DomainError(f"All flows and servers of a {topology} network are identical, ranges "
                          f"of parameters are not supported.")


def gen_interleave(
        n: int,
        params: Optional[GenParams] = None,
        options: Optional[AnalysisOptions] = None,
        save_path: Optional[Union[str, os.PathLike]] = None
) -> OutputPortNetwork:
    """Interleave tandem: servers s0..s{n-1} in a line, flow f0 crosses all of them and flow
    f{i} goes from s{i-1} to s{i}.

    Args:
        n (int): Number of servers (>= 2).
        params (GenParams, optional): Fixed flow and server parameters. Defaults to
            `GenParams()`.
        options (AnalysisOptions, optional): Analysis options of the network.
        save_path (str or PathLike, optional): Also write the network to this JSON file.

    Returns:
        (OutputPortNetwork): The network with n servers and n flows.
    """
    _check_size(n, 2, "interleave tandem")
    params = params or GenParams()
    _check_fixed(params, "interleave tandem")
    servers = [f"s{index}" for index in range(n)]
    paths = [servers] + [servers[index - 1:index + 1] for index in range(1, n)]
    network = build_network(f"interleave-{n}", servers, paths, params, options)
    if save_path is not None:
        save_network(network, save_path)
    return network


def gen_ring(
        n: int,
        params: Optional[GenParams] = None,
        options: Optional[AnalysisOptions] = None,
        save_path: Optional[Union[str, os.PathLike]] = None
) -> OutputPortNetwork:
    """Ring: flow f{i} starts at s{i} and crosses all n servers in increasing order modulo n.

    Args:
        n (int): Number of servers and flows (>= 2).
        params (GenParams, optional): Fixed flow and server parameters. Defaults to
            `GenParams()`.
        options (AnalysisOptions, optional): Analysis options of the network.
        save_path (str or PathLike, optional): Also write the network to this JSON file.

    Returns:
        (OutputPortNetwork): The network, its induced graph is the cycle s0 -> ... -> s{n-1}.
    """
    _check_size(n, 2, "ring")
    params = params or GenParams()
    _check_fixed(params, "ring")
    servers = [f"s{index}" for index in range(n)]
    paths = [[servers[(start + hop) % n] for hop in range(n)] for start in range(n)]
    network = build_network(f"ring-{n}", servers, paths, params, options)
    if save_path is not None:
        save_network(network, save_path)
    return network


def gen_mesh(
        n: int,
        params: Optional[GenParams] = None,
        options: Optional[AnalysisOptions] = None,
        save_path: Optional[Union[str, os.PathLike]] = None
) -> OutputPortNetwork:
    """Mesh: the servers s0..s{n-2} form the pairs (s{2k}, s{2k+1}) and every flow takes one
    server of each pair, in order, before the last server s{n-1}, which has twice the service
    rate. There is one flow per combination, 2^((n-1)/2) flows in total.

    Args:
        n (int): Number of servers (odd, >= 3).
        params (GenParams, optional): Fixed flow and server parameters. Defaults to
            `GenParams()`.
        options (AnalysisOptions, optional): Analysis options of the network.
        save_path (str or PathLike, optional): Also write the network to this JSON file.

    Returns:
        (OutputPortNetwork): The network.
    """
    _check_size(n, 3, "mesh")
    if n % 2 == 0:
        raise DomainError(f"A mesh network needs an odd number of servers and not '{n}'.")
    params = params or GenParams()
    _check_fixed(params, "mesh")
    servers = [f"s{index}" for index in range(n)]
    pairs = [(servers[2 * k], servers[2 * k + 1]) for k in range((n - 1) // 2)]
    paths = [list(choice) + [servers[-1]] for choice in itertools.product(*pairs)]
    network = build_network(f"mesh-{n}", servers, paths, params, options,
                            rate_factors={servers[-1]: 2.})
    if save_path is not None:
        save_network(network, save_path)
    return network
