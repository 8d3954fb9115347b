"""
This module contains the command line interface: ``tsnc analyze``, ``tsnc convert`` and
``tsnc generate``.
"""
import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence

from tsnc.__version__ import __version__
from tsnc.analysis import METHODS
from tsnc.analyzer import ALL_METHODS, Analyzer, resolve_methods
from tsnc.formats import DocumentKind, convert, read_document, serialize
from tsnc.generators import (
    GenParams, gen_fixed_topology, gen_interleave, gen_mesh, gen_ring, save_network
)
from tsnc.model import (
    DEFAULT_CEIL_PRECISION, AnalysisOptions, Dimension, Multiplexing, parse_quantity
)
from tsnc.utils.errors import DivergenceError, FormatError, NetworkCalculusError, UnstableError
from tsnc.utils.files import write_atomic

__all__ = [
    "EXIT_OK",
    "EXIT_PARSE",
    "EXIT_UNSTABLE",
    "EXIT_DIVERGENCE",
    "EXIT_IO",
    "build_parser",
    "run_analyze",
    "run_convert",
    "run_generate",
    "main",
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSTABLE = 3
EXIT_DIVERGENCE = 4
EXIT_IO = 5

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
TOPOLOGIES = ("interleave", "ring", "mesh", "fixed")
_GEN_PARAMETERS = ("burst", "arrival_rate", "max_packet_length", "latency", "service_rate",
                   "capacity")


def _read(path: str, format_name: Optional[str]):
    kind = None if format_name is None else DocumentKind.from_name(format_name)
    try:
        return read_document(path, kind=kind)
    except OSError as error:
        raise FormatError(f"Cannot read '{path}': {error.strerror or error}.") from error


def _option_overrides(args: argparse.Namespace) -> Dict[str, object]:
    overrides: Dict[str, object] = {}
    if args.multiplexing is not None:
        overrides["multiplexing"] = Multiplexing(args.multiplexing)
    if args.shaping is not None:
        overrides["input_shaping"] = args.shaping
    if args.packetizer is not None:
        overrides["packetizer"] = args.packetizer
    if args.ceil is not None:
        overrides["ceil_precision"] = (DEFAULT_CEIL_PRECISION if args.ceil == "" else
                                       parse_quantity(args.ceil, Dimension.TIME, "s"))
    return overrides


def run_analyze(args: argparse.Namespace) -> int:
    """Analyses a network file and writes "<out>.json" and "<out>.md"."""
    document = _read(args.input, args.format)
    analyzer = Analyzer(verbose=args.verbose)
    network = analyzer.set_network(convert(document, DocumentKind.OUTPUT_PORT_JSON).payload)
    overrides = _option_overrides(args)
    if overrides:
        analyzer.options = network.options.replace(**overrides)
        logger.info(f"Analysis options: {analyzer.options}.")
    for cls in resolve_methods(args.methods):
        result = analyzer.run(cls)
        print(f"{result.method}: done in {result.execution_time * 1e3:.3f} ms", flush=True)
    base = args.out or os.path.splitext(args.input)[0] + "-report"
    for path in analyzer.export(base):
        print(f"wrote {path}")
    return EXIT_OK


def run_convert(args: argparse.Namespace) -> int:
    """Converts a network file into the other format, or re-emits it normalized."""
    document = _read(args.input, args.format)
    target = DocumentKind.from_name(args.to)
    text = serialize(convert(document, target))
    out = args.out
    if out is None:
        out = os.path.splitext(args.input)[0] + target.extension
        if os.path.abspath(out) == os.path.abspath(args.input):
            out = os.path.splitext(args.input)[0] + "-normalized" + target.extension
    write_atomic(out, text)
    print(f"wrote {out}")
    return EXIT_OK


def _parameter(text: str):
    if ":" in text:
        low, high = text.split(":", 1)
        return low, high
    return text


def _read_connections(path: str) -> Dict[str, List[str]]:
    try:
        with open(path, encoding="utf-8") as file:
            connections = json.load(file)
    except OSError as error:
        raise FormatError(f"Cannot read '{path}': {error.strerror or error}.") from error
    except json.JSONDecodeError as error:
        raise FormatError(f"The connections file '{path}' is not valid JSON: {error}.") from None
    if not isinstance(connections, dict) or not all(
            isinstance(neighbors, list) for neighbors in connections.values()):
        raise FormatError(f"The connections file '{path}' must hold an object mapping every "
                          f"switch to the list of its neighbors.")
    return connections


def run_generate(args: argparse.Namespace) -> int:
    """Generates a network and writes it as a JSON document."""
    given = {name: _parameter(getattr(args, name)) for name in _GEN_PARAMETERS
             if getattr(args, name) is not None}
    params = GenParams(seed=args.seed, **given)
    options = AnalysisOptions().replace(**_option_overrides(args))
    if args.topology == "fixed":
        if args.connections is None:
            raise FormatError("A fixed topology needs a connections file (--connections).")
        network = gen_fixed_topology(args.flows, _read_connections(args.connections), params,
                                     options=options)
    else:
        if args.size is None:
            raise FormatError(f"A {args.topology} network needs a size (--size).")
        generate = {"interleave": gen_interleave, "ring": gen_ring, "mesh": gen_mesh}
        network = generate[args.topology](args.size, params, options=options)
    out = args.out or f"{network.name}.json"
    save_network(network, out)
    print(f"wrote {out}")
    return EXIT_OK


def _add_option_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("analysis options")
    group.add_argument("--multiplexing", type=str.upper, choices=[m.value for m in Multiplexing],
                       help="multiplexing policy of every server")
    shaping = group.add_mutually_exclusive_group()
    shaping.add_argument("--shaping", dest="shaping", action="store_const", const=True,
                         help="bound server inputs by the shapers of upstream links")
    shaping.add_argument("--no-shaping", dest="shaping", action="store_const", const=False)
    packetizer = group.add_mutually_exclusive_group()
    packetizer.add_argument("--packetizer", dest="packetizer", action="store_const", const=True,
                            help="account for store-and-forward packetization")
    packetizer.add_argument("--no-packetizer", dest="packetizer", action="store_const",
                            const=False)
    group.add_argument("--ceil", nargs="?", const="", metavar="PRECISION",
                       help="round delays up to PRECISION (e.g. 1ns) in fixed-point iterations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsnc", description="Worst-case delay analysis of time-sensitive networks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="debug logging and progress bars")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="analyse a network file and write reports")
    analyze.add_argument("input", help="network file (.xml or .json)")
    analyze.add_argument("--format", help="format of the input: xml or json")
    analyze.add_argument("--methods", nargs="+", default=[ALL_METHODS],
                         choices=sorted(METHODS) + [ALL_METHODS.upper()], type=str.upper,
                         metavar="METHOD", help=f"one or more of {sorted(METHODS)} or 'all'")
    analyze.add_argument("--out", help="base path of the reports, '<input>-report' by default")
    _add_option_flags(analyze)
    analyze.set_defaults(handler=run_analyze)

    convert_parser = subparsers.add_parser("convert", help="convert a network file")
    convert_parser.add_argument("input", help="network file (.xml or .json)")
    convert_parser.add_argument("--format", help="format of the input: xml or json")
    convert_parser.add_argument("--to", required=True, type=str.lower, choices=["xml", "json"])
    convert_parser.add_argument("--out", help="output file")
    convert_parser.set_defaults(handler=run_convert)

    generate = subparsers.add_parser("generate", help="generate a network file")
    generate.add_argument("topology", choices=TOPOLOGIES)
    generate.add_argument("--size", type=int, help="number of servers")
    generate.add_argument("--flows", type=int, default=1, help="number of flows (fixed)")
    generate.add_argument("--connections", help="JSON file mapping switches to neighbors")
    generate.add_argument("--seed", type=int)
    generate.add_argument("--out", help="output file, '<network>.json' by default")
    for name in _GEN_PARAMETERS:
        generate.add_argument(f"--{name.replace('_', '-')}", dest=name, metavar="VALUE",
                              help=f"{name.replace('_', ' ')}, a quantity or LOW:HIGH")
    _add_option_flags(generate)
    generate.set_defaults(handler=run_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format=LOG_FORMAT, stream=sys.stderr)
    try:
        return args.handler(args)
    except UnstableError as error:
        logger.error(f"Unstable network: {error}")
        return EXIT_UNSTABLE
    except DivergenceError as error:
        logger.error(f"Divergence: {error}")
        return EXIT_DIVERGENCE
    except (NetworkCalculusError, ValueError) as error:
        logger.error(str(error))
        return EXIT_PARSE
    except OSError as error:
        logger.error(f"Cannot write output: {error}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
