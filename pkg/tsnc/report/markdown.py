"""
This module contains the human-readable Markdown report.
"""
from typing import Iterable, List, Tuple

import pandas as pd

from tsnc.model import to_unit
from tsnc.report.base import ResultSet

__all__ = ["DISPLAY_UNITS", "FALLBACK_UNIT", "display_unit", "export_markdown"]

DISPLAY_UNITS = ("s", "ms", "us", "ns")
FALLBACK_UNIT = "ns"
DECIMALS = 3


def display_unit(values: Iterable[float]) -> str:
    """The largest time unit in which the smallest positive value is at least one.

    Args:
        values (Iterable[float]): Durations in seconds.

    Returns:
        (str): One of "s", "ms", "us" and "ns". "ns" if no value is positive.
    """
    positive = [value for value in values if value > 0]
    if not positive:
        return FALLBACK_UNIT
    smallest = min(positive)
    for unit in DISPLAY_UNITS:
        if to_unit(smallest, unit) >= 1.:
            return unit
    return FALLBACK_UNIT


def _table(frame: pd.DataFrame) -> str:
    # tabulate only substitutes `missingval` for None, not for NaN
    cells = frame.astype(object).where(frame.notna(), None)
    return cells.to_markdown(floatfmt=f".{DECIMALS}f", missingval="-")


def _delay_table(frame: pd.DataFrame) -> Tuple[str, str]:
    unit = display_unit(frame.stack().tolist())
    return unit, _table(frame * to_unit(1., unit))


def _dot(result_set: ResultSet) -> List[str]:
    lines = [f'digraph "{result_set.name}" {{']
    for source, targets in result_set.topology().items():
        lines.append(f'    "{source}";')
        lines.extend(f'    "{source}" -> "{target}";' for target in targets)
    lines.append("}")
    return lines


def export_markdown(result_set: ResultSet) -> str:
    """Writes the human-readable report.

    The report has six sections: the end-to-end delay of every flow with a last column holding
    the minimum over the methods, the delay of every server, the execution time of every method,
    the network topology as an adjacency list and a DOT graph, the flow paths and the link
    utilization. Each delay and time table is shown in the largest unit in which its smallest
    positive value is at least one, with three decimals.

    Args:
        result_set (ResultSet): The results, at least one.

    Returns:
        (str): The Markdown text.
    """
    result_set.check_not_empty()
    lines = [f"# Delay analysis of {result_set.name}", ""]

    flows = result_set.flow_delays()
    flows["min"] = flows.min(axis=1)
    unit, table = _delay_table(flows)
    lines += [f"## Flow end-to-end delay ({unit})", "", table, ""]

    unit, table = _delay_table(result_set.server_delays())
    lines += [f"## Server delay ({unit})", "", table, ""]

    times = result_set.execution_times()
    unit = display_unit(times.tolist())
    times = (times * to_unit(1., unit)).rename_axis("method").to_frame()
    lines += [f"## Execution time ({unit})", "", _table(times), ""]

    lines += ["## Network topology", ""]
    for source, targets in result_set.topology().items():
        lines.append(f"- {source}: {', '.join(targets) if targets else '-'}")
    lines += ["", "```dot"] + _dot(result_set) + ["```", ""]

    lines += ["## Flow paths", ""]
    lines += [f"- {flow}: {' -> '.join(path)}" for flow, path in result_set.paths().items()]
    lines.append("")

    utilization = pd.Series(result_set.utilization(), name="utilization", dtype=float)
    lines += ["## Link utilization", "",
              utilization.rename_axis("server").to_frame().to_markdown(floatfmt="g"), ""]
    return "\n".join(lines)
