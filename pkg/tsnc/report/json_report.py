"""
This module contains the machine-readable report.
"""
import json
from typing import Any, Dict

from tsnc.model import to_unit
from tsnc.report.base import ResultSet

__all__ = ["REPORT_UNITS", "export_json", "report_dict"]

REPORT_UNITS = {"flow_delay": "us", "server_delay": "us", "execution_time": "ms"}


def report_dict(result_set: ResultSet) -> Dict[str, Any]:
    """The machine-readable report as a dictionary, numbers are not rounded."""
    result_set.check_not_empty()
    flow_unit, server_unit = REPORT_UNITS["flow_delay"], REPORT_UNITS["server_delay"]
    flow_delays: Dict[str, Dict[str, float]] = {}
    for flow in result_set.network.flows:
        entry = {result.method: to_unit(result.flow_delays[flow.name], flow_unit)
                 for result in result_set.results if flow.name in result.flow_delays}
        if entry:
            flow_delays[flow.name] = entry
    server_delays: Dict[str, Dict[str, float]] = {}
    for server in result_set.network.servers:
        entry = {result.method: to_unit(result.server_delays[server.name], server_unit)
                 for result in result_set.results if server.name in result.server_delays}
        if entry:
            server_delays[server.name] = entry
    return {
        "name": result_set.name,
        "flow_e2e_delay": flow_delays,
        "server_delay": server_delays,
        "execution_time": {result.method: to_unit(result.execution_time,
                                                  REPORT_UNITS["execution_time"])
                           for result in result_set.results},
        "units": dict(REPORT_UNITS),
    }


def export_json(result_set: ResultSet) -> str:
    """Writes the machine-readable report.

    The keys are "name", "flow_e2e_delay" (flow -> label -> delay), "server_delay"
    (server -> label -> delay), "execution_time" (label -> time) and "units". Delays are in
    microseconds, execution times in milliseconds.

    Args:
        result_set (ResultSet): The results, at least one.

    Returns:
        (str): The JSON text.
    """
    return json.dumps(report_dict(result_set), indent=4) + "\n"
