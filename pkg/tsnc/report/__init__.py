"""
This module gathers the reports of analysis results: a Markdown report for humans and a JSON
report for machines.
"""
from .base import ResultSet
from .json_report import REPORT_UNITS, report_dict, export_json
from .markdown import DISPLAY_UNITS, FALLBACK_UNIT, display_unit, export_markdown

__all__ = [
    "ResultSet",
    "REPORT_UNITS",
    "report_dict",
    "export_json",
    "DISPLAY_UNITS",
    "FALLBACK_UNIT",
    "display_unit",
    "export_markdown",
]
