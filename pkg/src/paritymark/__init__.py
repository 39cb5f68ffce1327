"""Dual-channel source code watermarking over constrained GF(2) parity checks."""

from paritymark.source_model import ParseError, SubjectProgram, parse, render
from paritymark.config import ToolkitConfig
from paritymark.orgs import OrganizationProfile, Registry
from paritymark.engine import WatermarkReport, extract, insert

__all__ = [
    "ParseError",
    "SubjectProgram",
    "parse",
    "render",
    "ToolkitConfig",
    "OrganizationProfile",
    "Registry",
    "WatermarkReport",
    "extract",
    "insert",
]

__version__ = "0.1.0"
