"""Exact lattice classification of intersections of cubic fourfold divisors."""

from __future__ import annotations

from importlib import import_module
from typing import TYPE_CHECKING, Any

__version__ = "0.1.0"

__all__ = [
    "FamilyRegistry",
    "IntersectionReport",
    "__version__",
    "classify_component",
    "dp6_report",
    "quadric_report",
    "run_report",
    "run_verify",
    "sieve",
]

if TYPE_CHECKING:
    from .brauer import dp6_report, quadric_report
    from .families import FamilyRegistry, classify_component
    from .overlattice import sieve
    from .reporting import IntersectionReport, run_report, run_verify


def __getattr__(name: str) -> Any:
    """Import the public entry points lazily so ``--help`` stays cheap."""

    module_map = {
        "FamilyRegistry": "families",
        "classify_component": "families",
        "sieve": "overlattice",
        "dp6_report": "brauer",
        "quadric_report": "brauer",
        "IntersectionReport": "reporting",
        "run_report": "reporting",
        "run_verify": "reporting",
    }

    if name not in module_map:
        raise AttributeError(f"module '{__name__}' has no attribute '{name}'")

    module = import_module(f".{module_map[name]}", __name__)
    return getattr(module, name)
