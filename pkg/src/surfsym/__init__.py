"""Exact detection of involutions of polynomially parametrized surfaces.

``analyze`` returns every axial, planar and central symmetry of the surface
together with its axis of revolution when there is one.
"""
from .arith import BACKEND
from .classifier import Involution, Line, Plane, Point, SymmetryReport
from .engine import analyze
from .surface import Parametrization

__all__ = ["BACKEND", "Involution", "Line", "Parametrization", "Plane", "Point",
           "SymmetryReport", "analyze", "parse_input"]
__version__ = "0.1.0"


def __getattr__(name):
    # imported lazily so that ``python3 -m surfsym.cli`` does not import cli twice
    if name == "parse_input":
        from .cli import parse_input
        return parse_input
    raise AttributeError(f"module 'surfsym' has no attribute {name!r}")
