"""Exact chromatic quasisymmetric functions of acyclically oriented graphs."""

from .engine import ascent_count, coefficient, cqf, max_ascent_colorings
from .graph import OrientedGraph, canonical_form, natural_graph
from .poly import QPoly
from .qsym import QSymElement, e_expand, is_e_positive, is_symmetric, quasi_shuffle

__all__ = [
    "OrientedGraph",
    "QPoly",
    "QSymElement",
    "ascent_count",
    "canonical_form",
    "coefficient",
    "cqf",
    "e_expand",
    "is_e_positive",
    "is_symmetric",
    "max_ascent_colorings",
    "natural_graph",
    "quasi_shuffle",
]

__version__ = "0.1.0"
