"""Exact q-series, modular forms, mode conversions, root-system traces and an
affine vacuum-module oracle for graded traces of vertex operator algebras."""
from .qseries import QSeries, delta, eisenstein, eta_pow, g2, jfunction, named_form
from .modforms import cusp_space, delta_module_closure, membership, mk_space, p_space, serre_delta
from .rootsys import RootSystem, build

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "RootSystem",
    "build",
    "cusp_space",
    "delta",
    "delta_module_closure",
    "eisenstein",
    "eta_pow",
    "g2",
    "jfunction",
    "membership",
    "mk_space",
    "named_form",
    "p_space",
    "serre_delta",
]
