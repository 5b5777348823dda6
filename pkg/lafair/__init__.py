"""lafair: log-aesthetic surface filter, curves and fairing energies"""

from .lafair import LAFAIR_ROOT, LAFAIR_VERSION
from .src import cfg, curvature, curve, filter, functionals, logs, mesh, util
from .src.cfg import Config, Schema
from .src.curve import LACurveParams, Polyline2D, lcg_slope, sample_curve
from .src.filter import FilterConfig, FilterReport, filter_step
from .src.functionals import EnergyReport, energy_report
from .src.mesh import ScalarField, TriangleMesh, gen_mesh, load_mesh, save_mesh

__all__ = [
    "LAFAIR_ROOT",
    "LAFAIR_VERSION",
    "cfg",
    "curvature",
    "curve",
    "filter",
    "functionals",
    "logs",
    "mesh",
    "util",
    # cfg
    "Config",
    "Schema",
    # mesh
    "ScalarField",
    "TriangleMesh",
    "gen_mesh",
    "load_mesh",
    "save_mesh",
    # curve
    "LACurveParams",
    "Polyline2D",
    "lcg_slope",
    "sample_curve",
    # filter
    "FilterConfig",
    "FilterReport",
    "filter_step",
    # functionals
    "EnergyReport",
    "energy_report",
]
