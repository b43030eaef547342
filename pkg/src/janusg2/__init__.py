"""Photon statistics of superposed single-mode squeezed vacua.

Closed-form second-order coherence (g2) of the two-state superposition
|chi||xi> + |eta| e^{i delta}|zeta>, an independent truncated Fock-space
oracle validating every formula, constrained minimization of g2 over the
parameter space, and serialization of gridded scans for plotting.
"""

__version__ = "0.1.0"

from .analytic import (
    cross_n,
    cross_n2,
    g2_boundary,
    g2_boundary_series,
    g2_equal_squeeze,
    g2_general,
    g2_optimal,
    norm_residual,
    optimal_phase_K,
    overlap,
    phase_geometry,
    reduced_vars,
    solve_chi,
)
from .fock import (
    FockVector,
    adaptive_cutoff,
    cross_moment_fock,
    g2_fock,
    moments,
    odd_cat,
    squeezed_fock,
    superpose,
    truncation_bound,
)
from .optimize import boundary_curve, grid_min, refine_local, table_s1
from .params import (
    Axis,
    GridSpec,
    JanusParams,
    OptimumRecord,
    PhaseGeometry,
    ReducedVars,
    SqueezeParam,
)
from .scanio import ScanResult, boundary_scan, read_scan, run_scan, write_scan

__all__ = [
    "__version__",
    "SqueezeParam",
    "JanusParams",
    "ReducedVars",
    "PhaseGeometry",
    "OptimumRecord",
    "Axis",
    "GridSpec",
    "reduced_vars",
    "overlap",
    "norm_residual",
    "solve_chi",
    "cross_n",
    "cross_n2",
    "g2_general",
    "phase_geometry",
    "g2_equal_squeeze",
    "g2_optimal",
    "g2_boundary",
    "g2_boundary_series",
    "optimal_phase_K",
    "FockVector",
    "squeezed_fock",
    "superpose",
    "moments",
    "g2_fock",
    "odd_cat",
    "cross_moment_fock",
    "truncation_bound",
    "adaptive_cutoff",
    "boundary_curve",
    "grid_min",
    "refine_local",
    "table_s1",
    "ScanResult",
    "run_scan",
    "boundary_scan",
    "write_scan",
    "read_scan",
]
