"""Normalized Laplacian spectra, the general Randic index R_{-1}, and eigenvalue bounds."""
from .eigbounds import (
    BoundInterval,
    classical_bounds,
    corollary_degree_bounds,
    delta_from_randic,
    dominance_check,
    theorem_bounds,
)
from .graph import (
    Graph,
    GraphError,
    degree_sequence,
    enumerate_connected,
    from_edge_list,
    gen_family,
    gen_random_connected,
    is_connected,
)
from .randic import (
    randic_bounds_degrees,
    randic_bounds_from_extreme_eigs,
    randic_lower_global,
    randic_minus_one,
)
from .report import Report, evaluate
from .rootbounds import MomentSummary, lupas_interval, moments_from_coefficients, moments_from_values
from .spectral import Spectrum, eigenvalues_symmetric, graph_spectrum, moment_check, normalized_laplacian

__version__ = "0.1.0"
