"""Graph energy, weighted Laplacian energies, and topological indices."""

from ._core import (
    Bipartition,
    Graph,
    IndexReport,
    ParseError,
    Spectrum,
    SymMatrix,
    VerificationRecord,
    WeightVector,
    adjacency_matrix,
    bipartition,
    check_bipartite_lower,
    check_sandwich,
    check_upper_bound,
    check_vt_equality,
    diameter,
    distance_matrix,
    energy_report,
    first_zagreb,
    forgotten,
    generate,
    graph_energy,
    index_report,
    is_connected,
    is_regular,
    laplacian_energy,
    load_graph_file,
    mean_deviation,
    nanotorus,
    parse_edge_list,
    parse_graph6,
    radius,
    signless_weighted_laplacian,
    symmetric_eigenvalues,
    to_edge_list,
    to_graph6,
    total_eccentricity,
    variance,
    weight_vector,
    weighted_laplacian,
    wiener,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
