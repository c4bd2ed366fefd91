"""Skew spectra and skew energy of oriented graphs, with an exhaustive
extremal search over oriented unicyclic graphs."""

from .charpoly import (
    InvariantViolation,
    SkewCoeffs,
    berkowitz,
    coeffs_combinatorial,
    coeffs_exact,
    coeffs_unicyclic,
    family_coeffs,
    verify_pendant_recurrence,
)
from .energy import (
    EnergyReport,
    coulson_integral,
    energy_coulson,
    energy_report,
    energy_spectral,
    jacobi_eigenvalues,
    quartic_energy,
    quasi_compare,
    spectrum,
)
from .extremal import (
    SearchRecord,
    VerificationReport,
    canonical_key,
    enumerate_unicyclic,
    search_extremal,
    verify_claims,
)
from .graph import (
    Graph,
    LinearSubgraph,
    enumerate_evenly_linear,
    girth,
    is_unicyclic,
    make_family,
    matching_counts,
    unique_cycle,
)
from .orient import (
    MINUS,
    PLUS,
    OrientedGraph,
    cycle_parity,
    orient_unicyclic,
    skew_matrix,
    switch,
    switching_equivalent,
)

__version__ = "0.1.0"
