"""Two bosons on two sites: exact spectrum, dynamics and mode entanglement.

Units: hbar = 1, energies in units of eps1, times in units of hbar/eps1.
"""

from .dynamics import (
    Basis,
    EnergyDistribution,
    QutritState,
    evolve,
    find_orthogonality_time,
    jacobi_eigh,
    mode_occupation_stats,
    populations,
    prepare_state,
    propagator_oracle,
    survival_amplitude,
    to_energy,
    to_fock,
)
from .entanglement import concurrence, concurrence_series, linear_entropy, population_series
from .errors import (
    BranchUnavailable,
    ConfigError,
    DegenerateSpectrum,
    DimerError,
    DomainError,
    InvalidDistribution,
    SiteAsymmetry,
    SymmetryViolation,
)
from .families import (
    FamilyKind,
    Regime,
    RegimeLimit,
    characteristic_time,
    family_distribution,
    limit_concurrence,
    limit_state,
    regime_deviation,
)
from .hamiltonian import (
    HamiltonianParams,
    RawCouplings,
    SymmetricMatrix3,
    build_extended_matrix,
    build_tunneling_matrix,
    load_params,
    reduce_couplings,
)
from .simplex import Region, classify, edge_concurrence, sample_simplex
from .spectral import (
    Frequencies,
    SpectralDecomposition,
    closed_form_eigenvalues,
    spectral_decomposition,
    transition_frequencies,
    tunneling_spectrum,
)

__version__ = "0.1.0"
