from tree_energy.energy.coulson import LogRatio, energy_diff_coulson, log_ratio_integral
from tree_energy.energy.dominance import (
    classify_dominance,
    d_sequence_at,
    dominance_from_bases,
)
from tree_energy.energy.roots import (
    algebraic_energy,
    energies_equal,
    energy,
    energy_from_phi_tilde,
    squared_spectrum_poly,
)
from tree_energy.energy.types import (
    DominanceMode,
    DominanceResult,
    EnergyValue,
    NegativeInterval,
    Quadrature,
)

__all__ = [
    "DominanceMode",
    "DominanceResult",
    "EnergyValue",
    "LogRatio",
    "NegativeInterval",
    "Quadrature",
    "algebraic_energy",
    "classify_dominance",
    "d_sequence_at",
    "dominance_from_bases",
    "energies_equal",
    "energy",
    "energy_diff_coulson",
    "energy_from_phi_tilde",
    "log_ratio_integral",
    "squared_spectrum_poly",
]
