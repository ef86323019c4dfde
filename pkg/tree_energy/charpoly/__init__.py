from tree_energy.charpoly.matchings import (
    matching_counts,
    matching_counts_by_deletion,
    matching_generating_poly,
)
from tree_energy.charpoly.pair import (
    CharPolyPair,
    char_poly_pair,
    cut_edge_identity_check,
    phi_from_phi_tilde,
    phi_tilde,
    subdiv_phi_sequence,
    subdiv_phi_tilde_sequence,
)

__all__ = [
    "CharPolyPair",
    "char_poly_pair",
    "cut_edge_identity_check",
    "matching_counts",
    "matching_counts_by_deletion",
    "matching_generating_poly",
    "phi_from_phi_tilde",
    "phi_tilde",
    "subdiv_phi_sequence",
    "subdiv_phi_tilde_sequence",
]
