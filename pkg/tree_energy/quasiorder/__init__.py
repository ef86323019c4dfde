from tree_energy.quasiorder.compare import (
    compare,
    compare_forests,
    family_compare_double,
    family_compare_single,
    quasiorder_implies_energy,
    replay,
)
from tree_energy.quasiorder.types import (
    BaseComparison,
    FamilyDominanceCertificate,
    Inconclusive,
    QuasiOrderVerdict,
    Relation,
)

__all__ = [
    "BaseComparison",
    "FamilyDominanceCertificate",
    "Inconclusive",
    "QuasiOrderVerdict",
    "Relation",
    "compare",
    "compare_forests",
    "family_compare_double",
    "family_compare_single",
    "quasiorder_implies_energy",
    "replay",
]
