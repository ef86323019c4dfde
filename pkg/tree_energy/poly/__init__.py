from tree_energy.poly.exact import ExactPoly
from tree_energy.poly.sturm import (
    IsolatingInterval,
    SignKind,
    SignPiece,
    SignProfile,
    SturmChain,
    count_roots,
    isolate_positive_roots,
    refine,
    sign_profile_on_positive_axis,
    sturm_chain,
)

__all__ = [
    "ExactPoly",
    "IsolatingInterval",
    "SignKind",
    "SignPiece",
    "SignProfile",
    "SturmChain",
    "count_roots",
    "isolate_positive_roots",
    "refine",
    "sign_profile_on_positive_axis",
    "sturm_chain",
]
