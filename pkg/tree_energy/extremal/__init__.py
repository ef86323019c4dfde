from tree_energy.extremal.cache import CACHE_FILE, EnergyCache
from tree_energy.extremal.claims import MIN_ORDER, ClaimTag, claims_metadata
from tree_energy.extremal.enumeration import enumerate_trees, two_leg_members, two_leg_order
from tree_energy.extremal.grafting import (
    branch_reduction_chain,
    grafting_property_check,
    pendant_arms,
    reduce_branching,
    reduce_degree,
)
from tree_energy.extremal.ranking import RankingEntry, rank_by_energy, rank_forests
from tree_energy.extremal.report import Check, ReportBuilder, VerificationReport
from tree_energy.extremal.toplist import (
    PredictedList,
    PrefixAgreement,
    check_against_bruteforce,
    predicted_top_list,
)
from tree_energy.extremal.verify import branch_reduction_report, verify_all, verify_theorem

__all__ = [
    "CACHE_FILE",
    "Check",
    "ClaimTag",
    "EnergyCache",
    "MIN_ORDER",
    "PredictedList",
    "PrefixAgreement",
    "RankingEntry",
    "ReportBuilder",
    "VerificationReport",
    "branch_reduction_chain",
    "branch_reduction_report",
    "check_against_bruteforce",
    "claims_metadata",
    "enumerate_trees",
    "grafting_property_check",
    "pendant_arms",
    "predicted_top_list",
    "rank_by_energy",
    "rank_forests",
    "reduce_branching",
    "reduce_degree",
    "two_leg_members",
    "two_leg_order",
    "verify_all",
    "verify_theorem",
]
