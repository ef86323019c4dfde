from enum import Enum
from typing import Any


class ClaimTag(str, Enum):
    """Claims the verifier can re-check mechanically"""

    fourth_max = "fourth-max"
    broom_short_arm = "broom-short-arm"
    broom_long_arm = "broom-long-arm"
    broom_longest_arm = "broom-longest-arm"
    broom_bound = "broom-bound"
    two_leg_chain = "two-leg-chain"
    starlike_max = "starlike-max"
    spider_vs_two_leg = "spider-vs-two-leg"
    broom_vs_two_leg = "broom-vs-two-leg"
    three_arm_vs_two_leg = "three-arm-vs-two-leg"
    top_list = "top-list"
    grafting = "grafting"


claims_metadata: list[dict[str, Any]] = [
    {
        "name": ClaimTag.fourth_max,
        "min_order": 10,
        "description": "E(S(n;2,6,n-9)) > E(T(n;2,2|2,2))",
    },
    {
        "name": ClaimTag.broom_short_arm,
        "min_order": 6,
        "description": "every T(n;1,b|c,d) is quasi-order below S(n;1,2,n-4)",
    },
    {
        "name": ClaimTag.broom_long_arm,
        "min_order": 12,
        "description": "T(n;a,2|2,2) is quasi-order below T(n;2,2|2,2) for 3 <= a <= n-9",
    },
    {
        "name": ClaimTag.broom_longest_arm,
        "min_order": 11,
        "description": "E(T(n;n-8,2|2,2)) < E(T(n;2,2|2,2))",
    },
    {
        "name": ClaimTag.broom_bound,
        "min_order": 11,
        "description": "E(T(n;a,b|c,d)) < E(T(n;2,2|2,2)) when all arms are >= 2, not all 2",
    },
    {
        "name": ClaimTag.two_leg_chain,
        "min_order": 7,
        "description": "the two-leg trees S(n;2,a,b) form a strict quasi-order chain",
    },
    {
        "name": ClaimTag.starlike_max,
        "min_order": 11,
        "description": "S(n;4,4,n-9) and S(n;2,2,2,n-7) top the three-arm and many-arm trees",
    },
    {
        "name": ClaimTag.spider_vs_two_leg,
        "min_order": 10,
        "description": "E(S(n;2,2,2,n-7)) < E(S(n;2,1,n-4))",
    },
    {
        "name": ClaimTag.broom_vs_two_leg,
        "min_order": 22,
        "description": "E(T(n;2,2|2,2)) < E(S(n;2,1,n-4))",
    },
    {
        "name": ClaimTag.three_arm_vs_two_leg,
        "min_order": 31,
        "description": "E(S(n;4,4,n-9)) < E(S(n;2,7,n-10))",
    },
    {
        "name": ClaimTag.top_list,
        "min_order": 31,
        "description": "P(n) and the first (n-9)//2 two-leg trees are the (n-7)//2 largest energies",
    },
    {
        "name": ClaimTag.grafting,
        "min_order": 4,
        "description": "edge grafting moves trees along the quasi-order by arm parity",
    },
]

MIN_ORDER: dict[ClaimTag, int] = {
    ClaimTag(entry["name"]): int(entry["min_order"]) for entry in claims_metadata
}
