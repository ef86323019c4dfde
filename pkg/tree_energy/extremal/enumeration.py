from __future__ import annotations

from typing import Iterator

import networkx as nx
from loguru import logger

from tree_energy.config import config
from tree_energy.errors import CapExceeded, InvalidOrder
from tree_energy.graph import Forest, StarlikeSpec, canonical_form

__all__ = ["enumerate_trees", "two_leg_order", "two_leg_members"]


def enumerate_trees(n: int) -> Iterator[Forest]:
    """One canonically labeled representative per free tree of order n.

    Trees come out in the order of networkx's level-sequence generator,
    which is fixed for a given n.
    """
    if n < 1:
        raise InvalidOrder(f"trees need at least one vertex, got n={n}")
    if n > config.enumeration.cap:
        raise CapExceeded(
            f"order {n} is above the enumeration cap {config.enumeration.cap}"
        )
    if n == 1:
        yield Forest(1)
        return
    if n == 2:
        yield Forest(2, ((0, 1),))
        return
    logger.debug(f"enumerating free trees of order {n}")
    for graph in nx.nonisomorphic_trees(n):
        yield canonical_form(Forest.from_networkx(graph))


def two_leg_order(n: int) -> list[StarlikeSpec]:
    """The two-leg trees S(n; 2, a, n-3-a) from the quasi-order maximum down.

    Even a ascends 2, 4, .., 2t, then odd a descends 2l+1, .., 3, 1, with
    k = (n-3)//2, t = k//2, l = (k-1)//2.
    """
    if n < 7:
        raise InvalidOrder(f"the two-leg chain needs n >= 7, got {n}")
    k = (n - 3) // 2
    t, l = k // 2, (k - 1) // 2
    firsts = [*range(2, 2 * t + 1, 2), *range(2 * l + 1, 0, -2)]
    return [StarlikeSpec(n=n, arms=(2, a, n - 3 - a)) for a in firsts]


def two_leg_members(n: int) -> list[StarlikeSpec]:
    """Every S(n; 2, a, b) with a + b = n - 3 and 1 <= a <= b, ascending in a."""
    return [StarlikeSpec(n=n, arms=(2, a, n - 3 - a)) for a in range(1, (n - 3) // 2 + 1)]
