from __future__ import annotations

from multiprocessing import Pool
from typing import Optional

from loguru import logger
from pydantic import BaseModel, Field

from tree_energy.charpoly import phi_tilde
from tree_energy.config import config
from tree_energy.energy import EnergyValue, energies_equal, energy_from_phi_tilde
from tree_energy.errors import UnresolvedTie
from tree_energy.extremal.cache import EnergyCache
from tree_energy.extremal.enumeration import enumerate_trees
from tree_energy.graph import Forest, format_spec, recognize
from tree_energy.poly import ExactPoly
from tree_energy.quasiorder import Relation, compare

__all__ = ["RankingEntry", "rank_by_energy", "rank_forests"]


class RankingEntry(BaseModel):
    """One tree in a ranking by energy, largest first"""

    rank: int = Field(..., ge=1, description="position in the ranking, from 1")
    code: str = Field(..., description="canonical code of the tree")
    spec: Optional[str] = Field(None, description="P/S/T spec when the shape is recognized")
    energy: EnergyValue
    phi_tilde: str = Field(..., description="phi-tilde in text form")
    tie_group: int = Field(
        ..., description="entries with provably equal energy share a group"
    )


def _evaluate(job: tuple[ExactPoly, float]) -> EnergyValue:
    poly, tol = job
    return energy_from_phi_tilde(poly, tol)


def _energies(
    polys: list[ExactPoly], tol: float, jobs: int
) -> list[EnergyValue]:
    work = [(p, tol) for p in polys]
    if jobs > 1 and len(work) > 1:
        with Pool(processes=min(jobs, len(work))) as pool:
            return pool.map(_evaluate, work, chunksize=max(1, len(work) // (4 * jobs)))
    return [_evaluate(item) for item in work]


class _Ranking:
    """Mutable state of one ranking run."""

    def __init__(self, trees: list[Forest], jobs: int, cache: EnergyCache) -> None:
        self.trees = trees
        self.codes = [t.code for t in trees]
        self.jobs = jobs
        self.cache = cache
        self.polys: list[ExactPoly] = []
        self.values: list[EnergyValue] = []
        self.equal_pairs: set[frozenset[int]] = set()

    def evaluate(self, indices: list[int], tol: float) -> None:
        missing = []
        for i in indices:
            hit = self.cache.get(self.codes[i], tol)
            if hit is None:
                missing.append(i)
            else:
                self.polys[i], self.values[i] = hit
        computed = _energies([self.polys[i] for i in missing], tol, self.jobs)
        for i, value in zip(missing, computed):
            self.values[i] = value
            self.cache.put(self.codes[i], self.polys[i], value)

    def start(self, tol: float) -> None:
        self.polys = [phi_tilde(t) for t in self.trees]
        self.values = [EnergyValue(midpoint=0.0) for _ in self.trees]
        self.evaluate(list(range(len(self.trees))), tol)

    def order(self) -> list[int]:
        return sorted(
            range(len(self.trees)), key=lambda i: (-self.values[i].midpoint, self.codes[i])
        )

    def tied(self, i: int, j: int) -> bool:
        return self.polys[i] == self.polys[j] or frozenset((i, j)) in self.equal_pairs

    def settle(self, order: list[int], limit: int) -> list[tuple[int, int]]:
        """Resolve overlapping neighbours in the first `limit` places.

        Passes repeat until one makes no swap. Returns the pairs only a
        tighter radius can separate.
        """
        while True:
            swapped, open_pairs = False, []
            for pos in range(min(limit, len(order) - 1)):
                i, j = order[pos], order[pos + 1]
                if not self.values[i].overlaps(self.values[j]) or self.tied(i, j):
                    continue
                relation = compare(self.polys[i], self.polys[j]).relation
                if relation == Relation.strictly_greater:
                    continue
                if relation == Relation.strictly_less:
                    order[pos], order[pos + 1] = j, i
                    swapped = True
                    continue
                if energies_equal(self.polys[i], self.polys[j]):
                    self.equal_pairs.add(frozenset((i, j)))
                    continue
                open_pairs.append((i, j))
            if not swapped:
                return open_pairs


def rank_forests(
    trees: list[Forest], top: Optional[int] = None, jobs: Optional[int] = None
) -> list[RankingEntry]:
    """Rank the given trees by certified energy, largest first."""
    jobs = config.workers.jobs if jobs is None else jobs
    limit = len(trees) if top is None else min(top, len(trees))
    cache = EnergyCache.from_config()
    state = _Ranking(trees, jobs, cache)
    tol = config.numerics.rank_tol
    state.start(tol)

    while True:
        order = state.order()
        open_pairs = state.settle(order, limit)
        if not open_pairs:
            break
        if tol <= config.numerics.min_tol:
            i, j = open_pairs[0]
            raise UnresolvedTie(state.codes[i], state.codes[j], tol)
        tol = max(tol / 100, config.numerics.min_tol)
        involved = sorted({i for pair in open_pairs for i in pair})
        logger.info(f"tightening {len(involved)} energies to radius {tol:.0e}")
        state.evaluate(involved, tol)
    cache.save()

    entries: list[RankingEntry] = []
    group = 0
    for pos, i in enumerate(order[:limit]):
        if pos == 0 or not state.tied(order[pos - 1], i):
            group += 1
        spec = recognize(trees[i])
        entries.append(
            RankingEntry(
                rank=pos + 1,
                code=state.codes[i],
                spec=None if spec is None else format_spec(spec),
                energy=state.values[i],
                phi_tilde=state.polys[i].to_text(),
                tie_group=group,
            )
        )
    return entries


def rank_by_energy(
    n: int, top: Optional[int] = None, jobs: Optional[int] = None
) -> list[RankingEntry]:
    """Every free tree of order n ranked by energy; only the first `top` are returned."""
    trees = list(enumerate_trees(n))
    logger.info(f"ranking {len(trees)} trees of order {n}")
    return rank_forests(trees, top, jobs)
