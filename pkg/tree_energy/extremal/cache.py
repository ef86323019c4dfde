"""File-backed energy cache.

``energies.tsv`` holds one record per line::

    <canonical code>\\t<phi-tilde text>\\t<midpoint>\\t<radius>

Midpoints and radii are written with ``repr`` so they read back bit-exact.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from loguru import logger

from tree_energy.config import config
from tree_energy.energy import EnergyValue
from tree_energy.poly import ExactPoly

__all__ = ["EnergyCache", "CACHE_FILE"]

CACHE_FILE = "energies.tsv"


class EnergyCache:
    """canonical code -> (phi-tilde, certified energy), persisted on demand"""

    def __init__(self, directory: Optional[Path] = None) -> None:
        self.path = None if directory is None else Path(directory) / CACHE_FILE
        self._records: dict[str, tuple[ExactPoly, EnergyValue]] = {}
        self._pending: list[str] = []
        if self.path is not None:
            self._load()

    @classmethod
    def from_config(cls) -> EnergyCache:
        if config.cache.enabled and config.cache.dir is not None:
            return cls(config.cache.dir)
        return cls()

    def _load(self) -> None:
        assert self.path is not None
        try:
            lines = self.path.read_text().splitlines()
        except FileNotFoundError:
            logger.debug(f'no energy cache at "{self.path}" yet')
            return
        for number, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                code, poly, midpoint, radius = line.split("\t")
                self._records[code] = (
                    ExactPoly.parse(poly),
                    EnergyValue(midpoint=float(midpoint), radius=float(radius)),
                )
            except ValueError:
                logger.warning(f'skipping malformed cache line {number} in "{self.path}"')
        logger.info(f'loaded {len(self._records)} cached energies from "{self.path}"')

    def __len__(self) -> int:
        return len(self._records)

    def get(self, code: str, tol: float) -> Optional[tuple[ExactPoly, EnergyValue]]:
        """The cached record if its radius already meets tol."""
        record = self._records.get(code)
        if record is None or record[1].radius > tol:
            return None
        return record

    def put(self, code: str, poly: ExactPoly, value: EnergyValue) -> None:
        known = self._records.get(code)
        if known is not None and known[1].radius <= value.radius:
            return
        self._records[code] = (poly, value)
        self._pending.append(code)

    def save(self) -> None:
        """Append the records added since the last save; later lines win on load."""
        if self.path is None or not self._pending:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as f:
            for code in self._pending:
                poly, value = self._records[code]
                f.write(f"{code}\t{poly.to_text()}\t{value.midpoint!r}\t{value.radius!r}\n")
        logger.debug(f'wrote {len(self._pending)} energies to "{self.path}"')
        self._pending.clear()
