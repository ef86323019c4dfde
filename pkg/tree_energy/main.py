"""The ``tree-energy`` command line.

Results go to stdout, logs to stderr. Exit status 0 on success, 1 when a
verified claim FAILs, 2 on usage or domain errors.
"""

import csv
import json
import sys
from pathlib import Path
from typing import Any, Literal, Optional

from loguru import logger
from pydantic import BaseModel, Field, ValidationError
from pydantic_settings import (
    BaseSettings,
    CliApp,
    CliPositionalArg,
    CliSubCommand,
    SettingsConfigDict,
    SettingsError,
    get_subcommand,
)

from tree_energy import __version__ as version
from tree_energy.charpoly import char_poly_pair
from tree_energy.config import config
from tree_energy.energy import classify_dominance, energy
from tree_energy.errors import InvalidSpec, TreeEnergyError, VerificationFailure
from tree_energy.extremal import (
    ClaimTag,
    claims_metadata,
    enumerate_trees,
    rank_by_energy,
    verify_all,
)
from tree_energy.graph import Edge, Forest, parse_forest, to_graph6
from tree_energy.quasiorder import (
    FamilyDominanceCertificate,
    Inconclusive,
    compare_forests,
    family_compare_double,
    family_compare_single,
)

__all__ = ["run"]


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def _lines(path: Path) -> list[str]:
    try:
        text = path.read_text()
    except OSError as e:
        raise InvalidSpec(f"cannot read trees from {path}: {e.strerror}") from e
    lines = (line.strip() for line in text.splitlines())
    return [line for line in lines if line and not line.startswith("#")]


def _read_trees(tree: str, file: Optional[Path]) -> list[tuple[str, Forest]]:
    """A spec or graph6 string; ``@path``, like --file, reads one per line."""
    texts = _lines(Path(tree[1:])) if tree.startswith("@") else [tree]
    if file is not None:
        texts.extend(_lines(file))
    if not texts:
        raise InvalidSpec("no trees given")
    return [(text, parse_forest(text)) for text in texts]


def _edge(text: str) -> Edge:
    try:
        u, v = (int(part) for part in text.split("-"))
    except ValueError as e:
        raise InvalidSpec(f"edges are written u-v, got {text!r}") from e
    return (u, v)


def _family_text(record: FamilyDominanceCertificate | Inconclusive) -> str:
    if isinstance(record, Inconclusive):
        return f"Inconclusive ({record.reason})"
    return record.relation.value + (" (strict)" if record.strict else "")


class Charpoly(BaseModel):
    """phi and phi~ of each tree"""

    tree: CliPositionalArg[str] = Field(description="spec, graph6 or @path")
    file: Optional[Path] = Field(None, description="newline-delimited specs or graph6")
    as_json: bool = Field(False, alias="json", description="print JSON")

    def cli_cmd(self) -> None:
        rows = []
        for text, forest in _read_trees(self.tree, self.file):
            pair = char_poly_pair(forest)
            rows.append({"tree": text, "phi": pair.phi.to_text(), "phi_tilde": pair.phi_tilde.to_text()})
        if self.as_json:
            _emit(rows)
            return
        for row in rows:
            print(row["tree"])
            print(f"  phi  = {row['phi']}")
            print(f"  phi~ = {row['phi_tilde']}")


class Energy(BaseModel):
    """certified energy of each tree"""

    tree: CliPositionalArg[str] = Field(description="spec, graph6 or @path")
    file: Optional[Path] = Field(None, description="newline-delimited specs or graph6")
    tol: Optional[float] = Field(None, gt=0, description="radius of the certified interval")
    as_json: bool = Field(False, alias="json", description="print JSON")

    def cli_cmd(self) -> None:
        rows = [
            (text, energy(forest, self.tol)) for text, forest in _read_trees(self.tree, self.file)
        ]
        if self.as_json:
            _emit([{"tree": text, **value.model_dump()} for text, value in rows])
            return
        for text, value in rows:
            print(f"{text}\t{value}")


class Compare(BaseModel):
    """quasi-order relation between two trees or forests"""

    first: CliPositionalArg[str]
    second: CliPositionalArg[str]
    as_json: bool = Field(False, alias="json", description="print JSON")

    def cli_cmd(self) -> None:
        verdict = compare_forests(parse_forest(self.first), parse_forest(self.second))
        if self.as_json:
            _emit(verdict.model_dump(mode="json"))
            return
        line = verdict.relation.value
        if verdict.less_at is not None:
            line += f" (first smaller at x^{verdict.less_at})"
        if verdict.greater_at is not None:
            line += f" (first larger at x^{verdict.greater_at})"
        print(line)


class ProveDominance(BaseModel):
    """bound E(H(k)) - E(G(k)) over a subdivision family, or certify a double family"""

    g: CliPositionalArg[str]
    g_edge: CliPositionalArg[str]
    h: CliPositionalArg[str]
    h_edge: CliPositionalArg[str]
    double: Optional[list[str]] = Field(
        None, description="second edges of G and H, as two u-v values, for double subdivision"
    )
    tol: Optional[float] = Field(None, gt=0, description="error budget of the bound")
    as_json: bool = Field(False, alias="json", description="print JSON")

    def cli_cmd(self) -> None:
        g, h = parse_forest(self.g), parse_forest(self.h)
        e, e2 = _edge(self.g_edge), _edge(self.h_edge)
        if self.double is not None:
            if len(self.double) != 2:
                raise InvalidSpec(f"--double takes two edges, got {len(self.double)}")
            f, f2 = (_edge(text) for text in self.double)
            record = family_compare_double(g, e, f, h, e2, f2)
            if self.as_json:
                _emit(record.model_dump(mode="json"))
                return
            for base in record.bases:
                print(f"G{base.position} vs H{base.position}: {base.verdict.relation.value}")
            print(f"family: {_family_text(record)}")
            return

        result = classify_dominance(g, e, h, e2, self.tol)
        certificate = family_compare_single(g, e, h, e2)
        if self.as_json:
            _emit(
                {
                    "dominance": result.model_dump(mode="json"),
                    "quasi_order": certificate.model_dump(mode="json"),
                }
            )
            return
        print(f"mode: {result.mode.value}")
        print(f"w = {result.w}")
        if result.sign is not None:
            print(f"sign of w: {result.sign.value}")
        for piece in result.negative_set:
            print(f"w < 0 on ({piece.lo}, {'inf' if piece.hi is None else piece.hi})")
        print(f"E(H(k)) - E(G(k)) >= {result.lower_bound_on_gap} for {result.holds_for}")
        if result.exact_zero_gap:
            print("base energies are equal")
        print(f"quasi-order: {_family_text(certificate)}")


class Rank(BaseModel):
    """every tree of order n ranked by energy"""

    n: int = Field(..., description="order of the trees")
    top: Optional[int] = Field(None, gt=0, description="print only the first entries")
    jobs: Optional[int] = Field(None, gt=0, description="worker processes")
    as_json: bool = Field(False, alias="json", description="print JSON")
    csv: bool = Field(False, description="print CSV")
    out: Optional[Literal["text", "json", "csv"]] = Field(
        None, description="output format, overrides --json and --csv"
    )

    def cli_cmd(self) -> None:
        ranking = rank_by_energy(self.n, self.top, self.jobs)
        out = self.out or ("json" if self.as_json else "csv" if self.csv else "text")
        if out == "json":
            _emit([entry.model_dump(mode="json") for entry in ranking])
            return
        if out == "csv":
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(["rank", "code", "spec", "energy", "radius", "tie_group"])
            for entry in ranking:
                writer.writerow(
                    [
                        entry.rank,
                        entry.code,
                        entry.spec or "",
                        repr(entry.energy.midpoint),
                        repr(entry.energy.radius),
                        entry.tie_group,
                    ]
                )
            return
        for entry in ranking:
            print(f"{entry.rank:>5}  {entry.energy}  [{entry.tie_group}]  {entry.spec or entry.code}")


class Enumerate(BaseModel):
    """one canonical representative per free tree of order n"""

    n: int = Field(..., description="order of the trees")
    graph6: bool = Field(False, description="print graph6 instead of canonical codes")

    def cli_cmd(self) -> None:
        for tree in enumerate_trees(self.n):
            print(to_graph6(tree) if self.graph6 else tree.code)


class VerifyPaper(BaseModel):
    """re-check the extremal claims"""

    theorem: Optional[str] = Field(None, description="only this claim, by id")
    n: Optional[int] = Field(None, description="only this order")
    jobs: Optional[int] = Field(None, gt=0, description="worker processes")
    list_claims: bool = Field(False, alias="list", description="list the claims and exit")
    as_json: bool = Field(False, alias="json", description="print JSON")

    def cli_cmd(self) -> None:
        if self.list_claims:
            for entry in claims_metadata:
                print(f"{entry['name'].value:<22} n >= {entry['min_order']:<3} {entry['description']}")
            return
        claims = None
        if self.theorem is not None:
            if self.theorem not in {tag.value for tag in ClaimTag}:
                raise InvalidSpec(f"unknown claim {self.theorem!r}, see --list")
            claims = [ClaimTag(self.theorem)]
        reports = verify_all(claims, None if self.n is None else [self.n], self.jobs)
        if self.as_json:
            _emit([report.model_dump(mode="json") for report in reports])
        else:
            print("\n\n".join(report.to_text() for report in reports))
        failed = [report for report in reports if not report.passed]
        logger.info(f"{len(reports) - len(failed)} of {len(reports)} reports passed")
        for report in failed:
            report.raise_for_failure()


class TreeEnergyCli(BaseSettings):
    """Exact matching polynomials, certified energies and extremal-energy checks for trees"""

    charpoly: CliSubCommand[Charpoly]
    energy: CliSubCommand[Energy]
    compare: CliSubCommand[Compare]
    prove_dominance: CliSubCommand[ProveDominance]
    rank: CliSubCommand[Rank]
    enumerate: CliSubCommand[Enumerate]
    verify_paper: CliSubCommand[VerifyPaper]

    model_config = SettingsConfigDict(
        cli_prog_name="tree-energy",
        cli_kebab_case=True,
        cli_implicit_flags=True,
        env_prefix="TREE_ENERGY__CLI__",
    )

    def cli_cmd(self) -> None:
        command = get_subcommand(self)
        assert command is not None
        command.cli_cmd()  # type: ignore[attr-defined]


def _long_order_flag(arg: str) -> str:
    # single-letter fields only get a short flag
    if arg == "--n" or arg.startswith("--n="):
        return arg[1:]
    return arg


def run(argv: Optional[list[str]] = None) -> int:
    args = [_long_order_flag(arg) for arg in (sys.argv[1:] if argv is None else argv)]
    logger.debug(f"tree-energy {version}, cache dir {config.cache.dir}")
    try:
        CliApp.run(TreeEnergyCli, cli_args=args)
    except VerificationFailure as e:
        logger.error(f"verification failed: {e}")
        return 1
    except TreeEnergyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 2
    except (ValidationError, SettingsError) as e:
        logger.error(f"invalid arguments: {e}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(run())
