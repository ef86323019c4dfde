from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from tree_energy.charpoly.matchings import matching_counts
from tree_energy.errors import VerificationFailure
from tree_energy.graph.forest import Edge, Forest
from tree_energy.graph.operations import subdivide
from tree_energy.poly.exact import ExactPoly

__all__ = [
    "CharPolyPair",
    "char_poly_pair",
    "phi_tilde",
    "phi_from_phi_tilde",
    "cut_edge_identity_check",
    "subdiv_phi_tilde_sequence",
    "subdiv_phi_sequence",
]

_X = ExactPoly.x()


@dataclass(frozen=True)
class CharPolyPair:
    """phi(G, x) and its absolute-coefficient companion for a forest of order n"""

    phi: ExactPoly
    phi_tilde: ExactPoly
    n: int


def _from_counts(counts: list[int], n: int, alternate: bool) -> ExactPoly:
    coeffs = [0] * (n + 1)
    for i, m in enumerate(counts):
        if m:
            coeffs[n - 2 * i] = -m if alternate and i % 2 else m
    return ExactPoly(tuple(coeffs))


def phi_tilde(f: Forest) -> ExactPoly:
    """sum_i m(G, i) x**(n - 2i)"""
    return _from_counts(matching_counts(f), f.n, alternate=False)


def char_poly_pair(f: Forest) -> CharPolyPair:
    counts = matching_counts(f)
    return CharPolyPair(
        phi=_from_counts(counts, f.n, alternate=True),
        phi_tilde=_from_counts(counts, f.n, alternate=False),
        n=f.n,
    )


def phi_from_phi_tilde(p: ExactPoly) -> ExactPoly:
    """Restore the alternating signs: the coefficient of x**(n-2i) gets (-1)**i."""
    n = p.degree
    return ExactPoly(
        tuple(-c if (n - power) % 4 == 2 else c for power, c in enumerate(p.coeffs))
    )


def cut_edge_identity_check(g: Forest, uv: Edge) -> bool:
    """phi(G) == phi(G - uv) - phi(G - u - v), every edge of a forest being a cut edge."""
    u, v = g.check_edge(uv)
    lhs = char_poly_pair(g).phi
    rhs = char_poly_pair(g.without_edge((u, v))).phi - char_poly_pair(
        g.without_vertices((u, v))
    ).phi
    return lhs == rhs


def _sequence(
    g: Forest, e: Edge, kmax: int, validate: bool, sign: int, of: str
) -> list[ExactPoly]:
    if kmax < 0:
        raise ValueError(f"kmax must be non-negative, got {kmax}")
    pick = (lambda f: char_poly_pair(f).phi) if sign < 0 else phi_tilde
    seq = [pick(subdivide(g, e, 0))]
    if kmax >= 1:
        seq.append(pick(subdivide(g, e, 1)))
    for _ in range(2, kmax + 1):
        seq.append(_X * seq[-1] + seq[-2] * sign)
    if validate and kmax >= 2:
        direct = pick(subdivide(g, e, kmax))
        if direct != seq[kmax]:
            logger.warning(f"{of} recurrence diverged from direct construction at k={kmax}")
            raise VerificationFailure(
                f"{of}(G({kmax}))", direct.to_text(), seq[kmax].to_text()
            )
    return seq


def subdiv_phi_tilde_sequence(
    g: Forest, e: Edge, kmax: int, validate: bool = False
) -> list[ExactPoly]:
    """[phi~(G(0)), ..., phi~(G(kmax))] from phi~(G(k+2)) = x phi~(G(k+1)) + phi~(G(k)).

    With validate, entry kmax is also computed from the subdivided forest and
    compared; a mismatch raises VerificationFailure.
    """
    return _sequence(g, e, kmax, validate, 1, "phi_tilde")


def subdiv_phi_sequence(
    g: Forest, e: Edge, kmax: int, validate: bool = False
) -> list[ExactPoly]:
    """Same as subdiv_phi_tilde_sequence for phi: phi(G(k+2)) = x phi(G(k+1)) - phi(G(k))."""
    return _sequence(g, e, kmax, validate, -1, "phi")
