from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from loguru import logger

from tree_energy.charpoly import subdiv_phi_tilde_sequence
from tree_energy.config import config
from tree_energy.energy.coulson import LogRatio, log_ratio_integral
from tree_energy.energy.roots import energies_equal, energy_from_phi_tilde
from tree_energy.energy.types import (
    DominanceMode,
    DominanceResult,
    EnergyValue,
    NegativeInterval,
    Quadrature,
)
from tree_energy.errors import OrderMismatch, QuadratureFailure
from tree_energy.graph import Edge, Forest
from tree_energy.poly import (
    ExactPoly,
    IsolatingInterval,
    SignKind,
    SignPiece,
    sign_profile_on_positive_axis,
)
from tree_energy.poly.exact import Rational

__all__ = ["d_sequence_at", "classify_dominance", "dominance_from_bases"]

_ENDPOINT_TOL = Fraction(1, 10**13)
_ZERO = EnergyValue(midpoint=0.0, radius=0.0)


def d_sequence_at(
    g0: ExactPoly,
    g1: ExactPoly,
    h0: ExactPoly,
    h1: ExactPoly,
    k: int,
    x: Rational,
) -> Fraction:
    """h_k(x) / g_k(x) with v_k = x v_(k-1) + v_(k-2), in exact rationals."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    g = [g0.eval_rational(x), g1.eval_rational(x)]
    h = [h0.eval_rational(x), h1.eval_rational(x)]
    if k <= 1:
        return h[k] / g[k]
    for _ in range(k - 1):
        g = [g[1], x * g[1] + g[0]]
        h = [h[1], x * h[1] + h[0]]
    return h[1] / g[1]


def _endpoint(
    boundary: Optional[IsolatingInterval], default: Optional[float]
) -> tuple[Optional[float], float]:
    if boundary is None:
        return default, 0.0
    tight = boundary.refine(_ENDPOINT_TOL)
    return float(tight.midpoint), float(tight.radius) + 1e-16


def _pieces_integral(
    ratio: LogRatio,
    pieces: list[SignPiece],
    report: Quadrature,
) -> tuple[EnergyValue, list[NegativeInterval]]:
    """(2/pi) * integral of the ratio's log over the union of pieces."""
    value = 0.0
    error = 0.0
    intervals = []
    for piece in pieces:
        lo, lo_r = _endpoint(piece.lo, 0.0)
        hi, hi_r = _endpoint(piece.hi, None)
        assert lo is not None
        part, part_error = log_ratio_integral(
            [ratio.num], [ratio.den], lo, hi, report
        )
        value += part
        error += part_error
        # moving an endpoint by r changes the integral by at most r * max|f| near it
        for point, radius in ((lo, lo_r), (hi, hi_r)):
            if point is not None and radius:
                near = [point - radius, point + radius]
                error += 2 * radius * max(abs(ratio.value(t)) for t in near if t > 0)
        intervals.append(NegativeInterval(lo=lo, hi=hi, lo_radius=lo_r, hi_radius=hi_r))
    scale = 2 / math.pi
    return (
        EnergyValue(
            midpoint=scale * value,
            radius=math.nextafter(scale * error + 1e-15 * abs(value), math.inf),
        ),
        intervals,
    )


def _exact_zero(gap: EnergyValue, high: ExactPoly, low: ExactPoly) -> bool:
    if not gap.overlaps(_ZERO):
        return False
    return energies_equal(high, low) is True


def dominance_from_bases(
    g0: ExactPoly,
    g1: ExactPoly,
    h0: ExactPoly,
    h1: ExactPoly,
    tol: Optional[float] = None,
) -> DominanceResult:
    """Bound E(H(k)) - E(G(k)) for every k from the four base polynomials.

    w = h1 g0 - h0 g1 positive on (0, inf) bounds the gap by the k=0 gap for
    k > 0, negative by the k=1 gap for k != 1. Otherwise the bound is the k=0
    gap plus (2/pi) times the integral of ln(h1 g0 / (h0 g1)) over the set
    where w < 0, valid for every k.
    """
    tol = config.numerics.quad_tol if tol is None else tol
    energy_tol = min(tol, config.numerics.energy_tol) / 4
    energies = {
        "G0": energy_from_phi_tilde(g0, energy_tol),
        "H0": energy_from_phi_tilde(h0, energy_tol),
        "G1": energy_from_phi_tilde(g1, energy_tol),
        "H1": energy_from_phi_tilde(h1, energy_tol),
    }
    base_gap = energies["H0"] - energies["G0"]
    first_gap = energies["H1"] - energies["G1"]
    w = h1 * g0 - h0 * g1

    if w.is_zero:
        mode = DominanceMode.base_gap if base_gap.positive() else DominanceMode.inconclusive
        return DominanceResult(
            mode=mode,
            w=w.to_text(),
            holds_for="k >= 0",
            lower_bound_on_gap=base_gap,
            exact_zero_gap=_exact_zero(base_gap, h0, g0),
            energies=energies,
        )

    profile = sign_profile_on_positive_axis(w)
    kind = profile.kind
    if kind == SignKind.positive_everywhere:
        exact = _exact_zero(base_gap, h0, g0)
        conclusive = base_gap.positive() or exact
        return DominanceResult(
            mode=DominanceMode.base_gap if conclusive else DominanceMode.inconclusive,
            sign=kind,
            w=w.to_text(),
            holds_for="k > 0",
            lower_bound_on_gap=base_gap,
            exact_zero_gap=exact,
            energies=energies,
        )
    if kind == SignKind.negative_everywhere:
        exact = _exact_zero(first_gap, h1, g1)
        conclusive = first_gap.positive() or exact
        return DominanceResult(
            mode=DominanceMode.first_gap if conclusive else DominanceMode.inconclusive,
            sign=kind,
            w=w.to_text(),
            holds_for="k != 1",
            lower_bound_on_gap=first_gap,
            exact_zero_gap=exact,
            energies=energies,
        )

    report = Quadrature(
        epsabs=config.numerics.quad_epsabs, limit=config.numerics.quad_limit
    )
    ratio = LogRatio(h1 * g0, h0 * g1)
    over_d, negative_set = _pieces_integral(ratio, profile.negative_pieces(), report)
    over_complement, _ = _pieces_integral(ratio, profile.positive_pieces(), report)
    if over_d.radius + over_complement.radius > 2 * tol:
        raise QuadratureFailure(
            f"integral error {over_d.radius + over_complement.radius:.2e} exceeds {2 * tol:.2e}"
        )
    bound = base_gap + over_d
    alternative = first_gap - over_complement
    if not bound.overlaps(alternative):
        logger.warning(
            f"the two forms of the mixed bound disagree: {bound} against {alternative}"
        )
    logger.debug(f"mixed-sign bound {bound} over {len(negative_set)} negative intervals")
    return DominanceResult(
        mode=DominanceMode.mixed_bound if bound.positive() else DominanceMode.inconclusive,
        sign=kind,
        w=w.to_text(),
        holds_for="k >= 0",
        lower_bound_on_gap=bound,
        alternative_bound=alternative,
        negative_set=negative_set,
        energies=energies,
        quadrature=report,
    )


def classify_dominance(
    g: Forest, e: Edge, h: Forest, e2: Edge, tol: Optional[float] = None
) -> DominanceResult:
    """Prove E(G(k)) < E(H(k)) for a whole pair of subdivision families, if possible."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} and {h.n}")
    g0, g1 = subdiv_phi_tilde_sequence(g, e, 1)
    h0, h1 = subdiv_phi_tilde_sequence(h, e2, 1)
    return dominance_from_bases(g0, g1, h0, h1, tol)
