"""Full analysis report and the identity-check suite behind ``zetaprop check``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .cycles import CycleCensus, based_trace_oracle, build_transfer_graph, verify_gamma_zeta
from .errors import BettiNotOne, IdentityViolated
from .linalg import MatrixQ, det_one_minus_tA, det_one_minus_tA_newton, kernel_basis, rank, trace_power
from .presentation import (
    HomologyAction,
    MorsePresentation,
    alexander,
    genus_shift_identity,
    homology_action,
    lescop_coefficient,
    propagator_boundary_h,
    transfer_matrices,
)
from .ring import TruncatedSeries, format_rational, rf_to_series, series_exp, series_log
from .zeta import lefschetz_number, zeta_function, zeta_log_derivative, zeta_series_from_lefschetz

__all__ = ["CheckResult", "Report", "build_report", "run_checks", "HOPF_MAX_K", "EXP_LOG_ORDER"]

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"
HOPF_MAX_K = 10
EXP_LOG_ORDER = 10
B1_NOTE = "b1 != 1: the Alexander polynomial and the propagator coefficient are not defined"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str

    def to_json(self) -> dict[str, str]:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _series_strings(s: TruncatedSeries) -> list[str]:
    return [format_rational(a) for a in s.coefficients]


def _first_diff(name: str, got: list, want: list, start: int = 0) -> str:
    for k, (a, b) in enumerate(zip(got, want), start):
        if a != b:
            return f"{name}: t^{k} gives {format_rational(Fraction(a))}, expected {format_rational(Fraction(b))}"
    return f"{name}: lengths differ ({len(got)} vs {len(want)})"


# -- individual checks -------------------------------------------------------


def _check_gamma_zeta(ctx: _Context) -> CheckResult:
    r = ctx.gamma
    bad = [c for c in r.log_derivative if not c.ok]
    if bad:
        c = bad[0]
        return CheckResult(
            "gamma_zeta",
            FAIL,
            f"census t^{c.power} = {format_rational(c.census)}, t zeta'/zeta gives {format_rational(c.expected)}",
        )
    return CheckResult("gamma_zeta", PASS, f"census series equals t zeta'/zeta through t^{ctx.P}")


def _check_gamma_zeta_exp(ctx: _Context) -> CheckResult:
    bad = [c for c in ctx.gamma.exponential if not c.ok]
    if bad:
        c = bad[0]
        return CheckResult(
            "gamma_zeta_exp",
            FAIL,
            f"exp of census gives t^{c.power} = {format_rational(c.census)}, zeta gives {format_rational(c.expected)}",
        )
    return CheckResult("gamma_zeta_exp", PASS, f"exp(census / period) equals zeta through t^{ctx.P}")


def _check_iterates(ctx: _Context) -> CheckResult:
    if ctx.gamma.iterates_ok:
        return CheckResult("iterates", PASS, "every iterate matches its primitive cycle")
    return CheckResult("iterates", FAIL, "iterate/primitive bookkeeping is inconsistent")


def _check_necklace(ctx: _Context) -> CheckResult:
    graph = ctx.graph
    theta1 = ctx.theta[1]
    for k in range(1, ctx.P + 1):
        unbased = sum(c.sign * c.primitive_period for c in ctx.census.of_period(k) if c.index == 1)
        based = based_trace_oracle(graph, k)
        tr = trace_power(theta1, k)
        if not unbased == based == tr:
            return CheckResult(
                "necklace",
                FAIL,
                f"k={k}: unbased sum {unbased}, based walks {based}, Tr(theta1^k) {format_rational(tr)}",
            )
    return CheckResult("necklace", PASS, f"unbased = based = Tr(theta1^k) for k <= {ctx.P}")


def _check_hopf_trace(ctx: _Context) -> CheckResult:
    for k in range(1, HOPF_MAX_K + 1):
        chain = sum(((-1) ** i * trace_power(ctx.theta[i], k) for i in range(3)), Fraction(0))
        hom = lefschetz_number(ctx.homology.action, k)
        if chain != hom:
            return CheckResult(
                "hopf_trace", FAIL, f"k={k}: chain level {format_rational(chain)}, homology {format_rational(hom)}"
            )
    return CheckResult("hopf_trace", PASS, f"chain and homology traces agree for k <= {HOPF_MAX_K}")


def _check_charpoly(ctx: _Context) -> CheckResult:
    for i, A in enumerate(ctx.homology.action.maps):
        a, b = det_one_minus_tA(A), det_one_minus_tA_newton(A)
        if a != b:
            return CheckResult("charpoly", FAIL, f"degree {i}: Bareiss {a}, Newton {b}")
    return CheckResult("charpoly", PASS, "Bareiss and Newton determinants agree")


def _check_exp_log(ctx: _Context) -> CheckResult:
    from_l = zeta_series_from_lefschetz(ctx.homology.action, EXP_LOG_ORDER)
    direct = rf_to_series(ctx.zeta, EXP_LOG_ORDER)
    if from_l != direct:
        return CheckResult(
            "exp_log", FAIL, _first_diff("exp(sum L t^k/k) vs zeta", from_l.coefficients, direct.coefficients)
        )
    logs = series_log(direct)
    want = [Fraction(0)] + [lefschetz_number(ctx.homology.action, k) / k for k in range(1, EXP_LOG_ORDER + 1)]
    if logs.coefficients != want:
        return CheckResult("exp_log", FAIL, _first_diff("log zeta vs sum L t^k/k", logs.coefficients, want))
    return CheckResult("exp_log", PASS, f"exp and log round-trip with zeta through t^{EXP_LOG_ORDER}")


def _check_betti1(ctx: _Context) -> CheckResult:
    A1 = ctx.homology.action[1]
    shifted = A1 - MatrixQ.identity(A1.rows)
    by_kernel = len(kernel_basis(shifted)) + 1
    by_rank = A1.rows - rank(shifted) + 1
    if by_kernel != by_rank:
        return CheckResult("betti1", FAIL, f"kernel gives b1 = {by_kernel}, rank gives {by_rank}")
    return CheckResult("betti1", PASS, f"b1 = {by_kernel} by kernel and by rank")


def _b1_one(name: str, body: Callable[[_Context], str]) -> Callable[[_Context], CheckResult]:
    def run(ctx: _Context) -> CheckResult:
        if ctx.b1 != 1:
            return CheckResult(name, SKIP, f"b1 = {ctx.b1}")
        try:
            return CheckResult(name, PASS, body(ctx))
        except IdentityViolated as exc:
            return CheckResult(name, FAIL, str(exc))

    return run


def _alexander_symmetry(ctx: _Context) -> str:
    delta = alexander(ctx.pres)
    return f"D = {delta}, D(1) = 1, D(1/t) = D(t)"


def _antisymmetry(ctx: _Context) -> str:
    h = propagator_boundary_h(ctx.pres)
    if h.substitute_inverse() != -h:
        raise IdentityViolated(f"h(1/t) = {h.substitute_inverse()} but -h(t) = {-h}")
    return f"h(1/t) = -h(t) for h = {h}"


def _genus_shift(ctx: _Context) -> str:
    gs = genus_shift_identity(ctx.pres)
    return f"t zeta'/zeta = {gs.genus} + t D'/D + 2t/(1-t)"


CHECKS: tuple[Callable[[_Context], CheckResult], ...] = (
    _check_gamma_zeta,
    _check_gamma_zeta_exp,
    _check_iterates,
    _check_necklace,
    _check_hopf_trace,
    _check_charpoly,
    _check_exp_log,
    _check_betti1,
    _b1_one("alexander_symmetry", _alexander_symmetry),
    _b1_one("antisymmetry", _antisymmetry),
    _b1_one("genus_shift", _genus_shift),
)


class _Context:
    """Lazily shared intermediate results for one presentation."""

    def __init__(self, pres: MorsePresentation, max_period: int):
        self.pres = pres
        self.P = max_period
        self.homology: HomologyAction = homology_action(pres)
        self.theta = transfer_matrices(pres)
        self.zeta = zeta_function(self.homology.action)
        A1 = self.homology.action[1]
        self.b1 = len(kernel_basis(A1 - MatrixQ.identity(A1.rows))) + 1
        self.graph = build_transfer_graph(pres)
        self.gamma = verify_gamma_zeta(pres, max_period)
        self.census: CycleCensus = self.gamma.census


def run_checks(pres: MorsePresentation, max_period: int) -> list[CheckResult]:
    ctx = _Context(pres, max_period)
    return [check(ctx) for check in CHECKS]


@dataclass(frozen=True)
class Report:
    data: dict[str, Any]

    @property
    def checks(self) -> list[dict[str, str]]:
        return self.data["checks"]

    @property
    def ok(self) -> bool:
        return all(c["status"] != FAIL for c in self.checks)

    def dumps(self) -> str:
        return json.dumps(self.data, indent=2, ensure_ascii=False)


def build_report(pres: MorsePresentation, max_period: int) -> Report:
    ctx = _Context(pres, max_period)
    logd = zeta_log_derivative(ctx.homology.action)
    try:
        delta: str | None = str(alexander(pres))
        lescop: str | None = str(lescop_coefficient(pres))
        note = None
    except BettiNotOne:
        delta = lescop = None
        note = B1_NOTE
    census = ctx.census
    periods = []
    for k in range(1, max_period + 1):
        cyc = census.of_period(k)
        periods.append(
            {
                "period": k,
                "index0": sum(1 for c in cyc if c.index == 0),
                "index1": sum(1 for c in cyc if c.index == 1),
                "index2": sum(1 for c in cyc if c.index == 2),
                "coefficient": format_rational(census.series[k]),
            }
        )
    data = {
        "kind": "report",
        "digest": pres.digest(),
        "normal_form": pres.normal_form(),
        "max_period": max_period,
        "genus": ctx.homology.genus,
        "b1": ctx.b1,
        "homology_action": [
            [[format_rational(x) for x in row] for row in A.to_lists()] for A in ctx.homology.action.maps
        ],
        "zeta": str(ctx.zeta),
        "log_derivative": {"rational": str(logd), "series": _series_strings(rf_to_series(logd, max_period))},
        "alexander": delta,
        "lescop": lescop,
        "note": note,
        "census": {
            "cycles": len(census.cycles),
            "transfer_edges": len(ctx.graph.edges),
            "series": _series_strings(census.series),
            "periods": periods,
        },
        "checks": [check(ctx).to_json() for check in CHECKS],
    }
    return Report(data)
