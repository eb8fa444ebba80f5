"""Acceptance criteria.  Each test prints one PASS/FAIL line.

All comparisons are exact (zero tolerance).  Runtime limits are checked
where the criterion states one.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from conftest import PRESETS
from zetaprop import load_preset
from zetaprop.cycles import based_trace_oracle, build_transfer_graph, enumerate_cycles, verify_gamma_zeta
from zetaprop.errors import IdentityViolated
from zetaprop.linalg import MatrixQ, kernel_basis, rank, trace_power
from zetaprop.presentation import (
    alexander,
    betti1,
    genus_shift_identity,
    homology_action,
    propagator_boundary_h,
    transfer_matrices,
)
from zetaprop.ring import LaurentPolynomial as LP, RationalFunction as RF, T, rf_to_series
from zetaprop.sampling import random_presentations
from zetaprop.zeta import lefschetz_number, zeta_function, zeta_log_derivative, zeta_series_from_lefschetz

SEED = 20240601
RANDOM_COUNT = 100


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, failures: list[str], elapsed: float, limit: float | None = None):
        if limit is not None and elapsed >= limit:
            failures = failures + [f"took {elapsed:.2f}s, limit {limit}s"]
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number}] {status}  {title}  ({elapsed:.2f}s)")
            for f in failures[:5]:
                print(f"    {f}")
        assert not failures, failures

    return emit


def presets():
    return {name: load_preset(name) for name in PRESETS}


def everything():
    return list(presets().items()) + [(f"random#{i}", p) for i, p in enumerate(random_presentations(SEED, RANDOM_COUNT))]


def test_criterion_1_anosov_headline(verdict):
    start = time.perf_counter()
    p = load_preset("anosov")
    fails = []
    if betti1(p) != 1:
        fails.append(f"b1 = {betti1(p)}")
    zeta = zeta_function(homology_action(p).action)
    if zeta != RF(1 - 3 * T + T**2, (1 - T) ** 2) or str(zeta) != "(1-3*t+t^2)/(1-t)^2":
        fails.append(f"zeta = {zeta}")
    delta = alexander(p)
    if delta != LP({-1: -1, 0: 3, 1: -1}):
        fails.append(f"Delta = {delta}")
    if delta.evaluate(1) != 1 or delta.substitute_inverse() != delta:
        fails.append("Delta is not normalized and symmetric")
    series = rf_to_series(zeta_log_derivative(homology_action(p).action), 6).coefficients[1:]
    if series != [-1, -5, -16, -45, -121, -320]:
        fails.append(f"t zeta'/zeta coefficients {series}")
    verdict(1, "Anosov torus: b1, zeta, Delta, t zeta'/zeta", fails, time.perf_counter() - start, 1.0)


def test_criterion_2_census_equals_log_derivative(verdict):
    start = time.perf_counter()
    fails = []
    for name in ("anosov", "sphere", "torus_id"):
        r = verify_gamma_zeta(load_preset(name), 8)
        if not r.ok:
            fails += [f"{name}: {f}" for f in r.failures()]
        expected = rf_to_series(zeta_log_derivative(homology_action(load_preset(name)).action), 8)
        if r.census.series != expected:
            fails.append(f"{name}: census {r.census.series} != {expected}")
        if name == "sphere":
            if r.census.series.coefficients != [0] + [2] * 8:
                fails.append(f"sphere series {r.census.series}")
            for k in range(1, 9):
                if sorted(c.index for c in r.census.of_period(k)) != [0, 2]:
                    fails.append(f"sphere period {k}: {r.census.of_period(k)}")
        if name == "torus_id" and any(r.census.series.coefficients):
            fails.append(f"identity torus series {r.census.series}")
    verdict(2, "census series = t zeta'/zeta to order 8", fails, time.perf_counter() - start, 10.0)


def test_criterion_3_necklace_identity(verdict):
    start = time.perf_counter()
    fails = []
    suite = random_presentations(SEED, RANDOM_COUNT)
    for i, p in enumerate(suite):
        g = build_transfer_graph(p)
        census = enumerate_cycles(g, p, 6)
        theta1 = transfer_matrices(p).theta1
        for k in range(1, 7):
            unbased = sum(c.sign * c.primitive_period for c in census.of_period(k) if c.index == 1)
            based = based_trace_oracle(g, k)
            tr = trace_power(theta1, k)
            if not unbased == based == tr:
                fails.append(f"random#{i} k={k}: unbased {unbased}, based {based}, trace {tr}")
    verdict(3, f"unbased = based = Tr(theta1^k), k <= 6, {len(suite)} random", fails, time.perf_counter() - start, 30.0)


def test_criterion_4_hopf_trace(verdict):
    start = time.perf_counter()
    fails = []
    cases = everything()
    for name, p in cases:
        theta = transfer_matrices(p)
        action = homology_action(p).action
        for k in range(1, 11):
            chain = sum(((-1) ** i * trace_power(theta[i], k) for i in range(3)), Fraction(0))
            hom = sum(((-1) ** i * trace_power(action[i], k) for i in range(3)), Fraction(0))
            if not chain == hom == lefschetz_number(action, k):
                fails.append(f"{name} k={k}: chain {chain}, homology {hom}")
    verdict(4, f"Hopf trace k <= 10 on {len(cases)} presentations", fails, time.perf_counter() - start)


def test_criterion_5_antisymmetry(verdict):
    start = time.perf_counter()
    fails = []
    checked = 0
    for name, p in presets().items():
        if betti1(p) != 1:
            continue
        checked += 1
        h = propagator_boundary_h(p)
        if h.substitute_inverse() != -h:
            fails.append(f"{name}: h = {h}, h(1/t) = {h.substitute_inverse()}")
    if checked < 4:
        fails.append(f"only {checked} b1 = 1 presets")
    verdict(5, f"h(1/t) = -h(t) on {checked} b1 = 1 presets", fails, time.perf_counter() - start)


def test_criterion_6_genus_shift(verdict):
    start = time.perf_counter()
    fails = []
    checked = 0
    for name, p in everything():
        if betti1(p) != 1:
            continue
        checked += 1
        h = homology_action(p)
        lhs = zeta_log_derivative(h.action)
        rhs = h.genus + RF(T * alexander(p).derivative(), alexander(p)) + RF(2 * T, 1 - T)
        if lhs != rhs:
            fails.append(f"{name}: {lhs} != {rhs}")
        try:
            genus_shift_identity(p)
        except IdentityViolated as exc:
            fails.append(f"{name}: {exc}")
    verdict(6, f"t zeta'/zeta = g + t D'/D + 2t/(1-t) on {checked} b1 = 1 presentations", fails, time.perf_counter() - start)


def test_criterion_7_betti_number(verdict):
    start = time.perf_counter()
    fails = []
    for name, p in everything():
        A1 = homology_action(p).action[1]
        shifted = A1 - MatrixQ.identity(A1.rows)
        by_kernel = len(kernel_basis(shifted)) + 1
        by_rank = A1.rows - rank(shifted) + 1
        if not betti1(p) == by_kernel == by_rank:
            fails.append(f"{name}: betti1 {betti1(p)}, kernel {by_kernel}, rank {by_rank}")
    if betti1(load_preset("torus_id")) != 3:
        fails.append("identity torus b1 != 3")
    if betti1(load_preset("anosov")) != 1:
        fails.append("Anosov b1 != 1")
    verdict(7, "b1 by kernel = b1 by rank; torus_id 3, anosov 1", fails, time.perf_counter() - start)


def test_criterion_8_exp_log(verdict):
    start = time.perf_counter()
    fails = []
    cases = everything()
    for name, p in cases:
        action = homology_action(p).action
        if zeta_series_from_lefschetz(action, 10) != rf_to_series(zeta_function(action), 10):
            fails.append(f"{name}: exp(sum L t^k / k) != zeta to order 10")
    verdict(8, f"exp(sum L t^k/k) = zeta to order 10 on {len(cases)} presentations", fails, time.perf_counter() - start)
