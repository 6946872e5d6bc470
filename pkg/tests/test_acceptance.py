"""Acceptance criteria at desk scale; each test logs one PASS/FAIL line with its timing."""
import random
import time

import pytest

from deligne.artin_complex import (ArtinComplex, alternating_family, downward_flag_check, four_wheel_check,
                                   sample_alternating_hexagons, sample_zigzag_hexagons)
from deligne.coxeter import (coxeter_group, verify_gate_suite, verify_pair_gate_suite,
                             verify_projection_location)
from deligne.freegrp import hexagon_to_free_equation, ls_bruteforce, verify_isomorphism
from deligne.garside import artin_group


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def record(log, name, ok, elapsed, limit, detail):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    log.append(f"{status}  {name}: {detail} [{elapsed:.1f}s, limit {limit:.0f}s]")
    assert ok, detail
    assert within, f"{name} took {elapsed:.1f}s, limit {limit:.0f}s"


@pytest.fixture(scope="module")
def d4():
    return ArtinComplex("D4")


@pytest.fixture(scope="module")
def ball2(d4):
    with Timer() as t:
        ball = d4.chamber_ball(2)
    ball.build_seconds = t.elapsed
    return ball


def test_group_orders(acceptance_log):
    with Timer() as t:
        orders = {name: len(coxeter_group(name).elements()) for name in ("A3", "D4", "D5")}
    ok = orders == {"A3": 24, "D4": 192, "D5": 1920}
    record(acceptance_log, "group orders", ok, t.elapsed, 5, f"{orders}")


def test_longest_lengths(acceptance_log):
    with Timer() as t:
        lengths = {}
        for name in ("A3", "D4", "D5"):
            W = coxeter_group(name)
            lengths[name] = W.length(W.w0())
    ok = lengths == {"A3": 6, "D4": 12, "D5": 20}
    record(acceptance_log, "longest element lengths", ok, t.elapsed, 5, f"{lengths}")


def test_gate_suites(acceptance_log):
    with Timer() as t:
        reports = []
        for name in ("A3", "D4"):
            W = coxeter_group(name)
            reports.append(verify_gate_suite(W, 2))
            reports.append(verify_pair_gate_suite(W, 2))
    failed = sum(r["failed"] for r in reports)
    checked = sum(r["checked"] for r in reports)
    record(acceptance_log, "gate and pair-gate suites (A3, D4, all faces of rank <= 2)", failed == 0,
           t.elapsed, 120, f"{checked} checks, {failed} failures")


def test_projection_location(acceptance_log):
    with Timer() as t:
        reports = [verify_projection_location(coxeter_group("D4"), (1, 3, 4))]
        A4 = coxeter_group("A4")
        reports += [verify_projection_location(A4, triple) for triple in ((1, 2, 3), (2, 3, 4))]
    configs = sum(r["configurations"] for r in reports)
    bad = sum(len(r["counterexamples"]) for r in reports)
    record(acceptance_log, "projection location (D4 d1,d3,d4; A4 two triples)", bad == 0 and configs > 0,
           t.elapsed, 600, f"{configs} configurations, {bad} counterexamples")


def test_garside_engine(acceptance_log):
    A = artin_group("D4")
    rng = random.Random(2024)
    with Timer() as t:
        mismatches = not_weighted = 0
        for _ in range(10_000):
            w = A.random_word(rng.randint(0, 12), rng)
            v = A.relator_insertions(w, rng, moves=rng.randint(1, 3))
            g, h = A.from_word(w), A.from_word(v)
            mismatches += g != h
            not_weighted += not all(A.is_left_weighted(x, y) for x, y in zip(g.factors, g.factors[1:]))
        a2 = artin_group("A2")
        braid = a2.from_word([1, 2, 1]) == a2.from_word([2, 1, 2])
        z = A.central_power()
        central = z == A.from_word([1, 3, 2, 4] * 3) and all(A.commute(z, A.generator(s)) for s in A.S)
    ok = mismatches == 0 and not_weighted == 0 and braid and central
    record(acceptance_log, "Garside engine (10^4 equal-word pairs)", ok, t.elapsed, 60,
           f"{mismatches} mismatches, {not_weighted} non-left-weighted, braid {braid}, center {central}")


def test_isomorphism(acceptance_log):
    with Timer() as t:
        reports = {n: verify_isomorphism(n) for n in (3, 4, 5)}
    ok = all(r["passed"] for r in reports.values())
    detail = ", ".join(f"n={n}: {len(r['failures'])} failures" for n, r in reports.items())
    record(acceptance_log, "semidirect isomorphism n = 3, 4, 5", ok, t.elapsed, 60, detail)


def test_lyndon_schutzenberger(acceptance_log):
    with Timer() as t:
        report = ls_bruteforce(maxlen=3, expset=(2, 3), rank=2)
    record(acceptance_log, "Lyndon-Schutzenberger brute force (F2, length <= 3)", report["violations"] == 0,
           t.elapsed, 600, f"{report['solutions']} solutions, {report['violations']} violations")


def test_alternating_hexagon_centers(d4, acceptance_log):
    with Timer() as t:
        hexes = sample_alternating_hexagons(d4, 50, 7, ball_radius=2, kmax=2)
        found = unresolved = 0
        for h in hexes:
            z = d4.search_center(h, 2, 4)
            if z is None:
                unresolved += 1
            else:
                found += all(d4.validate_witness(d4.adjacent_witness(z, x), z, x) for x in h.vertices)
    refuted = len(hexes) - found - unresolved
    rate = unresolved / len(hexes)
    ok = len(hexes) >= 50 and refuted == 0 and rate < 0.2
    record(acceptance_log, "alternating hexagons have a d2^ center", ok, t.elapsed, 1800,
           f"{len(hexes)} hexagons, {found} centered, {unresolved} unresolved ({rate:.0%}), {refuted} refuted")


def test_four_wheel(ball2, acceptance_log):
    with Timer() as t:
        report = four_wheel_check(ball2, 3)
    elapsed = t.elapsed + ball2.build_seconds
    ok = report["unresolved"] == 0 and report["refuted"] == 0
    record(acceptance_log, "4-cycles in the radius-2 ball have centers", ok, elapsed, 1800,
           f"{report['induced_cycles']} induced cycles, {report['unresolved']} unresolved, "
           f"{report['refuted']} refuted")


def test_zigzag_quasi_centers(d4, acceptance_log):
    with Timer() as t:
        hexes = sample_zigzag_hexagons(d4, d4.chamber_ball(1), 50, 7)
        found = 0
        for h in hexes:
            info = d4.classify_zigzag(h)
            maxima = [h.vertices[i] for i in info["local_max"]]
            hit = d4.search_quasi_center(h, 3, parities=(info["local_max"][0] % 2,))
            if hit is not None and all(d4.adjacent(hit[0], x) for x in maxima):
                found += 1
    ok = len(hexes) >= 50 and found == len(hexes)
    record(acceptance_log, "zigzag hexagons have quasi-centers", ok, t.elapsed, 1800,
           f"{len(hexes)} hexagons, {found} with a quasi-center")


def test_downward_flag(ball2, acceptance_log):
    with Timer() as t:
        report = downward_flag_check(ball2, 3)
    elapsed = t.elapsed + ball2.build_seconds
    ok = report["unresolved"] == 0 and report["refuted"] == 0
    record(acceptance_log, "downward flag in the radius-2 subdivided ball", ok, elapsed, 1800,
           f"{report['qualifying_triples']} triples, {report['lower_bound_by_search']} beyond the ball, "
           f"{report['unresolved']} unresolved")


def test_free_equation_consistency(d4, acceptance_log):
    A = d4.A
    d1 = A.generator(1)
    hat1 = sorted(d4.hat(1))
    rng = random.Random(11)
    with Timer() as t:
        family = alternating_family(d4, 2, 2)
        closed = rng.sample(family, 100)
        equal = 0
        for w1, k1, w2, k2, w3, k3 in closed:
            lf, rf, lb, rb = hexagon_to_free_equation(w1, w2, w3, k1, k2, k3)
            equal += lf == rf and lb == rb
        differ = 0
        for w1, k1, w2, k2, w3, k3 in rng.sample(family, 100):
            if rng.random() < 0.5:
                k3 += rng.choice((1, -1))
            else:
                w2 = w2 * A.generator(rng.choice(hat1), rng.choice((1, -1)))
            product = w1 * A.power(d1, k1) * w2 * A.power(d1, k2) * w3 * A.power(d1, k3)
            assert not product.is_identity
            lf, rf, lb, rb = hexagon_to_free_equation(w1, w2, w3, k1, k2, k3)
            differ += lf != rf or lb != rb
    ok = equal == 100 and differ == 100
    record(acceptance_log, "hexagon to free equation", ok, t.elapsed, 300,
           f"closed {equal}/100 equal, perturbed {differ}/100 differ")
