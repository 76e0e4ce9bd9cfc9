"""Acceptance gate: twelve go/no-go checks, one test (and one printed
verdict line, visible under pytest -s) per criterion, each with its wall
clock budget asserted.  Everything here is an exact integer comparison —
no tolerances anywhere.
"""

import math
import time

from fibwork.chains import decompose
from fibwork.fib import fib, zeckendorf
from fibwork.fibonomial import (
    closed_form_n2,
    qfibocatalan,
    qfibonomial,
    telescoped_fibocatalan,
)
from fibwork.products import (
    ProductSpec,
    gain_count,
    loss_count,
    scan_products,
    scaled_pair_unimodal,
    triple_product_unimodal,
)
from fibwork.qpoly import is_log_concave, is_symmetric, is_unimodal, q_analog
from fibwork.sweeps import verify_conjecture
from fibwork.tilings import (
    HeightProfile,
    Tiling,
    enumerate_tilings,
    tiling_polynomial,
    weight_degree,
)


def _verdict(num, elapsed, budget, detail):
    print(f"[criterion {num:02d}] PASS in {elapsed:.3f}s (budget {budget}s): {detail}")


def test_criterion_01_reference_tiling_has_weight_25():
    pr = HeightProfile((0, 0, 3, 4), 4)
    t = Tiling(pr, ((2,), (), (), ()), ((), (), (), (2,)))
    t0 = time.perf_counter()
    degree = weight_degree(t)
    dt = time.perf_counter() - t0
    assert degree == 25
    assert dt < 0.001
    _verdict(1, dt, 0.001, "4x4 reference tiling weighs q^25")


def test_criterion_02_tilings_match_algebra_up_to_sum_8():
    t0 = time.perf_counter()
    pairs = [(m, s - m) for s in range(0, 9) for m in range(0, s + 1)]
    for m, n in pairs:
        assert tiling_polynomial(m, n) == qfibonomial(m, n), (m, n)
    dt = time.perf_counter() - t0
    assert dt < 30
    _verdict(2, dt, 30, f"enumeration equals algebra on {len(pairs)} boards")


def test_criterion_03_strip_law_and_zeckendorf_support():
    t0 = time.perf_counter()
    tilings_seen = 0
    for m in range(0, 11):
        assert tiling_polynomial(m, 1) == q_analog(fib(m + 1))
        for t in enumerate_tilings(m, 1):
            ends = t.above_rows[0]
            w = weight_degree(t)
            assert w == sum(fib(p) for p in ends)
            assert zeckendorf(w) == sorted(ends, reverse=True)
            tilings_seen += 1
    dt = time.perf_counter() - t0
    assert dt < 5
    _verdict(3, dt, 5, f"one-row boards m<=10 ({tilings_seen} tilings)")


def test_criterion_04_two_row_chain_suite():
    t0 = time.perf_counter()
    for m in range(1, 11):
        blocks = decompose(m)
        assert len(blocks) == fib(m + 1)
        assert sorted(b.min_degree for b in blocks) == list(range(fib(m + 1)))
        assert sorted(b.max_degree for b in blocks) == list(
            range(fib(m + 2) - 1, fib(m + 3) - 1)
        )
        counts = [0] * (fib(m + 3) - 1)
        for b in blocks:
            degrees = [weight_degree(t) for t in b.tilings]
            # every chain step lowers the weight by exactly one
            assert degrees == list(range(b.max_degree, b.min_degree - 1, -1))
            for d in degrees:
                counts[d] += 1
        rebuilt = closed_form_n2(m)
        assert list(rebuilt.coeffs) == counts
        assert rebuilt == qfibonomial(m, 2)
    m3 = decompose(3)
    assert sorted(b.size for b in m3) == [3, 5, 7]
    assert sum(b.size for b in m3) == 15
    dt = time.perf_counter() - t0
    assert dt < 60
    _verdict(4, dt, 60, "chain blocks for m=1..10, including the m=3 table")


def test_criterion_05_log_concavity_fails_at_3_3():
    t0 = time.perf_counter()
    p = qfibonomial(3, 3)
    assert p.coeffs == (1, 2, 4, 5, 7, 7, 8, 7, 7, 5, 4, 2, 1)
    assert is_symmetric(p)
    assert is_unimodal(p) == (True, None)
    assert not is_log_concave(p)
    assert p[5] ** 2 < p[4] * p[6]  # 49 < 56: the index-5 breach
    dt = time.perf_counter() - t0
    assert dt < 1
    _verdict(5, dt, 1, "(3,3) is unimodal and symmetric yet not log-concave")


def test_criterion_06_desk_scale_conjecture_sweep():
    t0 = time.perf_counter()
    report = verify_conjecture(max_sum=14, square_max=8)
    assert report.ok, [(r.m, r.n) for r in report.failures]
    assert all(r.symmetric and r.unimodal for r in report.records)
    dt = time.perf_counter() - t0
    assert dt < 600
    _verdict(6, dt, 600, f"{len(report.records)} pairs symmetric and unimodal")


def test_criterion_07_triple_product_criterion_exhaustive():
    t0 = time.perf_counter()
    checked = 0
    for a in range(1, 26):
        for b in range(1, 26):
            for c in range(1, 26):
                uni, _ = is_unimodal(ProductSpec((a, b), c, 2).polynomial())
                assert triple_product_unimodal(a, b, c) == uni, (a, b, c)
                checked += 1
    dt = time.perf_counter() - t0
    assert dt < 120
    _verdict(7, dt, 120, f"{checked} triples a,b,c<=25")


def test_criterion_08_scaled_pair_criterion_exhaustive():
    t0 = time.perf_counter()
    checked = 0
    for a in range(1, 41):
        for b in range(1, 21):
            for r in range(1, 9):
                uni, _ = is_unimodal(ProductSpec((a,), b, r).polynomial())
                assert scaled_pair_unimodal(a, b, r) == uni, (a, b, r)
                checked += 1
    dt = time.perf_counter() - t0
    assert dt < 120
    _verdict(8, dt, 120, f"{checked} pairs a<=40, b<=20, r<=8")


def test_criterion_09_gain_loss_difference_identity():
    t0 = time.perf_counter()
    checked = 0
    for a in range(1, 16, 2):
        for b in range(a, 16):
            for c in range(1, 16):
                p = ProductSpec((a, b), c, 2).polynomial()
                for k in range(p.degree):
                    assert p[k + 1] - p[k] == gain_count(k, a, c) - loss_count(
                        k, a, b, c
                    )
                checked += 1
    dt = time.perf_counter() - t0
    assert dt < 60
    _verdict(9, dt, 60, f"{checked} products, every coefficient step")


def test_criterion_10_predicate_scan():
    t0 = time.perf_counter()
    report = scan_products(k_max=4, r_max=4, value_max=8)
    assert report.sufficiency_violations == []
    necessity = report.necessity_violations
    assert any(
        f.spec == ProductSpec((3, 3, 3, 3), 2, 4) for f in necessity
    ), "the known unimodal-but-rejected product is missing"
    small = [
        f for f in necessity
        if len(f.spec.plain_factors) <= 3 or f.spec.stride <= 3
    ]
    assert small == []
    dt = time.perf_counter() - t0
    assert dt < 300
    _verdict(
        10, dt, 300,
        f"{report.checked} specs, 0 sufficiency breaks, "
        f"{len(necessity)} necessity findings all at k=4, r=4",
    )


def test_criterion_11_fibocatalan_quotients():
    t0 = time.perf_counter()
    checked = 0
    for s in range(2, 13):
        for m in range(1, s):
            n = s - m
            if math.gcd(m, n) not in (1, 2):
                continue
            quo = qfibocatalan(m, n)  # NotDivisibleError would fail the test
            assert all(c >= 0 for c in quo.coeffs), (m, n)
            assert telescoped_fibocatalan(m, n) == quo, (m, n)
            checked += 1
    dt = time.perf_counter() - t0
    assert dt < 120
    _verdict(11, dt, 120, f"{checked} coprime-ish pairs divide exactly")


def test_criterion_12_argument_symmetry_and_palindromes():
    t0 = time.perf_counter()
    for s in range(0, 15):
        for m in range(0, s + 1):
            n = s - m
            p = qfibonomial(m, n)
            assert p == qfibonomial(n, m), (m, n)
            assert is_symmetric(p), (m, n)
    dt = time.perf_counter() - t0
    assert dt < 600
    _verdict(12, dt, 600, "qfibonomial(m,n) == qfibonomial(n,m), all palindromic")
