import json

import pytest
from hypothesis import given, settings, strategies as st

from fibwork.products import (
    NECESSITY_VIOLATION,
    SUFFICIENCY_VIOLATION,
    ProductSpec,
    gain_count,
    loss_count,
    pair_product_coeffs,
    product_unimodal_predicate,
    scaled_pair_unimodal,
    scan_products,
    triple_product_unimodal,
)
from fibwork.qpoly import is_symmetric, is_unimodal, mul, q_analog


def test_spec_polynomial_is_the_plain_product():
    spec = ProductSpec((3, 3), 2, 4)
    direct = mul(mul(q_analog(3), q_analog(3)), q_analog(2, r=4))
    assert spec.polynomial() == direct


def test_spec_rejects_bad_parameters():
    with pytest.raises(ValueError):
        ProductSpec((0,), 2, 2)
    with pytest.raises(ValueError):
        ProductSpec((2,), 0, 2)
    with pytest.raises(ValueError):
        ProductSpec((2,), 2, 0)


def test_pair_product_closed_form_exhaustive():
    for a in range(1, 31):
        for b in range(1, 31):
            assert pair_product_coeffs(a, b) == mul(q_analog(a), q_analog(b))


@given(st.integers(1, 120), st.integers(1, 120))
@settings(max_examples=40)
def test_pair_product_closed_form_random(a, b):
    assert pair_product_coeffs(a, b) == mul(q_analog(a), q_analog(b))


def test_pair_product_rejects_zero():
    with pytest.raises(ValueError):
        pair_product_coeffs(0, 3)


def test_scaled_pair_criterion_small_box():
    for a in range(1, 16):
        for b in range(1, 9):
            for r in range(1, 5):
                product = ProductSpec((a,), b, r).polynomial()
                uni, _ = is_unimodal(product)
                assert scaled_pair_unimodal(a, b, r) == uni, (a, b, r)


def test_scaled_pair_known_failure():
    # [3]_q [3]_{q^2} = 1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6 dips at q^3
    assert not scaled_pair_unimodal(3, 3, 2)
    p = ProductSpec((3,), 3, 2).polynomial()
    assert p.coeffs == (1, 1, 2, 1, 2, 1, 1)
    assert is_unimodal(p) == (False, 3)


def test_triple_criterion_small_box():
    for a in range(1, 13):
        for b in range(1, 13):
            for c in range(1, 13):
                product = ProductSpec((a, b), c, 2).polynomial()
                uni, _ = is_unimodal(product)
                assert triple_product_unimodal(a, b, c) == uni, (a, b, c)
                assert is_symmetric(product)


def test_gain_loss_match_coefficient_differences():
    for a in range(1, 12, 2):
        for b in range(a, 12):
            for c in range(1, 12):
                coeffs = ProductSpec((a, b), c, 2).polynomial()
                top = coeffs.degree
                for k in range(top):
                    diff = coeffs[k + 1] - coeffs[k]
                    assert diff == gain_count(k, a, c) - loss_count(k, a, b, c)


def test_gain_count_window():
    # a=3, c=2: shifts l in {0, 1}; gain iff ceil((k-1)/2) <= l <= (k+1)/2
    assert gain_count(0, 3, 2) == 1
    assert gain_count(1, 3, 2) == 2
    assert gain_count(5, 3, 2) == 0
    assert loss_count(0, 3, 5, 2) == 0


def test_predicate_examples():
    assert product_unimodal_predicate(ProductSpec((4,), 3, 2))  # r | a
    assert product_unimodal_predicate(ProductSpec((3, 3), 3, 2))  # b <= 1+1+1
    assert not product_unimodal_predicate(ProductSpec((3, 3, 3, 3), 2, 4))


def test_counterexample_is_unimodal_but_fails_predicate():
    spec = ProductSpec((3, 3, 3, 3), 2, 4)
    p = spec.polynomial()
    assert p.coeffs == (1, 4, 10, 16, 20, 20, 20, 20, 20, 16, 10, 4, 1)
    assert is_unimodal(p) == (True, None)
    assert not product_unimodal_predicate(spec)


def test_scan_small_box_has_no_findings():
    report = scan_products(k_max=2, r_max=2, value_max=5)
    # k in {1,2}, r = 2: 5*5 + 15*5 = 100 specs
    assert report.checked == 100
    assert report.findings == []


def test_scan_finds_the_counterexample():
    report = scan_products(k_max=4, r_max=4, value_max=3)
    assert report.sufficiency_violations == []
    hits = [
        f
        for f in report.necessity_violations
        if f.spec == ProductSpec((3, 3, 3, 3), 2, 4)
    ]
    assert len(hits) == 1
    assert hits[0].unimodal and not hits[0].predicate


def test_scan_parallel_matches_sequential():
    seq = scan_products(k_max=3, r_max=3, value_max=4)
    par = scan_products(k_max=3, r_max=3, value_max=4, jobs=3)
    assert seq.checked == par.checked
    assert seq.findings == par.findings


def test_finding_json_line_schema():
    report = scan_products(k_max=4, r_max=4, value_max=3)
    line = report.necessity_violations[0].to_json_line()
    obj = json.loads(line)
    assert set(obj) == {"kind", "a", "b", "r", "unimodal", "predicate"}
    assert obj["kind"] in (SUFFICIENCY_VIOLATION, NECESSITY_VIOLATION)
    assert isinstance(obj["a"], list)
