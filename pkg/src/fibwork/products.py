"""Unimodality of products of q-analogs.

The objects here are products [a_1]_q [a_2]_q ... [a_k]_q [b]_{q^r}: a list
of plain q-analog factors and one factor evaluated at q^r.  Such products
are always palindromic; whether they are unimodal is governed by exact
criteria for small shapes and by a scanned predicate in general:

  * two factors, one scaled: [a]_q [b]_{q^r} is unimodal
    iff a >= r*(b-1) or r divides a;
  * three factors [a]_q [b]_q [c]_{q^2}: symmetric and unimodal
    iff 2c <= a+b, or a or b is even;
  * general predicate (sufficient, conjecturally; necessity fails in
    general but is conjectured for k <= 3 or r <= 3):
    r divides some a_i, or b <= 1 + sum over i of floor(a_i / r).

scan_products sweeps a parameter box, compares the predicate against the
actual coefficient check, and reports violations in both directions.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .qpoly import ONE, Polynomial, is_unimodal, mul_q_analog

SUFFICIENCY_VIOLATION = "SUFFICIENCY_VIOLATION"
NECESSITY_VIOLATION = "NECESSITY_VIOLATION"


@dataclass(frozen=True)
class ProductSpec:
    """[a]_q factors (ascending) times one [base]_{q^stride} factor."""

    plain_factors: tuple[int, ...]
    base: int
    stride: int

    def __post_init__(self):
        if any(a < 1 for a in self.plain_factors):
            raise ValueError(f"factors must be >= 1: {self.plain_factors}")
        if self.base < 1 or self.stride < 1:
            raise ValueError(f"base and stride must be >= 1: {self}")

    def polynomial(self) -> Polynomial:
        p = ONE
        for a in self.plain_factors:
            p = mul_q_analog(p, a)
        return mul_q_analog(p, self.base, self.stride)


def pair_product_coeffs(a: int, b: int) -> Polynomial:
    """[a]_q [b]_q by its closed form: c_k = min(k+1, a, b, a+b-1-k).

    Rises by ones, holds a plateau at min(a, b), mirrors back down.
    """
    if a < 1 or b < 1:
        raise ValueError(f"pair_product_coeffs needs a, b >= 1, got ({a}, {b})")
    return Polynomial(min(k + 1, a, b, a + b - 1 - k) for k in range(a + b - 1))


def scaled_pair_unimodal(a: int, b: int, r: int) -> bool:
    """Exact criterion: [a]_q [b]_{q^r} is unimodal iff a >= r(b-1) or r | a."""
    if a < 1 or b < 1 or r < 1:
        raise ValueError(f"need a, b, r >= 1, got ({a}, {b}, {r})")
    return a >= r * (b - 1) or a % r == 0


def triple_product_unimodal(a: int, b: int, c: int) -> bool:
    """Exact criterion: [a]_q [b]_q [c]_{q^2} is symmetric and unimodal
    iff 2c <= a + b or a or b is even."""
    if a < 1 or b < 1 or c < 1:
        raise ValueError(f"need a, b, c >= 1, got ({a}, {b}, {c})")
    return 2 * c <= a + b or a % 2 == 0 or b % 2 == 0


def gain_count(k: int, a: int, c: int) -> int:
    """Number of shifts l in [0, c-1] with (k-a+2)/2 <= l <= (k+1)/2.

    For odd a <= b, writing T = [a]_q [b]_q [c]_{q^2} as a sum over l of
    shifted copies q^{2l} [a]_q [b]_q, this counts the copies whose rising
    edge contributes +1 to T's coefficient difference c_{k+1} - c_k.  All
    arithmetic stays on doubled integers — no floats.
    """
    lo = max(0, (k - a + 2 + 1) // 2)  # ceil((k-a+2)/2), floor-div safe for <0
    hi = min(c - 1, (k + 1) // 2)
    return max(0, hi - lo + 1)


def loss_count(k: int, a: int, b: int, c: int) -> int:
    """Number of shifts l in [0, c-1] with (k-a-b+2)/2 <= l <= (k-b+1)/2.

    The copies whose falling edge contributes -1 to c_{k+1} - c_k; with
    gain_count this gives c_{k+1} - c_k = gain_count - loss_count for odd
    a <= b (tested exhaustively on that range).
    """
    lo = max(0, (k - a - b + 2 + 1) // 2)
    hi = min(c - 1, (k - b + 1) // 2)
    return max(0, hi - lo + 1)


def product_unimodal_predicate(spec: ProductSpec) -> bool:
    """r | a_i for some i, or base <= 1 + sum floor(a_i / r)."""
    r = spec.stride
    if any(a % r == 0 for a in spec.plain_factors):
        return True
    return spec.base <= 1 + sum(a // r for a in spec.plain_factors)


@dataclass(frozen=True)
class ScanFinding:
    kind: str
    spec: ProductSpec
    unimodal: bool
    predicate: bool

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "a": list(self.spec.plain_factors),
                "b": self.spec.base,
                "r": self.spec.stride,
                "unimodal": self.unimodal,
                "predicate": self.predicate,
            },
            sort_keys=True,
        )


@dataclass
class ScanReport:
    checked: int
    findings: list[ScanFinding]

    @property
    def sufficiency_violations(self) -> list[ScanFinding]:
        return [f for f in self.findings if f.kind == SUFFICIENCY_VIOLATION]

    @property
    def necessity_violations(self) -> list[ScanFinding]:
        return [f for f in self.findings if f.kind == NECESSITY_VIOLATION]


def _scan_specs(k_max: int, r_max: int, value_max: int) -> list[ProductSpec]:
    specs = []
    for k in range(1, k_max + 1):
        for r in range(2, r_max + 1):
            for combo in itertools.combinations_with_replacement(
                range(1, value_max + 1), k
            ):
                for b in range(1, value_max + 1):
                    specs.append(ProductSpec(combo, b, r))
    return specs


def _scan_chunk(specs: list[ProductSpec]) -> list[ScanFinding]:
    out = []
    for spec in specs:
        uni, _ = is_unimodal(spec.polynomial())
        pred = product_unimodal_predicate(spec)
        if pred and not uni:
            out.append(ScanFinding(SUFFICIENCY_VIOLATION, spec, uni, pred))
        elif uni and not pred:
            out.append(ScanFinding(NECESSITY_VIOLATION, spec, uni, pred))
    return out


def scan_products(
    k_max: int, r_max: int, value_max: int, jobs: int = 1
) -> ScanReport:
    """Compare predicate vs. actual unimodality over the whole box
    1 <= a_i, b <= value_max, 1 <= k <= k_max, 2 <= r <= r_max.

    Findings come back in deterministic scan order regardless of jobs.
    """
    specs = _scan_specs(k_max, r_max, value_max)
    if jobs <= 1:
        findings = _scan_chunk(specs)
    else:
        chunk = max(1, len(specs) // (jobs * 8))
        chunks = [specs[i : i + chunk] for i in range(0, len(specs), chunk)]
        findings = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_chunk, chunks):
                findings.extend(part)
    return ScanReport(checked=len(specs), findings=findings)
