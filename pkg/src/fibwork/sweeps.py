"""Sweep drivers: conjecture verification, oracle cross-checks, q-FiboCatalan.

Each driver walks a deterministic parameter grid and returns plain record
objects; the CLI layer turns those into JSON/CSV files and exit codes.
Workers are module-level functions so process pools can pick them up, and
parallel output is summary-identical to sequential output once sorted by
key (wall times excepted, naturally).
"""

from __future__ import annotations

import hashlib
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .chains import decompose
from .fib import fib
from .fibonomial import (
    closed_form_n2,
    qfibocatalan,
    qfibonomial,
    telescoped_fibocatalan,
)
from .qpoly import (
    NotDivisibleError,
    Polynomial,
    is_log_concave,
    is_symmetric,
    is_unimodal,
)
from .tilings import DEFAULT_ENUMERATION_CAP, tiling_polynomial

CSV_COLUMNS = (
    "m",
    "n",
    "degree",
    "peak_coeff",
    "symmetric",
    "unimodal",
    "log_concave",
    "ms",
)


def poly_checksum(p: Polynomial) -> str:
    return hashlib.sha256(",".join(str(c) for c in p.coeffs).encode()).hexdigest()


@dataclass
class SweepRecord:
    m: int
    n: int
    degree: int
    peak_coeff: str  # decimal string; these overflow doubles quickly
    symmetric: bool
    unimodal: bool
    log_concave: bool
    wall_time_ms: int
    checksum: str
    timed_out: bool = False

    def csv_row(self) -> list:
        return [
            self.m,
            self.n,
            self.degree,
            self.peak_coeff,
            self.symmetric,
            self.unimodal,
            self.log_concave,
            self.wall_time_ms,
        ]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "degree": self.degree,
            "peak_coeff": self.peak_coeff,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
            "wall_time_ms": self.wall_time_ms,
            "checksum": self.checksum,
            "timed_out": self.timed_out,
        }


def analyze_pair(args: tuple) -> SweepRecord:
    """Worker: full shape report for one (m, n)."""
    m, n, soft_ms = args
    t0 = time.perf_counter()
    p = qfibonomial(m, n)
    symmetric = is_symmetric(p)
    unimodal, _ = is_unimodal(p)
    log_concave = is_log_concave(p)
    ms = int((time.perf_counter() - t0) * 1000)
    return SweepRecord(
        m=m,
        n=n,
        degree=p.degree if not p.is_zero() else 0,
        peak_coeff=str(max(p.coeffs)),
        symmetric=symmetric,
        unimodal=unimodal,
        log_concave=log_concave,
        wall_time_ms=ms,
        checksum=poly_checksum(p),
        timed_out=(soft_ms is not None and ms > soft_ms),
    )


def conjecture_pairs(max_sum: int, square_max: int) -> list[tuple[int, int]]:
    """Grid: all m, n >= 1 with m+n <= max_sum, plus squares up to square_max."""
    pairs = [
        (m, s - m) for s in range(2, max_sum + 1) for m in range(1, s)
    ]
    seen = set(pairs)
    for s in range(1, square_max + 1):
        if (s, s) not in seen:
            pairs.append((s, s))
    return pairs


@dataclass
class VerifyReport:
    records: list[SweepRecord]
    failures: list[SweepRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_conjecture(
    max_sum: int = 14,
    square_max: int = 8,
    jobs: int = 1,
    soft_ms: Optional[int] = None,
) -> VerifyReport:
    """Symmetry + unimodality across the grid; failures are headline events.

    Log-concavity is recorded as data, never asserted — it genuinely fails
    (first at (3, 3)).
    """
    pairs = conjecture_pairs(max_sum, square_max)
    work = [(m, n, soft_ms) for m, n in pairs]
    if jobs <= 1:
        records = [analyze_pair(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(analyze_pair, work))
    failures = [r for r in records if not (r.symmetric and r.unimodal)]
    return VerifyReport(records=records, failures=failures)


@dataclass
class OracleMismatch:
    m: int
    n: int
    what: str
    first_diff_exponent: int
    expected: str
    actual: str


@dataclass
class OracleReport:
    pairs_checked: int
    n2_rows_checked: int
    mismatches: list[OracleMismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _first_diff(a: Polynomial, b: Polynomial) -> int:
    for i in range(max(len(a.coeffs), len(b.coeffs))):
        if a[i] != b[i]:
            return i
    return -1


def oracle_check(
    max_sum: int = 8, cap: int = DEFAULT_ENUMERATION_CAP
) -> OracleReport:
    """Tiling enumeration vs. algebraic construction, coefficient for
    coefficient, on every pair with m + n <= max_sum; additionally the
    two-row chain reconstruction vs. the closed form."""
    mismatches = []
    pairs = [
        (m, s - m) for s in range(0, max_sum + 1) for m in range(0, s + 1)
    ]
    for m, n in pairs:
        combinatorial = tiling_polynomial(m, n, cap=cap)
        algebraic = qfibonomial(m, n)
        if combinatorial != algebraic:
            i = _first_diff(combinatorial, algebraic)
            mismatches.append(
                OracleMismatch(
                    m, n, "tilings-vs-qfibonomial", i,
                    str(algebraic[i]), str(combinatorial[i]),
                )
            )
    n2_rows = 0
    for m in range(1, max_sum - 1):
        blocks = decompose(m, cap=cap)
        counts = [0] * (fib(m + 3) - 1)
        for b in blocks:
            for d in range(b.min_degree, b.max_degree + 1):
                counts[d] += 1
        rebuilt = Polynomial(counts)
        expected = closed_form_n2(m)
        n2_rows += 1
        if rebuilt != expected:
            i = _first_diff(rebuilt, expected)
            mismatches.append(
                OracleMismatch(
                    m, 2, "chains-vs-closed-form", i,
                    str(expected[i]), str(rebuilt[i]),
                )
            )
    return OracleReport(
        pairs_checked=len(pairs), n2_rows_checked=n2_rows, mismatches=mismatches
    )


@dataclass
class FibocatRow:
    m: int
    n: int
    gcd: int
    divisible: bool
    unimodal: bool
    nonneg: Optional[bool]
    telescoping_match: Optional[bool]
    wall_time_ms: int

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "gcd": self.gcd,
            "divisible": self.divisible,
            "unimodal": self.unimodal,
            "nonneg": self.nonneg,
            "telescoping_match": self.telescoping_match,
            "ms": self.wall_time_ms,
        }


FIBOCAT_CSV_COLUMNS = (
    "m", "n", "gcd", "divisible", "unimodal", "nonneg", "telescoping_match", "ms",
)


@dataclass
class FibocatReport:
    rows: list[FibocatRow]
    violations: list[FibocatRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def fibocatalan_sweep(max_sum: int = 12) -> FibocatReport:
    """qfibonomial(m, n) / [F_{m+n}]_q across the grid.

    Expectation asserted: gcd(m, n) in {1, 2} implies exact division, and —
    wherever the parent polynomial's unimodality check passes — nonnegative
    quotient coefficients and agreement with the telescoping form.  Outside
    gcd in {1, 2}, non-divisibility is recorded as a legitimate outcome.
    """
    rows = []
    violations = []
    for s in range(2, max_sum + 1):
        for m in range(1, s):
            n = s - m
            t0 = time.perf_counter()
            g = math.gcd(m, n)
            parent_unimodal, _ = is_unimodal(qfibonomial(m, n))
            try:
                quo = qfibocatalan(m, n)
                divisible = True
                nonneg = all(c >= 0 for c in quo.coeffs)
                if g in (1, 2):
                    tele = telescoped_fibocatalan(m, n)
                    telescoping_match = tele == quo
                else:
                    telescoping_match = None
            except NotDivisibleError:
                divisible = False
                nonneg = None
                telescoping_match = None
            ms = int((time.perf_counter() - t0) * 1000)
            row = FibocatRow(
                m, n, g, divisible, parent_unimodal, nonneg, telescoping_match, ms
            )
            rows.append(row)
            if g in (1, 2):
                bad = (
                    not divisible
                    or telescoping_match is False
                    or (parent_unimodal and nonneg is False)
                )
                if bad:
                    violations.append(row)
    return FibocatReport(rows=rows, violations=violations)
