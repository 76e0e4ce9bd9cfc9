"""q-Fibonomial coefficients and their closed forms.

The central object: for m, n >= 0,

    qfibonomial(m, n) = [F_{m+n}]!_q / ([F_m]!_q * [F_n]!_q)

where [F_n]!_q is the product of the q-analogs [F_k]_q for k = 1..n.  The
quotient is always a polynomial with nonnegative integer coefficients and
palindromic coefficient sequence; unimodality is the conjecture this
workbench exists to probe.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .fib import fib
from .qpoly import (
    ONE,
    NotDivisibleError,
    Polynomial,
    div_one_minus_q_power,
    exact_div,
    mul_q_analog,
    q_analog,
)

# Above this product of operand lengths, the single synthetic division in
# qfibonomial is replaced by dividing through the denominator's binomial
# factorization (each stage O(len)); pure-Python synthetic division is
# quadratic and becomes prohibitive near the m = n = 16 corner.
SYNTHETIC_DIV_BUDGET = 50_000_000


def fibonomial(m: int, n: int) -> int:
    """Integer value at q = 1: F_{m+n}! / (F_m! F_n!) over Fibonacci factorials."""
    if m < 0 or n < 0:
        raise ValueError(f"fibonomial needs m, n >= 0, got ({m}, {n})")
    num = math.prod(fib(k) for k in range(1, m + n + 1))
    den = math.prod(fib(k) for k in range(1, m + 1)) * math.prod(
        fib(k) for k in range(1, n + 1)
    )
    q, r = divmod(num, den)
    assert r == 0, (m, n)
    return q


def qfibonomial_degree(m: int, n: int) -> int:
    """Degree of qfibonomial(m, n): F_{m+n+2} - F_{m+2} - F_{n+2} + 1."""
    return fib(m + n + 2) - fib(m + 2) - fib(n + 2) + 1


def _denominator_analog_sizes(m: int, n: int) -> list[int]:
    return [fib(k) for k in range(1, m + 1)] + [fib(k) for k in range(1, n + 1)]


def _divide_by_analog_product(num: Polynomial, sizes: list[int]) -> Polynomial:
    """num / prod([s]_q for s in sizes) via (1-q^s)/(1-q) factors.

    Multiplies by (1-q)^len(sizes), then runs one exact prefix-sum division
    per binomial (1-q^s).  Every intermediate quotient is itself a
    polynomial (it equals the final quotient times the factors not yet
    divided out), so each stage asserts exactness.
    """
    c = list(num.coeffs)
    for _ in sizes:
        # multiply by (1 - q): c[i] -= c[i-1], high to low
        c.append(0)
        for i in range(len(c) - 1, 0, -1):
            c[i] -= c[i - 1]
    for s in sorted(sizes, reverse=True):
        div_one_minus_q_power(c, s)
    return Polynomial(c)


@lru_cache(maxsize=64)
def qfibonomial(m: int, n: int) -> Polynomial:
    """The q-Fibonomial coefficient as an exact integer polynomial.

    Built as one numerator product divided once by the full denominator
    product (synthetic division); beyond SYNTHETIC_DIV_BUDGET the division
    goes through the denominator's binomial factorization instead.
    """
    if m < 0 or n < 0:
        raise ValueError(f"qfibonomial needs m, n >= 0, got ({m}, {n})")
    if m == 0 or n == 0:
        return ONE
    num = _fib_q_factorial_cached(m + n)
    sizes = _denominator_analog_sizes(m, n)
    den_len = sum((s - 1) for s in sizes) + 1
    if len(num.coeffs) * den_len <= SYNTHETIC_DIV_BUDGET:
        den = ONE
        for s in sizes:
            den = mul_q_analog(den, s)
        quo = exact_div(num, den)
    else:
        quo = _divide_by_analog_product(num, sizes)
    assert (not quo.is_zero()) and quo.degree == qfibonomial_degree(m, n)
    return quo


@lru_cache(maxsize=8)
def _fib_q_factorial_cached(n: int) -> Polynomial:
    p = ONE
    for k in range(1, n + 1):
        p = mul_q_analog(p, fib(k))
    return p


def closed_form_n2(m: int) -> Polynomial:
    """qfibonomial(m, 2) directly from its piecewise closed form.

    Coefficients rise 1, 2, ..., F_{m+1}, plateau at F_{m+1}, then mirror
    back down; degree F_{m+3} - 2.
    """
    if m < 1:
        raise ValueError(f"closed_form_n2 needs m >= 1, got {m}")
    f1, f2, f3 = fib(m + 1), fib(m + 2), fib(m + 3)
    out = []
    for k in range(f3 - 1):
        if k <= f1 - 1:
            out.append(k + 1)
        elif k <= f2 - 2:
            out.append(f1)
        else:
            out.append(f3 - k - 1)
    return Polynomial(out)


def n3_factorization(m: int) -> tuple[int, int, int]:
    """(a, b, h) with qfibonomial(m, 3) == [a]_q [b]_q [h]_{q^2}, a <= b.

    Among F_{m+1}, F_{m+2}, F_{m+3} exactly one is even (Fibonacci numbers
    are even exactly at indices divisible by 3); a, b are the two odd ones
    and h is half the even one.
    """
    if m < 1:
        raise ValueError(f"n3_factorization needs m >= 1, got {m}")
    triple = [fib(m + 1), fib(m + 2), fib(m + 3)]
    evens = [v for v in triple if v % 2 == 0]
    odds = sorted(v for v in triple if v % 2 == 1)
    assert len(evens) == 1, triple
    return (odds[0], odds[1], evens[0] // 2)


def qfibocatalan(m: int, n: int) -> Polynomial:
    """qfibonomial(m, n) / [F_{m+n}]_q.

    A polynomial with integer coefficients whenever gcd(m, n) is 1 or 2;
    outside that the division legitimately fails and the NotDivisibleError
    carries the residual as the finding.
    """
    if m < 1 or n < 1:
        raise ValueError(f"qfibocatalan needs m, n >= 1, got ({m}, {n})")
    return exact_div(qfibonomial(m, n), q_analog(fib(m + n)))


def telescoped_fibocatalan(m: int, n: int) -> Polynomial:
    """qfibocatalan via the telescoping sum, bypassing polynomial division.

    With a_i the coefficients of qfibonomial(m, n) and F = F_{m+n}:

        c_i = sum over k >= 0 of (a_{i-kF} - a_{i-kF-1}),

    reading a at negative indices as 0.  Only defined on the gcd in {1, 2}
    range where the quotient is known to be a polynomial.
    """
    if m < 1 or n < 1:
        raise ValueError(f"telescoped_fibocatalan needs m, n >= 1, got ({m}, {n})")
    if math.gcd(m, n) not in (1, 2):
        raise ValueError(
            f"telescoping form only applies when gcd(m, n) is 1 or 2, got gcd {math.gcd(m, n)}"
        )
    a = qfibonomial(m, n).coeffs
    F = fib(m + n)
    top = len(a) - 1 - (F - 1)
    out = []
    for i in range(top + 1):
        s = 0
        j = i
        while j >= 0:
            s += a[j] - (a[j - 1] if j >= 1 else 0)
            j -= F
        out.append(s)
    return Polynomial(out)
