"""fibwork: exact computation workbench for q-Fibonomial coefficients.

Layers, bottom up: Fibonacci numbers and Zeckendorf decompositions (fib),
dense exact integer polynomials (qpoly), the q-Fibonomial construction and
closed forms (fibonomial), the path/domino tiling model that re-derives the
same polynomials combinatorially (tilings), the chain decomposition of
two-row boards (chains), unimodality criteria for q-analog products
(products), and the sweep/report/cache/CLI harness on top.
"""

__version__ = "0.1.0"

from .fib import FibSequence, fib, zeckendorf
from .fibonomial import (
    closed_form_n2,
    fibonomial,
    n3_factorization,
    qfibocatalan,
    qfibonomial,
    qfibonomial_degree,
    telescoped_fibocatalan,
)
from .qpoly import (
    NotDivisibleError,
    Polynomial,
    exact_div,
    fib_q_factorial,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    mul,
    mul_q_analog,
    q_analog,
)
from .tilings import (
    EnumerationCapExceeded,
    HeightProfile,
    Tiling,
    enumerate_tilings,
    tiling_count,
    tiling_polynomial,
    weight_degree,
)
from .chains import ChainBlock, Classification, classify, decompose, step_down, step_up
from .products import (
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

__all__ = [
    "FibSequence", "fib", "zeckendorf",
    "Polynomial", "NotDivisibleError", "q_analog", "mul", "mul_q_analog",
    "fib_q_factorial", "exact_div", "is_symmetric", "is_unimodal",
    "is_log_concave",
    "fibonomial", "qfibonomial", "qfibonomial_degree", "closed_form_n2",
    "n3_factorization", "qfibocatalan", "telescoped_fibocatalan",
    "HeightProfile", "Tiling", "EnumerationCapExceeded", "enumerate_tilings",
    "tiling_count", "tiling_polynomial", "weight_degree",
    "ChainBlock", "Classification", "classify", "decompose", "step_down",
    "step_up",
    "ProductSpec", "pair_product_coeffs", "scaled_pair_unimodal",
    "triple_product_unimodal", "gain_count", "loss_count",
    "product_unimodal_predicate", "scan_products",
    "SUFFICIENCY_VIOLATION", "NECESSITY_VIOLATION",
]
