"""Built-in sweep catalog: defining polynomials and twist values.

The polynomials cover the interesting degeneracy strata: single roots,
multiple roots, integer root gaps (one, two, and mixed with non-integer
gaps), and double roots at integer distance.
"""

from __future__ import annotations

from fractions import Fraction

from .exactkernel import FactoredPolynomial, GaussianRational

CATALOG_P: tuple[tuple[str, FactoredPolynomial], ...] = (
    ("x", FactoredPolynomial([(0, 1)])),
    ("x^2", FactoredPolynomial([(0, 2)])),
    ("x(x-1)", FactoredPolynomial([(0, 1), (1, 1)])),
    ("x(x-1/3)", FactoredPolynomial([(0, 1), (Fraction(1, 3), 1)])),
    ("x(x-1)(x-2)", FactoredPolynomial([(0, 1), (1, 1), (2, 1)])),
    ("x^2(x-1)^2", FactoredPolynomial([(0, 2), (1, 2)])),
    (
        "x(x-1)(x-5/2)",
        FactoredPolynomial([(0, 1), (1, 1), (Fraction(5, 2), 1)]),
    ),
    (
        "(x+1/2)^2(x-3/2)^2",
        FactoredPolynomial([(Fraction(-1, 2), 2), (Fraction(3, 2), 2)]),
    ),
    ("x(x-2)", FactoredPolynomial([(0, 1), (2, 1)])),
)

CATALOG_T: tuple[tuple[str, GaussianRational], ...] = (
    ("2", GaussianRational(2)),
    ("1", GaussianRational(1)),
    ("-1", GaussianRational(-1)),
    ("i", GaussianRational(0, 1)),
    ("1/3", GaussianRational(Fraction(1, 3))),
)
