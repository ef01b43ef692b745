"""Exact kernel: scalars, polynomials, series, partial fractions, cosets."""

from fractions import Fraction

import pytest

from kleintrace import (
    DensePolynomial,
    GaussianRational,
    PrincipalParts,
    TruncatedSeries,
    coset_key,
    parse_factored,
    partial_fractions,
    poly_gcd,
    poly_shift,
    series_of_rational,
)
from kleintrace.selftest import random_poly, random_scalar

from conftest import fp, gr, poly


# ---------------------------------------------------------------- scalars


def test_scalar_arithmetic_is_exact(rng):
    for _ in range(200):
        a = random_scalar(rng)
        b = random_scalar(rng)
        assert (a + b) - b == a
        assert a * b == b * a
        if b:
            assert (a / b) * b == a


def test_scalar_powers_and_conjugate():
    i = gr(0, 1)
    assert i * i == gr(-1)
    assert i**4 == gr(1)
    assert i**-1 == -i
    assert gr("3/2", 1).conjugate() == gr("3/2", -1)
    assert gr(2) ** -2 == gr(Fraction(1, 4))


def test_scalar_string_round_trip(rng):
    cases = [gr(0), gr(-1), gr("3/2"), gr("-3/2"), gr(0, 1), gr("1/3", Fraction(-1, 2))]
    cases += [random_scalar(rng) for _ in range(50)]
    for a in cases:
        assert GaussianRational.from_string(str(a)) == a


def test_scalar_parse_shorthands():
    assert GaussianRational.from_string("2") == gr(2)
    assert GaussianRational.from_string("2/1") == gr(2)
    assert GaussianRational.from_string("-3/2") == gr("-3/2")
    assert GaussianRational.from_string("i") == gr(0, 1)
    assert GaussianRational.from_string("-i") == gr(0, -1)
    assert GaussianRational.from_string("1/2i") == gr(0, Fraction(1, 2))
    assert GaussianRational.from_string("1/3+1/2i") == gr("1/3", Fraction(1, 2))
    assert str(gr("-3/2")) == "-3/2+0/1i"


def test_scalar_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gr(1) / gr(0)


# ------------------------------------------------------------ polynomials


def test_poly_shift_examples():
    # x^2 shifted by 1/2
    assert poly_shift(poly(0, 0, 1), gr("1/2")) == poly("1/4", 1, 1)
    # zero polynomial
    assert poly_shift(DensePolynomial.zero(), gr(5)) == DensePolynomial.zero()
    # x shifted by -1
    assert poly_shift(poly(0, 1), gr(-1)) == poly(-1, 1)


def test_poly_shift_round_trip(rng):
    for _ in range(100):
        p = random_poly(rng, 5)
        h = random_scalar(rng)
        assert poly_shift(poly_shift(p, h), -h) == p


def test_poly_divmod_and_gcd(rng):
    for _ in range(50):
        a = random_poly(rng, 4)
        b = random_poly(rng, 2)
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree
    g = poly_gcd(poly(-1, 0, 1), poly(1, 1))  # (x^2-1, x+1)
    assert g == poly(1, 1)


def test_factored_expand_and_quotient():
    P = fp(0, 1)
    assert P.expand() == poly(0, -1, 1)
    assert P.degree == 2
    assert P.quotient_poly(gr(0), 1) == poly(-1, 1)
    with pytest.raises(ValueError):
        P.quotient_poly(gr(5), 1)
    with pytest.raises(ValueError):
        fp((0, 1), (0, 2))  # duplicate root


# ----------------------------------------------------------------- series


def test_series_of_rational_examples():
    # geometric: 1/(x - 1/2)
    s = series_of_rational(poly(1), poly("-1/2", 1), 3)
    assert s == TruncatedSeries([1, gr("1/2"), gr("1/4"), gr("1/8")])
    # 1/x
    assert series_of_rational(poly(1), poly(0, 1), 2) == TruncatedSeries([1, 0, 0])
    # differentiated geometric: 1/(x-1)^2 = sum n x^{-n-1}
    assert series_of_rational(poly(1), poly(1, -2, 1), 3) == TruncatedSeries(
        [0, 1, 2, 3]
    )


def test_series_requires_proper_fraction():
    with pytest.raises(ValueError):
        series_of_rational(poly(0, 1), poly(1, 1), 3)
    with pytest.raises(ValueError):
        series_of_rational(poly(1), DensePolynomial.zero(), 3)


def test_series_defining_relation(rng):
    # independent check: R(x) = S(x) * sum c_n x^{-n-1} up to the tail
    for _ in range(30):
        S = random_poly(rng, 4)
        if S.degree < 1:
            continue
        R = random_poly(rng, S.degree - 1)
        c = series_of_rational(R, S, 12)
        m = S.degree
        for j in range(m):
            acc = gr(0)
            for n in range(12 + 1):
                if 0 <= j + n + 1 <= m:
                    acc = acc + S.coefficient(j + n + 1) * c[n]
            assert acc == R.coefficient(j)


# ------------------------------------------------------- partial fractions


def test_partial_fractions_examples():
    P = fp(0, 1)
    one = poly(1)
    parts = partial_fractions(one, P)
    assert parts.coefficient(gr(0), 1) == gr(-1)
    assert parts.coefficient(gr(1), 1) == gr(1)
    # residue-oracle case: R = -x-1 over x(x-1)
    parts2 = partial_fractions(poly(-1, -1), P)
    assert parts2.coefficient(gr(0), 1) == gr(1)
    assert parts2.coefficient(gr(1), 1) == gr(-2)
    # already a principal part: 1/x^2
    parts3 = partial_fractions(one, fp((0, 2)))
    assert parts3.entries[gr(0)] == (gr(0), gr(1))


def test_partial_fractions_simple_pole_residue_oracle(rng):
    # at a simple root a, the coefficient is R(a) / prod_{b != a} (a-b)^{m_b}
    P = fp(0, 2, gr("7/2"))
    for _ in range(25):
        R = random_poly(rng, P.degree - 1)
        parts = partial_fractions(R, P)
        for a, _ in P.roots:
            expected = R.evaluate(a) / P.quotient_poly(a, 1).evaluate(a)
            assert parts.coefficient(a, 1) == expected


def test_partial_fractions_recombine(rng):
    for P in (fp(0, 1), fp((0, 2), (1, 2)), fp((gr("1/3"), 1), (gr(0, 1), 2))):
        for _ in range(20):
            R = random_poly(rng, P.degree - 1)
            parts = partial_fractions(R, P)
            num, den = parts.to_rational()
            # num/den == R/P exactly, cleared of denominators
            assert num * P.expand() == R * den


def test_partial_fractions_degree_guard():
    with pytest.raises(ValueError):
        partial_fractions(poly(0, 0, 1), fp(0, 1))
    with pytest.raises(ValueError):
        partial_fractions(poly(1), fp())


def test_series_round_trip_with_partial_fractions(rng):
    # series of R/S equals the series of its recombined principal parts
    for _ in range(100):
        P = fp(0, 1, (3, rng.randint(1, 2)))
        R = random_poly(rng, P.degree - 1)
        direct = series_of_rational(R, P.expand(), 30)
        assert partial_fractions(R, P).series(30) == direct


# ----------------------------------------------------------------- cosets


def test_coset_key_examples():
    assert coset_key(gr("3/2")) == (Fraction(0), Fraction(1, 2))
    assert coset_key(gr("-1/2")) == (Fraction(0), Fraction(1, 2))
    assert coset_key(gr("1/3", 1)) == (Fraction(1), Fraction(1, 3))


def test_coset_key_integer_difference_law(rng):
    for _ in range(100):
        a = random_scalar(rng)
        b = random_scalar(rng)
        same = coset_key(a) == coset_key(b)
        diff = a - b
        assert same == (diff.im == 0 and diff.re.denominator == 1)


# ----------------------------------------------------------------- parser


def test_parse_factored_grammar():
    assert parse_factored("x*(x-1)") == fp(0, 1)
    assert parse_factored("x(x-1)") == fp(0, 1)
    assert parse_factored("x^2(x-1)^2") == fp((0, 2), (1, 2))
    assert parse_factored("(x+1/2)^2(x-3/2)^2") == fp((gr("-1/2"), 2), (gr("3/2"), 2))
    assert parse_factored("x(x-1/3)") == fp(0, gr("1/3"))
    assert parse_factored("(x-1/2i)") == fp(gr(0, Fraction(1, 2)))
    with pytest.raises(ValueError):
        parse_factored("x + 1")
    with pytest.raises(ValueError):
        parse_factored("(y-1)")
