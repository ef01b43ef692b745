"""Degeneracy: the coset invariant, the Delta criterion, reconstruction,
decompositions, and the Hankel factorization."""

import math

import pytest

from kleintrace import (
    DensePolynomial,
    GaussianRational,
    PrincipalParts,
    TraceSpec,
    coset_key,
    decompose_pole_order,
    decompose_two_root,
    degenerate_basis,
    delta_criterion,
    delta_invariant,
    hankel_rank,
    partial_fractions,
    pole_bounds,
    poly_gcd,
    q_from_principal_parts,
    radical_generator,
    reconstruct_principal_parts,
    reconstruct_rational,
    series_of_rational,
    vandermonde_factor,
)
from kleintrace import linalg
from kleintrace.catalog import CATALOG_P, CATALOG_T
from kleintrace.degeneracy import assemble_vandermonde
from kleintrace.selftest import random_poly, random_trace_q
from kleintrace.tracespace import HankelMatrix

from conftest import fp, gr, poly

P2 = fp(0, 1)
DEGEN = TraceSpec(P2, gr(2), poly(-1, -1))  # transform 1/(x - 1/2)


# ------------------------------------------------------------- invariants


def test_delta_invariant_examples():
    assert delta_invariant(P2)[0] == 1
    assert delta_invariant(fp(0, gr("1/3")))[0] == 0
    assert delta_invariant(fp(0, 1, 2))[0] == 2
    assert delta_invariant(fp((0, 2)))[0] == 0
    assert delta_invariant(fp((0, 2), (1, 2)))[0] == 2


def test_delta_invariant_range_and_extremes():
    # 0 <= delta <= d-1; extremes characterized by the root pattern
    for _, P in CATALOG_P:
        total, per_coset = delta_invariant(P)
        assert 0 <= total <= P.degree - 1
        # independent scan: delta = 0 iff no two distinct roots differ by
        # a nonzero integer
        pairs = [
            (a, b)
            for a, _ in P.roots
            for b, _ in P.roots
            if a != b and coset_key(a) == coset_key(b)
        ]
        assert (total == 0) == (not pairs)
        single_coset_simple = (
            all(m == 1 for _, m in P.roots)
            and len({coset_key(a) for a, _ in P.roots}) == 1
        )
        assert (total == P.degree - 1) == single_coset_simple


def test_pole_bounds_examples():
    assert pole_bounds(P2).bounds == {gr("1/2"): 1}
    assert pole_bounds(P2).total == 1
    assert pole_bounds(fp(0, gr("1/3"))).bounds == {}
    assert pole_bounds(fp((0, 2), (1, 2))).bounds == {gr("1/2"): 2}
    assert pole_bounds(fp(0, 1, 2)).bounds == {gr("1/2"): 1, gr("3/2"): 1}


# ---------------------------------------------------------- the criterion


def test_delta_criterion_worked_examples():
    rep = delta_criterion(DEGEN)
    assert rep.degenerate
    key = coset_key(gr(0))
    assert rep.deltas[(key, 1)] == gr(0)
    assert rep.delta_total == 1

    rep2 = delta_criterion(TraceSpec(P2, gr(2), poly(1)))
    assert not rep2.degenerate
    assert rep2.deltas[(key, 1)] == gr("-1/2")

    rep3 = delta_criterion(TraceSpec(P2, gr(2), DensePolynomial.zero()))
    assert rep3.degenerate


def test_delta_shift_proportionality(rng):
    # recomputing Delta from the representative shifted by one rescales by
    # t, so the zero set is well defined on cosets
    t = gr("1/3")
    for _ in range(20):
        q = random_trace_q(rng, P2, t)
        D = partial_fractions(q, P2)
        delta_at = lambda b: sum(
            (
                t ** (-j) * D.coefficient(b + GaussianRational(j), 1)
                for j in range(-3, 4)
            ),
            gr(0),
        )
        assert delta_at(gr(0)) == t * delta_at(gr(-1))


def test_degenerate_basis_examples():
    basis = degenerate_basis(P2, gr(2))
    assert len(basis) == 1
    # spanned by Q = -x-1 up to scale
    q = basis[0].Q
    ratio = q.coefficient(1) / gr(-1)
    assert q == poly(-1, -1) * ratio

    assert degenerate_basis(fp(0, gr("1/3")), gr(2)) == []

    basis_t1 = degenerate_basis(P2, gr(1))
    assert len(basis_t1) == 1
    # dim C = 1 = delta at t=1: no nondegenerate trace exists
    from kleintrace import trace_dim

    assert trace_dim(P2, gr(1)) == 1


def test_degenerate_basis_members_and_independence(rng):
    for _, P in CATALOG_P:
        total, _ = delta_invariant(P)
        for _, t in CATALOG_T:
            basis = degenerate_basis(P, t)
            assert len(basis) == total
            for member in basis:
                assert delta_criterion(member).degenerate
            if basis:
                rows = [
                    [member.Q.coefficient(k) for k in range(P.degree)]
                    for member in basis
                ]
                assert linalg.rank(rows) == len(basis)


# ---------------------------------------------------------- reconstruction


def test_reconstruct_worked_examples():
    num, den = reconstruct_rational(DEGEN)
    assert num == poly(1)
    assert den == poly("-1/2", 1)
    assert radical_generator(DEGEN) == den

    # two simple poles with the t-chain: D_0 = 1, D_2 = -9, t = 3
    P = fp(0, 2)
    parts_in = PrincipalParts({gr(0): [1], gr(2): [-9]})
    spec = TraceSpec(P, gr(3), q_from_principal_parts(P, parts_in))
    c_parts = reconstruct_principal_parts(spec)
    assert c_parts.entries == {gr("1/2"): (gr(1),), gr("3/2"): (gr(3),)}

    zero = TraceSpec(P2, gr(2), DensePolynomial.zero())
    num0, den0 = reconstruct_rational(zero)
    assert num0.is_zero() and den0 == DensePolynomial.one()


def test_reconstruct_rejects_nondegenerate():
    with pytest.raises(ValueError):
        reconstruct_rational(TraceSpec(P2, gr(2), poly(1)))


def test_reconstruction_round_trip_catalog():
    for _, P in CATALOG_P:
        bounds = pole_bounds(P)
        for _, t in CATALOG_T:
            for spec in degenerate_basis(P, t):
                num, den = reconstruct_rational(spec)
                assert poly_gcd(num, den).degree == 0 or num.is_zero()
                assert den.coeffs[-1] == gr(1)
                assert den.degree <= bounds.total
                if den.degree:
                    assert series_of_rational(num, den, 50) == spec.moments(50)
                # pole orders capped by the one-sided root statistics
                parts = reconstruct_principal_parts(spec)
                for a in parts.support():
                    assert parts.order_at(a) <= bounds.bounds.get(a, 0)


def test_radical_annihilates(rng):
    for spec in (DEGEN, degenerate_basis(fp((0, 2), (1, 2)), gr(2))[1]):
        gen = radical_generator(spec)
        for _ in range(50):
            q = random_poly(rng, 5)
            assert spec.trace_of_poly(gen * q) == gr(0)


def test_degenerate_moment_growth_bounded():
    # |mu_n| <= C * rho^n with rho = 1 + max |pole|
    for spec in degenerate_basis(fp(0, 1, 2), gr(2)):
        parts = reconstruct_principal_parts(spec)
        if parts.is_zero():
            continue
        rho = 1 + max(abs(a.to_complex()) for a in parts.support())
        mu = spec.moments(60)
        c0 = max(abs(mu[n].to_complex()) / rho**n for n in range(5)) + 1
        for n in range(61):
            assert abs(mu[n].to_complex()) <= c0 * rho**n


# ----------------------------------------------------------- decomposition


def test_pole_order_decomposition_example():
    t = gr(2)
    P = fp((0, 2), (1, 2))
    parts = PrincipalParts({gr(0): [1, 1], gr(1): [-2, -(t * t)]})
    spec = TraceSpec(P, t, q_from_principal_parts(P, parts))
    comps = decompose_pole_order(spec)
    assert [k for k, _ in comps] == [1, 2]
    d1 = partial_fractions(comps[0][1].Q, comps[0][1].P)
    assert d1.entries == {gr(0): (gr(1),), gr(1): (gr(-2),)}
    assert comps[0][1].P == fp(0, 1)
    d2 = partial_fractions(comps[1][1].Q, comps[1][1].P)
    assert d2.entries == {gr(0): (gr(0), gr(1)), gr(1): (gr(0), -(t * t))}
    assert comps[1][1].P == P
    # moments recombine (pullback preserves the transform)
    total = comps[0][1].moments(25) + comps[1][1].moments(25)
    assert total == spec.moments(25)


def test_pole_order_decomposition_trivial_cases():
    assert decompose_pole_order(DEGEN) == [(1, DEGEN)]
    zero = TraceSpec(P2, gr(2), DensePolynomial.zero())
    assert decompose_pole_order(zero) == []


def test_pole_order_decomposition_degeneracy_distributes(rng):
    # T degenerate iff every component degenerate
    t = gr("1/3")
    P = fp((0, 2), (1, 2))
    for spec in degenerate_basis(P, t):
        for _, comp in decompose_pole_order(spec):
            assert delta_criterion(comp).degenerate
    q = random_trace_q(rng, P, t)
    spec = TraceSpec(P, t, q)
    if not delta_criterion(spec).degenerate:
        flags = [
            delta_criterion(comp).degenerate
            for _, comp in decompose_pole_order(spec)
        ]
        assert not all(flags)


def test_two_root_decomposition_examples():
    pieces = decompose_two_root(DEGEN)
    assert len(pieces) == 1
    assert pieces[0][0] == P2
    assert pieces[0][1] == DEGEN

    # degenerate trace on x(x-1)(x-2) with poles at 1/2 and 3/2
    P = fp(0, 1, 2)
    t = gr(2)
    parts = PrincipalParts({gr(0): [1], gr(1): [1 - t], gr(2): [-t]})
    spec = TraceSpec(P, t, q_from_principal_parts(P, parts))
    c_parts = reconstruct_principal_parts(spec)
    assert set(c_parts.support()) == {gr("1/2"), gr("3/2")}
    pieces = decompose_two_root(spec)
    assert [p.to_json() for p, _ in pieces] == [
        fp(0, 1).to_json(),
        fp(1, 2).to_json(),
    ]
    total = pieces[0][1].moments(30) + pieces[1][1].moments(30)
    assert total == spec.moments(30)

    zero = TraceSpec(P2, gr(2), DensePolynomial.zero())
    assert decompose_two_root(zero) == []


def test_two_root_decomposition_catalog():
    for _, P in CATALOG_P:
        for _, t in CATALOG_T:
            for spec in degenerate_basis(P, t):
                pieces = decompose_two_root(spec)
                total = None
                for pair, comp in pieces:
                    roots = pair.roots
                    assert len(roots) == 2
                    assert roots[0][1] == roots[1][1]
                    gap = roots[1][0] - roots[0][0]
                    assert gap.im == 0 and gap.re.denominator == 1
                    assert gap.re > 0
                    assert delta_criterion(comp).degenerate
                    m = comp.moments(30)
                    total = m if total is None else total + m
                if total is not None:
                    assert total == spec.moments(30)
                else:
                    assert spec.is_zero()


def test_two_root_rejects_nondegenerate():
    with pytest.raises(ValueError):
        decompose_two_root(TraceSpec(P2, gr(2), poly(1)))


# ------------------------------------------------------------- Vandermonde


def test_vandermonde_factor_examples():
    # rank-1 geometric case
    parts = reconstruct_principal_parts(DEGEN)
    vb, db = vandermonde_factor(parts, 3)
    H = assemble_vandermonde(vb, db, 3)
    mu = DEGEN.moments(4)
    expect = [[mu[i + j] for j in range(3)] for i in range(3)]
    assert linalg.mat_eq(H, expect)
    assert linalg.rank(H) == 1
    assert all(H[i][j] == gr("1/2") ** (i + j) for i in range(3) for j in range(3))

    # pure double pole at 0: moments (0, 1, 0, ...)
    parts2 = PrincipalParts({gr(0): [0, 1]})
    vb2, db2 = vandermonde_factor(parts2, 2)
    assert [[str(c) for c in row] for row in vb2[0][1]] == [
        ["1/1+0/1i", "0/1+0/1i"],
        ["0/1+0/1i", "1/1+0/1i"],
    ]
    H2 = assemble_vandermonde(vb2, db2, 2)
    assert H2 == [[gr(0), gr(1)], [gr(1), gr(0)]]

    # zero transform: empty factorization, zero matrix
    vb3, db3 = vandermonde_factor(PrincipalParts({}), 2)
    assert vb3 == [] and db3 == []
    assert assemble_vandermonde(vb3, db3, 2) == linalg.zeros(2, 2)


def test_vandermonde_matches_hankel_on_catalog():
    N = 5
    for _, P in CATALOG_P:
        for _, t in CATALOG_T:
            for spec in degenerate_basis(P, t):
                parts = reconstruct_principal_parts(spec)
                vb, db = vandermonde_factor(parts, N)
                H = assemble_vandermonde(vb, db, N)
                hm = HankelMatrix.from_moments(spec.moments(2 * N - 2), N)
                assert linalg.mat_eq(H, [list(r) for r in hm.rows])


# ---------------------------------------------------------- the tri-oracle


def test_tri_oracle_smoke(rng):
    from kleintrace import pade_approximant

    for _, P in CATALOG_P:
        B = pole_bounds(P).total
        for _, t in CATALOG_T:
            specs = [TraceSpec(P, t, random_trace_q(rng, P, t)) for _ in range(3)]
            specs += degenerate_basis(P, t)
            for spec in specs:
                by_delta = delta_criterion(spec).degenerate
                mom = spec.moments(2 * (B + 6) - 1)
                by_hankel = hankel_rank(mom, B + 6) <= B
                s_ref = pade_approximant(mom, B).S
                by_pade = all(
                    pade_approximant(mom, n).S == s_ref
                    for n in range(B, B + 6)
                )
                assert by_delta == by_hankel == by_pade
                if by_delta:
                    assert hankel_rank(mom, B + 1) <= B
