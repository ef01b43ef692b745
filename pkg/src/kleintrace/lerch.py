"""Floating-point Lerch sums and numeric verification of the trace
difference equation.

Phi(t, n, x) = sum_{j>=0} t^j / (x+j)^n converges for |t| <= 1, n >= 1 with
one inequality strict.  Out of sum_a sum_l (-1)^l D_a^(l) Phi(t, l, a-x+1/2)
one assembles a meromorphic solution F~ of

    F~(x + 1/2) - t F~(x - 1/2) = Q(x)/P(x),

the same equation the (generally divergent) moment series satisfies
formally.  This module evaluates Phi and measures the residual of that
recursion on sample points; everything here is double precision, the one
place in the package where floats are allowed.
"""

from __future__ import annotations

import math

from .exactkernel import partial_fractions
from .tracespace import TraceSpec

_POLE_TOL = 1e-9
_MAX_TERMS = 10**6


def _near_nonpositive_integer(x: complex) -> bool:
    if abs(x.imag) > _POLE_TOL:
        return False
    nearest = round(x.real)
    return nearest <= 0 and abs(x.real - nearest) <= _POLE_TOL


def lerch_phi(t: complex, n: int, x: complex) -> complex:
    """Evaluate Phi(t, n, x) = sum_j t^j/(x+j)^n.

    Valid for |t| <= 1 with (|t| < 1 or n >= 2); x may lie anywhere off the
    pole set Z_{<=0} (points with Re(x) <= 0 are reached through finitely
    many steps of Phi(t,n,x) = x^{-n} + t Phi(t,n,x+1)).  The series tail is
    bounded by a geometric majorant (|t| < 1) or an integral tail (|t| = 1),
    targeting ~1e-15 relative error.
    """
    t = complex(t)
    x = complex(x)
    if n < 1:
        raise ValueError("the pole order n must be a positive integer")
    at = abs(t)
    if at > 1 + 1e-12:
        raise ValueError(f"|t| = {at} > 1: series diverges")
    if at >= 1 - 1e-12 and n == 1:
        raise ValueError("|t| = 1 with n = 1 diverges")
    if _near_nonpositive_integer(x):
        raise ValueError(f"x = {x} is within {_POLE_TOL} of a pole")

    # lift to Re(x) >= 1 so |x + j| grows monotonically along the sum
    prefix = 0.0 + 0.0j
    t_lift = 1.0 + 0.0j
    while x.real < 1.0:
        if _near_nonpositive_integer(x):
            raise ValueError(f"recursion hit a pole near {x}")
        prefix += t_lift * x ** (-n)
        t_lift *= t
        x += 1

    acc = 0.0 + 0.0j
    tp = 1.0 + 0.0j
    for j in range(_MAX_TERMS):
        acc += tp / (x + j) ** n
        tp *= t
        scale = max(abs(acc), 1e-30)
        if at < 1.0:
            tail = abs(tp) / (1.0 - at) * min(1.0, abs(x + j + 1) ** (-n))
        else:
            tail = (x.real + j) ** (1 - n) / (n - 1)
        if tail <= 1e-15 * scale:
            break
    else:
        raise ArithmeticError(
            f"Lerch sum did not converge within {_MAX_TERMS} terms"
        )
    return prefix + t_lift * acc


def _rational_data(spec: TraceSpec):
    """Difference-datum principal parts of Q/P as complex triples."""
    terms = []
    for a, coeffs in partial_fractions(spec.Q, spec.P):
        ac = a.to_complex()
        for order, coeff in enumerate(coeffs, start=1):
            if coeff:
                terms.append((ac, order, coeff.to_complex()))
    return terms


def stieltjes_solution(spec: TraceSpec):
    """The assembled meromorphic solution F~ as a complex callable.

    F~(x) = sum_a sum_l (-1)^l D_a^(l) Phi(t, l, a - x + 1/2); it satisfies
    the trace difference equation with datum Q/P.  Needs |t| <= 1 and
    t != 1.
    """
    t = spec.t.to_complex()
    if abs(t) > 1 + 1e-12:
        raise ValueError("construction needs |t| <= 1")
    if abs(t - 1) <= 1e-12:
        raise ValueError("t = 1 is not covered by the series construction")
    terms = _rational_data(spec)

    def f_tilde(x: complex) -> complex:
        acc = 0.0 + 0.0j
        for a, order, coeff in terms:
            acc += (-1) ** order * coeff * lerch_phi(t, order, a - x + 0.5)
        return acc

    return f_tilde


def verify_lerch_recursion(spec: TraceSpec, samples):
    """Max over samples of |F~(x+1/2) - t F~(x-1/2) - Q(x)/P(x)|.

    Samples must avoid the pole lattices a + 1/2 + Z of the solution.
    Returns (max_residual, [(x, residual), ...]).
    """
    t = spec.t.to_complex()
    f_tilde = stieltjes_solution(spec)
    q_c = [c.to_complex() for c in spec.Q.coeffs]
    results = []
    worst = 0.0
    for sample in samples:
        x = complex(sample)
        p_val = 1.0 + 0.0j
        for root, mult in spec.P.roots:
            p_val *= (x - root.to_complex()) ** mult
        if abs(p_val) < 1e-12:
            raise ValueError(f"sample {x} is too close to a root of P")
        q_val = 0.0 + 0.0j
        for c in reversed(q_c):
            q_val = q_val * x + c
        residual = abs(
            f_tilde(x + 0.5) - t * f_tilde(x - 0.5) - q_val / p_val
        )
        results.append((x, residual))
        worst = max(worst, residual)
    return worst, results


def moment_divergence_profile(spec: TraceSpec, n_lo: int, n_hi: int):
    """The diagnostic sequence |mu_n|^(1/n) / n for n_lo <= n <= n_hi.

    For a nondegenerate trace the moment series has radius of convergence
    zero, so this stays bounded away from 0; computed from exact moments,
    floated only through logarithms to dodge overflow.
    """
    moments = spec.moments(n_hi)
    out = []
    for n in range(n_lo, n_hi + 1):
        mu = moments[n]
        norm2 = mu.re * mu.re + mu.im * mu.im
        if norm2 == 0:
            out.append(0.0)
            continue
        log_abs = 0.5 * (math.log(norm2.numerator) - math.log(norm2.denominator))
        out.append(math.exp(log_abs / n) / n)
    return out
