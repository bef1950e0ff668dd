"""Closed-form polynomial families and their exponential generating functions.

Covers the classical Jacobi polynomials, both Sobolev-Jacobi families (the
degenerate (-1,-1) case and the (-1, beta>-1) case), the two-variable
Hermite polynomials, and the Tricomi-Bessel product form of the shifted
EGF for the beta > -1 family.  Generalized binomials are Pochhammer
quotients, so every coefficient is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ParamError
from .hyper import tricomi_coeff
from .poly import CoeffSeries, Poly
from .scalar import ExactScalar, gamma_ratio, half, pochhammer, recip_gamma
from .umbral import GenMonomial, GenSeries, itransform_scalar

HERMITE_SECOND_VAR = "z"


def binom_general(a, k: int) -> Fraction:
    """binomial(a, k) for arbitrary rational a: (a-k+1)_k / k!."""
    if k < 0:
        return Fraction(0)
    return pochhammer(Fraction(a) - k + 1, k) / factorial(k)


def jacobi_classical(n: int, alpha, beta) -> Poly:
    """Classical Jacobi polynomial of degree n, parameters > -1."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= -1 or beta <= -1:
        raise ParamError(f"classical Jacobi needs alpha, beta > -1, got ({alpha}, {beta})")
    if n < 0:
        raise ParamError("degree must be >= 0")
    x = Poly.var("x")
    xm = (x - 1) * Fraction(1, 2)
    xp = (x + 1) * Fraction(1, 2)
    out = Poly.zero(("x",))
    for ell in range(n + 1):
        c = binom_general(n + alpha, ell) * binom_general(n + beta, n - ell)
        if c:
            out = out + xm ** (n - ell) * xp**ell * c
    return out


def sj_closed_mm(n: int, gamma=0) -> Poly:
    """Kwon-Littlejohn closed form at parameters (-1, -1); degree one keeps
    the free constant gamma."""
    if n < 0:
        raise ParamError("degree must be >= 0")
    if n == 0:
        return Poly.const(1)
    x = Poly.var("x")
    if n == 1:
        return x + Fraction(gamma)
    scale = 1 / binom_general(2 * n - 2, n)
    out = Poly.zero(("x",))
    for k in range(1, n):
        c = binom_general(n - 1, k) * binom_general(n - 1, n - k)
        out = out + (x - 1) ** (n - k) * (x + 1) ** k * c
    return out * scale


def sj_closed_beta(n: int, beta) -> Poly:
    """Closed form at parameters (-1, beta) for beta > -1; coincides with
    the monic classical Jacobi polynomial of the same parameters."""
    beta = Fraction(beta)
    if beta <= -1:
        raise ParamError(f"needs beta > -1, got {beta}")
    if n < 0:
        raise ParamError("degree must be >= 0")
    if n == 0:
        return Poly.const(1)
    x = Poly.var("x")
    if n == 1:
        return x - 1
    scale = 1 / binom_general(2 * n + beta - 1, n)
    out = Poly.zero(("x",))
    for k in range(n + 1):
        c = binom_general(n - 1, k) * binom_general(n + beta, n - k)
        if c:
            out = out + (x - 1) ** (n - k) * (x + 1) ** k * c
    return out * scale


def sj_beta_rescaled(n: int, beta) -> Poly:
    """The rescaled variant binom(2n+beta-1, n) / Gamma(n+beta+1) times the
    closed form; beta must be a half-integer so the gamma value is exact."""
    beta = Fraction(beta)
    if beta.denominator not in (1, 2):
        raise ParamError(f"rescaling needs half-integer beta, got {beta}")
    if n == 0:
        return Poly.const(1)
    scale = ExactScalar(binom_general(2 * n + beta - 1, n)) * recip_gamma(
        half(beta) + (n + 1)
    )
    return sj_closed_beta(n, beta) * scale


def matching_coeff(n: int, k: int) -> int:
    """n! / ((n-2k)! k!) when 0 <= 2k <= n, else 0."""
    if k < 0 or 2 * k > n:
        return 0
    return factorial(n) // (factorial(n - 2 * k) * factorial(k))


def hermite_closed(n: int) -> Poly:
    """Two-variable Hermite polynomial, combinatorial closed form."""
    if n < 0:
        raise ParamError("degree must be >= 0")
    out = Poly.zero(("x", HERMITE_SECOND_VAR))
    for m in range(n // 2 + 1):
        out = out + Poly.monomial(
            matching_coeff(n, m), x=n - 2 * m, **{HERMITE_SECOND_VAR: m}
        )
    return out


def sj_umbral(n: int) -> Poly:
    """Degree-n (-1,-1) polynomial as the transform of
    (uv)^(n-1/2) H_n(x, -1/(4u))."""
    if n < 0:
        raise ParamError("degree must be >= 0")
    terms = []
    nh = half(Fraction(2 * n - 1, 2))  # n - 1/2
    for m in range(n // 2 + 1):
        coeff = Poly.var("x", n - 2 * m) * Fraction(-1, 4) ** m * matching_coeff(n, m)
        terms.append(
            GenMonomial(coeff, u_exps={"u": nh - m}, v_exps={"v": nh})
        )
    return itransform_scalar(GenSeries(terms, lambda_order=0))


def sj_egf_coeff(N: int, order_m=None) -> Poly:
    """Coefficient of the N-th power of the series parameter in the
    (-1,-1) EGF double sum at y = 1; equals sj_umbral(N)/N!."""
    if N < 0:
        raise ParamError("order must be >= 0")
    top = N // 2 if order_m is None else min(N // 2, order_m)
    out = Poly.zero(("x",))
    for m in range(top + 1):
        n = N - 2 * m
        ratio = gamma_ratio(half(Fraction(2 * (m + n) - 1, 2)), half(Fraction(2 * (2 * m + n) - 1, 2)))
        c = (
            ExactScalar(Fraction(-1, 4) ** m)
            * ratio
            * Fraction(1, factorial(n) * factorial(m))
        )
        out = out + Poly.var("x", n) * c
    return out


# Canonical per-degree sources used by the lacunary oracle and the CLI.

@lru_cache(maxsize=None)
def sj_family(n: int) -> Poly:
    """(-1,-1) family with the degree-one constant fixed to zero."""
    return sj_closed_mm(n, 0)


@lru_cache(maxsize=None)
def hermite_family(n: int) -> Poly:
    return hermite_closed(n)


def hermite_egf(order: int) -> CoeffSeries:
    """EGF truncation: coefficient of the n-th power is H_n / n!."""
    return CoeffSeries.build(
        lambda n: hermite_family(n) * Fraction(1, factorial(n)), order
    )


def sj_egf(order: int) -> CoeffSeries:
    """EGF truncation of the (-1,-1) family."""
    return CoeffSeries.build(
        lambda n: sj_family(n) * Fraction(1, factorial(n)), order
    )


def tricomi_series(alpha, zpoly: Poly, order: int) -> CoeffSeries:
    """Series sum_r z^r / (r! Gamma(r+alpha+1)) with z = lambda * zpoly."""
    return CoeffSeries.build(lambda r: zpoly**r * tricomi_coeff(alpha, r), order)


def egf_beta_shifted(order: int, beta) -> CoeffSeries:
    """(x-1) C_1(-lambda(x-1)) C_beta(-lambda(x+1)): the 1-shifted EGF of
    the rescaled (-1, beta) family.  beta must be a half-integer > -1."""
    beta = Fraction(beta)
    if beta <= -1:
        raise ParamError(f"needs beta > -1, got {beta}")
    if beta.denominator not in (1, 2):
        raise ParamError(f"exact evaluation needs half-integer beta, got {beta}")
    x = Poly.var("x")
    c1 = tricomi_series(1, x - 1, order)
    cb = tricomi_series(half(beta), x + 1, order)
    return (c1 * cb) * (x - 1)


# Golden-data file support: one record per line,
#     <family> <n>: <exp>:<num>/<den> <exp>:<num>/<den> ...
# where <exp> is the x-exponent.  For the hermite family the second
# variable's exponent is implied: z-power = (n - exp) / 2.

def load_golden(path) -> dict:
    """Parse a golden polynomial table; keys are (family, n) pairs."""
    rows = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, body = line.partition(":")
            family, n_str = head.split()
            n = int(n_str)
            poly = Poly.zero(("x",))
            for chunk in body.split():
                exp_str, _, frac = chunk.partition(":")
                exp = int(exp_str)
                num_str, _, den_str = frac.partition("/")
                c = Fraction(int(num_str), int(den_str))
                if family == "hermite":
                    if (n - exp) % 2:
                        raise ValueError(f"bad hermite exponent {exp} at n={n}")
                    poly = poly + Poly.monomial(
                        c, x=exp, **{HERMITE_SECOND_VAR: (n - exp) // 2}
                    )
                else:
                    poly = poly + Poly.monomial(c, x=exp)
            rows[(family, n)] = poly
    return rows
