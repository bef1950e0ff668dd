"""Exact scalar arithmetic: rationals, half-integers, and gamma values.

Everything in this package is a rational number times an integer power of
sqrt(pi).  Gamma functions are only ever evaluated at integer or
half-odd-integer arguments, where

    Gamma(n)     = (n-1)!                   integer n >= 1,
    Gamma(k+1/2) = (1/2)_k * sqrt(pi)       integer k >= 0,

and negative half-odd arguments follow by downward recursion from
Gamma(a) = Gamma(a+1)/a.  Rationals are ``fractions.Fraction`` throughout:
the stdlib type already guarantees lowest terms and a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import PoleError

Rational = Fraction


class HalfInt:
    """An exact half-integer, stored as twice its value.

    Ordering, integer-ness and integer-difference tests are all exact
    integer comparisons on ``twice``.
    """

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        self.twice = int(twice)

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def is_nonpositive_integer(self) -> bool:
        return self.is_integer and self.twice <= 0

    def __add__(self, other):
        other = half(other)
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = half(other)
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        return half(other) - self

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.twice * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.twice == half(other).twice
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < half(other).twice

    def __le__(self, other):
        return self.twice <= half(other).twice

    def __hash__(self):
        return hash(self.as_fraction)

    def __repr__(self):
        if self.is_integer:
            return "HalfInt(%d)" % (self.twice // 2)
        return "HalfInt(%d/2)" % self.twice

    def __str__(self):
        return str(self.as_fraction)


def half(x) -> HalfInt:
    """Coerce an int, Fraction or HalfInt to HalfInt; reject anything finer."""
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, int):
        return HalfInt(2 * x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return HalfInt(2 * x.numerator)
        if x.denominator == 2:
            return HalfInt(x.numerator)
        raise ValueError(f"{x} is not a half-integer")
    raise TypeError(f"cannot interpret {x!r} as a half-integer")


class ExactScalar:
    """A rational number times pi^(sqrt_pi_pow/2).

    Zero is canonical: rat == 0 forces sqrt_pi_pow == 0, so equality is a
    plain field-wise comparison.  Addition is only defined within one
    pi-grade (or with zero); a cross-grade sum is not representable and
    raises instead of silently degrading.
    """

    __slots__ = ("rat", "sqrt_pi_pow")

    def __init__(self, rat, sqrt_pi_pow: int = 0):
        rat = Fraction(rat)
        if rat == 0:
            sqrt_pi_pow = 0
        self.rat = rat
        self.sqrt_pi_pow = sqrt_pi_pow

    @classmethod
    def coerce(cls, x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, HalfInt):
            return cls(x.as_fraction)
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")

    def is_zero(self) -> bool:
        return self.rat == 0

    def is_rational(self) -> bool:
        return self.sqrt_pi_pow == 0

    def __bool__(self):
        return self.rat != 0

    def __add__(self, other):
        other = ExactScalar.coerce(other)
        if self.rat == 0:
            return other
        if other.rat == 0:
            return self
        if self.sqrt_pi_pow != other.sqrt_pi_pow:
            raise ValueError(
                "cannot add scalars carrying different powers of sqrt(pi): "
                f"{self} + {other}"
            )
        return ExactScalar(self.rat + other.rat, self.sqrt_pi_pow)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.rat, self.sqrt_pi_pow)

    def __sub__(self, other):
        return self + (-ExactScalar.coerce(other))

    def __rsub__(self, other):
        return ExactScalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = ExactScalar.coerce(other)
        return ExactScalar(self.rat * other.rat, self.sqrt_pi_pow + other.sqrt_pi_pow)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExactScalar.coerce(other)
        if other.rat == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactScalar(self.rat / other.rat, self.sqrt_pi_pow - other.sqrt_pi_pow)

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ExactScalar(1) / self ** (-k)
        return ExactScalar(self.rat**k, self.sqrt_pi_pow * k)

    def __eq__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.rat == other.rat and self.sqrt_pi_pow == other.sqrt_pi_pow

    def __hash__(self):
        return hash((self.rat, self.sqrt_pi_pow))

    def __repr__(self):
        if self.sqrt_pi_pow == 0:
            return f"ExactScalar({self.rat})"
        return f"ExactScalar({self.rat}, sqrt_pi_pow={self.sqrt_pi_pow})"

    def __str__(self):
        if self.sqrt_pi_pow == 0:
            return str(self.rat)
        return f"{self.rat}*pi^({Fraction(self.sqrt_pi_pow, 2)})"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)


def _as_fraction(a) -> Fraction:
    if isinstance(a, HalfInt):
        return a.as_fraction
    return Fraction(a)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product for n = 0."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = _as_fraction(a)
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def gamma_half(a) -> ExactScalar:
    """Gamma at an integer or half-odd-integer argument.

    Raises PoleError on the poles (non-positive integers).
    """
    h = half(a)
    if h.is_integer:
        v = h.twice // 2
        if v <= 0:
            raise PoleError(f"Gamma pole at {v}")
        return ExactScalar(factorial(v - 1))
    k = (h.twice - 1) // 2  # a = k + 1/2
    if k >= 0:
        return ExactScalar(pochhammer(Fraction(1, 2), k), 1)
    # Gamma(a) = Gamma(1/2) / (a)_{-k} by upward telescoping
    return ExactScalar(1 / pochhammer(h.as_fraction, -k), 1)


def recip_gamma(a) -> ExactScalar:
    """1/Gamma(a); total, with zeros at the non-positive integers."""
    h = half(a)
    if h.is_nonpositive_integer():
        return ZERO
    g = gamma_half(h)
    return ExactScalar(1 / g.rat, -g.sqrt_pi_pow)


def gamma_ratio(a, b) -> ExactScalar:
    """Gamma(a)/Gamma(b), exact and purely rational when a - b is an integer."""
    ha, hb = half(a), half(b)
    if ha.is_nonpositive_integer():
        raise PoleError(f"Gamma pole at {ha}")
    d = ha.twice - hb.twice
    if d % 2 == 0:
        n = d // 2
        if n >= 0:
            return ExactScalar(pochhammer(hb.as_fraction, n))
        return ExactScalar(1 / pochhammer(ha.as_fraction, -n))
    return gamma_half(ha) * recip_gamma(hb)


def beta_fn(a, b) -> ExactScalar:
    """Euler beta B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b)."""
    ha, hb = half(a), half(b)
    for arg in (ha, hb, ha + hb):
        if arg.is_nonpositive_integer():
            raise PoleError(f"beta function pole at argument {arg}")
    return gamma_half(ha) * gamma_half(hb) * recip_gamma(ha + hb)
