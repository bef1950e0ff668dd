"""Sparse multivariate polynomials over ExactScalar, plus truncated series.

A Poly keeps an explicit variable tuple and a map from exponent vectors to
nonzero ExactScalar coefficients.  Binary operations align variable sets by
union, so polynomials over different alphabets combine freely.  A
CoeffSeries is a list of Poly coefficients of one formal series parameter,
truncated at an explicit order; every operation records the order that
remains valid.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, inf

from .scalar import ExactScalar, ZERO

__all__ = [
    "Poly",
    "CoeffSeries",
    "derivative",
    "euler_apply",
    "shift_var",
    "series_product",
]


def _coerce(c) -> ExactScalar:
    return ExactScalar.coerce(c)


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            width = len(self.vars)
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != width:
                    raise ValueError("exponent vector width mismatch")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent in Poly")
                c = _coerce(c)
                if not c.is_zero():
                    clean[exps] = clean.get(exps, ZERO) + c
                    if clean[exps].is_zero():
                        del clean[exps]
        self.terms = clean

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, vars=()):
        return cls(vars, {})

    @classmethod
    def const(cls, c):
        c = _coerce(c)
        if c.is_zero():
            return cls((), {})
        return cls((), {(): c})

    @classmethod
    def var(cls, name: str, power: int = 1, coeff=1):
        if power == 0:
            return cls.const(coeff)
        return cls((name,), {(power,): _coerce(coeff)})

    @classmethod
    def monomial(cls, coeff, **exps):
        names = tuple(sorted(n for n, e in exps.items() if e))
        key = tuple(exps[n] for n in names)
        return cls(names, {key: _coerce(coeff)})

    # -- alignment ---------------------------------------------------------

    def _remap(self, vars):
        """Terms re-keyed onto a superset variable tuple."""
        if vars == self.vars:
            return self.terms
        pos = {v: i for i, v in enumerate(vars)}
        out = {}
        for exps, c in self.terms.items():
            key = [0] * len(vars)
            for v, e in zip(self.vars, exps):
                key[pos[v]] = e
            out[tuple(key)] = c
        return out

    def _aligned(self, other):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = tuple(sorted(set(self.vars) | set(other.vars)))
        return vars, self._remap(vars), other._remap(vars)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        vars, a, b = self._aligned(other)
        out = dict(a)
        for exps, c in b.items():
            s = out.get(exps, ZERO) + c
            if s.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = s
        return Poly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            return Poly(self.vars, {e: cc * c for e, cc in self.terms.items()})
        vars, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(key, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return Poly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly powers must be non-negative integers")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        _, a, b = self._aligned(other)
        return a == b

    def __hash__(self):
        vars, terms = self.vars, self.terms
        return hash((vars, frozenset(terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus ------------------------------------------------------------

    def derivative(self, var: str) -> "Poly":
        if var not in self.vars:
            return Poly.zero(self.vars)
        i = self.vars.index(var)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1 :]
            s = out.get(key, ZERO) + c * e
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return Poly(self.vars, out)

    def euler(self, vars=None) -> "Poly":
        """Each monomial scaled by its total degree in the chosen variables."""
        if vars is None:
            vars = self.vars
        idx = [i for i, v in enumerate(self.vars) if v in set(vars)]
        out = {}
        for exps, c in self.terms.items():
            d = sum(exps[i] for i in idx)
            if d:
                out[exps] = c * d
        return Poly(self.vars, out)

    def shift(self, var: str, c) -> "Poly":
        """Taylor shift: substitute var -> var + c (c free of var)."""
        if not isinstance(c, Poly):
            c = Poly.const(c)
        if var in c.vars and any(
            e[c.vars.index(var)] for e in c.terms
        ):
            raise ValueError(f"shift offset must not involve {var!r}")
        return self.substitute(var, Poly.var(var) + c)

    def substitute(self, var: str, value) -> "Poly":
        """Substitute var -> value (Poly or scalar), fully expanded."""
        if var not in self.vars:
            return self
        if not isinstance(value, Poly):
            value = Poly.const(value)
        i = self.vars.index(var)
        rest_vars = self.vars[:i] + self.vars[i + 1 :]
        powers = {0: Poly.const(1)}
        out = Poly.zero(rest_vars)
        for exps, c in sorted(self.terms.items(), key=lambda t: t[0][i]):
            e = exps[i]
            if e not in powers:
                p = max(k for k in powers if k <= e)
                acc = powers[p]
                while p < e:
                    acc = acc * value
                    p += 1
                    powers[p] = acc
            rest = Poly(rest_vars, {exps[:i] + exps[i + 1 :]: c})
            out = out + rest * powers[e]
        return out

    # -- structure ------------------------------------------------------------

    def total_degree(self, vars=None):
        """Maximum total degree over the chosen variables; -inf for zero."""
        if not self.terms:
            return -inf
        if vars is None:
            idx = range(len(self.vars))
        else:
            chosen = set(vars)
            idx = [i for i, v in enumerate(self.vars) if v in chosen]
        return max(sum(e[i] for i in idx) for e in self.terms)

    def degree(self, var: str):
        if not self.terms:
            return -inf
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coeff_of(self, var: str, k: int) -> "Poly":
        """Polynomial coefficient of var**k, as a Poly in the other variables."""
        if var not in self.vars:
            return self if k == 0 else Poly.zero(self.vars)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                out[exps[:i] + exps[i + 1 :]] = c
        return Poly(rest, out)

    def scalar_coeff(self, **exps) -> ExactScalar:
        """Coefficient of the stated monomial; unstated variables at power 0."""
        key = []
        for v in self.vars:
            key.append(exps.pop(v, 0))
        if any(exps.values()):
            return ZERO
        return self.terms.get(tuple(key), ZERO)

    def constant_term(self) -> ExactScalar:
        return self.terms.get((0,) * len(self.vars), ZERO)

    def as_scalar(self) -> ExactScalar:
        """The value of a constant polynomial; raises if non-constant."""
        nonconst = [e for e in self.terms if any(e)]
        if nonconst:
            raise ValueError(f"polynomial is not constant: {self}")
        return self.constant_term()

    def sorted_terms(self):
        """Terms in graded-lexicographic descending order."""
        return sorted(
            self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True
        )

    # -- rendering ------------------------------------------------------------

    def _monomial_text(self, exps):
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 0:
                continue
            parts.append(v if e == 1 else f"{v}^{e}")
        return " ".join(parts)

    @staticmethod
    def _pi_text(k):
        if k == 0:
            return ""
        if k % 2 == 0:
            p = k // 2
            return "pi" if p == 1 else f"pi^{p}"
        return "sqrt(pi)" if k == 1 else f"sqrt(pi)^{k}"

    def text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = self._monomial_text(exps)
            pi = self._pi_text(c.sqrt_pi_pow)
            body = " ".join(x for x in (pi, mono) if x)
            mag = abs(c.rat)
            if body and mag == 1:
                piece = body
            elif body:
                piece = f"{mag} {body}"
            else:
                piece = str(mag)
            if not chunks:
                sign = "-" if c.rat < 0 else ""
                chunks.append(sign + piece)
            else:
                chunks.append(("- " if c.rat < 0 else "+ ") + piece)
        return " ".join(chunks)

    def _monomial_latex(self, exps):
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 0:
                continue
            name = {"mu": r"\mu", "lambda": r"\lambda"}.get(v, v)
            parts.append(name if e == 1 else f"{name}^{{{e}}}")
        return " ".join(parts)

    @staticmethod
    def _pi_latex(k):
        if k == 0:
            return ""
        if k == 1:
            return r"\sqrt{\pi}"
        if k % 2 == 0:
            p = k // 2
            return r"\pi" if p == 1 else r"\pi^{%d}" % p
        return r"\pi^{%d/2}" % k

    @staticmethod
    def _frac_latex(q):
        if q.denominator == 1:
            return str(q.numerator)
        return r"\frac{%d}{%d}" % (q.numerator, q.denominator)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = self._monomial_latex(exps)
            pi = self._pi_latex(c.sqrt_pi_pow)
            body = " ".join(x for x in (pi, mono) if x)
            mag = abs(c.rat)
            if body and mag == 1:
                piece = body
            elif body:
                piece = f"{self._frac_latex(mag)} {body}"
            else:
                piece = self._frac_latex(mag)
            if not chunks:
                chunks.append(("-" if c.rat < 0 else "") + piece)
            else:
                chunks.append(("- " if c.rat < 0 else "+ ") + piece)
        return " ".join(chunks)

    def __repr__(self):
        return f"Poly({self.text()})"


class CoeffSeries:
    """Coefficients of a series truncated at an explicit order.

    ``coeffs[k]`` is the Poly coefficient of the k-th power of the series
    parameter; the list always has length order + 1.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Poly.zero() for _ in range(order + 1 - len(coeffs))]
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def build(cls, fn, order: int) -> "CoeffSeries":
        return cls([fn(k) for k in range(order + 1)], order)

    def coefficient(self, k: int) -> Poly:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncated(self, order: int) -> "CoeffSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return CoeffSeries(self.coeffs[: order + 1], order)

    def __add__(self, other):
        order = min(self.order, other.order)
        return CoeffSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order
        )

    def __sub__(self, other):
        order = min(self.order, other.order)
        return CoeffSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(order + 1)], order
        )

    def __mul__(self, other):
        if not isinstance(other, CoeffSeries):
            return CoeffSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [Poly.zero() for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CoeffSeries(out, order)

    __rmul__ = __mul__

    def lambda_derivative(self, L: int = 1) -> "CoeffSeries":
        """L-fold derivative in the series parameter; order drops by L."""
        if L < 0:
            raise ValueError("derivative order must be >= 0")
        if L > self.order:
            raise ValueError("derivative exceeds truncation order")
        order = self.order - L
        out = []
        for k in range(order + 1):
            scale = Fraction(factorial(k + L), factorial(k))
            out.append(self.coeffs[k + L] * scale)
        return CoeffSeries(out, order)

    def __eq__(self, other):
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        inner = ", ".join(c.text() for c in self.coeffs)
        return f"CoeffSeries(order={self.order}, [{inner}])"


# Spec-facing functional aliases.

def derivative(p: Poly, var: str) -> Poly:
    return p.derivative(var)


def euler_apply(p: Poly, vars) -> Poly:
    return p.euler(vars)


def shift_var(p: Poly, var: str, c) -> Poly:
    return p.shift(var, c)


def series_product(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    return a * b
