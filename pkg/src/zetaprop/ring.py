"""Exact arithmetic over Q: Laurent polynomials, rational functions and
truncated Laurent series in one variable ``t``.

Scalars are :class:`fractions.Fraction`; nothing in this module ever touches
floating point.  All values are immutable.

Textual rendering (used by reports and golden tests) lists terms in ascending
exponent order, writes ``c*t^k`` with ``t`` for ``k == 1`` and rationals as
``p/q``.  A rational function's denominator is printed as a product of its
square-free factors, e.g. ``(1-3*t+t^2)/(1-t)^2``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

from .errors import BadConstantTerm, ZeroDenominator, ZeroInput

Rational = Fraction

Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "LaurentPolynomial",
    "RationalFunction",
    "TruncatedSeries",
    "T",
    "as_rational",
    "format_rational",
    "poly_gcd",
    "poly_divmod",
    "poly_exact_quotient",
    "squarefree_factors",
    "rf_normalize",
    "rf_derivative",
    "rf_log_derivative_t",
    "rf_substitute_inverse",
    "rf_to_series",
    "series_exp",
    "series_log",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _format_term(c: Fraction, k: int) -> str:
    if k == 0:
        return format_rational(c)
    mono = "t" if k == 1 else f"t^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{format_rational(c)}*{mono}"


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPolynomial:
    """An element of Q[t, 1/t], stored as ``{exponent: nonzero coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for k, c in terms.items():
                if not isinstance(k, int) or isinstance(k, bool):
                    raise TypeError("exponents must be integers")
                c = as_rational(c)
                if c:
                    clean[k] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls()

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Scalar) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> LaurentPolynomial:
        return cls({k: c})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], shift: int = 0) -> LaurentPolynomial:
        """Build ``sum coeffs[i] * t^(i + shift)``."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial is undefined")
        return next(iter(self._terms))

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return next(reversed(self._terms))

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.degree]

    def is_polynomial(self) -> bool:
        """True when no negative exponents occur."""
        return not self._terms or self.valuation >= 0

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def dense(self) -> list[Fraction]:
        """Coefficients ``a_0 .. a_deg`` of an ordinary polynomial."""
        if not self._terms:
            return []
        if self.valuation < 0:
            raise ValueError("dense coefficients need a polynomial, got negative exponents")
        out = [Fraction(0)] * (self.degree + 1)
        for k, c in self._terms.items():
            out[k] = c
        return out

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in o._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent-polynomial inverses")
            (k, c), = self._terms.items()
            return LaurentPolynomial({k * n: c ** n})
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> LaurentPolynomial:
        c = as_rational(c)
        return LaurentPolynomial({k: c * a for k, a in self._terms.items()})

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by ``t^k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def derivative(self) -> LaurentPolynomial:
        return LaurentPolynomial({k - 1: k * c for k, c in self._terms.items() if k})

    def evaluate(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        if not x and self._terms and self.valuation < 0:
            raise ZeroDenominator("evaluating a negative power of t at 0")
        return sum((c * x ** k for k, c in self._terms.items()), Fraction(0))

    def substitute_inverse(self) -> LaurentPolynomial:
        """Return ``p(1/t)``."""
        return LaurentPolynomial({-k: c for k, c in self._terms.items()})

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for k, c in self._terms.items():
            term = _format_term(c, k)
            if out and not term.startswith("-"):
                out += "+"
            out += term
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


T = LaurentPolynomial.monomial(1, 1)


# ---------------------------------------------------------------------------
# Polynomial helpers (exponents >= 0)
# ---------------------------------------------------------------------------


def _require_poly(p: LaurentPolynomial) -> None:
    if not p.is_polynomial():
        raise ValueError(f"expected an ordinary polynomial, got {p}")


def poly_divmod(a: LaurentPolynomial, b: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Euclidean division in Q[t]."""
    _require_poly(a)
    _require_poly(b)
    if b.is_zero():
        raise ZeroDenominator("polynomial division by zero")
    rem = a.dense()
    db = b.degree
    lb = b.leading_coefficient()
    bd = b.dense()
    quot: dict[int, Fraction] = {}
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c / lb
        quot[k - db] = q
        for i, bc in enumerate(bd):
            rem[k - db + i] -= q * bc
    return LaurentPolynomial(quot), LaurentPolynomial.from_coefficients(rem)


def poly_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Monic gcd in Q[t]; gcd(0, 0) is 0."""
    _require_poly(a)
    _require_poly(b)
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a.leading_coefficient())


def poly_exact_quotient(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def squarefree_factors(p: LaurentPolynomial) -> list[tuple[LaurentPolynomial, int]]:
    """Yun's square-free decomposition of a polynomial with ``p(0) != 0``.

    Each returned factor has constant term 1; the product of ``f**m`` equals
    ``p / p(0)``.
    """
    _require_poly(p)
    if p.is_zero() or not p.coeff(0):
        raise ValueError("square-free rendering needs a nonzero constant term")
    p = p.scale(1 / p.coeff(0))
    if p.is_constant():
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = poly_exact_quotient(p, a0)
    d = poly_exact_quotient(dp, a0) - b.derivative()
    out = []
    m = 1
    while not b.is_constant():
        a = poly_gcd(b, d)
        b = poly_exact_quotient(b, a)
        d = poly_exact_quotient(d, a) - b.derivative()
        if not a.is_constant():
            out.append((a.scale(1 / a.coeff(0)), m))
        m += 1
    return out


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """An element of Q(t) in canonical form.

    Canonical form: ``den`` is an ordinary polynomial with ``den(0) == 1``,
    every power of ``t`` lives in the Laurent numerator, and
    ``gcd(num / t^val(num), den) == 1``.  Two equal functions therefore have
    identical ``(num, den)``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _to_laurent(num)
        den = _to_laurent(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", LaurentPolynomial.zero())
            object.__setattr__(self, "den", LaurentPolynomial.one())
            return
        v = den.valuation
        den = den.shift(-v)
        num = num.shift(-v)
        nv = num.valuation
        core = num.shift(-nv)
        g = poly_gcd(core, den)
        if not g.is_constant():
            core = poly_exact_quotient(core, g)
            den = poly_exact_quotient(den, g)
        c = den.coeff(0)
        object.__setattr__(self, "num", core.shift(nv).scale(1 / c))
        object.__setattr__(self, "den", den.scale(1 / c))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def zero(cls) -> RationalFunction:
        return cls(0)

    @classmethod
    def one(cls) -> RationalFunction:
        return cls(1)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def evaluate(self, x: Scalar) -> Fraction:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDenominator(f"pole at t = {format_rational(as_rational(x))}")
        return self.num.evaluate(x) / d

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPolynomial) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        ):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDenominator("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def derivative(self) -> RationalFunction:
        return rf_derivative(self)

    def log_derivative_t(self) -> RationalFunction:
        return rf_log_derivative_t(self)

    def substitute_inverse(self) -> RationalFunction:
        return rf_substitute_inverse(self)

    def to_series(self, order: int) -> TruncatedSeries:
        return rf_to_series(self, order)

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        parts = []
        for f, m in squarefree_factors(self.den):
            s = str(f)
            if len(f.terms) > 1:
                s = f"({s})"
            parts.append(s if m == 1 else f"{s}^{m}")
        return f"{num}/{'*'.join(parts)}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _to_laurent(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def rf_normalize(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_derivative(f: RationalFunction) -> RationalFunction:
    """d/dt by the quotient rule."""
    return RationalFunction(
        f.num.derivative() * f.den - f.num * f.den.derivative(),
        f.den * f.den,
    )


def rf_log_derivative_t(f: RationalFunction) -> RationalFunction:
    """``t * f'(t) / f(t)``."""
    if f.is_zero():
        raise ZeroInput("logarithmic derivative of zero")
    # t (n'/n - d'/d) keeps the intermediate degrees small
    n, d = f.num, f.den
    return RationalFunction(T * (n.derivative() * d - n * d.derivative()), n * d)


def rf_substitute_inverse(f: RationalFunction) -> RationalFunction:
    """``f(1/t)``."""
    return RationalFunction(f.num.substitute_inverse(), f.den.substitute_inverse())


# ---------------------------------------------------------------------------
# Truncated Laurent series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """A Laurent series ``sum_{k <= order} a_k t^k`` known up to ``t^order``.

    ``start`` is the lowest stored exponent (never above 0); coefficients
    below ``start`` are zero and coefficients above ``order`` are unknown.
    """

    __slots__ = ("order", "start", "_coeffs")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None, start: int = 0):
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            order = start + len(cs) - 1
        if order < start and order < 0:
            raise ValueError("series order must be non-negative")
        # drop leading zeros of the principal part
        while start < 0 and cs and not cs[0]:
            cs.pop(0)
            start += 1
        if start > 0:
            cs = [Fraction(0)] * start + cs
            start = 0
        n = order - start + 1
        if len(cs) < n:
            cs += [Fraction(0)] * (n - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "_coeffs", tuple(cs[:n]))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar], order: int) -> TruncatedSeries:
        lo = min([0, *terms.keys()])
        cs = [Fraction(0)] * (order - lo + 1)
        for k, c in terms.items():
            if k <= order:
                cs[k - lo] = as_rational(c)
        return cls(cs, order=order, start=lo)

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial, order: int) -> TruncatedSeries:
        return cls.from_terms(p.terms, order)

    def coeff(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient of t^{k} is beyond the truncation order {self.order}")
        if k < self.start:
            return Fraction(0)
        return self._coeffs[k - self.start]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeff(k)

    @property
    def coefficients(self) -> list[Fraction]:
        """``[a_0, ..., a_order]``."""
        return [self.coeff(k) for k in range(0, self.order + 1)]

    @property
    def principal_part(self) -> dict[int, Fraction]:
        return {k: self.coeff(k) for k in range(self.start, 0) if self.coeff(k)}

    def valuation(self) -> int | None:
        for k in range(self.start, self.order + 1):
            if self.coeff(k):
                return k
        return None

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self._coeffs, order=order, start=self.start)

    def to_laurent(self) -> LaurentPolynomial:
        return LaurentPolynomial({k: self.coeff(k) for k in range(self.start, self.order + 1)})

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries([other], order=self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        lo = min(self.start, o.start)
        return TruncatedSeries(
            [self.coeff(k) + o.coeff(k) for k in range(lo, order + 1)], order=order, start=lo
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs], order=self.order, start=self.start)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = as_rational(other)
            return TruncatedSeries([c * a for a in self._coeffs], order=self.order, start=self.start)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        va = self.valuation()
        vb = other.valuation()
        if va is None or vb is None:
            # one factor is zero to its order; the product is known to the
            # smaller of the two orders shifted by the other valuation
            order = min(self.order, other.order)
            return TruncatedSeries([], order=order)
        order = min(self.order, other.order, self.order + vb, other.order + va)
        lo = va + vb
        out = [Fraction(0)] * (order - lo + 1)
        for i in range(va, self.order + 1):
            a = self.coeff(i)
            if not a:
                continue
            for j in range(vb, order - i + 1):
                out[i + j - lo] += a * other.coeff(j)
        return TruncatedSeries(out, order=order, start=lo)

    __rmul__ = __mul__

    def derivative(self) -> TruncatedSeries:
        terms = {k - 1: k * self.coeff(k) for k in range(self.start, self.order + 1) if k}
        return TruncatedSeries.from_terms(terms, self.order - 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        lo = min(self.start, other.start)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, self.order + 1))

    def __hash__(self) -> int:
        return hash((self.order, tuple(self.coeff(k) for k in range(self.start, self.order + 1))))

    def __str__(self) -> str:
        body = str(self.to_laurent())
        return f"{body}+O(t^{self.order + 1})" if body != "0" else f"O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"


def rf_to_series(f: RationalFunction, order: int) -> TruncatedSeries:
    """Laurent expansion of ``f`` at ``t = 0`` up to and including ``t^order``."""
    if f.is_zero():
        return TruncatedSeries([], order=order)
    den = f.den.dense()  # den(0) == 1 in canonical form
    v = f.num.valuation
    core = f.num.shift(-v).dense()
    n = order - v + 1
    if n <= 0:
        return TruncatedSeries.from_terms({}, order)
    # long division by a unit power series
    out: list[Fraction] = []
    for k in range(n):
        acc = core[k] if k < len(core) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return TruncatedSeries.from_terms({v + k: c for k, c in enumerate(out)}, order)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """``exp(s)`` for a series with zero constant term and no principal part."""
    if s.principal_part or s.coeff(0):
        raise BadConstantTerm("series_exp needs a series with zero constant term")
    P = s.order
    a = s.coefficients
    f = [Fraction(1)] + [Fraction(0)] * P
    # n f_n = sum_{k=1}^n k a_k f_{n-k}
    for n in range(1, P + 1):
        f[n] = sum((k * a[k] * f[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return TruncatedSeries(f, order=P)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """``log(s)`` for a series with constant term 1 and no principal part."""
    if s.principal_part or s.coeff(0) != 1:
        raise BadConstantTerm("series_log needs a series with constant term 1")
    P = s.order
    f = s.coefficients
    a = [Fraction(0)] * (P + 1)
    # n a_n = n f_n - sum_{k=1}^{n-1} k a_k f_{n-k}
    for n in range(1, P + 1):
        acc = n * f[n] - sum((k * a[k] * f[n - k] for k in range(1, n)), Fraction(0))
        a[n] = acc / n
    return TruncatedSeries(a, order=P)
