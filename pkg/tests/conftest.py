from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from hypothesis import settings, strategies as st

from zetaprop import load_preset
from zetaprop.ring import LaurentPolynomial, RationalFunction

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"
PRESETS = ["sphere", "torus_id", "anosov", "anosov_cancel", "sphere_rotate", "sphere_flip"]

t = sympy.Symbol("t")

small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def laurents(draw, min_exp=-3, max_exp=3, max_terms=4):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(st.integers(min_exp, max_exp))] = draw(small_fracs)
    return LaurentPolynomial(terms)


@st.composite
def polys(draw, max_deg=3):
    coeffs = draw(st.lists(small_fracs, min_size=1, max_size=max_deg + 1))
    return LaurentPolynomial.from_coefficients(coeffs)


@st.composite
def rationals(draw):
    num = draw(laurents())
    den = draw(laurents().filter(lambda p: not p.is_zero()))
    return RationalFunction(num, den)


@st.composite
def series_rationals(draw):
    """Rational functions regular at t = 0."""
    num = draw(polys())
    den = draw(polys().filter(lambda p: p.coeff(0) != 0))
    return RationalFunction(num, den)


def to_sympy(x) -> sympy.Expr:
    if isinstance(x, RationalFunction):
        return to_sympy(x.num) / to_sympy(x.den)
    return sum((sympy.Rational(c.numerator, c.denominator) * t**k for k, c in x.items()), sympy.Integer(0))


def sympy_equal(a, b) -> bool:
    return sympy.simplify(a - b) == 0


def frac(x: sympy.Expr) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


@pytest.fixture(params=PRESETS)
def preset_name(request):
    return request.param


@pytest.fixture
def preset(preset_name):
    return load_preset(preset_name)


@pytest.fixture(scope="session")
def random_suite():
    from zetaprop.sampling import random_presentations

    return random_presentations(20240601, 100)
