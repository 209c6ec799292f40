"""Hypothesis strategies for exact scalar domains."""

from fractions import Fraction

import hypothesis.strategies as st

from hopfbax import RATIONAL, SQRT_Q, ParamScalar, cyclotomic

_small = st.integers(min_value=-9, max_value=9)


def rationals():
    return st.builds(
        lambda n, d: RATIONAL.from_fraction(Fraction(n, d)),
        st.integers(min_value=-30, max_value=30),
        st.integers(min_value=1, max_value=12),
    )


def cyclotomics(n: int = 5):
    dom = cyclotomic(n)

    def build(coeffs):
        acc = dom.zero()
        power = dom.one()
        for c in coeffs:
            acc = acc + power * dom.from_fraction(Fraction(c))
            power = power * dom.q()
        return acc

    return st.lists(_small, min_size=1, max_size=n).map(build)


def sqrt_laurents():
    # Laurent polynomials in s with small integer coefficients.
    def build(coeffs, low):
        acc = SQRT_Q.zero()
        for k, c in enumerate(coeffs):
            acc = acc + SQRT_Q.s() ** (low + k) * SQRT_Q.from_fraction(Fraction(c))
        return acc

    return st.builds(build, st.lists(_small, min_size=1, max_size=5),
                     st.integers(min_value=-4, max_value=4))


def param_scalars(base=None):
    base = base or sqrt_laurents()

    def build(items):
        acc = None
        for (emu, enu), coeff in items:
            term = ParamScalar.monomial(coeff, emu, enu)
            acc = term if acc is None else acc + term
        return acc if acc is not None else ParamScalar.constant(SQRT_Q.zero())

    exponents = st.tuples(st.integers(min_value=-3, max_value=3),
                          st.integers(min_value=-3, max_value=3))
    return st.lists(st.tuples(exponents, base), max_size=4).map(build)
