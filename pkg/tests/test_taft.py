import random

import pytest

from hopfbax import (
    ParametricMatrix,
    RATIONAL,
    ScalarDomainError,
    build_taft,
    canonical_q,
    check_parametric_ybe,
    cyclotomic,
    parse_param_scalar,
    rep_indecomposable,
    rep_irreducible,
    taft_r_matrix,
)
from hopfbax.taft import (
    Representation,
    RepresentationError,
    TaftParams,
    _check_dual_multiplicative,
    _check_h_multiplicative,
    _taft_q,
    check_double_multiplicative,
    is_primitive_root,
)


def test_build_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_taft(1)
    with pytest.raises(ValueError):
        build_taft(4, cyclotomic(4).q() ** 2)   # order 2, not 4
    with pytest.raises(ValueError):
        build_taft(2, RATIONAL.one())


def test_canonical_q_is_primitive():
    for n in range(2, 8):
        z = canonical_q(n)
        assert is_primitive_root(z, n)
        assert z ** n == z.domain.one()
    assert not is_primitive_root(cyclotomic(6).q() ** 2, 6)


def test_taft_q_recovered_from_table(taft3, taft4):
    assert _taft_q(taft3) == canonical_q(3)
    assert _taft_q(taft4) == canonical_q(4)


def test_taft_params_record():
    p = TaftParams(N=4, q=canonical_q(4), n=3, l=2)
    assert (p.N, p.n, p.l) == (4, 3, 2)
    assert p.alpha is None


# ---------------------------------------------------------------------------
# irreducible modules
# ---------------------------------------------------------------------------

def test_irreducible_identity_and_vanishing(double3):
    rep = rep_irreducible(double3, 2, 1)
    dom = rep.domain
    assert rep.h_image((0, 0)) == ParametricMatrix.identity(2, dom)
    # x^j kills an n-dimensional module for j >= n
    assert rep.h_image((0, 2)).is_zero()
    assert rep.h_image((1, 2)).is_zero()


def test_irreducible_generator_entries(double3):
    # V_{3,l} over D(T_3): pi(x) is upper triangular with the closed-form
    # ladder coefficients, pi(a) is diagonal with powers of q
    q = double3.domain.q()
    one = double3.domain.one()
    for l in (1, 2, 3):
        rep = rep_irreducible(double3, 3, l)
        xm = rep.h_image((0, 1))
        assert xm.get(0, 1).as_scalar() == one - q ** -2
        assert xm.get(1, 2).as_scalar() == (one + q) * (one - q ** -1)
        assert xm.get(1, 0).is_zero() and xm.get(2, 2).is_zero()
        am = rep.h_image((1, 0))
        for k in range(1, 4):
            assert am.get(k - 1, k - 1).as_scalar() == q ** (k - l - 3)


def test_irreducible_dual_entries(double3):
    rep = rep_irreducible(double3, 3, 1)
    q = double3.domain.q()
    one = double3.domain.one()
    # (a^m x^j)* lands at a single matrix unit scaled by 1/(j)_q!
    d = rep.dual_image((0, 1))    # m=0, l=1 -> window i=3: i+j=4 > 3 -> zero
    assert d.is_zero()
    d = rep.dual_image((1, 1))    # window i=1, entry (i+j, i) = (2, 1)
    assert d.get(1, 0).as_scalar() == one
    assert len(d.support()) == 1
    d2 = rep.dual_image((1, 2))   # 1/(2)_q! = 1/(1+q)
    assert d2.get(2, 0).as_scalar() == (one + q).inverse()


def test_irreducible_range_checks(double3):
    for n, l in ((0, 1), (4, 1), (1, 0), (1, 4)):
        with pytest.raises(ValueError):
            rep_irreducible(double3, n, l)


def test_double_multiplicative_exhaustive_n2(double2):
    rep = rep_irreducible(double2, 2, 1)
    assert check_double_multiplicative(rep)


def test_double_multiplicative_sampled_n3(double3):
    rep = rep_irreducible(double3, 3, 2)
    labels = list(double3.algebra.labels)
    rng = random.Random(99)
    pairs = [(rng.choice(labels), rng.choice(labels)) for _ in range(500)]
    assert check_double_multiplicative(rep, pairs)


def test_corrupted_module_fails_loudly(double3, taft3):
    rep = rep_irreducible(double3, 3, 1)
    bad_h = dict(rep._h)
    m = bad_h[(1, 0)].copy()
    m.set(0, 0, m.get(0, 0) * 2)
    bad_h[(1, 0)] = m
    broken = Representation(double3, 3, bad_h, rep._dual, "broken")
    with pytest.raises(RepresentationError):
        _check_h_multiplicative(broken, taft3)
    bad_d = dict(rep._dual)
    md = bad_d[(1, 1)].copy()
    md.set(0, 2, double3.domain.one())
    bad_d[(1, 1)] = md
    broken2 = Representation(double3, 3, rep._h, bad_d, "broken2")
    with pytest.raises(RepresentationError):
        _check_dual_multiplicative(broken2)


# ---------------------------------------------------------------------------
# indecomposable modules
# ---------------------------------------------------------------------------

def test_indecomposable_generator_action(double3):
    q = double3.domain.q()
    alpha = q + double3.domain.one()
    rep = rep_indecomposable(double3, alpha, 2)
    am = rep.h_image((1, 0))
    for k in range(1, 4):
        assert am.get(k - 1, k - 1).as_scalar() == q ** (k - 1 - 2)
    xm = rep.h_image((0, 1))
    # x v_1 = alpha v_N, x v_2 = 0
    assert xm.get(2, 0).as_scalar() == alpha
    assert all(r == 2 or xm.get(r, 0).is_zero() for r in range(3))
    assert all(xm.get(r, 1).is_zero() for r in range(3))
    # x a = q a x transported through the module
    assert xm @ am == (am @ xm).scaled(q)
    # powers generate the rest of the basis action
    assert rep.h_image((2, 1)) == am @ am @ xm


def test_indecomposable_rejects_foreign_alpha(double3):
    with pytest.raises(ScalarDomainError):
        rep_indecomposable(double3, RATIONAL.one(), 1)
    with pytest.raises(ValueError):
        rep_indecomposable(double3, double3.domain.one(), 0)


def test_indecomposable_r_matrix_solves_parametric_ybe(double3):
    rep = rep_indecomposable(double3, double3.domain.q(), 1)
    r = taft_r_matrix(rep, parametric=True, normalize=False)
    report = check_parametric_ybe(r)
    assert report.passed, report.worst


# ---------------------------------------------------------------------------
# R-matrices
# ---------------------------------------------------------------------------

def test_r_matrix_top_left_normalization(double4_reps):
    double4, reps = double4_reps
    q = double4.domain.q()
    for l, rep in reps.items():
        raw = taft_r_matrix(rep, parametric=True, normalize=False)
        top = raw.get(0, 0).as_scalar()
        assert top == q ** (-l * (l + 2))
        normalized = taft_r_matrix(rep, parametric=True)
        assert normalized == raw.scaled(top.inverse())
        assert normalized.get(0, 0).as_scalar().is_one()


def test_r_matrix_known_entries(double4_reps):
    double4, reps = double4_reps
    dom = double4.domain
    for l, rep in reps.items():
        r = taft_r_matrix(rep, parametric=True)
        assert r.get(1, 1) == parse_param_scalar(f"q^{-l - 2}", dom)
        assert r.get(4, 6) == parse_param_scalar(
            f"mu*q^{l + 1}*(1 - q^-2)", dom)
        assert r.get(2, 6) == parse_param_scalar(
            "mu^2*(1 - q^-1)*(1 - q^-2)", dom)
        assert r.get(6, 6) == parse_param_scalar(f"q^{2 * l}", dom)
        assert r.get(8, 8).as_scalar().is_one()


def test_r_matrix_constant_is_mu_one(double3):
    rep = rep_irreducible(double3, 2, 1)
    para = taft_r_matrix(rep, parametric=True, normalize=False)
    const = taft_r_matrix(rep, parametric=False, normalize=False)
    assert para.at_one() == const
    assert para.uses_parameters() and not const.uses_parameters()


def test_r_matrix_parametric_ybe(double3):
    rep = rep_irreducible(double3, 3, 3)
    report = check_parametric_ybe(taft_r_matrix(rep, parametric=True))
    assert report.passed, report.worst


def test_normalization_failure_is_loud(double3):
    rep = rep_irreducible(double3, 3, 1)
    raw = taft_r_matrix(rep, parametric=True, normalize=False)

    class Fake:
        double = rep.double
        dim = rep.dim
        domain = rep.domain

        def tensor_image(self, te):
            out = raw.copy()
            out.set(0, 0, out.get(0, 0) - out.get(0, 0))
            return out

    with pytest.raises(RepresentationError):
        taft_r_matrix(Fake(), parametric=True, normalize=True)
