import random

import pytest

from hopfbax import TensorElement, embed, multiply, tensor_multiply
from hopfbax.algebra import associativity_violations, unit_violations


def _basis(h, i, j):
    return h.algebra.basis((i, j))


def test_generator_relations_n3(taft3):
    alg = taft3.algebra
    q = alg.domain.q()
    a = alg.basis((1, 0))
    x = alg.basis((0, 1))
    # x a = q a x
    assert multiply(x, a) == multiply(a, x).scaled(q)
    # a^N = e
    assert a * a * a == alg.unit()
    # x^N = 0
    assert (x * x * x).is_zero()
    assert multiply(alg.unit(), x) == x


def test_power_labels(taft4):
    alg = taft4.algebra
    a = alg.basis((1, 0))
    x = alg.basis((0, 1))
    cur = alg.unit()
    for _ in range(3):
        cur = cur * a
    assert cur == alg.basis((3, 0))
    ax = a * x
    assert ax == alg.basis((1, 1))
    # x^(N-1) * x = 0
    x3 = x * x * x
    assert x3 == alg.basis((0, 3))
    assert (x3 * x).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_taft_algebra_associative_and_unital(n, taft2, taft3, taft4):
    alg = {2: taft2, 3: taft3, 4: taft4}[n].algebra
    assert unit_violations(alg) == []
    labels = list(alg.labels)
    if alg.dim <= 16:
        assert associativity_violations(alg) == []
    else:
        rng = random.Random(7)
        triples = [tuple(rng.choice(labels) for _ in range(3))
                   for _ in range(400)]
        assert associativity_violations(alg, triples) == []


def test_element_arithmetic(taft3):
    alg = taft3.algebra
    q = alg.domain.q()
    a = alg.basis((1, 0))
    x = alg.basis((0, 1))
    y = a + x.scaled(q)
    assert y.coefficient((1, 0)) == alg.domain.one()
    assert y.coefficient((0, 1)) == q
    assert (y - y).is_zero()
    assert (-y + y).is_zero()


def test_tensor_multiply_is_slotwise(taft3):
    alg = taft3.algebra
    q = alg.domain.q()
    e = alg.unit()
    a = alg.basis((1, 0))
    x = alg.basis((0, 1))
    left = TensorElement.of(x, e)
    right = TensorElement.of(a, x)
    got = tensor_multiply(left, right)
    # (x(x)e)(a(x)x) = xa (x) x = q * (ax (x) x)
    expect = TensorElement.of(multiply(a, x), x).scaled(q)
    assert got == expect


def test_tensor_multiply_brute_force_oracle(taft2):
    # slot-wise product on random two-leg tensors against an explicit
    # double loop over basis pairs
    alg = taft2.algebra
    rng = random.Random(3)
    labels = list(alg.labels)

    def rand_tensor():
        t = None
        for _ in range(3):
            k1, k2 = rng.choice(labels), rng.choice(labels)
            c = alg.domain.from_fraction(rng.randint(-3, 3))
            term = TensorElement.of(alg.basis(k1), alg.basis(k2)).scaled(c)
            t = term if t is None else t + term
        return t

    for _ in range(10):
        xt, yt = rand_tensor(), rand_tensor()
        got = tensor_multiply(xt, yt)
        expect = None
        for kx, cx in xt.terms.items():
            for ky, cy in yt.terms.items():
                prod = TensorElement.of(
                    multiply(alg.basis(kx[0]), alg.basis(ky[0])),
                    multiply(alg.basis(kx[1]), alg.basis(ky[1])),
                ).scaled(cx * cy)
                expect = prod if expect is None else expect + prod
        assert got == expect


def test_embed_two_into_three(taft2):
    alg = taft2.algebra
    algs = [alg, alg, alg]
    a = alg.basis((1, 0))
    x = alg.basis((0, 1))
    t = TensorElement.of(a, x)
    e = alg.unit()
    assert embed(t, (0, 1), algs) == TensorElement.of(a, x, e)
    assert embed(t, (0, 2), algs) == TensorElement.of(a, e, x)
    assert embed(t, (1, 2), algs) == TensorElement.of(e, a, x)


def test_embed_then_multiply_matches_slotwise(taft3):
    # legs that only meet through units multiply slot by slot
    alg = taft3.algebra
    algs = [alg, alg, alg]
    a = alg.basis((1, 0))
    x = alg.basis((0, 1))
    t12 = embed(TensorElement.of(a, x), (0, 1), algs)
    t23 = embed(TensorElement.of(x, a), (1, 2), algs)
    prod = tensor_multiply(t12, t23)
    assert prod == TensorElement.of(a, multiply(x, x), a)
    # disjoint legs commute
    t1 = embed(TensorElement.of(x), (0,), algs)
    t3 = embed(TensorElement.of(a), (2,), algs)
    assert tensor_multiply(t1, t3) == tensor_multiply(t3, t1)


def test_embed_rejects_bad_positions(taft2):
    alg = taft2.algebra
    t = TensorElement.of(alg.basis((1, 0)), alg.basis((0, 1)))
    with pytest.raises(ValueError):
        embed(t, (0,), [alg, alg, alg])
    with pytest.raises(ValueError):
        embed(t, (0, 3), [alg, alg, alg])


def test_mismatched_algebras_rejected(taft2, taft3):
    a2 = taft2.algebra.basis((1, 0))
    a3 = taft3.algebra.basis((1, 0))
    with pytest.raises(ValueError):
        multiply(a2, a3)
    t2 = TensorElement.of(a2, a2)
    t3 = TensorElement.of(a3, a3)
    with pytest.raises(ValueError):
        tensor_multiply(t2, t3)


def test_tensor_arity_mismatch_rejected(taft2):
    alg = taft2.algebra
    a = alg.basis((1, 0))
    t2 = TensorElement.of(a, a)
    t3 = TensorElement.of(a, a, a)
    with pytest.raises(ValueError):
        tensor_multiply(t2, t3)
