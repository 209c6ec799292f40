"""Taft Hopf algebras T_{N,q} and their double's representations.

T_{N,q} is the N^2-dimensional Hopf algebra

    < a, x |  a^N = 1,  x^N = 0,  x a = q a x >

with q a primitive N-th root of unity, Delta(a) = a (x) a,
Delta(x) = x (x) 1 + a (x) x, eps(a) = 1, eps(x) = 0, gamma(a) = a^{-1},
gamma(x) = -a^{-1} x.  Basis labels are exponent pairs (i, j) <-> a^i x^j.

The x-degree j is a Z-grading compatible with the coproduct, so the
canonical R of the double Baxterizes with mu^j weights.  Pushing that
through the n-dimensional modules below yields parametric R-matrices.

Index conventions for the modules (documented choices):

  * the module V_{n,l} has basis v_1..v_n; a acts diagonally with
    eigenvalue q^{k-l-n} on v_k and x lowers k by one;
  * a dual basis element (a^m x^j)^* acts as E_{i+j,i} / (j)_q! where i is
    the representative of m - l + 1 (mod N) in {1..N}, provided i+j <= n;
  * ``taft_r_matrix(..., normalize=True)`` rescales by the inverse of the
    top-left entry (a unit scalar, q^{l(l+2)} for V_{n,l}); the raw sum
    sum_{i,j} mu^j pi(a^i x^j) (x) pi((a^i x^j)^*) is the normalize=False
    form, and both satisfy the parametric Yang-Baxter equation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, TensorElement
from .baxterize import baxterize, decompose_graded
from .double import DoubleAlgebra, canonical_r, double_grading
from .hopf import Grading, HopfAlgebra
from .matrices import ParametricMatrix
from .scalars import (ParamScalar, Scalar, ScalarDomainError, cyclotomic,
                      gauss_binomial, q_bracket, q_bracket_factorial)


@dataclass
class TaftParams:
    """Parameters for a Taft algebra and (optionally) one of its modules."""
    N: int
    q: Scalar
    n: int | None = None        # module dimension, 1 <= n <= N
    l: int | None = None        # module weight shift, 1 <= l <= N
    alpha: Scalar | None = None  # wrap parameter of the indecomposable module


def canonical_q(N: int) -> Scalar:
    """The generator of Q(zeta_N) as the default primitive root."""
    return cyclotomic(N).q()


def is_primitive_root(q: Scalar, N: int) -> bool:
    p = q.domain.one()
    for k in range(1, N):
        p = p * q
        if p.is_one():
            return False
    return (p * q).is_one()


def build_taft(N: int, q: Scalar | None = None) -> HopfAlgebra:
    """The Taft Hopf algebra on basis {a^i x^j : 0 <= i, j < N}."""
    if N < 2:
        raise ValueError("Taft algebras need N >= 2")
    if q is None:
        q = canonical_q(N)
    if not is_primitive_root(q, N):
        raise ValueError(f"q must be a primitive root of unity of order {N}")
    domain = q.domain
    labels = [(i, j) for i in range(N) for j in range(N)]

    def label_str(lab):
        i, j = lab
        a = "" if not i else ("a" if i == 1 else f"a^{i}")
        x = "" if not j else ("x" if j == 1 else f"x^{j}")
        return (a + x) or "e"

    def product(l1, l2):
        (i, j), (k, l) = l1, l2
        if j + l >= N:
            return {}
        return {((i + k) % N, j + l): q ** (j * k)}

    alg = Algebra(f"T_{N}", domain, labels, {(0, 0): domain.one()}, product,
                  label_str=label_str)

    coproduct = {}
    counit = {}
    antipode = {}
    qinv = q.inverse()
    for (i, j) in labels:
        terms = {}
        for k in range(j + 1):
            c = gauss_binomial(j, k, q)
            terms[(((j - k + i) % N, k), (i, j - k))] = c
        coproduct[(i, j)] = TensorElement((alg, alg), terms)
        counit[(i, j)] = domain.one() if j == 0 else domain.zero()
        sign = domain.from_fraction(-1 if j % 2 else 1)
        coeff = sign * qinv ** (j * (j - 1) // 2 + i * j)
        antipode[(i, j)] = alg.element({((-i - j) % N, j): coeff})

    return HopfAlgebra(alg, coproduct, counit, antipode)


def x_degree_grading(h: HopfAlgebra) -> Grading:
    """d(a^i x^j) = j: the grading that makes the double Baxterize."""
    return Grading(h.algebra, {lab: lab[1] for lab in h.algebra.labels})


def a_degree_grading(h: HopfAlgebra) -> Grading:
    """d(a^i x^j) = i: a deliberately incompatible control grading."""
    return Grading(h.algebra, {lab: lab[0] for lab in h.algebra.labels})


# ---------------------------------------------------------------------------
# modules over the double
# ---------------------------------------------------------------------------

class RepresentationError(ValueError):
    pass


class Representation:
    """A module of D(T_N): matrices for H labels, dual labels, and pairs."""

    def __init__(self, double: DoubleAlgebra, dim: int, h_images, dual_images,
                 name: str):
        self.double = double
        self.dim = dim
        self.name = name
        self._h = h_images          # (i, j) -> ParametricMatrix
        self._dual = dual_images    # (m, j) -> ParametricMatrix
        self._pair = {}

    @property
    def domain(self):
        return self.double.domain

    def h_image(self, label) -> ParametricMatrix:
        return self._h[label]

    def dual_image(self, label) -> ParametricMatrix:
        return self._dual[label]

    def pair_image(self, pair) -> ParametricMatrix:
        hit = self._pair.get(pair)
        if hit is None:
            g, f = pair
            hit = self._h[g] @ self._dual[f]
            self._pair[pair] = hit
        return hit

    def image(self, x) -> ParametricMatrix:
        """Linear extension to elements of the double."""
        out = ParametricMatrix(self.dim, self.domain)
        for pair, c in x.terms.items():
            out = out + self.pair_image(pair).scaled(c)
        return out

    def tensor_image(self, te: TensorElement) -> ParametricMatrix:
        """Matrix of an element of D (x) ... (x) D on (C^dim)^arity."""
        total = self.dim ** te.arity
        out = ParametricMatrix(total, self.domain)
        for key, c in te.terms.items():
            m = self.pair_image(key[0])
            for lab in key[1:]:
                m = m.kron(self.pair_image(lab))
            out = out + m.scaled(c)
        return out


def _check_h_multiplicative(rep: Representation, h: HopfAlgebra):
    alg = h.algebra
    for l1 in alg.labels:
        m1 = rep.h_image(l1)
        for l2 in alg.labels:
            prod = rep.h_image(l1) @ rep.h_image(l2)
            want = ParametricMatrix(rep.dim, rep.domain)
            for l3, c in alg.product_basis(l1, l2).items():
                want = want + rep.h_image(l3).scaled(c)
            if prod != want:
                raise RepresentationError(
                    f"{rep.name} is not multiplicative on H at "
                    f"{alg.label_str(l1)}, {alg.label_str(l2)}")
    ident = ParametricMatrix.identity(rep.dim, rep.domain)
    e = ParametricMatrix(rep.dim, rep.domain)
    for l, c in alg._unit_terms.items():
        e = e + rep.h_image(l).scaled(c)
    if e != ident:
        raise RepresentationError(f"{rep.name} does not send 1_H to the identity")


def _check_dual_multiplicative(rep: Representation):
    dalg = rep.double.hdual.algebra
    for l1 in dalg.labels:
        for l2 in dalg.labels:
            prod = rep.dual_image(l1) @ rep.dual_image(l2)
            want = ParametricMatrix(rep.dim, rep.domain)
            for l3, c in dalg.product_basis(l1, l2).items():
                want = want + rep.dual_image(l3).scaled(c)
            if prod != want:
                raise RepresentationError(
                    f"{rep.name} is not multiplicative on H* at "
                    f"{dalg.label_str(l1)}, {dalg.label_str(l2)}")
    ident = ParametricMatrix.identity(rep.dim, rep.domain)
    u = ParametricMatrix(rep.dim, rep.domain)
    for l, c in dalg._unit_terms.items():
        u = u + rep.dual_image(l).scaled(c)
    if u != ident:
        raise RepresentationError(f"{rep.name} does not send 1_H* to the identity")


def _check_cross_multiplicative(rep: Representation):
    """pi(f) pi(g) must equal pi of the straightened product f.g."""
    d = rep.double
    for g in d.h.algebra.labels:
        table = d._cross_for(g)
        mg = rep.h_image(g)
        for f in d.hdual.algebra.labels:
            lhs = rep.dual_image(f) @ mg
            rhs = ParametricMatrix(rep.dim, rep.domain)
            for pair, c in table[f].items():
                rhs = rhs + rep.pair_image(pair).scaled(c)
            if lhs != rhs:
                raise RepresentationError(
                    f"{rep.name} breaks the straightening rule at "
                    f"f={d.hdual.algebra.label_str(f)}, g={d.h.algebra.label_str(g)}")


def check_double_multiplicative(rep: Representation, pairs=None) -> bool:
    """pi(uv) = pi(u) pi(v) over pairs of double basis labels (all if None)."""
    d = rep.double
    labels = d.algebra.labels if pairs is None else None
    it = ((p1, p2) for p1 in labels for p2 in labels) if pairs is None else pairs
    for p1, p2 in it:
        lhs = rep.pair_image(p1) @ rep.pair_image(p2)
        rhs = rep.image(d.algebra.basis(p1) * d.algebra.basis(p2))
        if lhs != rhs:
            return False
    return True


def _dual_window(m: int, l: int, N: int) -> int:
    """Representative of m - l + 1 (mod N) in {1, ..., N}."""
    return (m - l) % N + 1


def rep_irreducible(double: DoubleAlgebra, n: int, l: int) -> Representation:
    """The n-dimensional irreducible module V_{n,l} of D(T_N).

    Constructed from closed-form matrices; the algebra-map property is
    verified on H pairs, H* pairs and all straightened cross products, and
    construction fails loudly if any check fails.
    """
    h = double.h
    N = max(i for i, _ in h.algebra.labels) + 1
    if not (1 <= n <= N and 1 <= l <= N):
        raise ValueError(f"need 1 <= n, l <= N (got n={n}, l={l}, N={N})")
    q = _taft_q(h)
    domain = q.domain

    h_images = {}
    for (i, j) in h.algebra.labels:
        m = ParametricMatrix(n, domain)
        for k in range(1, n - j + 1):
            c = (q ** ((k - l - n) * i)
                 * q_bracket_factorial(k + j - 1, q)
                 / q_bracket_factorial(k - 1, q))
            for p in range(j):
                c = c * (domain.one() - q ** (p + k - n))
            m.set(k - 1, k + j - 1, c)
        h_images[(i, j)] = m

    dual_images = {}
    for (mm, j) in h.algebra.labels:
        mat = ParametricMatrix(n, domain)
        i = _dual_window(mm, l, N)
        if i + j <= n:
            mat.set(i + j - 1, i - 1, q_bracket_factorial(j, q).inverse())
        dual_images[(mm, j)] = mat

    rep = Representation(double, n, h_images, dual_images, f"V_{{{n},{l}}}")
    _check_h_multiplicative(rep, h)
    _check_dual_multiplicative(rep)
    _check_cross_multiplicative(rep)
    return rep


def rep_indecomposable(double: DoubleAlgebra, alpha: Scalar, l: int) -> Representation:
    """The N-dimensional indecomposable module with wrap parameter alpha.

    a acts diagonally with eigenvalue q^{k-1-l} on v_k; x lowers the index
    cyclically with x v_1 = alpha v_N and x v_2 = 0, the other links
    carrying (k-1)_q (1 - q^k).  Powers of the generator matrices give the
    action of the whole basis, so the algebra-map property on H holds by
    construction (and is re-verified).  The dual action reuses the V_{n,l}
    window formula with n = N; no multiplicativity beyond H is promised.
    """
    h = double.h
    N = max(i for i, _ in h.algebra.labels) + 1
    if not (1 <= l <= N):
        raise ValueError(f"need 1 <= l <= N (got l={l})")
    q = _taft_q(h)
    domain = q.domain
    if alpha.domain != domain:
        raise ScalarDomainError("alpha must live in the algebra's scalar domain")

    a_mat = ParametricMatrix(N, domain)
    for k in range(1, N + 1):
        a_mat.set(k - 1, k - 1, q ** (k - 1 - l))
    x_mat = ParametricMatrix(N, domain)
    x_mat.set(N - 1, 0, alpha)
    for k in range(2, N):
        x_mat.set(k - 1, k, q_bracket(k - 1, q) * (domain.one() - q ** k))

    h_images = {}
    pow_a = [ParametricMatrix.identity(N, domain)]
    pow_x = [ParametricMatrix.identity(N, domain)]
    for _ in range(N - 1):
        pow_a.append(pow_a[-1] @ a_mat)
        pow_x.append(pow_x[-1] @ x_mat)
    for (i, j) in h.algebra.labels:
        h_images[(i, j)] = pow_a[i] @ pow_x[j]

    dual_images = {}
    for (mm, j) in h.algebra.labels:
        mat = ParametricMatrix(N, domain)
        i = _dual_window(mm, l, N)
        if i + j <= N:
            mat.set(i + j - 1, i - 1, q_bracket_factorial(j, q).inverse())
        dual_images[(mm, j)] = mat

    rep = Representation(double, N, h_images, dual_images,
                         f"W_{{{l}}}(alpha)")
    _check_h_multiplicative(rep, h)
    return rep


def _taft_q(h: HopfAlgebra) -> Scalar:
    """Recover q from the commutation x a = q a x."""
    prod = h.algebra.product_basis((0, 1), (1, 0))
    return prod[(1, 1)]


# ---------------------------------------------------------------------------
# R-matrices through the canonical element
# ---------------------------------------------------------------------------

def taft_r_matrix(rep: Representation, parametric: bool = True,
                  normalize: bool = True) -> ParametricMatrix:
    """Image of the (Baxterized) canonical R of D(T_N) on V (x) V.

    The canonical element is decomposed along the x-degree grading of the
    double and Baxterized with mu^j weights, then pushed through the module.
    With normalize=True the result is rescaled by the inverse of its
    top-left entry (a unit scalar), which is the display normalization of
    the known closed forms; normalize=False returns the raw sum, which is
    what evaluating the un-Baxterized canonical element gives at mu = 1.
    """
    double = rep.double
    r = canonical_r(double)
    grading = double_grading(double, x_degree_grading(double.h))
    graded = decompose_graded(r.tensor(), grading, grading)
    r_alg = baxterize(graded) if parametric else r.tensor()
    mat = rep.tensor_image(r_alg)
    if normalize:
        top = mat.get(0, 0)
        if not top.is_constant() or top.is_zero():
            raise RepresentationError(
                "cannot normalize: top-left entry is zero or parameter-dependent")
        mat = mat.scaled(top.as_scalar().inverse())
    return mat
