"""Hopf algebra data, axiom verification, duals and gradings.

A HopfAlgebra packages an Algebra with coproduct/counit/antipode tables on
the basis.  Everything is table-driven and exact, so the axiom checker is a
finite computation: each axiom is verified on all basis elements (or basis
tuples) and the report carries a counterexample when one exists.

The dual Hopf algebra is built by transposing tables through the pairing
<a_i^*, a_j> = delta_ij:

    product on the dual   = transpose of the coproduct,
    coproduct on the dual = transpose of the product,
    unit of the dual      = the counit functional,
    counit of the dual    = evaluation at the unit,
    antipode of the dual  = precomposition with the antipode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import Algebra, AlgebraElement, TensorElement, tensor_multiply
from .scalars import Scalar


class HopfAlgebra:
    """Algebra + coproduct/counit/antipode tables on its basis."""

    def __init__(self, algebra: Algebra, coproduct, counit, antipode):
        self.algebra = algebra
        self.coproduct = coproduct      # label -> TensorElement (arity 2)
        self.counit = counit            # label -> Scalar
        self.antipode = antipode        # label -> AlgebraElement
        self._antipode_inv = None

    @property
    def name(self):
        return self.algebra.name

    @property
    def domain(self):
        return self.algebra.domain

    def unit(self) -> AlgebraElement:
        return self.algebra.unit()

    # -- linear extensions ----------------------------------------------------
    def delta(self, x) -> TensorElement:
        """Coproduct of a basis label or element."""
        if not isinstance(x, AlgebraElement):
            return self.coproduct[x]
        out = TensorElement((self.algebra, self.algebra))
        for l, c in x.terms.items():
            out = out + self.coproduct[l].scaled(c)
        return out

    def delta_squared(self, x) -> TensorElement:
        """(Delta (x) id) Delta, an arity-3 expansion."""
        d = self.delta(x)
        out = {}
        for (l0, l1), c in d.terms.items():
            for (m0, m1), e in self.coproduct[l0].terms.items():
                k = (m0, m1, l1)
                v = c * e
                w = out.get(k)
                v = v if w is None else w + v
                out[k] = v
        return TensorElement((self.algebra,) * 3, out)

    def eps(self, x) -> Scalar:
        if not isinstance(x, AlgebraElement):
            return self.counit[x]
        out = self.domain.zero()
        for l, c in x.terms.items():
            out = out + c * self.counit[l]
        return out

    def gamma(self, x) -> AlgebraElement:
        if not isinstance(x, AlgebraElement):
            return self.antipode[x]
        out = self.algebra.zero()
        for l, c in x.terms.items():
            out = out + self.antipode[l].scaled(c)
        return out

    def gamma_inverse(self, x) -> AlgebraElement:
        if self._antipode_inv is None:
            self._antipode_inv = invert_linear_table(self.algebra, self.antipode)
        if not isinstance(x, AlgebraElement):
            return self._antipode_inv[x]
        out = self.algebra.zero()
        for l, c in x.terms.items():
            out = out + self._antipode_inv[l].scaled(c)
        return out

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.algebra.dim})"


def invert_linear_table(algebra: Algebra, table) -> dict:
    """Invert a linear map given on the basis, by Gaussian elimination."""
    labels = algebra.labels
    n = len(labels)
    idx = algebra.index
    one, zero = algebra.domain.one(), algebra.domain.zero()
    # columns of the map in basis coordinates, augmented with the identity
    a = [[zero] * n for _ in range(n)]
    inv = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for c, l in enumerate(labels):
        for m, v in table[l].terms.items():
            a[idx[m]][c] = v
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("linear map is not invertible")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col].inverse()
        a[col] = [x * d for x in a[col]]
        inv[col] = [x * d for x in inv[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    out = {}
    for c, l in enumerate(labels):
        out[l] = algebra.element(
            {labels[r]: inv[r][c] for r in range(n) if not inv[r][c].is_zero()})
    return out


# ---------------------------------------------------------------------------
# axiom suite
# ---------------------------------------------------------------------------

@dataclass
class AxiomResult:
    name: str
    passed: bool
    counterexample: str | None = None

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "counterexample": self.counterexample}


@dataclass
class HopfReport:
    algebra: str
    axioms: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def summary(self) -> str:
        lines = [f"Hopf axioms for {self.algebra}:"]
        for a in self.axioms:
            line = f"  {'PASS' if a.passed else 'FAIL'}  {a.name}"
            if a.counterexample:
                line += f"  [{a.counterexample}]"
            lines.append(line)
        return "\n".join(lines)

    def to_dict(self):
        return {"algebra": self.algebra, "passed": self.passed,
                "axioms": [a.to_dict() for a in self.axioms]}


def check_hopf_axioms(h: HopfAlgebra) -> HopfReport:
    """Verify all Hopf axioms on the basis; exact, no tolerances."""
    alg = h.algebra
    labels = alg.labels
    report = HopfReport(alg.name)
    add = report.axioms.append

    def first_fail(gen):
        return next(gen, None)

    bad = first_fail(
        (l1, l2, l3) for l1, l2, l3 in iproduct(labels, labels, labels)
        if (alg.basis(l1) * alg.basis(l2)) * alg.basis(l3)
        != alg.basis(l1) * (alg.basis(l2) * alg.basis(l3)))
    add(AxiomResult("associativity", bad is None,
                    None if bad is None else _fmt(alg, bad)))

    e = alg.unit()
    bad = first_fail(l for l in labels
                     if e * alg.basis(l) != alg.basis(l)
                     or alg.basis(l) * e != alg.basis(l))
    add(AxiomResult("unit", bad is None,
                    None if bad is None else _fmt(alg, (bad,))))

    def coassoc_fail(l):
        left = h.delta_squared(l)
        right = {}
        for (l0, l1), c in h.delta(l).terms.items():
            for (m0, m1), d in h.coproduct[l1].terms.items():
                k = (l0, m0, m1)
                v = c * d
                w = right.get(k)
                right[k] = v if w is None else w + v
        return left != TensorElement((alg,) * 3, right)

    bad = first_fail(l for l in labels if coassoc_fail(l))
    add(AxiomResult("coassociativity", bad is None,
                    None if bad is None else _fmt(alg, (bad,))))

    def counit_fail(l):
        left = alg.zero()
        right = alg.zero()
        for (l0, l1), c in h.delta(l).terms.items():
            left = left + alg.basis(l1).scaled((c * h.counit[l0]).as_scalar())
            right = right + alg.basis(l0).scaled((c * h.counit[l1]).as_scalar())
        return left != alg.basis(l) or right != alg.basis(l)

    bad = first_fail(l for l in labels if counit_fail(l))
    add(AxiomResult("counit", bad is None,
                    None if bad is None else _fmt(alg, (bad,))))

    def compat_fail(pair):
        l1, l2 = pair
        prod = alg.basis(l1) * alg.basis(l2)
        lhs = h.delta(prod)
        rhs = tensor_multiply(h.coproduct[l1], h.coproduct[l2])
        if lhs != rhs:
            return True
        return h.eps(prod) != h.counit[l1] * h.counit[l2]

    bad = first_fail(p for p in iproduct(labels, labels) if compat_fail(p))
    add(AxiomResult("bialgebra compatibility", bad is None,
                    None if bad is None else _fmt(alg, bad)))

    unit_ok = (h.delta(e) == TensorElement.of(e, e)) and h.eps(e).is_one()
    add(AxiomResult("bialgebra unit/counit of 1", unit_ok,
                    None if unit_ok else "unit element"))

    def antipode_fail(l):
        want = e.scaled(h.counit[l])
        left = alg.zero()
        right = alg.zero()
        for (l0, l1), c in h.delta(l).terms.items():
            c = c.as_scalar()
            left = left + (h.antipode[l0] * alg.basis(l1)).scaled(c)
            right = right + (alg.basis(l0) * h.antipode[l1]).scaled(c)
        return left != want or right != want

    bad = first_fail(l for l in labels if antipode_fail(l))
    add(AxiomResult("antipode", bad is None,
                    None if bad is None else _fmt(alg, (bad,))))
    return report


def _fmt(alg, labels):
    return ", ".join(alg.label_str(l) for l in labels)


# ---------------------------------------------------------------------------
# dual Hopf algebra
# ---------------------------------------------------------------------------

def pair(f: AlgebraElement, x: AlgebraElement) -> Scalar:
    """Evaluate a dual element on a primal element via <a_i^*, a_j> = d_ij."""
    out = f.algebra.domain.zero()
    for l, c in f.terms.items():
        d = x.terms.get(l)
        if d is not None:
            out = out + c * d
    return out


def dual(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis {a_i^*}."""
    alg = h.algebra
    labels = alg.labels

    prod_table = {k: {} for k in iproduct(labels, labels)}
    for k in labels:
        for (l0, l1), c in h.coproduct[k].terms.items():
            prod_table[(l0, l1)][k] = c.as_scalar()

    coprod_terms = {k: {} for k in labels}
    for l0, l1 in iproduct(labels, labels):
        for k, c in alg.product_basis(l0, l1).items():
            d = coprod_terms[k].get((l0, l1))
            coprod_terms[k][(l0, l1)] = c if d is None else d + c

    unit_terms = {l: h.counit[l] for l in labels if not h.counit[l].is_zero()}

    def label_str(l):
        return f"({alg.label_str(l)})*"

    dual_alg = Algebra(f"{alg.name}^*", alg.domain, labels, unit_terms,
                       lambda l1, l2: prod_table[(l1, l2)], label_str=label_str)

    coproduct = {k: TensorElement((dual_alg, dual_alg), coprod_terms[k])
                 for k in labels}
    counit = {k: alg._unit_terms.get(k, alg.domain.zero()) for k in labels}
    antipode = {}
    for k in labels:
        terms = {}
        for m in labels:
            c = h.antipode[m].terms.get(k)
            if c is not None:
                terms[m] = c
        antipode[k] = dual_alg.element(terms)

    return HopfAlgebra(dual_alg, coproduct, counit, antipode)


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------

def _deg_add(p, q):
    if isinstance(p, tuple):
        return tuple(a + b for a, b in zip(p, q))
    return p + q


def _deg_zero(p):
    return tuple(0 for _ in p) if isinstance(p, tuple) else 0


class Grading:
    """Degree assignment on an algebra's basis (int or tuple of ints)."""

    def __init__(self, algebra: Algebra, degrees):
        self.algebra = algebra
        self.degrees = dict(degrees)
        missing = [l for l in algebra.labels if l not in self.degrees]
        if missing:
            raise ValueError(f"grading misses labels {missing[:3]}")

    def degree(self, label):
        return self.degrees[label]

    def is_nontrivial(self) -> bool:
        return any(d != _deg_zero(d) for d in self.degrees.values())

    def lift_zn(self, embed_fn) -> "Grading":
        """New grading with degrees mapped through embed_fn (e.g. j -> (j, 0))."""
        return Grading(self.algebra, {l: embed_fn(d) for l, d in self.degrees.items()})


@dataclass
class GradingReport:
    algebra: str
    kind: str                 # "product" | "coproduct"
    passed: bool
    nontrivial: bool
    violations: list = field(default_factory=list)

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  e.g. {self.violations[0]}"
        kind = "multiplicative" if self.kind == "product" else "coproduct"
        return (f"{flag}  {kind} homogeneity on {self.algebra} "
                f"(nontrivial={self.nontrivial}){extra}")

    def to_dict(self):
        return {"algebra": self.algebra, "kind": self.kind, "passed": self.passed,
                "nontrivial": self.nontrivial,
                "violations": [str(v) for v in self.violations[:5]]}


def check_grading(algebra: Algebra, grading: Grading) -> GradingReport:
    """Multiplicative homogeneity: deg(b_i b_j) = deg(b_i) + deg(b_j)."""
    viol = []
    for l1, l2 in iproduct(algebra.labels, algebra.labels):
        want = _deg_add(grading.degree(l1), grading.degree(l2))
        for m in algebra.product_basis(l1, l2):
            if grading.degree(m) != want:
                viol.append((algebra.label_str(l1), algebra.label_str(l2),
                             algebra.label_str(m)))
                break
    return GradingReport(algebra.name, "product", not viol,
                         grading.is_nontrivial(), viol)


def check_coproduct_grading(h: HopfAlgebra, grading: Grading) -> GradingReport:
    """Coproduct condition: Delta maps degree p into sum_q (deg q) (x) (deg p-q)."""
    viol = []
    alg = h.algebra
    for l in alg.labels:
        p = grading.degree(l)
        for (l0, l1) in h.coproduct[l].terms:
            if _deg_add(grading.degree(l0), grading.degree(l1)) != p:
                viol.append((alg.label_str(l), alg.label_str(l0), alg.label_str(l1)))
                break
    return GradingReport(alg.name, "coproduct", not viol,
                         grading.is_nontrivial(), viol)


def dual_grading(grading: Grading, dual_algebra: Algebra) -> Grading:
    """Grading on the dual: (a_i of degree p)^* again has degree p."""
    return Grading(dual_algebra, dict(grading.degrees))
