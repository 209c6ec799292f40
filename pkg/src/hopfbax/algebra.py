"""Finite-dimensional algebras over exact scalars, and tensor powers.

An Algebra is a basis (hashable, orderable labels) plus structure constants:
``product(l1, l2) -> {label: Scalar}``.  Elements are sparse dictionaries over
basis labels.  TensorElement holds elements of tensor products of (possibly
different) algebras, with ParamScalar coefficients so that the same code path
serves constant and spectral-parameter-dependent objects.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .scalars import Scalar, ParamScalar, Domain


class Algebra:
    """Associative unital algebra given by structure constants on a basis."""

    def __init__(self, name, domain: Domain, labels, unit_terms, product,
                 label_str=None):
        self.name = name
        self.domain = domain
        self.labels = tuple(labels)
        self.index = {l: i for i, l in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self._unit_terms = {l: c for l, c in unit_terms.items() if not c.is_zero()}
        self._product = product
        self._cache = {}
        self._label_str = label_str or repr

    @property
    def dim(self) -> int:
        return len(self.labels)

    def label_str(self, label) -> str:
        return self._label_str(label)

    # -- element constructors -------------------------------------------------
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def unit(self) -> "AlgebraElement":
        return AlgebraElement(self, dict(self._unit_terms))

    def basis(self, label) -> "AlgebraElement":
        if label not in self.index:
            raise KeyError(f"{label!r} is not a basis label of {self.name}")
        return AlgebraElement(self, {label: self.domain.one()})

    def element(self, terms) -> "AlgebraElement":
        for l in terms:
            if l not in self.index:
                raise KeyError(f"{l!r} is not a basis label of {self.name}")
        return AlgebraElement(self, terms)

    # -- structure constants ----------------------------------------------------
    def product_basis(self, l1, l2):
        """Structure constants of l1*l2 as a {label: Scalar} dict (cached)."""
        key = (l1, l2)
        hit = self._cache.get(key)
        if hit is None:
            hit = {l: c for l, c in self._product(l1, l2).items() if not c.is_zero()}
            self._cache[key] = hit
        return hit

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim})"


class AlgebraElement:
    """Sparse element of an Algebra: {basis label: Scalar}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {l: c for l, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, label) -> Scalar:
        return self.terms.get(label, self.algebra.domain.zero())

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError(
                f"elements live in different algebras "
                f"({self.algebra.name} vs {other.algebra.name})")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for l, c in other.terms.items():
            d = out.get(l)
            c = c if d is None else d + c
            if c.is_zero():
                out.pop(l, None)
            else:
                out[l] = c
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        return AlgebraElement(self.algebra, {l: -c for l, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scaled(self, c) -> "AlgebraElement":
        if isinstance(c, (int, Fraction)):
            c = self.algebra.domain.from_fraction(c)
        if c.is_zero():
            return self.algebra.zero()
        return AlgebraElement(self.algebra, {l: c * v for l, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                c12 = c1 * c2
                for l3, c3 in self.algebra.product_basis(l1, l2).items():
                    c = c12 * c3
                    d = out.get(l3)
                    c = c if d is None else d + c
                    if c.is_zero():
                        out.pop(l3, None)
                    else:
                        out[l3] = c
        return AlgebraElement(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for l in sorted(self.terms):
            c = self.terms[l]
            name = self.algebra.label_str(l)
            cs = str(c)
            bits.append(name if c.is_one() else
                        (f"({cs})*{name}" if " " in cs else f"{cs}*{name}"))
        return " + ".join(bits)

    __repr__ = __str__


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the common algebra of x and y."""
    return x * y


# ---------------------------------------------------------------------------
# tensor elements
# ---------------------------------------------------------------------------

def _promote(c, domain):
    if isinstance(c, ParamScalar):
        return c
    if isinstance(c, Scalar):
        return ParamScalar.constant(c)
    return ParamScalar.constant(domain.from_fraction(c))


class TensorElement:
    """Sparse element of A_1 (x) ... (x) A_k with ParamScalar coefficients."""

    __slots__ = ("algebras", "terms")

    def __init__(self, algebras, terms=None):
        self.algebras = tuple(algebras)
        domain = self.algebras[0].domain
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = _promote(v, domain)
                if not v.is_zero():
                    self.terms[tuple(k)] = v

    @property
    def arity(self) -> int:
        return len(self.algebras)

    @property
    def domain(self):
        return self.algebras[0].domain

    @staticmethod
    def of(*factors) -> "TensorElement":
        """Tensor product of AlgebraElements."""
        algebras = tuple(f.algebra for f in factors)
        terms = {}
        for combo in iproduct(*(f.terms.items() for f in factors)):
            key = tuple(l for l, _ in combo)
            c = combo[0][1]
            for _, v in combo[1:]:
                c = c * v
            d = terms.get(key)
            terms[key] = c if d is None else d + c
        return TensorElement(algebras, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> ParamScalar:
        return self.terms.get(tuple(key),
                              ParamScalar(self.domain))

    def _check(self, other):
        if self.algebras != other.algebras:
            raise ValueError("tensor elements live over different slot algebras")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            v = v if w is None else w + v
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        return TensorElement(self.algebras, out)

    def __neg__(self):
        return TensorElement(self.algebras, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scaled(self, c) -> "TensorElement":
        c = _promote(c, self.domain)
        return TensorElement(self.algebras,
                             {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamScalar)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebras == other.algebras and self.terms == other.terms

    def map_coefficients(self, fn) -> "TensorElement":
        return TensorElement(self.algebras,
                             {k: fn(v) for k, v in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=repr):
            v = self.terms[k]
            name = " (x) ".join(a.label_str(l) for a, l in zip(self.algebras, k))
            vs = str(v)
            bits.append(f"[{name}]" if vs == "1" else f"({vs})*[{name}]")
        return " + ".join(bits)

    __repr__ = __str__


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    """Slot-wise product of two tensor elements of equal arity."""
    x._check(y)
    algebras = x.algebras
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            c = c1 * c2
            slot_dicts = [algebras[i].product_basis(k1[i], k2[i])
                          for i in range(len(algebras))]
            if any(not d for d in slot_dicts):
                continue
            for combo in iproduct(*(d.items() for d in slot_dicts)):
                key = tuple(l for l, _ in combo)
                cc = c
                for _, v in combo:
                    cc = cc * v
                w = out.get(key)
                cc = cc if w is None else w + cc
                if cc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cc
    return TensorElement(algebras, out)


def embed(x: TensorElement, positions, algebras) -> "TensorElement":
    """Place the legs of x at the given slots of a bigger tensor product.

    `positions` are 0-based target slots, one per leg of x; every other slot
    is filled with the unit of its algebra.  Example: embed(R, (0, 2), (D, D, D))
    builds R_13 in D (x) D (x) D.
    """
    positions = tuple(positions)
    if len(positions) != x.arity:
        raise ValueError("need one target position per tensor leg")
    algebras = tuple(algebras)
    if len(set(positions)) != len(positions) or any(
            not 0 <= p < len(algebras) for p in positions):
        raise ValueError(f"positions {positions} must be distinct slots "
                         f"in 0..{len(algebras) - 1}")
    free = [i for i in range(len(algebras)) if i not in positions]
    units = {i: algebras[i]._unit_terms for i in free}
    out = {}
    for k, c in x.terms.items():
        for combo in iproduct(*(units[i].items() for i in free)):
            key = [None] * len(algebras)
            for pos, l in zip(positions, k):
                key[pos] = l
            cc = c
            for (i, (l, u)) in zip(free, combo):
                key[i] = l
                cc = cc * u
            key = tuple(key)
            w = out.get(key)
            cc = cc if w is None else w + cc
            if cc.is_zero():
                out.pop(key, None)
            else:
                out[key] = cc
    return TensorElement(algebras, out)


# ---------------------------------------------------------------------------
# structural spot checks
# ---------------------------------------------------------------------------

def associativity_violations(algebra: Algebra, triples=None):
    """Basis triples where (ab)c != a(bc); empty list means associative."""
    labels = algebra.labels
    if triples is None:
        triples = iproduct(labels, labels, labels)
    bad = []
    for l1, l2, l3 in triples:
        a, b, c = algebra.basis(l1), algebra.basis(l2), algebra.basis(l3)
        if (a * b) * c != a * (b * c):
            bad.append((l1, l2, l3))
    return bad


def unit_violations(algebra: Algebra):
    """Basis labels where e*b != b or b*e != b."""
    e = algebra.unit()
    bad = []
    for l in algebra.labels:
        b = algebra.basis(l)
        if e * b != b or b * e != b:
            bad.append(l)
    return bad
