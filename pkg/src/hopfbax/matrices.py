"""Sparse square matrices over ParamScalar, with serialization.

These carry R-matrices: entries are Laurent polynomials in the spectral
parameters with exact field coefficients.  Indices are 0-based internally
and 1-based, row-major in the JSON form.

JSON schema (stable; round trips byte-identically through emit -> parse ->
emit):

    {
      "dim": <int>,                     # total matrix dimension
      "domain": "rational" | "sqrt_q" | "cyclotomic(<n>)",
      "param": "mu" | null,             # whether entries involve mu
      "entries": [ {"row": r, "col": c, "value": "<canonical string>"} ]
    }
"""

from __future__ import annotations

import json
from fractions import Fraction

from .scalars import (Domain, ParamScalar, Scalar, RATIONAL, SQRT_Q, cyclotomic,
                      parse_param_scalar, proportionality_ratio)


def _domain_tag(d: Domain) -> str:
    return str(d)


def _domain_from_tag(tag: str) -> Domain:
    if tag == "rational":
        return RATIONAL
    if tag == "sqrt_q":
        return SQRT_Q
    if tag.startswith("cyclotomic(") and tag.endswith(")"):
        return cyclotomic(int(tag[len("cyclotomic("):-1]))
    raise ValueError(f"unknown domain tag {tag!r}")


class ParametricMatrix:
    """Square matrix with ParamScalar entries, stored sparsely."""

    __slots__ = ("dim", "domain", "entries")

    def __init__(self, dim: int, domain: Domain, entries=None):
        self.dim = dim
        self.domain = domain
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    def _promote(self, v) -> ParamScalar:
        if isinstance(v, ParamScalar):
            return v
        if isinstance(v, Scalar):
            return ParamScalar.constant(v)
        return ParamScalar.constant(self.domain.from_fraction(v))

    def set(self, r: int, c: int, v):
        if not (0 <= r < self.dim and 0 <= c < self.dim):
            raise IndexError((r, c))
        v = self._promote(v)
        if v.is_zero():
            self.entries.pop((r, c), None)
        else:
            self.entries[(r, c)] = v

    def get(self, r: int, c: int) -> ParamScalar:
        return self.entries.get((r, c), ParamScalar(self.domain))

    def add_to(self, r: int, c: int, v):
        self.set(r, c, self.get(r, c) + self._promote(v))

    # -- constructors ---------------------------------------------------------
    @staticmethod
    def identity(dim: int, domain: Domain) -> "ParametricMatrix":
        m = ParametricMatrix(dim, domain)
        one = ParamScalar.constant(domain.one())
        for i in range(dim):
            m.entries[(i, i)] = one
        return m

    @staticmethod
    def zero(dim: int, domain: Domain) -> "ParametricMatrix":
        return ParametricMatrix(dim, domain)

    def copy(self) -> "ParametricMatrix":
        m = ParametricMatrix(self.dim, self.domain)
        m.entries = dict(self.entries)
        return m

    # -- predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.entries

    def uses_parameters(self) -> bool:
        return any(v.uses_parameters() for v in self.entries.values())

    def support(self):
        return set(self.entries)

    def __eq__(self, other):
        if not isinstance(other, ParametricMatrix):
            return NotImplemented
        return (self.dim == other.dim and self.domain == other.domain
                and self.entries == other.entries)

    # -- arithmetic ---------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, ParametricMatrix):
            return NotImplemented
        out = self.copy()
        for (r, c), v in other.entries.items():
            out.set(r, c, out.get(r, c) + v)
        return out

    def __sub__(self, other):
        if not isinstance(other, ParametricMatrix):
            return NotImplemented
        out = self.copy()
        for (r, c), v in other.entries.items():
            out.set(r, c, out.get(r, c) - v)
        return out

    def __neg__(self):
        out = ParametricMatrix(self.dim, self.domain)
        out.entries = {k: -v for k, v in self.entries.items()}
        return out

    def scaled(self, v) -> "ParametricMatrix":
        v = self._promote(v)
        out = ParametricMatrix(self.dim, self.domain)
        if not v.is_zero():
            for k, w in self.entries.items():
                out.entries[k] = v * w
        return out

    def __matmul__(self, other):
        if not isinstance(other, ParametricMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        rows = {}
        for (r, k), v in other.entries.items():
            rows.setdefault(r, []).append((k, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in rows.get(k, ()):
                p = v * w
                u = out.get((r, c))
                p = p if u is None else u + p
                if p.is_zero():
                    out.pop((r, c), None)
                else:
                    out[(r, c)] = p
        m = ParametricMatrix(self.dim, self.domain)
        m.entries = out
        return m

    def kron(self, other: "ParametricMatrix") -> "ParametricMatrix":
        d = other.dim
        out = ParametricMatrix(self.dim * d, self.domain)
        for (r1, c1), v in self.entries.items():
            for (r2, c2), w in other.entries.items():
                out.entries[(r1 * d + r2, c1 * d + c2)] = v * w
        return out

    def map_entries(self, fn) -> "ParametricMatrix":
        domain = self.domain
        mapped = {}
        for k, v in self.entries.items():
            w = fn(v)
            if not w.is_zero():
                mapped[k] = w
                domain = w.domain
        out = ParametricMatrix(self.dim, domain)
        out.entries = mapped
        return out

    def remap_exponents(self, mu_to=(1, 0), nu_to=(0, 1)) -> "ParametricMatrix":
        return self.map_entries(lambda v: v.remap_exponents(mu_to, nu_to))

    def at_one(self) -> "ParametricMatrix":
        """Evaluate all spectral parameters at 1."""
        out = ParametricMatrix(self.dim, self.domain)
        for k, v in self.entries.items():
            s = v.at_one()
            if not s.is_zero():
                out.entries[k] = ParamScalar.constant(s)
        return out

    # -- display / serialization -----------------------------------------------------
    def to_json_dict(self) -> dict:
        entries = []
        for (r, c) in sorted(self.entries):
            entries.append({"row": r + 1, "col": c + 1,
                            "value": str(self.entries[(r, c)])})
        return {"dim": self.dim,
                "domain": _domain_tag(self.domain),
                "param": "mu" if self.uses_parameters() else None,
                "entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json_dict(obj: dict) -> "ParametricMatrix":
        domain = _domain_from_tag(obj["domain"])
        m = ParametricMatrix(int(obj["dim"]), domain)
        for ent in obj["entries"]:
            v = parse_param_scalar(ent["value"], domain)
            m.set(int(ent["row"]) - 1, int(ent["col"]) - 1, v)
        return m

    @staticmethod
    def from_json(text: str) -> "ParametricMatrix":
        return ParametricMatrix.from_json_dict(json.loads(text))

    def to_latex(self) -> str:
        rows = []
        for r in range(self.dim):
            cells = []
            for c in range(self.dim):
                v = self.entries.get((r, c))
                cells.append("0" if v is None else _latex_param(v))
            rows.append(" & ".join(cells))
        return " \\\\\n".join(rows)

    def to_text(self) -> str:
        cells = [[str(self.entries.get((r, c), "0")) for c in range(self.dim)]
                 for r in range(self.dim)]
        widths = [max(len(cells[r][c]) for r in range(self.dim))
                  for c in range(self.dim)]
        return "\n".join(
            "[ " + "  ".join(cells[r][c].rjust(widths[c])
                             for c in range(self.dim)) + " ]"
            for r in range(self.dim))

    def __repr__(self):
        return f"ParametricMatrix(dim={self.dim}, nnz={len(self.entries)})"


# ---------------------------------------------------------------------------
# tensor-leg embeddings on V (x) V (x) V
# ---------------------------------------------------------------------------

def embed_two_site(r: ParametricMatrix, d: int, legs) -> ParametricMatrix:
    """Embed a d^2 x d^2 matrix into d^3 x d^3 acting on the given legs.

    legs is one of (0,1), (1,2), (0,2); the remaining leg carries the
    identity.
    """
    if r.dim != d * d:
        raise ValueError("matrix is not two-site for this local dimension")
    legs = tuple(legs)
    out = ParametricMatrix(d ** 3, r.domain)
    if legs == (0, 1):
        ident = ParametricMatrix.identity(d, r.domain)
        return r.kron(ident)
    if legs == (1, 2):
        ident = ParametricMatrix.identity(d, r.domain)
        return ident.kron(r)
    if legs != (0, 2):
        raise ValueError(f"bad legs {legs}")
    for (rc, cc), v in r.entries.items():
        a, x = divmod(rc, d)
        b, y = divmod(cc, d)
        for m in range(d):
            out.entries[((a * d + m) * d + x, (b * d + m) * d + y)] = v
    return out


def flip_operator(d: int, domain: Domain) -> ParametricMatrix:
    """The swap P(u (x) v) = v (x) u on V (x) V."""
    p = ParametricMatrix(d * d, domain)
    one = ParamScalar.constant(domain.one())
    for a in range(d):
        for b in range(d):
            p.entries[(a * d + b, b * d + a)] = one
    return p


# ---------------------------------------------------------------------------
# gauge discovery
# ---------------------------------------------------------------------------

def find_diagonal_gauge(a: ParametricMatrix, b: ParametricMatrix):
    """Find (c, lambdas) with b = c * L a L^-1, L = diag(lambdas), or None.

    The scalar c and the diagonal gauge are discovered, not assumed: c is
    read off the diagonal (which diagonal conjugation fixes), lambda ratios
    are propagated along the graph of common nonzero off-diagonal entries,
    and the candidate is verified entry by entry before being returned.
    """
    if a.dim != b.dim or a.domain != b.domain:
        return None
    if a.support() != b.support():
        return None
    dom = a.domain
    n = a.dim
    c = None
    for (r, cc), v in sorted(a.entries.items()):
        if r == cc:
            ratio = proportionality_ratio(b.entries[(r, cc)], v)
            if ratio is None:
                return None
            if c is None:
                c = ratio
            elif c != ratio:
                return None
    if c is None:
        c = dom.one()
    lam = [None] * n
    # propagate lambda_r / lambda_c = b_rc / (c * a_rc) through the support graph
    edges = {}
    for (r, cc), v in a.entries.items():
        if r == cc:
            continue
        ratio = proportionality_ratio(b.entries[(r, cc)], v)
        if ratio is None:
            return None
        edges.setdefault(r, []).append((cc, ratio / c))
        edges.setdefault(cc, []).append((r, c / ratio))
    for start in range(n):
        if lam[start] is not None or start not in edges:
            continue
        lam[start] = dom.one()
        stack = [start]
        while stack:
            i = stack.pop()
            for j, g in edges.get(i, ()):
                want = lam[i] / g      # lambda_i / lambda_j = g
                if lam[j] is None:
                    lam[j] = want
                    stack.append(j)
                elif lam[j] != want:
                    return None
    lam = [x if x is not None else dom.one() for x in lam]
    # verify
    cinv = [x.inverse() for x in lam]
    for (r, cc), v in a.entries.items():
        if b.entries[(r, cc)] != ParamScalar.constant(c * lam[r] * cinv[cc]) * v:
            return None
    return c, lam


# ---------------------------------------------------------------------------
# latex helpers
# ---------------------------------------------------------------------------

def _latex_scalar(x: Scalar) -> str:
    def poly(p):
        gen = x.domain.generator_name
        if not p:
            return "0"
        parts = []
        for e, coeff in enumerate(p):
            if not coeff:
                continue
            mag = abs(coeff)
            if e == 0:
                body = _latex_frac(mag)
            else:
                if gen == "s":
                    v = "q^{1/2}" if e == 1 else (
                        f"q^{{{e // 2}}}" if e % 2 == 0 else f"q^{{{e}/2}}")
                    if e == 2:
                        v = "q"
                else:
                    v = gen if e == 1 else f"{gen}^{{{e}}}"
                body = v if mag == 1 else f"{_latex_frac(mag)} {v}"
            parts.append(("-" if coeff < 0 else ("+" if parts else "")) + body)
        return " ".join(parts)

    if x.den == (Fraction(1),):
        return poly(x.num)
    return f"\\frac{{{poly(x.num)}}}{{{poly(x.den)}}}"


def _latex_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else \
        f"\\tfrac{{{f.numerator}}}{{{f.denominator}}}"


def _latex_param(v: ParamScalar) -> str:
    parts = []
    for (a, b) in sorted(v.terms):
        coeff = v.terms[(a, b)]
        mono = ""
        if a:
            mono += "\\mu" if a == 1 else f"\\mu^{{{a}}}"
        if b:
            mono += "\\nu" if b == 1 else f"\\nu^{{{b}}}"
        cs = _latex_scalar(coeff)
        if not mono:
            body = cs
        elif coeff.is_one():
            body = mono
        else:
            body = (f"\\left({cs}\\right){mono}" if ("+" in cs or "-" in cs[1:])
                    else f"{cs} {mono}")
        if parts and not body.startswith("-"):
            parts.append("+" + body)
        else:
            parts.append(body)
    return " ".join(parts) if parts else "0"
