"""Differential ideal of x_1^r and its leading ideal by graded elimination.

The derivation sends x_i to x_{i+1}, so the weight-n graded piece of the
differential ideal is spanned by the products m * D^j(x_1^r) with
wt(m) = n - r - j.  Row-reducing that spanning set against the weight-n
monomial basis, sorted by a weighted monomial order, yields the leading
monomials directly — no Groebner basis is needed for a single graded piece.
"""
from __future__ import annotations

from math import gcd

from .partitions import ParameterError, partitions_of
from .monomials import Monomial, MonomialIdeal, minimalize

ORDERS = ("wlex", "wrevlex")


class DiffPolynomial:
    """Finite integer combination of monomials; immutable mapping."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {m: int(c) for m, c in dict(terms).items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DiffPolynomial is immutable")

    @classmethod
    def variable_power(cls, v: int, e: int) -> "DiffPolynomial":
        return cls({Monomial([v] * e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def weight(self):
        """Common weight of all terms; None for 0, error if mixed."""
        weights = {m.weight for m in self.terms}
        if not weights:
            return None
        if len(weights) > 1:
            raise ValueError("polynomial is not quasi-homogeneous")
        return weights.pop()

    def derive_once(self) -> "DiffPolynomial":
        out = {}
        for mon, c in self.terms.items():
            for v, e in mon.exps.items():
                parts = list(mon.parts)
                parts.remove(v)
                parts.append(v + 1)
                key = Monomial(parts)
                out[key] = out.get(key, 0) + c * e
        return DiffPolynomial(out)

    def times_monomial(self, mon: Monomial) -> "DiffPolynomial":
        return DiffPolynomial({Monomial(m.parts + mon.parts): c
                               for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, DiffPolynomial) and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{c}*{m!r}" for m, c in
                          sorted(self.terms.items(), key=lambda t: t[0].parts))
        return f"DiffPolynomial({body or 0})"


def derive(f: DiffPolynomial, j: int) -> DiffPolynomial:
    if j < 0:
        raise ParameterError("derivation count must be nonnegative")
    for _ in range(j):
        f = f.derive_once()
    return f


def graded_ideal_spanning_set(r: int, n: int):
    """All products m * D^j(x_1^r) of weight n, as (j, polynomial) pairs."""
    if r < 2:
        raise ParameterError("need r >= 2")
    out = []
    if n < r:
        return out
    f = DiffPolynomial.variable_power(1, r)
    for j in range(n - r + 1):
        for m in partitions_of(n - r - j):
            out.append((j, f.times_monomial(Monomial(m))))
        f = f.derive_once()
    return out


# ---------------------------------------------------------------------------
# Monomial orders on a fixed weight


def _exp_vector(mon: Monomial, width: int) -> tuple:
    e = [0] * width
    for v, k in mon.exps.items():
        e[v - 1] = k
    return tuple(e)


def order_key(mon: Monomial, order: str, width: int):
    """Sort key; larger key = larger monomial (within one weight)."""
    e = _exp_vector(mon, width)
    if order == "wlex":
        return e
    if order == "wrevlex":
        return tuple(-x for x in reversed(e))
    raise ParameterError(f"unknown order {order!r}")


def weight_basis(n: int, order: str):
    """Weight-n monomials sorted descending (largest first)."""
    mons = [Monomial(p) for p in partitions_of(n)] if n else [Monomial(())]
    return sorted(mons, key=lambda m: order_key(m, order, max(n, 1)),
                  reverse=True)


# ---------------------------------------------------------------------------
# Fraction-free elimination


def _strip_content(row: dict) -> dict:
    g = 0
    for c in row.values():
        g = gcd(g, c)
    if g > 1:
        row = {p: c // g for p, c in row.items()}
    # normalize sign of the leading coefficient
    lead = min(row)
    if row[lead] < 0:
        row = {p: -c for p, c in row.items()}
    return row


def leading_monomials_at_weight(r: int, n: int, order: str):
    """Pivot monomials of the graded piece; deterministic, exact."""
    if n < r:
        return set()
    basis = weight_basis(n, order)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for j, poly in graded_ideal_spanning_set(r, n):
        row = {index[m]: c for m, c in poly.terms.items()}
        if row:
            rows.append((min(row), j, row))
    rows.sort(key=lambda t: (t[0], t[1]))  # leading monomial desc, fewer D's
    pivots = {}
    for _, _, row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _strip_content(row)
                break
            a, b = piv[lead], row[lead]
            new = {}
            for p in set(piv) | set(row):
                c = a * row.get(p, 0) - b * piv.get(p, 0)
                if c:
                    new[p] = c
            row = new
    return {basis[p] for p in pivots}


def standard_monomials_at_weight(r: int, n: int, order: str):
    leads = leading_monomials_at_weight(r, n, order)
    return [m for m in weight_basis(n, order)] if n < r else \
        [m for m in weight_basis(n, order) if m not in leads]


def leading_ideal_minimal_generators(r: int, W: int, order: str):
    """Minimal generators (weight <= W) of the computed leading ideal."""
    if W < r:
        raise ParameterError("need W >= r")
    gens = []
    for n in range(r, W + 1):
        gens.extend(leading_monomials_at_weight(r, n, order))
    mins = minimalize(gens)
    width = max(W, 1)
    return sorted(mins, key=lambda m: (m.weight,
                                       order_key(m, order, width)),
                  reverse=False)


def compare_with_candidate(r: int, W: int, order: str,
                           candidate: MonomialIdeal) -> dict:
    """Three-way diff of computed leading-ideal generators vs a candidate."""
    computed = set(leading_ideal_minimal_generators(r, W, order))
    cand = {g for g in candidate.generators if g.weight <= W}
    return {
        "r": r, "order": order, "max_weight": W,
        "computed_only": sorted((list(m.parts) for m in computed - cand)),
        "candidate_only": sorted((list(m.parts) for m in cand - computed)),
        "shared": sorted((list(m.parts) for m in computed & cand)),
    }
