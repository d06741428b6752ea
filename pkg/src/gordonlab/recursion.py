"""Coefficient-table recursions linking product sides to Hilbert series.

Two families of polynomial coefficient tables are built from stated initial
conditions by the same recursion shape, one attached to the Hilbert series
of the tail ideals, the other to the congruence-product series G_t.  The
G-family extends past t = r by a checked-exact division recurrence, and the
q-adic convergence of both expansions is verified numerically.
"""
from __future__ import annotations

from .partitions import ParameterError
from .series import TruncatedSeries, product_side
from .monomials import h_series


def _geometric(top: int, order: int) -> TruncatedSeries:
    """1 + q + ... + q^top, truncated."""
    return TruncatedSeries([1 if k <= top else 0 for k in range(order + 1)])


class CoefficientTable:
    """Entries (j, d) -> polynomial series, d >= 2, 1 <= j <= r."""

    def __init__(self, kind, r, index, d_max, order, entries):
        self.kind = kind          # "hp" or "lz"
        self.r = r
        self.index = index        # i for the hp table, l for the lz table
        self.d_max = d_max
        self.order = order
        self.entries = entries    # dict (j, d) -> TruncatedSeries

    def __getitem__(self, key):
        return self.entries[key]


def _build_table(kind, r, idx, init_top, d_max, order) -> CoefficientTable:
    if r < 2 or not 1 <= idx <= r:
        raise ParameterError(f"need r >= 2 and index in 1..r, got {r}, {idx}")
    if d_max < 2:
        raise ParameterError("need d_max >= 2")
    entries = {}
    for j in range(1, r + 1):
        entries[(j, 2)] = _geometric(init_top(j), order).shift(2 * (j - 1))
    for d in range(3, d_max + 1):
        for j in range(1, r + 1):
            acc = TruncatedSeries.zero(order)
            for k in range(1, r - j + 2):
                acc = acc + entries[(k, d - 1)]
            entries[(j, d)] = acc.shift((j - 1) * d)
    return CoefficientTable(kind, r, idx, d_max, order, entries)


def hp_coefficient_table(r: int, i: int, d_max: int, order: int) -> CoefficientTable:
    """Table whose (1, d) entry q-adically approximates the series of the
    gap-condition ideal; initial row at d = 2, recursion entry (j, d) =
    q^{(j-1)d} * sum of the previous column's first r-j+1 entries."""
    top = lambda j: (i - 1) if j <= r - i + 1 else (r - j)
    return _build_table("hp", r, i, top, d_max, order)


def lz_coefficient_table(r: int, l: int, d_max: int, order: int) -> CoefficientTable:
    """Companion table attached to the congruence-product series G_t."""
    top = lambda j: (r - l) if j <= l else (r - j)
    return _build_table("lz", r, l, top, d_max, order)


# ---------------------------------------------------------------------------
# The G-series ladder


def lz_g_series(r: int, t_max: int, order: int) -> list:
    """G_1..G_t_max (index 0 unused).

    G_l for l <= r is the congruence product avoiding 0, +-(r+1-l) modulo
    2r+1; for t > r, writing t = (r-1)j + i with 2 <= i <= r, the ladder
    step G_t = (G_{(r-1)(j-1)+r-i+1} - G_{(r-1)(j-1)+r-i+2}) / q^{(i-1)j}
    must divide exactly — a nonzero remainder raises.
    """
    if r < 2 or t_max < r or order < 1:
        raise ParameterError(f"need r >= 2, t_max >= r, order >= 1")
    # each ladder division by q^s destroys the top s coefficients, so
    # precompute the worst accumulated loss and pad the base order by it
    loss = [0] * (t_max + 1)
    for t in range(r + 1, t_max + 1):
        j = (t - 2) // (r - 1)
        i = t - (r - 1) * j
        a = (r - 1) * (j - 1) + r - i + 1
        b = a + 1
        loss[t] = max(loss[a], loss[b]) + (i - 1) * j
    base = order + max(loss)
    G = [None] * (t_max + 1)
    for l in range(1, r + 1):
        G[l] = product_side(r, r + 1 - l, base)
    for t in range(r + 1, t_max + 1):
        j = (t - 2) // (r - 1)
        i = t - (r - 1) * j
        hi = G[(r - 1) * (j - 1) + r - i + 1]
        lo = G[(r - 1) * (j - 1) + r - i + 2]
        try:
            G[t] = (hi - lo).exact_shift_down((i - 1) * j)
        except ValueError as exc:
            raise ValueError(f"ladder step t={t}: {exc}") from exc
    return [g if g is None else g.truncate(order) for g in G]


def empirical_hypothesis_check(r: int, d_max: int, order: int) -> dict:
    """Divisibility of G_{(r-1)d+i} - 1 by q^{d+1} (i < r) or q^{d+2} (i = r)."""
    t_top = (r - 1) * d_max + r
    G = lz_g_series(r, t_top, order)
    one = TruncatedSeries.one(order)
    failures = []
    for d in range(1, d_max + 1):
        for i in range(1, r + 1):
            need = d + 2 if i == r else d + 1
            if need > order:
                continue
            val = (G[(r - 1) * d + i] - one).valuation()
            if val is not None and val < need:
                failures.append({"d": d, "i": i, "required": need, "valuation": val})
    return {"r": r, "d_max": d_max, "order": order,
            "status": "pass" if not failures else "fail",
            "failures": failures}


# ---------------------------------------------------------------------------
# Expansion identities and convergence


def hp_expansion_check(r: int, i: int, d: int, order: int,
                       table: CoefficientTable | None = None) -> bool:
    """H_i^1 = sum_{j=1}^r  entry(j, d-1) * H_{r-j+1}^d   for d >= 3."""
    if d < 3:
        raise ParameterError("need d >= 3")
    if table is None:
        table = hp_coefficient_table(r, i, d - 1, order)
    lhs = h_series(r, i, 1, order)
    rhs = TruncatedSeries.zero(order)
    for j in range(1, r + 1):
        rhs = rhs + table[(j, d - 1)] * h_series(r, r - j + 1, d, order)
    return lhs == rhs


def lz_expansion_check(r: int, l: int, d: int, order: int,
                       table: CoefficientTable | None = None,
                       G: list | None = None) -> bool:
    """G_l = sum_{j=1}^r  entry(j, d) * G_{(r-1)d+j}   for d >= 2."""
    if d < 2:
        raise ParameterError("need d >= 2")
    if table is None:
        table = lz_coefficient_table(r, l, d, order)
    if G is None:
        G = lz_g_series(r, (r - 1) * d + r, order)
    lhs = G[l]
    rhs = TruncatedSeries.zero(order)
    for j in range(1, r + 1):
        rhs = rhs + table[(j, d)] * G[(r - 1) * d + j]
    return lhs == rhs


def convergence_check(r: int, i: int, d_max: int, order: int) -> dict:
    """Full pipeline report: expansion identities for every d, plus the
    q-adic limit statements H_i^1 = lim entry(1, d) of the hp table and
    G_{r+1-i} = lim entry(1, d) of the companion table.

    The tail comparison is made through order min(order, d_max - 2) for the
    hp table and min(order, d_max - 1) for the companion table, which the
    valuation bounds of the discarded terms justify.
    """
    l = r + 1 - i
    mismatches = []
    hp_tab = hp_coefficient_table(r, i, d_max, order)
    lz_tab = lz_coefficient_table(r, l, d_max, order)
    G = lz_g_series(r, (r - 1) * d_max + r, order)
    h1 = h_series(r, i, 1, order)
    for d in range(3, d_max + 1):
        if not hp_expansion_check(r, i, d, order, table=hp_tab):
            mismatches.append({"check": "hp_expansion", "d": d})
    for d in range(2, d_max + 1):
        if not lz_expansion_check(r, l, d, order, table=lz_tab, G=G):
            mismatches.append({"check": "lz_expansion", "d": d})
    # limit statements
    cut_hp = min(order, d_max - 2)
    cut_lz = min(order, d_max - 1)
    if h1.coeffs[:cut_hp + 1] != hp_tab[(1, d_max - 1)].coeffs[:cut_hp + 1]:
        mismatches.append({"check": "hp_limit", "through_order": cut_hp})
    if G[l].coeffs[:cut_lz + 1] != lz_tab[(1, d_max)].coeffs[:cut_lz + 1]:
        mismatches.append({"check": "lz_limit", "through_order": cut_lz})
    if h1 != G[l]:
        mismatches.append({"check": "series_equality"})
    return {"r": r, "i": i, "d_max": d_max, "order": order,
            "status": "pass" if not mismatches else "fail",
            "mismatches": mismatches}
