"""Monomial ideals in infinitely many weighted variables, truncated by weight.

Variables x_j carry weight j, so monomials correspond to partitions (the
multiset of variable indices) and standard-monomial counting is partition
counting.  Two independent Hilbert series algorithms are provided: direct
standard-monomial enumeration, and the colon/sum exact-sequence recursion.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .partitions import ParameterError, partitions_of, new_parts
from .series import TruncatedSeries, _div_one_minus_qn


class Monomial:
    """A monomial in the variables x_1, x_2, ...; immutable.

    Stored as the associated partition: the non-increasing tuple of variable
    indices counted with multiplicity, so x_3 x_1^2 <-> (3, 1, 1).
    """

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError("variable indices must be >= 1")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def from_exps(cls, exps) -> "Monomial":
        parts = []
        for idx, e in exps.items():
            if e < 0:
                raise ValueError("negative exponent")
            parts.extend([idx] * e)
        return cls(parts)

    @property
    def exps(self) -> dict:
        return dict(Counter(self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def degree(self) -> int:
        return len(self.parts)

    def is_one(self) -> bool:
        return not self.parts

    def divides(self, other: "Monomial") -> bool:
        if len(self.parts) > len(other.parts):
            return False
        mine = Counter(self.parts)
        theirs = Counter(other.parts)
        return all(theirs[v] >= e for v, e in mine.items())

    def without_one(self, v: int) -> "Monomial":
        """Remove a single factor x_v if present (monomial colon by x_v)."""
        if v not in self.parts:
            return self
        parts = list(self.parts)
        parts.remove(v)
        return Monomial(parts)

    def min_var(self):
        return self.parts[-1] if self.parts else None

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        if not self.parts:
            return "Monomial(1)"
        body = "*".join(f"x{v}^{e}" if e > 1 else f"x{v}"
                        for v, e in sorted(Counter(self.parts).items()))
        return f"Monomial({body})"


def minimalize(monomials) -> tuple:
    """Drop every monomial divisible by another one; sort by (weight, parts)."""
    mons = sorted(set(monomials), key=lambda m: (m.weight, m.parts))
    kept = []
    for m in mons:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Finitely many minimal generators, complete up to a weight bound."""

    def __init__(self, generators, weight_bound, min_var=1, tag="custom",
                 params=None, membership=None):
        self.generators = minimalize(g if isinstance(g, Monomial) else Monomial(g)
                                     for g in generators)
        self.weight_bound = weight_bound
        self.min_var = min_var
        self.tag = tag
        self.params = dict(params or {})
        self._membership = membership

    def contains(self, mon: Monomial) -> bool:
        if mon.weight > self.weight_bound:
            raise ValueError("membership undecidable beyond the weight bound")
        return any(g.divides(mon) for g in self.generators)

    def intrinsic_contains(self, mon: Monomial) -> bool:
        if self._membership is None:
            raise ValueError(f"no intrinsic membership test for {self.tag}")
        return self._membership(mon.parts)

    def to_json_dict(self) -> dict:
        return {"family": self.tag, "params": self.params,
                "weight_bound": self.weight_bound, "min_var": self.min_var,
                "generators": [list(g.parts) for g in self.generators]}

    def __repr__(self):
        return (f"MonomialIdeal({self.tag}, {self.params}, "
                f"W={self.weight_bound}, {len(self.generators)} gens)")


# ---------------------------------------------------------------------------
# Ideal families


def tail_ideal(r: int, l: int, k: int, W: int) -> MonomialIdeal:
    """The ideal (x_k^l, x_k^{l-1} x_{k+1}^{r-l+1}, ..., x_k x_{k+1}^{r-1})
    together with the full two-variable pattern in x_t, x_{t+1} for t > k,
    inside the ring on x_k, x_{k+1}, ...; truncated at weight W.

    l = r gives the pure pattern ideal starting at x_k; k = 1, l = i gives
    the ideal whose standard monomials realize the gap-condition counts.
    """
    if r < 2 or not 1 <= l <= r or k < 1:
        raise ParameterError(f"bad tail ideal parameters r={r}, l={l}, k={k}")
    gens = []
    if k * l <= W:
        gens.append(Monomial([k] * l))
    for s in range(1, l):
        w = k * (l - s) + (k + 1) * (r - l + s)
        if w <= W:
            gens.append(Monomial([k] * (l - s) + [k + 1] * (r - l + s)))
    t = k + 1
    while t * r <= W:
        for n in range(r):
            if t * (r - n) + (t + 1) * n <= W:
                gens.append(Monomial([t] * (r - n) + [t + 1] * n))
        t += 1
    return MonomialIdeal(gens, W, min_var=k, tag="tail",
                         params={"r": r, "l": l, "k": k})


def gordon_ideal(r: int, i: int, W: int) -> MonomialIdeal:
    """The gap-condition ideal: x_1^i plus the two-variable pattern family."""
    ideal = tail_ideal(r, i, 1, W)
    return MonomialIdeal(ideal.generators, W, min_var=1, tag="gap",
                         params={"r": r, "i": i})


def _block_generators(r, i, W, first_size, min_entry, drop_rule):
    """Enumerate block-pattern generators of weight <= W.

    Blocks of non-decreasing integers >= min_entry chained so each block's
    first entry is at least the previous block's last entry; block j holds
    f(j) entries where f(1) = first_size and f(j) is the previous block's
    last entry, minus one when drop_rule says so.  A size that reaches zero
    truncates all remaining blocks.
    """
    out = []

    def fill_block(j, size, last, acc, wsum):
        # choose the `size` entries of block j, each >= last
        if size == 0:
            next_block(j + 1, last, acc, wsum, empty=True)
            return
        def entries(pos, lo, acc, wsum):
            if pos == size:
                next_block(j + 1, acc[-1], acc, wsum, empty=False)
                return
            e = lo
            while wsum + e + (size - pos - 1) * e <= W:
                entries(pos + 1, e, acc + [e], wsum + e)
                e += 1
        entries(0, last, acc, wsum)

    def next_block(j, last, acc, wsum, empty):
        if j > r:
            out.append(Monomial(acc))
            return
        if empty:
            # an exhausted size propagates: nothing more can be added
            out.append(Monomial(acc))
            return
        size = last - 1 if drop_rule(j) else last
        fill_block(j, size, last, acc, wsum)

    fill_block(1, first_size, min_entry, [], 0)
    return out


def prime_ideal(r: int, i: int, W: int) -> MonomialIdeal:
    """The block-pattern ideal whose standard monomials realize the
    new-part-condition counts; block sizes shrink by one past block i."""
    if r < 2 or not 1 <= i <= r:
        raise ParameterError(f"need r >= 2, 1 <= i <= r; got r={r}, i={i}")
    gens = _block_generators(r, i, W, first_size=1, min_entry=1,
                             drop_rule=lambda j: j >= i + 1)
    member = lambda parts: all(v > 0 for v in new_parts(parts, r, i).values)
    return MonomialIdeal(gens, W, min_var=1, tag="prime",
                         params={"r": r, "i": i}, membership=member)


def block_ideal(r: int, c: int, m: int, W: int) -> MonomialIdeal:
    """Block-pattern ideal in the shifted ring on x_m, x_{m+1}, ...:
    first block has c entries, every entry >= m, sizes never shrink."""
    if r < 2 or c < 1 or m < 1:
        raise ParameterError(f"need r >= 2, c >= 1, m >= 1; got {r}, {c}, {m}")
    gens = _block_generators(r, None, W, first_size=c, min_entry=m,
                             drop_rule=lambda j: False)
    return MonomialIdeal(gens, W, min_var=m, tag="block",
                         params={"r": r, "c": c, "m": m})


def ideal_generators(family_tag: str, params: dict, W: int) -> MonomialIdeal:
    """Uniform constructor used by the command-line layer."""
    if W < 1:
        raise ParameterError("weight bound must be >= 1")
    if family_tag == "gap":
        return gordon_ideal(params["r"], params["i"], W)
    if family_tag == "prime":
        return prime_ideal(params["r"], params["i"], W)
    if family_tag == "tail":
        return tail_ideal(params["r"], params["l"], params["k"], W)
    if family_tag == "block":
        return block_ideal(params["r"], params["c"], params["m"], W)
    if family_tag == "zero":
        return MonomialIdeal([], W, min_var=params.get("min_var", 1), tag="zero")
    raise ParameterError(f"unknown ideal family {family_tag!r}")


# ---------------------------------------------------------------------------
# Hilbert series, method 1: direct standard-monomial counting


def standard_monomial_series(ideal: MonomialIdeal, N: int) -> TruncatedSeries:
    """Coefficient of q^n = number of weight-n monomials avoiding the ideal."""
    if N > ideal.weight_bound:
        raise ValueError("order exceeds the ideal's weight bound")
    gens = [Counter(g.parts) for g in ideal.generators]
    coeffs = [0] * (N + 1)
    for n in range(N + 1):
        for parts in partitions_of(n, min_part=ideal.min_var):
            mon = Counter(parts)
            if not any(all(mon[v] >= e for v, e in g.items()) for g in gens):
                coeffs[n] += 1
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# Hilbert series, method 2: exact-sequence colon/sum recursion
#
#   HP(S/E) = q^wt(f) HP(S/(E:f)) + HP(S/(E,f))    with f = x_v.


def hp_via_exact_sequence(ideal: MonomialIdeal, N: int) -> TruncatedSeries:
    if N > ideal.weight_bound:
        raise ValueError("order exceeds the ideal's weight bound")
    lo = ideal.min_var
    memo = {}

    def window_product(removed):
        c = [0] * (N + 1)
        c[0] = 1
        for v in range(lo, N + 1):
            if v not in removed:
                _div_one_minus_qn(c, v)
        return tuple(c)

    def hp(gens, removed):
        # gens: frozenset of partition tuples; removed: frozenset of variables
        if not gens:
            return window_product(removed)
        key = (gens, removed)
        hit = memo.get(key)
        if hit is not None:
            return hit
        v = min(g[-1] for g in gens)  # smallest variable in any generator
        # colon branch: strike one x_v from each generator containing it
        colon = set()
        unit = False
        for g in gens:
            if v in g:
                h = list(g)
                h.remove(v)
                if not h:
                    unit = True
                    break
                colon.add(tuple(h))
            else:
                colon.add(g)
        if unit:
            colon_hp = None  # E : x_v is the whole ring, HP of S/(1) = 0
        else:
            colon_hp = hp(_min_gens(colon), removed)
        # sum branch: kill x_v, keep only generators avoiding it
        kept = frozenset(g for g in gens if v not in g)
        sum_hp = hp(kept, removed | {v})
        out = list(sum_hp)
        if colon_hp is not None:
            for k in range(v, N + 1):
                out[k] += colon_hp[k - v]
        out = tuple(out)
        memo[key] = out
        return out

    def _min_gens(tuples):
        mons = minimalize(Monomial(t) for t in tuples)
        return frozenset(m.parts for m in mons)

    gens0 = frozenset(g.parts for g in ideal.generators
                      if g.weight <= N)
    return TruncatedSeries(hp(gens0, frozenset()))


# ---------------------------------------------------------------------------
# Named Hilbert series


@lru_cache(maxsize=None)
def h_series(r: int, l_or_c: int, k_or_m: int, N: int,
             convention: str = "section3") -> TruncatedSeries:
    """Hilbert series of the shifted-ring quotients used by the recursions.

    convention="section3": series of the tail ideal with parameters
    (r, l, k); convention="section7": series of the block ideal (r, c, m).
    """
    if convention == "section3":
        return standard_monomial_series(tail_ideal(r, l_or_c, k_or_m, N), N)
    if convention == "section7":
        return standard_monomial_series(block_ideal(r, l_or_c, k_or_m, N), N)
    raise ParameterError(f"unknown convention {convention!r}")
