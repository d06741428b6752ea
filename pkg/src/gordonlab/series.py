"""Truncated integer power series in q and the identity side constructions.

Everything is exact: coefficients are Python ints, a series of order N is
the residue modulo q^{N+1}, and every infinite sum or product carries an
explicit cutoff argument showing the discarded terms have valuation > N.
"""
from __future__ import annotations

import json
from functools import lru_cache

from .partitions import ParameterError, partitions_of, new_parts


class TruncatedSeries:
    """Integer power series modulo q^{N+1}; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = tuple(int(c) for c in coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(coeffs) - 1 != order:
                raise ValueError("coefficient count does not match order")
        elif not coeffs:
            raise ValueError("need at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if exp <= order:
            c[exp] = coeff
        return cls(c)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    # -- ring operations; the result order is the min of the operand orders

    def _pair(self, other):
        n = min(self.order, other.order)
        return n, self.coeffs, other.coeffs

    def __add__(self, other):
        n, a, b = self._pair(other)
        return TruncatedSeries([a[k] + b[k] for k in range(n + 1)])

    def __sub__(self, other):
        n, a, b = self._pair(other)
        return TruncatedSeries([a[k] - b[k] for k in range(n + 1)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        n, a, b = self._pair(other)
        out = [0] * (n + 1)
        for j, aj in enumerate(a[:n + 1]):
            if aj:
                for k in range(n + 1 - j):
                    if b[k]:
                        out[j + k] += aj * b[k]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries([c * a for a in self.coeffs])

    def shift(self, d: int) -> "TruncatedSeries":
        """Multiply by q^d (d >= 0), keeping the order."""
        if d < 0:
            raise ValueError("shift exponent must be nonnegative")
        n = self.order
        return TruncatedSeries([0] * min(d, n + 1) + list(self.coeffs[:n + 1 - d]))

    def invert_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +-1."""
        a = self.coeffs
        if a[0] not in (1, -1):
            raise ValueError("constant term must be a unit (+-1)")
        n = self.order
        inv0 = a[0]  # its own inverse
        out = [0] * (n + 1)
        out[0] = inv0
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * out[k - j]
            out[k] = -inv0 * acc
        return TruncatedSeries(out)

    def exact_shift_down(self, d: int) -> "TruncatedSeries":
        """Divide by q^d; the d lowest coefficients must vanish.

        The result has order reduced by d: the top d coefficients of the
        quotient are unknowable from a truncation, so they are dropped
        rather than silently zero-filled.
        """
        if d == 0:
            return self
        if d > self.order:
            raise ValueError("shift exceeds the order")
        if any(self.coeffs[:d]):
            raise ValueError(f"series is not divisible by q^{d}")
        return TruncatedSeries(self.coeffs[d:])

    def valuation(self):
        """Index of the first nonzero coefficient, or None for zero mod q^{N+1}."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[:order + 1])

    # -- serialization (decimal strings keep arbitrary precision intact)

    def to_json(self) -> str:
        return json.dumps({"order": self.order,
                           "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        data = json.loads(text)
        return cls([int(c) for c in data["coeffs"]], order=data["order"])


# ---------------------------------------------------------------------------
# In-place coefficient-list helpers (lists of length N+1)


def _mul_one_minus_qn(c: list, n: int) -> None:
    """c *= (1 - q^n), in place."""
    for k in range(len(c) - 1, n - 1, -1):
        c[k] -= c[k - n]


def _div_one_minus_qn(c: list, n: int) -> None:
    """c /= (1 - q^n), in place (always exact in the truncated ring)."""
    for k in range(n, len(c)):
        c[k] += c[k - n]


def qpochhammer(n: int, order: int) -> TruncatedSeries:
    """(q)_n = (1-q)(1-q^2)...(1-q^n), truncated."""
    if n < 0:
        raise ParameterError("Pochhammer index must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(1, n + 1):
        _mul_one_minus_qn(c, j)
    return TruncatedSeries(c)


@lru_cache(maxsize=None)
def _inv_poch_coeffs(n: int, order: int) -> tuple:
    """Coefficients of 1/(q)_n."""
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(1, n + 1):
        _div_one_minus_qn(c, j)
    return tuple(c)


def inv_qpochhammer(n: int, order: int) -> TruncatedSeries:
    return TruncatedSeries(_inv_poch_coeffs(n, order))


def full_product(order: int) -> TruncatedSeries:
    """prod_{n >= 1} 1/(1-q^n): the unrestricted partition series."""
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        _div_one_minus_qn(c, n)
    return TruncatedSeries(c)


def product_side(r: int, i: int, order: int) -> TruncatedSeries:
    """prod over n >= 1, n not congruent to 0, +-i mod 2r+1, of 1/(1-q^n)."""
    if r < 2 or not 1 <= i <= r:
        raise ParameterError(f"need r >= 2 and 1 <= i <= r, got r={r}, i={i}")
    mod = 2 * r + 1
    forbidden = {0, i % mod, (mod - i) % mod}
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        if n % mod not in forbidden:
            _div_one_minus_qn(c, n)
    return TruncatedSeries(c)


def andrews_gordon_sum(r: int, i: int, order: int) -> TruncatedSeries:
    """Multi-sum q^{N_1^2+...+N_{r-1}^2 + N_i+...+N_{r-1}} / prod (q)_{n_j}.

    Enumerated over the partial sums N_1 >= ... >= N_{r-1} >= 0 directly
    (with n_j = N_j - N_{j+1}); the quadratic exponent bounds N_1 by
    sqrt(order), so the sum is finite.
    """
    if r < 2 or not 1 <= i <= r:
        raise ParameterError(f"need r >= 2 and 1 <= i <= r, got r={r}, i={i}")
    total = [0] * (order + 1)
    one = tuple([1] + [0] * order)

    def descend(j, prev, exp, denom):
        # choose the partial sum N_j <= N_{j-1} = prev; the gap prev - N_j
        # is n_{j-1}, contributing a 1/(q)_{n_{j-1}} factor
        if j == r:
            d = _convolve(denom, _inv_poch_coeffs(prev, order), order)
            for k in range(order + 1 - exp):
                if d[k]:
                    total[exp + k] += d[k]
            return
        for nj in range(prev + 1):
            e = exp + nj * nj + (nj if j >= i else 0)
            if e > order:
                break  # exponent is increasing in nj
            d = denom
            if j > 1:
                d = _convolve(denom, _inv_poch_coeffs(prev - nj, order), order)
            descend(j + 1, nj, e, d)

    n1 = 0
    while n1 * n1 <= order:
        e1 = n1 * n1 + (n1 if i == 1 else 0)
        if e1 <= order:
            if r == 2:
                d = _convolve(one, _inv_poch_coeffs(n1, order), order)
                for k in range(order + 1 - e1):
                    if d[k]:
                        total[e1 + k] += d[k]
            else:
                descend(2, n1, e1, one)
        n1 += 1
    return TruncatedSeries(total)


def _convolve(a, b, order):
    out = [0] * (order + 1)
    for j, aj in enumerate(a[:order + 1]):
        if aj:
            for k in range(order + 1 - j):
                if b[k]:
                    out[j + k] += aj * b[k]
    return tuple(out)


def q_binomial(n: int, j: int, order: int) -> TruncatedSeries:
    """Gaussian binomial (q)_n / ((q)_j (q)_{n-j}), truncated."""
    if not 0 <= j <= n:
        raise ParameterError(f"need 0 <= j <= n, got n={n}, j={j}")
    num = qpochhammer(n, order)
    den = qpochhammer(j, order) * qpochhammer(n - j, order)
    return num * den.invert_unit()


def lemma_qbin_sum(n: int, j: int, order: int) -> TruncatedSeries:
    """sum over chains j <= l_j <= ... <= l_1 <= n of q^{l_1+...+l_j - j^2}."""
    if not 0 <= j <= n:
        raise ParameterError(f"need 0 <= j <= n, got n={n}, j={j}")
    total = [0] * (order + 1)

    def rec(depth, hi, acc):
        if depth == j:
            e = acc - j * j
            if 0 <= e <= order:
                total[e] += 1
            return
        for l in range(j, hi + 1):
            rec(depth + 1, l, acc + l)

    rec(0, n, 0)
    return TruncatedSeries(total)


def double_sum_r3(order: int) -> TruncatedSeries:
    """sum q^{(n1+n2)^2 + n2^2} / ((q)_{n1} (q)_{n2})."""
    total = [0] * (order + 1)
    n2 = 0
    while 2 * n2 * n2 <= order:
        n1 = 0
        while (n1 + n2) ** 2 + n2 * n2 <= order:
            e = (n1 + n2) ** 2 + n2 * n2
            d = _convolve(_inv_poch_coeffs(n1, order),
                          _inv_poch_coeffs(n2, order), order)
            for k in range(order + 1 - e):
                if d[k]:
                    total[e + k] += d[k]
            n1 += 1
        n2 += 1
    return TruncatedSeries(total)


def chain_sum_r3(order: int) -> TruncatedSeries:
    """sum over n and chains 0 <= j <= l_j <= ... <= l_1 <= n of
    q^{n^2 + l_1 + ... + l_j} / (q)_n."""
    total = [0] * (order + 1)
    n = 0
    while n * n <= order:
        base = n * n
        inv = _inv_poch_coeffs(n, order)
        weights = {0: 1}  # empty chain (j = 0)
        for w in range(1, order + 1 - base):
            cnt = 0
            for mu in partitions_of(w, max_part=n):
                if mu[-1] >= len(mu):  # l_j >= j
                    cnt += 1
            if cnt:
                weights[w] = cnt
        for w, cnt in weights.items():
            e = base + w
            for k in range(order + 1 - e):
                if inv[k]:
                    total[e + k] += cnt * inv[k]
        n += 1
    return TruncatedSeries(total)


def _new_part_bound(mu, r: int) -> int:
    """sum of the first r-2 recursively indexed new parts of mu."""
    if r == 2:
        return 0
    prof = new_parts(mu, r, r)
    return sum(prof.values[:r - 2])


def conjecture_sum(r: int, order: int) -> TruncatedSeries:
    """1 + sum_{n>=1} q^{n^2}/(q)_n + chain sums bounded by the new-part sum.

    For each n >= 1 the inner sum runs over partitions mu with parts in
    [1, n] and length j satisfying 1 <= j <= sum of the first r-2 new parts
    of mu.
    """
    if r < 3:
        raise ParameterError("need r >= 3")
    total = [0] * (order + 1)
    total[0] = 1
    n = 1
    while n * n <= order:
        base = n * n
        inv = _inv_poch_coeffs(n, order)
        weights = {0: 1}
        for w in range(1, order + 1 - base):
            cnt = 0
            for mu in partitions_of(w, max_part=n):
                if len(mu) <= _new_part_bound(mu, r):
                    cnt += 1
            if cnt:
                weights[w] = cnt
        for w, cnt in weights.items():
            e = base + w
            for k in range(order + 1 - e):
                if inv[k]:
                    total[e + k] += cnt * inv[k]
        n += 1
    return TruncatedSeries(total)


def h_closed_form(r: int, c: int, m: int, order: int) -> TruncatedSeries:
    """Closed-form sum for the shifted-ring Hilbert series H_{r,c}^m.

    Three pieces: sum_{n=0}^{m-1} q^{nm}/(q)_n; the bare q^{n^2}/(q)_n tail
    over n >= m; and for each n >= m the chains m <= l_j <= ... <= l_1 <= n
    whose length j satisfies j <= (new-part sum of the first j-c+1 parts)
    + c - 1.  For r = 2 the new-part sum is empty and the bound is c - 1.
    """
    if r < 2 or c < 1 or m < 1:
        raise ParameterError(f"need r >= 2, c >= 1, m >= 1; got {r}, {c}, {m}")
    total = [0] * (order + 1)
    # low band: fewer than m parts
    for n in range(m):
        e = n * m
        if e > order:
            break
        inv = _inv_poch_coeffs(n, order)
        for k in range(order + 1 - e):
            if inv[k]:
                total[e + k] += inv[k]
    # quadratic band: n >= m, chains with parts in [m, n]
    n = m
    while n * n <= order:
        base = n * n
        inv = _inv_poch_coeffs(n, order)
        weights = {0: 1}
        for w in range(m, order + 1 - base):
            cnt = 0
            for mu in partitions_of(w, max_part=n, min_part=m):
                j = len(mu)
                head = mu[:j - c + 1] if j - c + 1 > 0 else ()
                if j <= _new_part_bound(head, r) + c - 1:
                    cnt += 1
            if cnt:
                weights[w] = cnt
        for w, cnt in weights.items():
            e = base + w
            for k in range(order + 1 - e):
                if inv[k]:
                    total[e + k] += cnt * inv[k]
        n += 1
    return TruncatedSeries(total)
