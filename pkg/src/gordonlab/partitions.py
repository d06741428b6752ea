"""Integer partitions, constraint predicates and exact counting.

A partition is a tuple of positive integers stored largest-first, e.g.
``(5, 3, 1)``; the empty tuple is the unique partition of 0.  All counts are
plain Python integers, so there is no overflow anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

Partition = tuple[int, ...]


class ParameterError(ValueError):
    """A family parameter is outside its documented range."""


def check_partition(parts: Partition) -> None:
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
        raise ValueError(f"parts must be non-increasing: {parts}")


def _check_ri(r: int, i: int) -> None:
    if r < 2 or not 1 <= i <= r:
        raise ParameterError(f"need r >= 2 and 1 <= i <= r, got r={r}, i={i}")


def partitions_of(n: int, max_part: Optional[int] = None,
                  min_part: int = 1) -> Iterator[Partition]:
    """Yield the partitions of ``n`` with parts in [min_part, max_part]."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    hi = n if max_part is None else min(max_part, n)
    for first in range(hi, min_part - 1, -1):
        for rest in partitions_of(n - first, first, min_part):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, sorted lexicographically on part sequences."""
    return tuple(sorted(partitions_of(n)))


def enumerate_partitions(n: int, max_len: Optional[int] = None,
                         predicate: Optional[Callable[[Partition], bool]] = None
                         ) -> list[Partition]:
    """Partitions of ``n`` passing ``predicate``, in lexicographic order.

    This is the unpruned filter path; it serves as the correctness oracle for
    every specialised counting routine in this module.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for lam in all_partitions(n):
        if max_len is not None and len(lam) > max_len:
            continue
        if predicate is None or predicate(lam):
            out.append(lam)
    return out


# ---------------------------------------------------------------------------
# Gordon-family predicates


def gordon_b(parts: Partition, r: int, i: int) -> bool:
    """Gap condition: lambda_j - lambda_{j+r-1} >= 2, and at most i-1 ones."""
    _check_ri(r, i)
    if sum(1 for p in parts if p == 1) > i - 1:
        return False
    return all(parts[j] - parts[j + r - 1] >= 2
               for j in range(len(parts) - r + 1))


def congruence_a(parts: Partition, r: int, i: int) -> bool:
    """No part congruent to 0 or +-i modulo 2r+1."""
    _check_ri(r, i)
    mod = 2 * r + 1
    forbidden = {0, i % mod, (mod - i) % mod}
    return all(p % mod not in forbidden for p in parts)


def gordon_b_partitions(n: int, r: int, i: int) -> Iterator[Partition]:
    """Gap-condition partitions of ``n``, generated with pruning.

    Fast path for counting; ``enumerate_partitions`` with the ``gordon_b``
    filter is the oracle it is tested against.
    """
    _check_ri(r, i)

    def rec(remaining: int, prefix: list[int], ones: int) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        hi = min(remaining, prefix[-1]) if prefix else remaining
        t = len(prefix)
        for v in range(hi, 0, -1):
            if t >= r - 1 and prefix[t - r + 1] - v < 2:
                continue
            if v == 1 and ones + 1 > i - 1:
                break
            prefix.append(v)
            yield from rec(remaining - v, prefix, ones + (v == 1))
            prefix.pop()

    yield from rec(n, [], 0)


# ---------------------------------------------------------------------------
# New parts


@dataclass(frozen=True)
class NewPartProfile:
    """The r recursively-indexed new parts of a partition, for family (r, i)."""
    r: int
    i: int
    values: tuple[int, ...]

    @property
    def count_nonzero(self) -> int:
        """Number of nonzero entries among positions 1..r-1."""
        return sum(1 for v in self.values[:self.r - 1] if v != 0)


def new_parts(parts: Partition, r: int, i: int) -> NewPartProfile:
    """Compute the new-part profile p_{i,1}..p_{i,r} of a partition.

    Position 1 is the smallest part.  For 2 <= ell <= i the next entry is the
    (sum-of-previous + 1)-th part counting from the right; for ell > i the
    index shifts by ell - i.  Out-of-range indices give 0, and once an entry
    is 0 every later entry is forced to 0.
    """
    _check_ri(r, i)
    m = len(parts)
    vals: list[int] = []
    total = 0
    for ell in range(1, r + 1):
        if vals and vals[-1] == 0:
            vals.append(0)
            continue
        if ell == 1:
            idx = m
        elif ell <= i:
            idx = m - total
        else:
            idx = m + ell - i - total
        p = parts[idx - 1] if 1 <= idx <= m else 0
        vals.append(p)
        total += p
    return NewPartProfile(r, i, tuple(vals))


def c_predicate(parts: Partition, r: int, i: int,
                form: str = "conjecture") -> bool:
    """Membership test for the new-part partition family.

    ``form="conjecture"``: at most i-1 ones and either fewer than r-1 nonzero
    new parts, or exactly r-1 of them and the length is bounded by their sum
    minus (r - i).  ``form="remark"``: some new part among positions 1..r
    is zero.  Equality of the two forms is a tested property, not assumed.
    """
    prof = new_parts(parts, r, i)
    if form == "remark":
        return 0 in prof.values
    if form == "conjecture":
        if sum(1 for p in parts if p == 1) > i - 1:
            return False
        if prof.count_nonzero < r - 1:
            return True
        return len(parts) <= sum(prof.values[:r - 1]) - (r - i)
    raise ValueError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# Length-shifted families (r = 2, level k)


def _check_ki(k: int, i: int) -> None:
    if i not in (1, 2) or k < 1:
        raise ParameterError(f"need i in {{1,2}} and k >= 1, got k={k}, i={i}")


def shifted_c(parts: Partition, m: int, k: int, i: int) -> bool:
    """Smallest part exceeds m + k - i (vacuously true when empty)."""
    _check_ki(k, i)
    if m != len(parts):
        raise ValueError(f"length mismatch: m={m}, partition has {len(parts)} parts")
    return m == 0 or parts[-1] > m + k - i


def shifted_b(parts: Partition, m: int, k: int, i: int) -> bool:
    """Smallest part >= k, at most i-1 parts equal to k, all gaps >= 2."""
    _check_ki(k, i)
    if m != len(parts):
        raise ValueError(f"length mismatch: m={m}, partition has {len(parts)} parts")
    if m == 0:
        return True
    if parts[-1] < k or sum(1 for p in parts if p == k) > i - 1:
        return False
    return all(parts[j] - parts[j + 1] >= 2 for j in range(m - 1))


# ---------------------------------------------------------------------------
# Counting


@dataclass(frozen=True)
class CountFamily:
    """A named counting family with its parameters.

    tag: one of A, B, C (parameters r, i), c2k, b2k (parameters k, i),
    c3, b3 (parameter i; shorthand for r=3).  ``length`` fixes the number of
    parts; ``form`` selects the C-membership variant.
    """
    tag: str
    r: Optional[int] = None
    i: Optional[int] = None
    k: Optional[int] = None
    length: Optional[int] = None
    form: str = "conjecture"

    def predicate(self) -> Callable[[Partition], bool]:
        tag, r, i, k = self.tag, self.r, self.i, self.k
        if tag in ("c3", "b3"):
            tag = {"c3": "C", "b3": "B"}[tag]
            r = 3
        if tag == "A":
            _check_ri(r, i)
            return lambda lam: congruence_a(lam, r, i)
        if tag == "B":
            _check_ri(r, i)
            return lambda lam: gordon_b(lam, r, i)
        if tag == "C":
            _check_ri(r, i)
            form = self.form if self.tag != "c3" else "remark"
            return lambda lam: c_predicate(lam, r, i, form)
        if tag == "c2k":
            _check_ki(k, i)
            return lambda lam: shifted_c(lam, len(lam), k, i)
        if tag == "b2k":
            _check_ki(k, i)
            return lambda lam: shifted_b(lam, len(lam), k, i)
        raise ParameterError(f"unknown family tag {self.tag!r}")


def count(family: CountFamily, n: int) -> int:
    """Exact cardinality of the family's partition set at weight ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pred = family.predicate()
    if family.tag in ("B", "b3") and family.length is None:
        # pruned fast path; filter path is the oracle
        r = 3 if family.tag == "b3" else family.r
        return sum(1 for _ in gordon_b_partitions(n, r, family.i))
    total = 0
    for lam in all_partitions(n):
        if family.length is not None and len(lam) != family.length:
            continue
        if pred(lam):
            total += 1
    return total


@lru_cache(maxsize=None)
def _resolved(tag: str, i: int, m: int, n: int, k: Optional[int] = None,
              form: str = "remark") -> int:
    """Length-resolved count with the boundary conventions of the recursions.

    (m, n) = (0, 0) counts 1; any other pair with m <= 0 or n <= 0 counts 0.
    """
    if m == 0 and n == 0:
        return 1
    if m <= 0 or n <= 0:
        return 0
    if tag == "c2k":
        fam = CountFamily("c2k", i=i, k=k, length=m)
    elif tag == "b2k":
        fam = CountFamily("b2k", i=i, k=k, length=m)
    elif tag == "c3":
        fam = CountFamily("C", r=3, i=i, length=m, form=form)
    elif tag == "b3":
        fam = CountFamily("B", r=3, i=i, length=m)
    else:
        raise ParameterError(f"unknown resolved tag {tag!r}")
    return count(fam, n)


def c2k(k: int, i: int, m: int, n: int) -> int:
    return _resolved("c2k", i, m, n, k=k)


def b2k(k: int, i: int, m: int, n: int) -> int:
    return _resolved("b2k", i, m, n, k=k)


def c3(i: int, m: int, n: int, form: str = "remark") -> int:
    return _resolved("c3", i, m, n, form=form)


def b3(i: int, m: int, n: int) -> int:
    return _resolved("b3", i, m, n)


# ---------------------------------------------------------------------------
# Recursion-system checks


def andrews_system_check(system: str, max_m: int, max_n: int,
                         k: Optional[int] = None) -> dict:
    """Verify every equation of the named count recursion on a grid.

    ``system="rr_k"`` needs ``k`` and checks the three shifted-family
    equations; ``system="gordon3"`` checks the four length-resolved r=3
    equations.  Failures are reported with their first counterexample, never
    raised.
    """
    if max_m < 0 or max_n < 0:
        raise ValueError("bounds must be nonnegative")
    equations: list[tuple[str, Callable[[int, int], bool]]] = []
    if system == "rr_k":
        if k is None:
            raise ParameterError("rr_k needs k")
        equations = [
            ("base",
             lambda m, n: all(
                 _resolved("c2k", i, m, n, k=k) ==
                 (1 if (m, n) == (0, 0) else 0)
                 for i in (1, 2)) if m == 0 or n == 0 else True),
            ("second: c22 - c21 = c21(m-1, n-m-k+1)",
             lambda m, n: c2k(k, 2, m, n) - c2k(k, 1, m, n)
             == c2k(k, 1, m - 1, n - m - k + 1)),
            ("third: c21(m, n) = c22(m, n-m)",
             lambda m, n: c2k(k, 1, m, n) == c2k(k, 2, m, n - m)),
        ]
    elif system == "gordon3":
        equations = [
            ("base",
             lambda m, n: all(
                 c3(i, m, n) == (1 if (m, n) == (0, 0) else 0)
                 for i in (1, 2, 3)) if m == 0 or n == 0 else True),
            ("second: c33 - c32 = c31(m-2, n-m)",
             lambda m, n: c3(3, m, n) - c3(2, m, n) == c3(1, m - 2, n - m)),
            ("third: c32 - c31 = c32(m-1, n-m)",
             lambda m, n: c3(2, m, n) - c3(1, m, n) == c3(2, m - 1, n - m)),
            ("fourth: c31(m, n) = c33(m, n-m)",
             lambda m, n: c3(1, m, n) == c3(3, m, n - m)),
        ]
    else:
        raise ParameterError(f"unknown system {system!r}")

    report: dict = {"system": system, "max_m": max_m, "max_n": max_n,
                    "equations": []}
    if k is not None:
        report["k"] = k
    ok = True
    for name, eq in equations:
        counterexample = None
        for n in range(max_n + 1):
            for m in range(max_m + 1):
                if not eq(m, n):
                    counterexample = {"m": m, "n": n}
                    break
            if counterexample:
                break
        report["equations"].append(
            {"name": name,
             "status": "pass" if counterexample is None else "fail",
             "counterexample": counterexample})
        ok = ok and counterexample is None
    report["status"] = "pass" if ok else "fail"
    return report
