"""Explicit bijections behind the count recursions.

Each named map carries an explicit domain predicate; applying a map to a
partition outside its domain raises :class:`DomainError`.  Domain and
codomain predicates are written exactly as the constructive proofs state
them and are cross-checked against set-difference enumerations in the test
suite.
"""
from __future__ import annotations

from .partitions import Partition, check_partition


class DomainError(ValueError):
    """Input partition is not in the source set of the map."""


BIJECTION_NAMES = ("rr_second_eq", "rr_shift", "g3_second_eq",
                   "g3_third_eq", "g3_fourth_eq")


def _require(cond: bool, name: str, parts: Partition) -> None:
    if not cond:
        raise DomainError(f"{parts} is not in the domain of {name}")


def _as_partition(parts) -> Partition:
    parts = tuple(parts)
    check_partition(parts)
    return parts


# ---------------------------------------------------------------------------
# r = 2, level k maps


def rr_second_eq_domain(parts: Partition, k: int) -> bool:
    """Smallest part exactly m + k - 1 (the deleted part)."""
    m = len(parts)
    return m >= 1 and parts[-1] == m + k - 1


def rr_second_eq_forward(parts: Partition, k: int) -> Partition:
    _require(rr_second_eq_domain(parts, k), "rr_second_eq", parts)
    return parts[:-1]


def rr_second_eq_codomain(parts: Partition, k: int) -> bool:
    m = len(parts)
    return m == 0 or parts[-1] > m + k - 1


def rr_second_eq_inverse(parts: Partition, k: int) -> Partition:
    _require(rr_second_eq_codomain(parts, k), "rr_second_eq^-1", parts)
    return parts + (len(parts) + k,)


def rr_shift_domain(parts: Partition, k: int) -> bool:
    m = len(parts)
    return m == 0 or parts[-1] > m + k - 1


def rr_shift_forward(parts: Partition, k: int) -> Partition:
    _require(rr_shift_domain(parts, k), "rr_shift", parts)
    return tuple(p - 1 for p in parts)


def rr_shift_codomain(parts: Partition, k: int) -> bool:
    m = len(parts)
    return m == 0 or parts[-1] > m + k - 2


def rr_shift_inverse(parts: Partition, k: int) -> Partition:
    _require(rr_shift_codomain(parts, k), "rr_shift^-1", parts)
    return tuple(p + 1 for p in parts)


# ---------------------------------------------------------------------------
# r = 3 maps


def g3_second_eq_domain(parts: Partition) -> bool:
    """Smallest part below the length, and lambda_m + lambda_{m-lambda_m} = m."""
    m = len(parts)
    if m == 0:
        return False
    t = parts[-1]
    return t < m and t + parts[m - t - 1] == m


def g3_second_eq_forward(parts: Partition) -> Partition:
    _require(g3_second_eq_domain(parts), "g3_second_eq", parts)
    m, t = len(parts), parts[-1]
    out = parts[:m - t - 1] + parts[m - t:m - 1]
    check_partition(out)
    return out


def g3_second_eq_codomain(parts: Partition) -> bool:
    mu, M = parts, len(parts)
    if M == 0:
        return True
    t = mu[-1]
    if t <= 1:
        return False
    return t > M or t + mu[M - t] >= M + 2


def g3_second_eq_inverse(parts: Partition) -> Partition:
    _require(g3_second_eq_codomain(parts), "g3_second_eq^-1", parts)
    mu, M = parts, len(parts)
    m = M + 2
    if M == 0:
        return (1, 1)
    if mu[-1] > m - 2:
        return mu + (m - 1, 1)
    # find the unique split point via the max-set construction
    a_set = [a for a in range(1, mu[-1] + 1) if m - a > mu[m - a - 2]]
    kk = max(a_set) + 1
    out = mu[:m - kk - 1] + (m - kk,) + mu[m - kk - 1:M] + (kk,)
    check_partition(out)
    return out


def _g3_third_case(parts: Partition) -> int:
    """Case split of the three-part map; 0 when not in the domain."""
    m = len(parts)
    if m == 0:
        return 0
    t = parts[-1]
    if t == 1 and (m == 1 or parts[m - 2] >= m):
        return 1
    if 1 < t < m:
        lo = t + parts[m - t]      # lambda_m + lambda_{m - lambda_m + 1}
        hi = t + parts[m - t - 1]  # lambda_m + lambda_{m - lambda_m}
        if lo == m + 1 <= hi:
            return 2
        if lo < m + 1 <= hi:
            return 3
    return 0


def g3_third_eq_domain(parts: Partition) -> bool:
    return _g3_third_case(parts) != 0


def g3_third_eq_forward(parts: Partition) -> Partition:
    case = _g3_third_case(parts)
    _require(case != 0, "g3_third_eq", parts)
    m, t = len(parts), parts[-1]
    if case == 1:
        out = tuple(p - 1 for p in parts[:m - 1])
    elif case == 2:
        out = parts[:m - t] + tuple(p - 1 for p in parts[m - t + 1:])
    else:
        out = tuple(p - 1 for p in parts[:m - t]) + parts[m - t:m - 1]
    check_partition(out)
    return out


def _g3_third_inverse_case(parts: Partition) -> int:
    mu, M = parts, len(parts)
    m = M + 1
    if M == 0 or mu[-1] > m - 2:
        return 1
    t = mu[-1]
    if 1 <= t <= m - 2:
        lo = t + mu[m - t - 1]   # mu_{m-1} + mu_{m-mu_{m-1}}
        hi = t + mu[m - t - 2]   # mu_{m-1} + mu_{m-1-mu_{m-1}}
        if lo <= m - 1 < hi:
            return 2
        if t >= 2 and lo >= m:
            return 3
    return 0


def g3_third_eq_codomain(parts: Partition) -> bool:
    return _g3_third_inverse_case(parts) != 0


def g3_third_eq_inverse(parts: Partition) -> Partition:
    case = _g3_third_inverse_case(parts)
    _require(case != 0, "g3_third_eq^-1", parts)
    mu, M = parts, len(parts)
    m = M + 1
    if case == 1:
        out = tuple(p + 1 for p in mu) + (1,)
    elif case == 2:
        t = mu[-1]
        out = mu[:m - 1 - t] + (m - t,) + tuple(p + 1 for p in mu[m - 1 - t:])
    else:
        t = mu[-1]
        if M >= 2 and m <= mu[M - 2] + 2:
            kk = 2
        else:
            b_set = [b for b in range(2, t + 1) if m > mu[m - b - 1] + b]
            kk = max(b_set) + 1
        out = tuple(p + 1 for p in mu[:m - kk]) + mu[m - kk:M] + (kk,)
    check_partition(out)
    return out


def g3_fourth_eq_domain(parts: Partition) -> bool:
    m = len(parts)
    if m == 0:
        return True
    t = parts[-1]
    if t == 1:
        return False
    return t >= m + 1 or t + parts[m - t] >= m + 2


def g3_fourth_eq_forward(parts: Partition) -> Partition:
    _require(g3_fourth_eq_domain(parts), "g3_fourth_eq", parts)
    return tuple(p - 1 for p in parts)


def g3_fourth_eq_codomain(parts: Partition) -> bool:
    m = len(parts)
    if m == 0:
        return True
    t = parts[-1]
    return t >= m or t + parts[m - t - 1] >= m


def g3_fourth_eq_inverse(parts: Partition) -> Partition:
    _require(g3_fourth_eq_codomain(parts), "g3_fourth_eq^-1", parts)
    return tuple(p + 1 for p in parts)


# ---------------------------------------------------------------------------
# Dispatch

_TABLE = {
    ("rr_second_eq", "forward"): rr_second_eq_forward,
    ("rr_second_eq", "inverse"): rr_second_eq_inverse,
    ("rr_shift", "forward"): rr_shift_forward,
    ("rr_shift", "inverse"): rr_shift_inverse,
    ("g3_second_eq", "forward"): g3_second_eq_forward,
    ("g3_second_eq", "inverse"): g3_second_eq_inverse,
    ("g3_third_eq", "forward"): g3_third_eq_forward,
    ("g3_third_eq", "inverse"): g3_third_eq_inverse,
    ("g3_fourth_eq", "forward"): g3_fourth_eq_forward,
    ("g3_fourth_eq", "inverse"): g3_fourth_eq_inverse,
}


def bijection_apply(name: str, direction: str, parts: Partition,
                    k: int | None = None) -> Partition:
    """Apply a named map (or its inverse) to a partition in its domain."""
    try:
        fn = _TABLE[(name, direction)]
    except KeyError:
        raise ValueError(f"unknown bijection {name!r} / {direction!r}") from None
    parts = _as_partition(parts)
    if name.startswith("rr_"):
        if k is None or k < 1:
            raise ValueError(f"{name} needs k >= 1")
        return fn(parts, k)
    return fn(parts)
