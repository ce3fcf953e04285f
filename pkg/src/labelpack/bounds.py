"""Closed-form values, predicates, and the partition bound, for cycles and circuits.

All arithmetic is exact integer arithmetic; square-root conditions are
evaluated as squared inequalities.  Every upper-bound helper names the rule
that fired so reports stay auditable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

from .errors import RangeError

# rule tags, named after the condition that fires
RULE_NEAR_MAX_X = "x_ge_2k_minus_3"
RULE_X1_POW2 = "x1_k_power_of_two"
RULE_X1_PRIME = "x1_k_prime"
RULE_X2_EVEN = "x2_k_even"
RULE_X_SQUARED = "x_sq_ge_4k_minus_2"
RULE_Q_SMALL = "q_min_le_half_x"
RULE_X1_EVEN_Q1 = "x1_k_even_q1"
RULE_LARGE_ORDER = "large_order_exact"
RULE_CIRCUIT_HALF = "floor_half_plus_ratio"
RULE_CIRCUIT_X_SQUARED = "x_sq_ge_k_minus_1"
RULE_CIRCUIT_Q = "q_min_le_x"
RULE_SINGLE_COPY = "single_copy"


@dataclass(frozen=True)
class ClosedBound:
    value: int
    rule: str


@dataclass(frozen=True)
class PartitionBoundResult:
    p_max: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Table1Row:
    k: int
    x: int
    n: int
    p_max: int


def is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % f == 0:
            return False
        f += 1
    return True


def lambda_exact_large_cycle(k: int, m: int, x: int) -> int:
    """Exact packing number of the cycle of order n = 2km + x for m >= 2."""
    if k < 2 or m < 2 or not 0 <= x < 2 * k:
        raise RangeError(f"need k >= 2, m >= 2, 0 <= x < 2k; got k={k} m={m} x={x}")
    n = 2 * k * m + x
    if m == 2 and k > 2 and x % 4 == 2:
        return n // 2 + 1
    if x == 2 * k - 1:
        return n // 2 + m + 1
    return n // 2 + m


def cycle_lower_bound(k: int, x: int) -> int:
    """Constructive lower bound for the cycle of order n = 2k + x."""
    if k < 2 or not 1 <= x <= 2 * k - 1:
        raise RangeError(f"need k >= 2 and 1 <= x <= 2k-1; got k={k} x={x}")
    return 2 if (x == 1 and k % 2 == 0) else x + 2


def cycle_closed_upper(k: int, x: int, q: int | None = None) -> ClosedBound | None:
    """Tightest applicable closed-form upper bound on the cycle packing number.

    Instance-level rules depend on (k, x) alone; rules involving q constrain
    a specific labeling and fire only when q is supplied.
    """
    if k < 2 or not 1 <= x <= 2 * k - 1:
        raise RangeError(f"need k >= 2 and 1 <= x <= 2k-1; got k={k} x={x}")
    n = 2 * k + x
    # Labeling-specific rules first: on equal values they carry the sharper
    # provenance for the packing at hand.
    fired: list[ClosedBound] = []
    if q is not None:
        if x == 1 and k % 2 == 0 and q == 1:
            fired.append(ClosedBound(2, RULE_X1_EVEN_Q1))
        if q == 1 or 2 * q <= x:
            fired.append(ClosedBound(x + 2, RULE_Q_SMALL))
    if 2 * k - 3 <= x and (k, n) != (2, 5):
        fired.append(ClosedBound(x + 2, RULE_NEAR_MAX_X))
    if x == 1 and is_power_of_two(k):
        fired.append(ClosedBound(2, RULE_X1_POW2))
    if x == 1 and is_prime(k):
        fired.append(ClosedBound(x + 2, RULE_X1_PRIME))
    if x == 2 and k % 2 == 0:
        fired.append(ClosedBound(x + 2, RULE_X2_EVEN))
    if x * x >= 4 * k - 2:
        fired.append(ClosedBound(x + 2, RULE_X_SQUARED))
    if not fired:
        return None
    return min(fired, key=lambda b: b.value)


def circuit_upper_lemma(n: int, k: int) -> int:
    """floor(n/2) + floor(ceil(n/2)/k), the circuit packing-number ceiling."""
    if k < 1 or n <= k:
        raise RangeError(f"need n > k >= 1; got n={n} k={k}")
    if (n - k, n) in ((1, 4), (1, 6)):
        raise RangeError(f"circuit instance (x=1, n={n}) admits no placement")
    return n // 2 + ((n + 1) // 2) // k


def circuit_closed_upper(k: int, x: int, q: int | None = None) -> ClosedBound | None:
    """Closed-form upper bound x + 2 for short circuits, when a rule applies."""
    if k < 2 or not 1 <= x <= k - 1:
        raise RangeError(f"need k >= 2 and 1 <= x <= k-1; got k={k} x={x}")
    if q is not None and q <= x:
        return ClosedBound(x + 2, RULE_CIRCUIT_Q)
    if x * x >= k - 1:
        return ClosedBound(x + 2, RULE_CIRCUIT_X_SQUARED)
    return None


def lambda_known(n: int, k: int, directed: bool = False) -> tuple[int, str] | None:
    """Exact packing number with the rule that gives it, when one is known."""
    if k < 1 or n < 3:
        raise RangeError(f"need k >= 1 and n >= 3; got n={n} k={k}")
    if k == 1:
        return n, RULE_SINGLE_COPY
    if directed:
        if n >= 2 * k and (n - k, n) not in ((1, 4), (1, 6)):
            return circuit_upper_lemma(n, k), RULE_CIRCUIT_HALF
        return None
    if n <= 2 * k:
        return None
    m, x = divmod(n, 2 * k)
    if m >= 2:
        return lambda_exact_large_cycle(k, m, x), RULE_LARGE_ORDER
    if 2 * k - 3 <= x and (k, n) != (2, 5):
        return x + 2, RULE_NEAR_MAX_X
    if x == 1 and is_power_of_two(k):
        return 2, RULE_X1_POW2
    return None


# --- partition bound -----------------------------------------------------------

def _weights(k: int, directed: bool):
    if directed:
        return (lambda s: s * (s - 1) // k), (lambda a, b: 2 * a * b // k)
    return (lambda s: s * (s - 1) // (2 * k)), (lambda a, b: a * b // k)


def partition_feasible(n: int, k: int, p: int, directed: bool = False,
                       min_part: int = 1) -> tuple[int, ...] | None:
    """A partition of n into p parts meeting the edge-capacity inequality,
    or None when no partition into p parts does.

    Parts are produced in non-increasing order, trying balanced partitions
    first, so the returned witness is deterministic.  Branches are cut when
    even merging all remaining mass into one part cannot reach the target
    (merging parts never lowers the left-hand side).  `min_part` restricts
    the search to partitions with no class smaller than that.
    """
    if p < 1 or p * min_part > n:
        return None
    within, cross = _weights(k, directed)
    parts: list[int] = []

    def dfs(lhs: int, remaining: int, slots: int, cap: int) -> tuple[int, ...] | None:
        if slots == 0:
            return tuple(parts) if lhs >= n else None
        bound = lhs + within(remaining) + sum(cross(c, remaining) for c in parts)
        if bound < n:
            return None
        lo = (remaining + slots - 1) // slots
        hi = min(cap, remaining - (slots - 1) * min_part)
        for v in range(lo, hi + 1):
            gain = within(v) + sum(cross(c, v) for c in parts)
            parts.append(v)
            found = dfs(lhs + gain, remaining - v, slots - 1, v)
            parts.pop()
            if found is not None:
                return found
        return None

    return dfs(0, n, p, n)


def partition_bound(n: int, k: int, directed: bool = False) -> PartitionBoundResult:
    """Largest p for which some partition of n into p parts satisfies the
    capacity inequality, with a witness partition."""
    if n < 3 or k < 1:
        raise RangeError(f"need n >= 3 and k >= 1; got n={n} k={k}")
    witness = partition_feasible(n, k, 1, directed)
    if witness is None:
        raise RangeError(f"no feasible partition even for p=1 (n={n}, k={k})")
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        w = partition_feasible(n, k, mid, directed)
        if w is None:
            hi = mid - 1
        else:
            lo, witness = mid, w
    return PartitionBoundResult(lo, witness)


# --- the unresolved-instance table ----------------------------------------------

def _resolved_by_closed_rules(k: int, x: int) -> bool:
    n = 2 * k + x
    if 2 * k - 3 <= x and (k, n) != (2, 5):
        return True
    if x == 2 and k % 2 == 0:
        return True
    if x * x >= 4 * k - 2:
        return True
    if x == 1 and (is_prime(k) or is_power_of_two(k)):
        return True
    # Counting consequence of the small-class rule: any labeling with x + 3
    # classes forces a minimum class size of max(2, floor(x/2) + 1), so it
    # needs at least (x + 3) * max(2, floor(x/2) + 1) vertices.
    if (x + 3) * max(2, x // 2 + 1) > n:
        return True
    return False


def _table1_row(args: tuple[int, int]) -> Table1Row | None:
    k, x = args
    n = 2 * k + x
    # Any labeling with x + 3 or more classes has min class size at least
    # max(2, floor(x/2) + 1); partitions below that floor cannot occur.
    q_floor = max(2, x // 2 + 1)
    if partition_feasible(n, k, x + 3, min_part=q_floor) is None:
        return None
    lo, hi = x + 3, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if partition_feasible(n, k, mid, min_part=q_floor) is None:
            hi = mid - 1
        else:
            lo = mid
    return Table1Row(k, x, n, lo)


def table1(k_max: int, threads: int | None = None) -> list[Table1Row]:
    """Instances with k <= k_max left unresolved by the closed-form rules,
    with the partition bound for each; sorted by (n, k)."""
    if k_max < 2:
        raise RangeError(f"need k_max >= 2, got {k_max}")
    candidates = [(k, x) for k in range(2, k_max + 1)
                  for x in range(1, 2 * k) if not _resolved_by_closed_rules(k, x)]
    if threads is None:
        threads = int(os.environ.get("THREADS", "1"))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_table1_row, candidates))
    else:
        results = [_table1_row(c) for c in candidates]
    rows = [r for r in results if r is not None]
    rows.sort(key=lambda r: (r.n, r.k))
    return rows
