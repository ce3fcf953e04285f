"""Shared helpers: independent reference implementations used as test oracles.

These deliberately avoid the library's own search paths: the partition
reference enumerates every partition, and the placement reference enumerates
every permutation tuple, so library results are checked against code with
no shared pruning logic.
"""

from __future__ import annotations

import itertools

from labelpack.graphs import circuit_arcs, cycle_edges, permute_arcs, permute_edges
from labelpack.verifier import max_labels_of_placement


def all_partitions(n: int, parts: int, cap: int | None = None):
    """Every partition of n into exactly `parts` non-increasing parts."""
    if cap is None:
        cap = n
    if parts == 1:
        if 1 <= n <= cap:
            yield (n,)
        return
    hi = min(cap, n - (parts - 1))
    lo = (n + parts - 1) // parts
    for v in range(hi, lo - 1, -1):
        for rest in all_partitions(n - v, parts - 1, v):
            yield (v,) + rest


def partition_lhs(parts: tuple[int, ...], k: int, directed: bool = False) -> int:
    if directed:
        within = sum(s * (s - 1) // k for s in parts)
        cross = sum(2 * parts[i] * parts[j] // k
                    for i in range(len(parts)) for j in range(i + 1, len(parts)))
    else:
        within = sum(s * (s - 1) // (2 * k) for s in parts)
        cross = sum(parts[i] * parts[j] // k
                    for i in range(len(parts)) for j in range(i + 1, len(parts)))
    return within + cross


def brute_partition_pmax(n: int, k: int, directed: bool = False) -> int:
    best = 0
    for p in range(1, n + 1):
        if any(partition_lhs(w, k, directed) >= n for w in all_partitions(n, p)):
            best = p
    return best


def brute_lambda_exact(n: int, k: int, directed: bool = False) -> int:
    """Maximum label count over all k-placements, by full enumeration."""
    base = circuit_arcs(n) if directed else cycle_edges(n)
    apply = permute_arcs if directed else permute_edges
    perms_all = list(itertools.permutations(range(n)))
    best = 0

    def rec(placed: list, used: set) -> None:
        nonlocal best
        if len(placed) == k:
            p, _ = max_labels_of_placement(placed, n)
            best = max(best, p)
            return
        for sig in perms_all:
            img = apply(sig, base)
            if used & img:
                continue
            rec(placed + [sig], used | img)

    rec([tuple(range(n))], set(base))
    return best
