"""Cycles, circuits, permutations, and the structural predicates shared by all modules.

Vertices are the integers 0..n-1.  Undirected edges are canonical pairs
(u, v) with u < v; arcs are ordered pairs (tail, head).  Edge and arc sets
are plain frozensets of those tuples.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Edge = tuple[int, int]
Arc = tuple[int, int]
Permutation = tuple[int, ...]


def edge(u: int, v: int) -> Edge:
    """Canonical undirected edge (smaller endpoint first)."""
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


def cycle_edges(n: int) -> frozenset[Edge]:
    """Edge set of the standard cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    return frozenset(edge(i, (i + 1) % n) for i in range(n))


def circuit_arcs(n: int) -> frozenset[Arc]:
    """Arc set of the standard circuit 0->1->...->(n-1)->0."""
    if n < 2:
        raise ValueError(f"circuit order must be >= 2, got {n}")
    return frozenset((i, (i + 1) % n) for i in range(n))


def is_permutation(image: Sequence[int], n: int) -> bool:
    """True iff image is a bijection of 0..n-1 given as its image array."""
    return len(image) == n and sorted(image) == list(range(n))


def identity(n: int) -> Permutation:
    return tuple(range(n))


def invert(perm: Sequence[int]) -> Permutation:
    inv = [0] * len(perm)
    for v, w in enumerate(perm):
        inv[w] = v
    return tuple(inv)


def compose(outer: Sequence[int], inner: Sequence[int]) -> Permutation:
    """Permutation mapping v to outer[inner[v]]."""
    return tuple(outer[inner[v]] for v in range(len(inner)))


def permute_edges(perm: Sequence[int], edges: Iterable[Edge]) -> frozenset[Edge]:
    """Image of an undirected edge set under a vertex bijection."""
    return frozenset(edge(perm[u], perm[v]) for u, v in edges)


def permute_arcs(perm: Sequence[int], arcs: Iterable[Arc]) -> frozenset[Arc]:
    """Image of an arc set under a vertex bijection."""
    return frozenset((perm[u], perm[v]) for u, v in arcs)


def is_single_cycle(edges: Iterable[Edge], n: int) -> bool:
    """True iff the edge set is exactly one cycle through all n vertices.

    Total predicate: malformed input (out-of-range endpoints, wrong size,
    wrong degrees, several components) yields False rather than an error.
    """
    edges = list(edges)
    if n < 3 or len(edges) != n:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < v < n):
            return False
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nb) != 2 for nb in adj):
        return False
    # 2-regular graphs are disjoint unions of cycles; measure the cycle
    # through vertex 0 by walking until the first return.
    prev, cur, steps = 0, adj[0][0], 1
    while cur != 0:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
    return steps == n


def is_single_circuit(arcs: Iterable[Arc], n: int) -> bool:
    """True iff the arc set is exactly one directed cycle through all n vertices."""
    arcs = list(arcs)
    if n < 2 or len(arcs) != n:
        return False
    succ = [-1] * n
    indeg = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            return False
        if succ[u] != -1:
            return False
        succ[u] = v
        indeg[v] += 1
    if any(s == -1 for s in succ) or any(d != 1 for d in indeg):
        return False
    cur, steps = succ[0], 1
    while cur != 0:
        cur = succ[cur]
        steps += 1
    return steps == n
