"""Ground-truth packing numbers on small instances by exhaustive search,
plus a structure-guided hunt for the 7-label packing of 9 copies of the
order-21 cycle.

The exhaustive search enumerates the placements copy by copy: with the first
permutation pinned to the identity on the standard cycle (circuit), every
further copy is a permutation whose image is edge-disjoint from the copies
placed so far.  Two prunings keep it exact:

* copies after the first are interchangeable, so they are forced into
  increasing order of their smallest image edge (equivalently: each copy may
  only use edges larger than the previous copy's minimum);
* the final label count is the number of connected components of the
  orbit relation, which only ever shrinks as assignments are added, so any
  branch whose current component count cannot beat the best known value is
  dead.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .errors import NoPlacementError, RangeError
from .graphs import circuit_arcs, cycle_edges, identity, invert, compose
from .model import LabeledPacking, Labeling
from .verifier import host_capacity, max_labels_of_placement, verify


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000
    max_seconds: float = 600.0
    deterministic_order: bool = True


@dataclass
class OracleResult:
    """Outcome of an exhaustive run: exact value, or the best seen at cutoff."""

    exact: bool
    p: int
    witness: LabeledPacking | None
    nodes: int

    @property
    def outcome(self) -> str:
        return "exact" if self.exact else "budget-exhausted"


@dataclass
class CounterexampleResult:
    found: bool
    witness: LabeledPacking | None
    nodes: int

    @property
    def outcome(self) -> str:
        return "found" if self.found else "budget-exhausted"


class _BudgetExceeded(Exception):
    pass


class _RollbackUnionFind:
    """Union by size without path compression, so merges can be undone."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n
        self.trail: list[int] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> int:
        """Merge the classes of a and b; returns how many merges happened (0/1)."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return 0
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        self.trail.append(rb)
        return 1

    def mark(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            rb = self.trail.pop()
            ra = self.parent[rb]
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]
            self.count += 1


def normalize_first_copy(perms: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Re-present a placement so its first permutation is the identity.

    Composes every permutation with the inverse of the first: the copy
    images are unchanged (the base becomes the old first image) and so is
    the orbit structure, hence the maximum label count.
    """
    first_inv = invert(perms[0])
    return tuple(compose(p, first_inv) for p in perms)


def _trivial_single_copy(n: int, directed: bool) -> LabeledPacking:
    base = circuit_arcs(n) if directed else cycle_edges(n)
    labeling = Labeling(tuple(range(n)), n)
    return LabeledPacking(n, 1, directed, base, labeling, (identity(n),))


class _PlacementSearch:
    def __init__(self, n: int, k: int, directed: bool, budget: SearchBudget) -> None:
        self.n = n
        self.k = k
        self.directed = directed
        self.budget = budget
        self.order_copies = budget.deterministic_order
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_seconds
        self.best_p = 0
        self.best_perms: tuple[tuple[int, ...], ...] | None = None
        self.used = [False] * (n * n)          # edge/arc occupancy, id = u*n + v
        self.uf = _RollbackUnionFind(n)
        self.perms: list[list[int]] = [list(range(n))]
        base = list(range(n))
        for u, v in zip(base, base[1:] + base[:1]):
            self.used[self._eid(u, v)] = True

    def _eid(self, u: int, v: int) -> int:
        if self.directed:
            return u * self.n + v
        return u * self.n + v if u < v else v * self.n + u

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes >= self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def run(self) -> OracleResult:
        exact = True
        try:
            self._place_copy(2, 0)
        except _BudgetExceeded:
            exact = False
        witness = None
        if self.best_perms is not None:
            witness = self._packing(self.best_perms)
        return OracleResult(exact, self.best_p, witness, self.nodes)

    def _packing(self, perms: tuple[tuple[int, ...], ...]) -> LabeledPacking:
        n = self.n
        base = circuit_arcs(n) if self.directed else cycle_edges(n)
        p, labeling = max_labels_of_placement(perms, n)
        return LabeledPacking(n, self.k, self.directed, base, labeling, perms)

    def _place_copy(self, j: int, prev_min_edge: int) -> None:
        if j > self.k:
            if self.uf.count > self.best_p:
                self.best_p = self.uf.count
                self.best_perms = tuple(tuple(p) for p in self.perms)
            return
        n = self.n
        sigma = [-1] * n
        taken = [False] * n
        min_edge = [n * n]
        self.perms.append(sigma)

        def extend(v: int) -> None:
            self._tick()
            if self.uf.count <= self.best_p:
                return
            if v == n:
                closing = self._eid(sigma[n - 1], sigma[0])
                if self.used[closing] or closing <= prev_min_edge:
                    return
                self.used[closing] = True
                saved = min_edge[0]
                min_edge[0] = min(min_edge[0], closing)
                self._place_copy(j + 1, min_edge[0] if self.order_copies else 0)
                min_edge[0] = saved
                self.used[closing] = False
                return
            for w in range(n):
                if taken[w]:
                    continue
                eid = -1
                if v > 0:
                    eid = self._eid(sigma[v - 1], w)
                    # Forcing every edge above the previous copy's minimum
                    # canonicalizes the copy order (copies 2..k commute).
                    if self.used[eid] or eid <= prev_min_edge:
                        continue
                sigma[v] = w
                taken[w] = True
                mark = self.uf.mark()
                self.uf.union(v, w)
                if eid >= 0:
                    self.used[eid] = True
                    saved = min_edge[0]
                    min_edge[0] = min(min_edge[0], eid)
                    extend(v + 1)
                    min_edge[0] = saved
                    self.used[eid] = False
                else:
                    extend(v + 1)
                self.uf.rollback(mark)
                taken[w] = False
                sigma[v] = -1

        extend(0)
        self.perms.pop()


def lambda_exact(n: int, k: int, directed: bool = False,
                 budget: SearchBudget | None = None) -> OracleResult:
    """Exact maximum label count over all k-placements of the order-n cycle
    or circuit, with a verifying witness; or the best found at budget cutoff.
    """
    if budget is None:
        budget = SearchBudget()
    if n < 3 or k < 1:
        raise RangeError(f"need n >= 3 and k >= 1; got n={n} k={k}")
    if k * n > host_capacity(n, directed):
        raise NoPlacementError(
            f"{k} copies of order {n} exceed the host capacity")
    if directed and (n - k, n) in ((1, 4), (1, 6)):
        raise NoPlacementError(f"circuit instance (x=1, n={n}) admits no placement")
    if not directed and n <= 2 * k:
        raise NoPlacementError(
            f"cycles of order n <= 2k admit no k-placement (n={n}, k={k})")
    if k == 1:
        return OracleResult(True, n, _trivial_single_copy(n, directed), 1)
    # With deterministic_order=False the copy-order canonicalization is off
    # and all orderings of copies 2..k are enumerated: slower, but a useful
    # cross-check that the symmetry reduction loses nothing.
    return _PlacementSearch(n, k, directed, budget).run()


# --- guided search for the 21-vertex, 9-copy, 7-label instance -----------------

_N21, _K21, _P21 = 21, 9, 7
_CLASS_COUNT, _CLASS_SIZE = 7, 3
_S3 = tuple(itertools.permutations(range(3)))


def _euler_circuit_k7(rng: random.Random) -> list[int]:
    """A closed trail through every edge of the complete graph on 7 vertices."""
    remaining = {u: set(range(_CLASS_COUNT)) - {u} for u in range(_CLASS_COUNT)}
    stack, trail = [0], []
    while stack:
        u = stack[-1]
        if remaining[u]:
            nbrs = sorted(remaining[u])
            v = nbrs[rng.randrange(len(nbrs))] if rng else nbrs[0]
            remaining[u].discard(v)
            remaining[v].discard(u)
            stack.append(v)
        else:
            trail.append(stack.pop())
    return trail[:-1]   # closed: drop the repeated start


def _base_from_class_walk(walk: list[int]) -> tuple[list[int], dict]:
    """Vertex sequence and, per class pair, the base edge's local endpoints.

    The t-th visit to class c becomes vertex 3c + t, so each class pair is
    crossed by exactly one base edge.
    """
    seen: dict[int, int] = {}
    seq = []
    for c in walk:
        t = seen.get(c, 0)
        seen[c] = t + 1
        seq.append(3 * c + t)
    pair_endpoints = {}
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        a, b = u // 3, v // 3
        key = (min(a, b), max(a, b))
        if key in pair_endpoints:
            return [], {}
        pair_endpoints[key] = (u, v) if a < b else (v, u)
    return seq, pair_endpoints


def guided_counterexample_search(budget: SearchBudget | None = None,
                                 seed: int = 0) -> CounterexampleResult:
    """Search for a 7-labeled packing of 9 copies of the order-21 cycle.

    The label-class structure is forced by the partition bound: seven
    classes of three vertices, no base edge inside a class, exactly one
    base edge between each class pair; hence the class sequence of the base
    cycle is a closed trail using every edge of the complete graph on the
    seven classes.  Base cycles are generated from such trails; every copy
    then permutes each class internally, and a pair of copies may not
    repeat an endpoint pair on any class-pair edge.

    Per base cycle, the per-class permutations are found by a focused
    min-conflicts walk over the 8 x 7 free table entries (copy 1 stays the
    identity): repeatedly pick a colliding class pair, reassign one of its
    two classes in a colliding copy to a least-conflicting value, with a
    small noise rate to escape plateaus.  Each walk step counts as one node
    against the budget.  Results are re-verified before being returned, so
    a Found outcome is always a valid packing.
    """
    if budget is None:
        budget = SearchBudget()
    rng = random.Random(seed)
    counter = _NodeCounter(budget)
    slice_nodes = max(10_000, min(200_000, budget.max_nodes // 16))

    try:
        while True:
            walk = _euler_circuit_k7(rng)
            seq, pair_endpoints = _base_from_class_walk(walk)
            if not seq:
                continue
            rho = _conflict_walk(pair_endpoints, rng, counter, slice_nodes)
            if rho is not None:
                lp = _packing_from_classes(seq, rho)
                report = verify(lp)
                if not report.valid:
                    raise AssertionError(
                        f"guided search produced an invalid packing: {report.failures()}")
                return CounterexampleResult(True, lp, counter.nodes)
    except _BudgetExceeded:
        return CounterexampleResult(False, None, counter.nodes)


class _NodeCounter:
    def __init__(self, budget: SearchBudget) -> None:
        self.nodes = 0
        self.budget = budget
        self.deadline = time.monotonic() + budget.max_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes >= self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes % 8192 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded


def _conflict_walk(pair_endpoints: dict, rng: random.Random,
                   counter: _NodeCounter, max_steps: int,
                   noise: float = 0.15) -> list[list[int]] | None:
    """Min-conflicts walk; returns the copy-by-class permutation table
    rho[j][c] (indices into the S3 list) on success, or None when the
    per-cycle step slice runs out."""
    pairs = list(pair_endpoints.items())
    num_pairs = len(pairs)
    inc: list[list[int]] = [[] for _ in range(_CLASS_COUNT)]
    for pi, ((a, b), _) in enumerate(pairs):
        inc[a].append(pi)
        inc[b].append(pi)
    cls_a = [p[0][0] for p in pairs]
    cls_b = [p[0][1] for p in pairs]
    loc_u = [p[1][0] % 3 for p in pairs]
    loc_v = [p[1][1] % 3 for p in pairs]

    rho = [[0] * _CLASS_COUNT]
    rho += [[rng.randrange(6) for _ in range(_CLASS_COUNT)]
            for _ in range(_K21 - 1)]

    def combo(pi: int, j: int) -> int:
        return (_S3[rho[j][cls_a[pi]]][loc_u[pi]] * 3
                + _S3[rho[j][cls_b[pi]]][loc_v[pi]])

    counts = [[0] * 9 for _ in range(num_pairs)]
    cost = 0
    for pi in range(num_pairs):
        for j in range(_K21):
            key = combo(pi, j)
            counts[pi][key] += 1
            if counts[pi][key] > 1:
                cost += 1
    conflicted = {pi for pi in range(num_pairs)
                  if any(c > 1 for c in counts[pi])}

    def apply(j: int, c: int, val: int) -> None:
        nonlocal cost
        for q in inc[c]:
            key = combo(q, j)
            counts[q][key] -= 1
            if counts[q][key] >= 1:
                cost -= 1
        rho[j][c] = val
        for q in inc[c]:
            key = combo(q, j)
            counts[q][key] += 1
            if counts[q][key] > 1:
                cost += 1

    steps = 0
    while cost > 0:
        counter.tick()
        steps += 1
        if steps >= max_steps:
            return None
        pi = rng.choice(tuple(conflicted))
        bad = [j for j in range(1, _K21) if counts[pi][combo(pi, j)] > 1]
        j = rng.choice(bad) if bad else rng.randrange(1, _K21)
        c = cls_a[pi] if rng.random() < 0.5 else cls_b[pi]
        old = rho[j][c]
        if rng.random() < noise:
            new = rng.randrange(6)
        else:
            best, best_cost = [old], cost
            for cand in range(6):
                if cand == old:
                    continue
                apply(j, c, cand)
                if cost < best_cost:
                    best_cost, best = cost, [cand]
                elif cost == best_cost:
                    best.append(cand)
                apply(j, c, old)
            new = rng.choice(best)
        if new != old:
            apply(j, c, new)
            for q in inc[c]:
                if any(cnt > 1 for cnt in counts[q]):
                    conflicted.add(q)
                else:
                    conflicted.discard(q)
    return rho


def _packing_from_classes(seq: list[int], rho: list[list[int]]) -> LabeledPacking:
    perms = []
    for j in range(_K21):
        image = list(range(_N21))
        for c in range(_CLASS_COUNT):
            table = _S3[rho[j][c]]
            for t in range(3):
                image[3 * c + t] = 3 * c + table[t]
        perms.append(tuple(image))
    base = frozenset((min(seq[i], seq[(i + 1) % _N21]),
                      max(seq[i], seq[(i + 1) % _N21])) for i in range(_N21))
    labeling = Labeling.from_raw([v // 3 for v in range(_N21)])
    return LabeledPacking(_N21, _K21, False, base, labeling, tuple(perms))
