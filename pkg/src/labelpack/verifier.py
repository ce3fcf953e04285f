"""Total validity checking for labeled packings, plus the orbit label maximizer.

`verify` never raises on a structurally well-formed packing: it evaluates six
independent conditions and reports each one, so callers (the search modules
in particular) can see exactly which property a near-miss violates.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .graphs import is_permutation, is_single_circuit, is_single_cycle
from .model import LabeledPacking, Labeling


@dataclass(frozen=True)
class VerificationReport:
    base_shape: bool
    bijections: bool
    disjointness: bool
    label_preservation: bool
    capacity: bool
    label_count: bool

    FLAGS = ("base_shape", "bijections", "disjointness",
             "label_preservation", "capacity", "label_count")

    @property
    def valid(self) -> bool:
        return all(getattr(self, f) for f in self.FLAGS)

    def failures(self) -> list[str]:
        return [f for f in self.FLAGS if not getattr(self, f)]

    def to_json_dict(self) -> dict:
        out: dict = {f: getattr(self, f) for f in self.FLAGS}
        out["valid"] = self.valid
        return out


def host_capacity(n: int, directed: bool) -> int:
    """Number of edges (arcs) of the complete host graph on n vertices."""
    return n * (n - 1) if directed else n * (n - 1) // 2


def images_are_disjoint(images: Sequence[frozenset], n: int, k: int) -> bool:
    """Pairwise disjointness of the k copy images: their union has size k*n."""
    union: set = set()
    for img in images:
        union.update(img)
    return len(union) == k * n


def verify(lp: LabeledPacking) -> VerificationReport:
    """Check the six packing conditions and report them all."""
    n, k = lp.n, lp.k
    labels = lp.labeling.labels

    if lp.directed:
        base_shape = is_single_circuit(lp.base, n)
    else:
        base_shape = is_single_cycle(lp.base, n)

    bijections = all(is_permutation(p, n) for p in lp.perms)

    # A non-bijective map can collapse an edge onto a loop, which the copy
    # image cannot represent; only certify disjointness for true placements.
    if bijections and base_shape:
        disjointness = images_are_disjoint(lp.copy_images(), n, k)
    else:
        disjointness = False

    first = lp.perms[0]
    label_preservation = all(
        labels[p[v]] == labels[first[v]] for p in lp.perms[1:] for v in range(n)
    ) if k > 1 else True

    capacity = k * n <= host_capacity(n, lp.directed)

    label_count = (
        lp.labeling.label_count == len(set(labels)) and lp.labeling.is_canonical()
    )

    return VerificationReport(base_shape, bijections, disjointness,
                              label_preservation, capacity, label_count)


class UnionFind:
    """Union-find over 0..n-1 with union by size; deterministic representatives."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


def max_labels_of_placement(perms: Sequence[Sequence[int]], n: int) -> tuple[int, Labeling]:
    """Largest label count compatible with a placement, and a witness labeling.

    Images of a vertex across the k copies must share one label, so the
    finest valid labeling is given by the connected components of the
    relation linking perms[0][v] to perms[j][v] for every v and j.
    """
    uf = UnionFind(n)
    first = perms[0]
    for p in perms[1:]:
        for v in range(n):
            uf.union(first[v], p[v])
    labeling = Labeling.from_raw([uf.find(v) for v in range(n)])
    return uf.count, labeling
