"""Labeled-packing data model: labelings, placements, the certificate aggregate.

The JSON certificate schema (produced and consumed by the CLI) is::

    {"n": int, "k": int, "directed": bool,
     "base": [[u, v], ...], "labels": [int, ...], "perms": [[int, ...], ...]}

Field order is fixed as listed, vertex arrays are 0-based, and base pairs
are sorted so identical packings serialize to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from collections.abc import Sequence

from .errors import CertificateError
from .graphs import Arc, Edge, Permutation, permute_arcs, permute_edges

LabelId = int


@dataclass(frozen=True)
class Labeling:
    """A label per vertex plus the declared number of distinct labels.

    `labels` is expected to use the canonical alphabet 0..label_count-1;
    whether it actually does is a verifier concern (the declared count may
    disagree with the array in a hand-edited certificate).
    """

    labels: tuple[LabelId, ...]
    label_count: int

    def __post_init__(self) -> None:
        if self.label_count < 1:
            raise ValueError("label_count must be >= 1")
        if any(l < 0 for l in self.labels):
            raise ValueError("labels must be non-negative integers")

    @classmethod
    def from_raw(cls, raw: Sequence) -> "Labeling":
        """Canonical renumbering: labels become 0..p-1 in first-occurrence order."""
        mapping: dict = {}
        out = []
        for value in raw:
            if value not in mapping:
                mapping[value] = len(mapping)
            out.append(mapping[value])
        return cls(tuple(out), len(mapping))

    def is_canonical(self) -> bool:
        seen = set(self.labels)
        return seen == set(range(self.label_count))

    def class_size(self, label: LabelId) -> int:
        return sum(1 for l in self.labels if l == label)

    def q_min(self) -> int:
        """Size of the smallest label class."""
        counts: dict[int, int] = {}
        for l in self.labels:
            counts[l] = counts.get(l, 0) + 1
        return min(counts.values())

    def label_class(self, label: LabelId) -> list[int]:
        """Vertices carrying `label`, in increasing index order."""
        members = [v for v, l in enumerate(self.labels) if l == label]
        if not members:
            raise KeyError(f"unknown label {label}")
        return members


def fixed_points(perms: Sequence[Sequence[int]]) -> frozenset[int]:
    """Vertices mapped to themselves by every permutation of the placement."""
    n = len(perms[0])
    return frozenset(v for v in range(n) if all(p[v] == v for p in perms))


@dataclass(frozen=True)
class LabeledPacking:
    """A base copy, a labeling, and the k permutations placing the copies."""

    n: int
    k: int
    directed: bool
    base: frozenset[Edge] | frozenset[Arc]
    labeling: Labeling
    perms: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if len(self.perms) != self.k:
            raise ValueError(f"expected {self.k} permutations, got {len(self.perms)}")
        if len(self.labeling.labels) != n:
            raise ValueError("labeling length differs from n")
        for p in self.perms:
            if len(p) != n or any(not 0 <= w < n for w in p):
                raise ValueError("permutation image out of range")
        for u, v in self.base:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("base endpoint out of range")

    @property
    def label_count(self) -> int:
        return self.labeling.label_count

    def labels(self) -> tuple[LabelId, ...]:
        return self.labeling.labels

    def copy_images(self) -> list[frozenset]:
        """Edge (or arc) set of each of the k copies, base image first."""
        apply = permute_arcs if self.directed else permute_edges
        return [apply(p, self.base) for p in self.perms]

    def fixed_points(self) -> frozenset[int]:
        return fixed_points(self.perms)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "directed": self.directed,
            "base": [list(e) for e in sorted(self.base)],
            "labels": list(self.labeling.labels),
            "perms": [list(p) for p in self.perms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, obj: dict) -> "LabeledPacking":
        if not isinstance(obj, dict):
            raise CertificateError("certificate must be a JSON object")
        missing = [f for f in ("n", "k", "directed", "base", "labels", "perms") if f not in obj]
        if missing:
            raise CertificateError(f"certificate missing fields: {', '.join(missing)}")
        n, k = obj["n"], obj["k"]
        if not (isinstance(n, int) and isinstance(k, int) and isinstance(obj["directed"], bool)):
            raise CertificateError("n and k must be integers, directed a boolean")
        try:
            directed = obj["directed"]
            if directed:
                base = frozenset((int(u), int(v)) for u, v in obj["base"])
            else:
                pairs = [(int(u), int(v)) for u, v in obj["base"]]
                if any(u >= v for u, v in pairs):
                    raise CertificateError("undirected base edges must be stored as [u, v] with u < v")
                base = frozenset(pairs)
            labels = tuple(int(l) for l in obj["labels"])
            perms = tuple(tuple(int(w) for w in p) for p in obj["perms"])
        except CertificateError:
            raise
        except (TypeError, ValueError) as exc:
            raise CertificateError(f"malformed certificate field: {exc}") from exc
        if len(base) != len(obj["base"]):
            raise CertificateError("duplicate base entries")
        label_count = len(set(labels)) if labels else 1
        try:
            return cls(n, k, directed, base, Labeling(labels, label_count), perms)
        except ValueError as exc:
            raise CertificateError(str(exc)) from exc

    @classmethod
    def from_json(cls, text: str) -> "LabeledPacking":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(obj)


def dot_documents(lp: LabeledPacking) -> list[str]:
    """One DOT graph per copy, labels attached as vertex attributes."""
    docs = []
    keyword, sep = ("digraph", "->") if lp.directed else ("graph", "--")
    for j, image in enumerate(lp.copy_images(), start=1):
        lines = [f"{keyword} copy_{j} {{"]
        for v in range(lp.n):
            lines.append(f'  {v} [label="{v}", packing_label={lp.labeling.labels[v]}];')
        for u, v in sorted(image):
            lines.append(f"  {u} {sep} {v};")
        lines.append("}")
        docs.append("\n".join(lines))
    return docs
