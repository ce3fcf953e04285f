"""Constructive labeled packings of cycles and circuits.

Every constructor returns a `LabeledPacking` whose first permutation is the
identity and which has already passed the verifier; a failure raises
`ConstructionError` instead of returning a bad object.

Cycle constructions cover order n = 2k + x for 1 <= x <= 2k - 1 and reach
2 labels when x = 1 with k even, and x + 2 labels otherwise.  The base copy
is generated from an explicit vertex sequence; extra fixed points are placed
by subdividing label-a/label-b edges of that sequence, smallest eligible
edges first, so repeated runs are byte-identical.
"""

from __future__ import annotations

import enum

from .errors import ConstructionError, ExcludedInstanceError, RangeError
from .graphs import Permutation, circuit_arcs, edge, identity
from .model import LabeledPacking, Labeling
from .verifier import verify

EXCLUDED_CIRCUITS = ((1, 4), (1, 6))


class CycleCase(enum.Enum):
    """Which of the five lower-bound constructions a (k, x) pair uses."""

    ODD_SMALL_X = "odd-small-x"      # k odd,  1 <= x <= k-1
    ODD_LARGE_X = "odd-large-x"      # k odd,  k <= x <= 2k-1
    EVEN_X1 = "even-x1"              # k even, x = 1
    EVEN_SMALL_X = "even-small-x"    # k even, 2 <= x <= k-1
    EVEN_LARGE_X = "even-large-x"    # k even, k <= x <= 2k-1


def classify_cycle_case(k: int, x: int) -> CycleCase:
    if k < 2:
        raise RangeError(f"cycle construction needs k >= 2, got k={k}")
    if not 1 <= x <= 2 * k - 1:
        raise RangeError(f"cycle construction needs 1 <= x <= 2k-1, got x={x} for k={k}")
    if k % 2 == 1:
        return CycleCase.ODD_SMALL_X if x <= k - 1 else CycleCase.ODD_LARGE_X
    if x == 1:
        return CycleCase.EVEN_X1
    return CycleCase.EVEN_SMALL_X if x <= k - 1 else CycleCase.EVEN_LARGE_X


# --- closed forms for the k even, 2 <= x <= k-1 base copy ---------------------

def alpha(k: int, i: int) -> int:
    """Index of the i-th vertex on the a/b-alternating path, k even."""
    half = k // 2
    lead = -1 if half % 2 else 1                     # (-1)^(k/2)
    even_i = i % 2 == 0
    sign = -1 if even_i else 1                       # (-1)^(((-1)^i + 1) / 2)
    core = 1 + 2 * (half // 2) + sign * 2 * ((i - k + 1) // 2)
    tail = (k + (-1 if half % 2 == 0 else 1)) if even_i else 0
    return (lead * core + tail) % (2 * k)


def beta(k: int, i: int) -> int:
    """Index of the neighbor the i-th fixed vertex attaches to, k even."""
    even_exp = (k // 2 + i) % 2 == 0
    return (k // 2 + ((k + 1) if even_exp else 0)) % (2 * k)


def gamma(k: int, i: int) -> int:
    """Index of the i-th vertex on the even-labeled zigzag, k even."""
    sign = 1 if i % 2 == 0 else -1
    return (2 * sign * ((i + 2) // 2)) % (2 * k)


# --- base-copy vertex sequences ----------------------------------------------

def _zigzag(k: int) -> list[int]:
    """0, 2k-1, 1, 2k-2, ..., k-1, k followed by the fixed vertex 2k."""
    seq: list[int] = []
    for t in range(k):
        seq.append(t)
        seq.append(2 * k - 1 - t)
    seq.append(2 * k)
    return seq


def _seq_odd_small(k: int, x: int) -> list[int]:
    # Zigzag first copy; vertex 2k+1+t splits the a-b edge {t, 2k-1-t}.
    seq: list[int] = []
    for t in range(k):
        seq.append(t)
        if t <= x - 2:
            seq.append(2 * k + 1 + t)
        seq.append(2 * k - 1 - t)
    seq.append(2 * k)
    return seq


def _seq_odd_large(k: int, x: int) -> list[int]:
    # Standard cycle on 3k vertices; vertex 3k+t splits the a-b edge {3t+1, 3t+2}.
    seq: list[int] = []
    for i in range(3 * k):
        seq.append(i)
        if i % 3 == 1 and i // 3 < x - k:
            seq.append(3 * k + i // 3)
    return seq


def _half_zigzag(k: int, offset: int) -> list[int]:
    """offset, offset+2, offset-2, offset+4, ... (k/2 terms, mod 2k)."""
    out = []
    for i in range(k // 2):
        mag = 2 * ((i + 1) // 2)
        out.append((offset + (mag if i % 2 else -mag)) % (2 * k))
    return out


def _seq_even_small(k: int, x: int) -> list[int]:
    a_path = _half_zigzag(k, 0)
    b_start = (-1 if (k // 2) % 2 else 1) % (2 * k)
    b_path = _half_zigzag(k, b_start)
    ab_path = [alpha(k, i) for i in range(k - 1, 2 * k)]
    if ab_path[0] != b_path[-1]:
        raise ConstructionError(
            f"a/b path does not continue the odd zigzag for k={k}: "
            f"{ab_path[0]} != {b_path[-1]}")
    seq = a_path + [2 * k] + b_path
    for t in range(1, len(ab_path)):
        if t - 1 < x - 2:
            seq.append(2 * k + 1 + t)   # ids 2k+2 .. 2k+x-1
        seq.append(ab_path[t])
    seq.append(2 * k + 1)
    return seq


def _seq_even_large(k: int, x: int) -> list[int]:
    seq: list[int] = []
    for t in range(k):
        seq += [2 * k + t, t]
    tail: list[int] = []
    for t in range(k // 2):
        tail += [2 * k - 2 - 2 * t, k + 1 + 2 * t]
    for t, v in enumerate(tail):
        if t < x - k:
            seq.append(3 * k + t)
        seq.append(v)
    return seq


def _seq_to_edges(seq: list[int]) -> frozenset:
    edges = {edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)}
    edges.add(edge(seq[-1], seq[0]))
    if len(edges) != len(seq):
        raise ConstructionError("vertex sequence produced duplicate edges")
    return frozenset(edges)


def _cycle_labeling(n: int, fixed: list[int], a_class: list[int],
                    b_class: list[int]) -> Labeling:
    # Canonical ids: fixed points in vertex order, then class a, then class b.
    labels = [0] * n
    for idx, v in enumerate(sorted(fixed)):
        labels[v] = idx
    for v in a_class:
        labels[v] = len(fixed)
    for v in b_class:
        labels[v] = len(fixed) + 1
    p = len(fixed) + 1 + (1 if b_class else 0)
    return Labeling(tuple(labels), p)


def _shift_perm(n: int, modulus: int, amount: int) -> Permutation:
    return tuple((i + amount) % modulus if i < modulus else i for i in range(n))


def _residue_perm(n: int, k: int, amount: int) -> Permutation:
    out = []
    for i in range(n):
        if i >= 3 * k or i % 3 == 0:
            out.append(i)
        elif i % 3 == 1:
            out.append((i + 3 * amount) % (3 * k))
        else:
            out.append((i - 3 * amount) % (3 * k))
    return tuple(out)


def _ensure_valid(lp: LabeledPacking, what: str) -> LabeledPacking:
    report = verify(lp)
    if not report.valid:
        raise ConstructionError(f"{what} failed verification: {report.failures()}")
    return lp


def construct_cycle_packing(k: int, x: int) -> LabeledPacking:
    """Packing of k copies of the cycle of order n = 2k + x, maximal known labels.

    Label count is 2 when x = 1 and k is even, and x + 2 otherwise; the
    fixed-point set has exactly x vertices and the first permutation is the
    identity.
    """
    case = classify_cycle_case(k, x)
    n = 2 * k + x
    if case is CycleCase.ODD_SMALL_X:
        seq = _seq_odd_small(k, x)
        fixed = list(range(2 * k, n))
        a_class = [i for i in range(2 * k) if i % 2 == 0]
        b_class = [i for i in range(2 * k) if i % 2 == 1]
        perms = tuple(_shift_perm(n, 2 * k, 2 * (j - 1)) for j in range(1, k + 1))
    elif case is CycleCase.ODD_LARGE_X:
        seq = _seq_odd_large(k, x)
        fixed = [i for i in range(3 * k) if i % 3 == 0] + list(range(3 * k, n))
        a_class = [i for i in range(3 * k) if i % 3 == 1]
        b_class = [i for i in range(3 * k) if i % 3 == 2]
        perms = tuple(_residue_perm(n, k, j - 1) for j in range(1, k + 1))
    elif case is CycleCase.EVEN_X1:
        seq = _zigzag(k)
        fixed = [2 * k]
        a_class = list(range(2 * k))
        b_class = []
        perms = tuple(_shift_perm(n, 2 * k, j - 1) for j in range(1, k + 1))
    elif case is CycleCase.EVEN_SMALL_X:
        seq = _seq_even_small(k, x)
        fixed = list(range(2 * k, n))
        a_class = [i for i in range(2 * k) if i % 2 == 0]
        b_class = [i for i in range(2 * k) if i % 2 == 1]
        perms = tuple(_shift_perm(n, 2 * k, 2 * (j - 1)) for j in range(1, k + 1))
    else:
        seq = _seq_even_large(k, x)
        fixed = list(range(2 * k, n))
        a_class = [i for i in range(2 * k) if i % 2 == 0]
        b_class = [i for i in range(2 * k) if i % 2 == 1]
        perms = tuple(_shift_perm(n, 2 * k, 2 * (j - 1)) for j in range(1, k + 1))
    lp = LabeledPacking(n, k, False, _seq_to_edges(seq),
                        _cycle_labeling(n, fixed, a_class, b_class), perms)
    return _ensure_valid(lp, f"cycle construction k={k} x={x} ({case.value})")


# --- circuits -----------------------------------------------------------------

def circuit_placement_exists(k: int, n: int) -> bool:
    """Whether k arc-disjoint copies of the circuit of order n fit at all."""
    if k < 1 or n < 2:
        raise RangeError(f"need k >= 1 and n >= 2, got k={k} n={n}")
    return n >= k + 1 and (n - k, n) not in EXCLUDED_CIRCUITS


def _check_excluded(x: int, n: int) -> None:
    if (x, n) in EXCLUDED_CIRCUITS:
        raise ExcludedInstanceError(
            f"circuit instance (x={x}, n={n}) admits no placement")


def construct_circuit_packing_large(k: int, n: int) -> LabeledPacking:
    """Packing of k copies of the circuit of order n >= 2k with
    floor(n/2) + floor(ceil(n/2)/k) labels (the exact packing number).

    Every other vertex of the standard circuit becomes a singleton-labeled
    fixed point; the remaining vertices are grouped, in increasing index
    order, into classes of at least k that each permutation rotates by j - 1.
    """
    if k < 1:
        raise RangeError(f"need k >= 1, got {k}")
    if n < 2 * k or n < 2:
        raise RangeError(f"large-order circuit construction needs n >= 2k, got n={n} k={k}")
    _check_excluded(n - 2 * k * (n // (2 * k)), n)
    half = n // 2
    fixed = list(range(0, 2 * (half - 1) + 1, 2))
    shared = sorted(set(range(n)) - set(fixed))
    n_classes = len(shared) // k          # len(shared) == ceil(n/2)
    classes = [shared[i * k:(i + 1) * k] for i in range(n_classes - 1)]
    classes.append(shared[(n_classes - 1) * k:])

    labels = [0] * n
    for idx, v in enumerate(fixed):
        labels[v] = idx
    for ci, cls in enumerate(classes):
        for v in cls:
            labels[v] = half + ci
    labeling = Labeling(tuple(labels), half + n_classes)

    perms = []
    for j in range(1, k + 1):
        image = list(range(n))
        for cls in classes:
            size = len(cls)
            for t, v in enumerate(cls):
                image[v] = cls[(t + j - 1) % size]
        perms.append(tuple(image))
    lp = LabeledPacking(n, k, True, circuit_arcs(n), labeling, tuple(perms))
    return _ensure_valid(lp, f"large circuit construction k={k} n={n}")


def construct_circuit_packing_small_even(k: int, x: int) -> LabeledPacking:
    """Packing of k copies (k even) of the circuit of order n = k + x < 2k,
    with x + 1 labels: x singleton fixed points plus one rotating class."""
    if k < 2 or k % 2 != 0:
        raise RangeError(f"this construction needs k even >= 2, got {k}")
    if not 1 <= x <= k - 1:
        raise RangeError(f"need 1 <= x <= k-1, got x={x} for k={k}")
    n = k + x
    _check_excluded(x, n)
    half = k // 2
    # Subdividable arcs of the zigzag circuit in deterministic order;
    # vertex k+1+t splits the t-th of them.
    fam1 = [(t, k - 1 - t) for t in range(half)]
    fam2 = [(k - 1 - t, t + 1) for t in range(half - 1)]
    split_ids = {arc: k + 1 + idx for idx, arc in enumerate((fam1 + fam2)[:x - 1])}
    seq: list[int] = []
    for t in range(half):
        seq.append(t)
        if (t, k - 1 - t) in split_ids:
            seq.append(split_ids[(t, k - 1 - t)])
        seq.append(k - 1 - t)
        if t < half - 1 and (k - 1 - t, t + 1) in split_ids:
            seq.append(split_ids[(k - 1 - t, t + 1)])
    seq.append(k)
    arcs = {(seq[i], seq[i + 1]) for i in range(len(seq) - 1)}
    arcs.add((seq[-1], seq[0]))

    labels = [x] * n
    for idx, v in enumerate(range(k, n)):
        labels[v] = idx
    labeling = Labeling(tuple(labels), x + 1)
    perms = tuple(_shift_perm(n, k, j - 1) for j in range(1, k + 1))
    lp = LabeledPacking(n, k, True, frozenset(arcs), labeling, perms)
    return _ensure_valid(lp, f"small even circuit construction k={k} x={x}")


def construct_circuit_packing_small_odd(k: int, x: int) -> LabeledPacking:
    """Packing of k copies (k odd) of the circuit of order n = k + x < 2k,
    with x labels, obtained by dropping one copy from the even construction
    on k + 1 copies of the same order."""
    if k < 3 or k % 2 != 1:
        raise RangeError(f"this construction needs k odd >= 3, got {k}")
    if not 2 <= x <= k - 1:
        raise RangeError(f"need 2 <= x <= k-1, got x={x} for k={k}")
    wider = construct_circuit_packing_small_even(k + 1, x - 1)
    lp = LabeledPacking(wider.n, k, True, wider.base, wider.labeling,
                        wider.perms[:-1])
    return _ensure_valid(lp, f"small odd circuit construction k={k} x={x}")


def construct_circuit_packing(k: int, n: int) -> tuple[LabeledPacking, str]:
    """Dispatch to the applicable circuit construction; returns (packing, tag)."""
    if not circuit_placement_exists(k, n):
        _check_excluded(n - k, n)
        raise RangeError(f"no k-placement exists: need n >= k+1, got n={n} k={k}")
    if n >= 2 * k:
        return construct_circuit_packing_large(k, n), "circuit-large"
    x = n - k
    if k % 2 == 0:
        return construct_circuit_packing_small_even(k, x), "circuit-small-even"
    if x >= 2:
        return construct_circuit_packing_small_odd(k, x), "circuit-small-odd"
    raise RangeError(
        f"no construction is known for k odd with n = k+1 (k={k}); "
        "only existence of an unlabeled placement")


def builtin_directed_exceptions() -> list[LabeledPacking]:
    """The two hand-transcribed unlabeled circuit packings that anchor the
    small existence cases: 2 copies in order 4 and 4 copies in order 6."""
    one_label_4 = Labeling((0, 0, 0, 0), 1)
    first = LabeledPacking(
        4, 2, True, circuit_arcs(4), one_label_4,
        (identity(4), (0, 3, 2, 1)))
    one_label_6 = Labeling((0,) * 6, 1)
    second = LabeledPacking(
        6, 4, True, circuit_arcs(6), one_label_6,
        (identity(6),
         (0, 5, 4, 3, 2, 1),
         (0, 2, 4, 1, 5, 3),
         (0, 3, 5, 1, 4, 2)))
    return [_ensure_valid(first, "builtin 2 copies of order-4 circuit"),
            _ensure_valid(second, "builtin 4 copies of order-6 circuit")]
