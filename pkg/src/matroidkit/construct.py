"""Matroid constructions and the registry of named examples."""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import networkx as nx
import numpy as np

from .core import (
    TABLE_LIMIT,
    CircuitFamily,
    Matroid,
    Subset,
    canonical_order,
    elements,
    minimal_true,
    to_mask,
)
from .errors import ConstructionError, InputError

logger = logging.getLogger(__name__)


# -------------------------------------------------
# Input types
# -------------------------------------------------
@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..vertex_count-1``; edge ``i`` becomes matroid element ``i``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError(f"edge ({u},{v}) uses a vertex outside 0..{self.vertex_count - 1}")
        if self.names is not None and len(self.names) != len(self.edges):
            raise InputError("one name per edge is required")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Sequence[tuple[int, int]], names: Sequence[str] | None = None):
        return cls(vertex_count, tuple((int(u), int(v)) for u, v in edges), tuple(names) if names else None)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for i, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, key=i)
        return graph

    def num_components(self) -> int:
        return nx.number_connected_components(self.to_networkx()) if self.vertex_count else 0

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and self.num_components() == 1

    def incidence(self) -> "GF2Matrix":
        """Vertex-edge incidence matrix over GF(2); loops give zero columns."""
        entries = np.zeros((max(self.vertex_count, 1), len(self.edges)), dtype=np.uint8)
        for i, (u, v) in enumerate(self.edges):
            if u != v:
                entries[u, i] = 1
                entries[v, i] = 1
        return GF2Matrix(entries)


@dataclass(frozen=True, eq=False)
class GF2Matrix:
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries)
        if arr.ndim != 2:
            raise InputError("a GF(2) matrix must be two-dimensional")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise InputError("GF(2) entries must be 0 or 1")
        object.__setattr__(self, "entries", (arr & 1).astype(np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GF2Matrix":
        return cls(np.array(rows, dtype=np.uint8).reshape(len(rows), -1 if rows else 0))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def column_masks(self) -> list[int]:
        weights = 1 << np.arange(self.rows, dtype=np.int64)
        return [int(x) for x in (self.entries.astype(np.int64).T @ weights)]


@dataclass(frozen=True)
class PointedMatroid:
    matroid: Matroid
    basepoint: int

    def __post_init__(self):
        if not 0 <= self.basepoint < self.matroid.n:
            raise InputError(f"basepoint {self.basepoint} outside ground set of size {self.matroid.n}")


# -------------------------------------------------
# Basic constructors
# -------------------------------------------------
def uniform(r: int, n: int) -> Matroid:
    if n < 0 or r < 0 or r > n:
        raise InputError(f"U({r},{n}) needs 0 <= r <= n")
    circuits = [to_mask(c) for c in combinations(range(n), r + 1)] if r < n else []
    return Matroid(n, CircuitFamily(n, canonical_order(circuits)))


def from_gf2(matrix: GF2Matrix, labels: Sequence[str] | None = None) -> Matroid:
    """Circuits are the minimal nonempty column sets summing to zero."""
    m = matrix.cols
    if m > TABLE_LIMIT:
        raise InputError(f"from_gf2 supports at most {TABLE_LIMIT} columns, got {m}")
    sums = np.zeros(1, dtype=np.int64)
    for col in matrix.column_masks():
        sums = np.concatenate([sums, sums ^ col])
    zero_sum = sums == 0
    zero_sum[0] = False
    circuits = minimal_true(zero_sum, m)
    return Matroid(m, CircuitFamily(m, circuits), labels)


def cycle_matroid(graph: Multigraph) -> Matroid:
    """Cycle matroid; computed as the binary matroid of the incidence matrix."""
    matroid = from_gf2(graph.incidence(), graph.names)
    expected = graph.vertex_count - graph.num_components()
    if matroid.rank() != expected:
        raise ConstructionError(f"cycle matroid rank {matroid.rank()} differs from |V|-c = {expected}")
    return matroid


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    shift = m1.n
    circuits = list(m1.circuits) + [c << shift for c in m2.circuits]
    n = m1.n + m2.n
    return Matroid(n, CircuitFamily(n, canonical_order(circuits)), _join_labels(m1.labels, m2.labels))


def _join_labels(left: Sequence[str], right: Sequence[str]) -> list[str]:
    taken = set(left)
    out = list(left)
    for name in right:
        while name in taken:
            name += "'"
        taken.add(name)
        out.append(name)
    return out


def parallel_extension(m: Matroid, x: int) -> Matroid:
    """Add a new element ``n`` parallel to ``x``."""
    if not 0 <= x < m.n:
        raise InputError(f"element {x} outside ground set")
    new = 1 << m.n
    bit = 1 << x
    circuits = list(m.circuits)
    if m.loops() & bit:
        circuits.append(new)
    else:
        circuits.append(bit | new)
        circuits += [(c & ~bit) | new for c in m.circuits if c & bit]
    n = m.n + 1
    return Matroid(n, CircuitFamily(n, canonical_order(circuits)), _join_labels(m.labels, [m.labels[x] + "'"]))


def series_extension(m: Matroid, x: int) -> Matroid:
    """Add a new element ``n`` in series with ``x``."""
    if not 0 <= x < m.n:
        raise InputError(f"element {x} outside ground set")
    new = 1 << m.n
    bit = 1 << x
    circuits = [c | new if c & bit else c for c in m.circuits]
    n = m.n + 1
    return Matroid(n, CircuitFamily(n, canonical_order(circuits)), _join_labels(m.labels, [m.labels[x] + "'"]))


# -------------------------------------------------
# Series and parallel connection
# -------------------------------------------------
def _check_basepoint(p: PointedMatroid, side: str) -> None:
    bit = 1 << p.basepoint
    if p.matroid.loops() & bit:
        raise ConstructionError(f"{side} basepoint {p.basepoint} is a loop")
    if p.matroid.coloops() & bit:
        raise ConstructionError(f"{side} basepoint {p.basepoint} is a coloop")


def _glue(p1: PointedMatroid, p2: PointedMatroid):
    """Shared relabelling: the left side keeps its indices, the right side
    is shifted past it and its basepoint takes the left basepoint's index."""
    _check_basepoint(p1, "left")
    _check_basepoint(p2, "right")
    m1, m2 = p1.matroid, p2.matroid
    p = p1.basepoint
    mapping: dict[int, int] = {}
    nxt = m1.n
    for j in range(m2.n):
        if j == p2.basepoint:
            mapping[j] = p
        else:
            mapping[j] = nxt
            nxt += 1

    def move(c: Subset) -> Subset:
        out = 0
        for e in elements(c):
            out |= 1 << mapping[e]
        return out

    right_names = [m2.labels[j] for j in range(m2.n) if j != p2.basepoint]
    labels = _join_labels(m1.labels, right_names)
    pbit = 1 << p
    left_through = [c for c in m1.circuits if c & pbit]
    right_through = [move(c) for c in m2.circuits if c >> p2.basepoint & 1]
    left_avoid = [c for c in m1.circuits if not c & pbit]
    right_avoid = [move(c) for c in m2.circuits if not c >> p2.basepoint & 1]
    return nxt, p, labels, left_through, right_through, left_avoid, right_avoid


def series_connection(p1: PointedMatroid, p2: PointedMatroid) -> PointedMatroid:
    n, p, labels, lt, rt, la, ra = _glue(p1, p2)
    circuits = la + ra + [a | b for a in lt for b in rt]
    m = Matroid(n, CircuitFamily(n, canonical_order(circuits)), labels)
    return PointedMatroid(m, p)


def parallel_connection(p1: PointedMatroid, p2: PointedMatroid) -> PointedMatroid:
    n, p, labels, lt, rt, la, ra = _glue(p1, p2)
    pbit = 1 << p
    circuits = la + lt + ra + rt + [(a | b) & ~pbit for a in lt for b in rt]
    m = Matroid(n, CircuitFamily(n, canonical_order(circuits)), labels)
    return PointedMatroid(m, p)


def free_extension(m: Matroid) -> PointedMatroid:
    """Freely add an element ``e = n``: its circuits are the sets B + e."""
    r = m.rank()
    if r < 1:
        raise ConstructionError("free extension of a rank-0 matroid would add a loop")
    e = 1 << m.n
    circuits = list(m.circuits) + [b | e for b in m.bases()]
    n = m.n + 1
    labels = _join_labels(m.labels, ["e"])
    return PointedMatroid(Matroid(n, CircuitFamily(n, canonical_order(circuits)), labels), m.n)


# -------------------------------------------------
# Named graphs and matroids
# -------------------------------------------------
def k4_graph() -> Multigraph:
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return Multigraph.from_edges(4, edges, [f"{u}{v}" for u, v in edges])


K23_NAMES = ("e1", "a", "e", "e2", "b", "c")


def k23_graph() -> Multigraph:
    """K_{2,3} with sides u1,u2 = 0,1 and v1,v2,v3 = 2,3,4.

    C1 = {e1,a,e,e2} and C2 = {b,c,e,e2} are the 4-cycles through v1 and
    v3 respectively, both using the v2 edges e and e2.
    """
    edges = [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]
    return Multigraph.from_edges(5, edges, K23_NAMES)


def n5_from_triangle() -> Matroid:
    """A 3-circuit {e1,e2,e} with f1, f2 added parallel to e1, e2."""
    base = uniform(2, 3).with_labels(["e1", "e2", "e"])
    m = parallel_extension(base, 0)
    m = parallel_extension(m, 1)
    return m.with_labels(["e1", "e2", "e", "f1", "f2"])


def _pointed_uniform(r: int, n: int) -> PointedMatroid:
    return PointedMatroid(uniform(r, n), n - 1)


def su(k: int, l: int) -> PointedMatroid:
    if k < 3 or l < 3:
        raise InputError(f"SU({k},{l}) needs k, l >= 3")
    return series_connection(_pointed_uniform(k - 2, k), _pointed_uniform(l - 2, l))


def n5() -> PointedMatroid:
    # left U_{1,3} gives e1,f1 and the basepoint e; the right side gives e2,f2
    pm = series_connection(_pointed_uniform(1, 3), _pointed_uniform(1, 3))
    return PointedMatroid(pm.matroid.with_labels(["e1", "f1", "e", "e2", "f2"]), pm.basepoint)


def _designate(m: Matroid, sizes: tuple[int, int]) -> int:
    """First element e whose unique skew pair avoiding e has the given sizes."""
    from .props import skew_circuit_pairs

    for e in range(m.n):
        pairs = skew_circuit_pairs(m, avoiding=e)
        if len(pairs) == 1 and pairs[0].sizes == sizes:
            logger.debug("designated element %s for skew sizes %s", m.labels[e], sizes)
            return e
    raise ConstructionError(f"no element leaves a unique skew pair of sizes {sizes}")


def _n5_side(f: int) -> PointedMatroid:
    return PointedMatroid(n5().matroid, f)


@lru_cache(maxsize=None)
def g_family(i: int) -> PointedMatroid:
    """M(G_i) with its designated element as basepoint."""
    u13 = _pointed_uniform(1, 3)
    if i == 1:
        return n5()
    if i == 2:
        left = uniform(1, 4)
        m = series_connection(PointedMatroid(left, 3), u13).matroid
        return PointedMatroid(m, 0)
    if i in (3, 5):
        # f is f1, one element of a parallel pair of N5
        m = series_connection(_n5_side(1), u13).matroid
        return PointedMatroid(m, _designate(m, (2, 3) if i == 3 else (2, 2)))
    if i == 4:
        # f = 01 and e = 23 are disjoint edges of K4; their complement is a 4-cycle
        m = series_connection(PointedMatroid(cycle_matroid(k4_graph()), 0), u13).matroid
        return PointedMatroid(m, 5)
    raise InputError(f"G({i}) is defined for i in 1..5")


@lru_cache(maxsize=None)
def l_family(i: int) -> PointedMatroid:
    return series_connection(g_family(i), _pointed_uniform(1, 3))


NAMED_IDS = ("N5", "MK4", "K23", "U", "SU", "G", "L")

_ID_PATTERN = re.compile(r"^(?P<name>[A-Za-z0-9]+?)(?:[:(](?P<params>[0-9,\s]*)\)?)?$")


def parse_named_id(text: str) -> tuple[str, tuple[int, ...]]:
    """Accepts ``N5``, ``U:2,4``, ``SU(3,4)``, ``G:3`` and similar."""
    match = _ID_PATTERN.match(text.strip())
    if not match:
        raise InputError(f"cannot parse matroid id {text!r}")
    name = match.group("name").upper()
    raw = match.group("params")
    params = tuple(int(p) for p in raw.replace(" ", "").split(",") if p) if raw else ()
    if name not in NAMED_IDS:
        # "G3" and "L1" without a separator
        head = name.rstrip("0123456789")
        if head in ("G", "L") and name[len(head):] and not params:
            return head, (int(name[len(head):]),)
        raise InputError(f"unknown matroid id {text!r}")
    return name, params


def named(name: str, *params: int) -> Matroid | PointedMatroid:
    name = name.upper()
    if name == "N5" and not params:
        return n5()
    if name == "MK4" and not params:
        return cycle_matroid(k4_graph())
    if name == "K23" and not params:
        return cycle_matroid(k23_graph())
    if name == "U" and len(params) == 2:
        return uniform(*params)
    if name == "SU" and len(params) == 2:
        return su(*params)
    if name == "G" and len(params) == 1:
        return g_family(params[0])
    if name == "L" and len(params) == 1:
        return l_family(params[0])
    raise InputError(f"unknown matroid {name} with parameters {params}")


def as_matroid(value: Matroid | PointedMatroid) -> Matroid:
    return value.matroid if isinstance(value, PointedMatroid) else value


def named_matroid(text: str) -> Matroid | PointedMatroid:
    name, params = parse_named_id(text)
    return named(name, *params)


def registry(max_su_elements: int = 8) -> list[tuple[str, Matroid | PointedMatroid]]:
    """Every fixed entry of the registry plus SU(k,l) up to the size bound."""
    entries: list[tuple[str, Matroid | PointedMatroid]] = [
        ("N5", n5()),
        ("MK4", named("MK4")),
        ("K23", named("K23")),
    ]
    entries += [(f"G:{i}", g_family(i)) for i in range(1, 6)]
    entries += [(f"L:{i}", l_family(i)) for i in range(1, 6)]
    for k in range(3, max_su_elements):
        for l in range(k, max_su_elements + 2 - k):
            entries.append((f"SU:{k},{l}", su(k, l)))
    return entries
