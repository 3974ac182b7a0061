"""Circuit-based matroids over bit-mask subsets.

A subset of the ground set ``{0, ..., n-1}`` is a plain ``int`` whose set
bits are its elements.  Whole-lattice questions (rank of every subset,
flats, cocircuits) are answered with numpy tables indexed by mask; single
rank queries go through the greedy algorithm against the dependency
table and are memoised per matroid.
"""
from __future__ import annotations

import logging
import threading
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np
from networkx.utils import UnionFind

from .errors import AxiomError, InputError

logger = logging.getLogger(__name__)

Subset = int

# Above this ground size the 2**n tables are not built.
TABLE_LIMIT = 20


# -------------------------------------------------
# Subset helpers
# -------------------------------------------------
def elements(x: Subset) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def to_mask(items: Iterable[int]) -> Subset:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def full_set(n: int) -> Subset:
    return (1 << n) - 1


def size(x: Subset) -> int:
    return x.bit_count()


def check_subset(n: int, x: Subset, what: str = "subset") -> Subset:
    if x < 0 or x >> n:
        raise InputError(f"{what} {format_subset(x)} is not within a ground set of size {n}")
    return x


def format_subset(x: Subset, labels: Sequence[str] | None = None) -> str:
    if x < 0:
        return f"<negative mask {x}>"
    names = [labels[i] if labels else str(i) for i in elements(x)]
    return "{" + ",".join(names) + "}"


def canonical_order(masks: Iterable[Subset]) -> tuple[Subset, ...]:
    return tuple(sorted(masks, key=lambda c: (c.bit_count(), c)))


def minimal_members(masks: Iterable[Subset]) -> tuple[Subset, ...]:
    """Inclusion-minimal nonzero masks, in canonical order, duplicates dropped."""
    kept: list[Subset] = []
    for c in canonical_order(set(masks)):
        if c and not any(k & c == k for k in kept):
            kept.append(c)
    return tuple(kept)


def remap(x: Subset, mapping: dict[int, int]) -> Subset:
    out = 0
    for e in elements(x):
        out |= 1 << mapping[e]
    return out


# -------------------------------------------------
# Vectorised lattice tables
# -------------------------------------------------
def mask_indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def popcount_table(n: int) -> np.ndarray:
    idx = mask_indices(n)
    counts = np.zeros(1 << n, dtype=np.int16)
    for i in range(n):
        counts += ((idx >> i) & 1).astype(np.int16)
    return counts


def up_closure(table: np.ndarray, n: int) -> np.ndarray:
    """out[X] is True iff table[Y] for some Y contained in X."""
    out = table.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return out


def subset_max(values: np.ndarray, n: int) -> np.ndarray:
    """out[X] is the maximum of values[Y] over all Y contained in X."""
    out = values.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
    return out


def minimal_true(table: np.ndarray, n: int) -> tuple[Subset, ...]:
    """Inclusion-minimal masks X with table[X] set, in canonical order."""
    if not table.any():
        return ()
    closed = up_closure(table, n)
    idx = mask_indices(n)
    has_proper = np.zeros_like(table)
    for i in range(n):
        bit = 1 << i
        member = ((idx >> i) & 1).astype(bool)
        has_proper |= member & closed[idx ^ bit]
    found = np.flatnonzero(table & ~has_proper)
    return canonical_order(int(x) for x in found)


def dependency_table(n: int, circuits: Sequence[Subset]) -> np.ndarray:
    marks = np.zeros(1 << n, dtype=bool)
    if circuits:
        marks[np.fromiter(circuits, dtype=np.int64, count=len(circuits))] = True
    return up_closure(marks, n)


# -------------------------------------------------
# Circuit families
# -------------------------------------------------
@dataclass(frozen=True)
class CircuitFamily:
    """An antichain of nonempty subsets, kept in canonical order."""

    n: int
    members: tuple[Subset, ...]

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Subset | Iterable[int]]) -> "CircuitFamily":
        if n < 0:
            raise InputError(f"ground size must be non-negative, got {n}")
        masks = [s if isinstance(s, int) else to_mask(s) for s in sets]
        for m in masks:
            check_subset(n, m, "member")
            if m == 0:
                raise AxiomError("a circuit family may not contain the empty set")
        if len(set(masks)) != len(masks):
            raise AxiomError("duplicate member in circuit family")
        ordered = canonical_order(masks)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                if a & b == a:
                    raise AxiomError(
                        f"not an antichain: {format_subset(a)} is contained in {format_subset(b)}",
                        {"contained": a, "container": b},
                    )
        return cls(n, ordered)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ElementPartition:
    blocks: tuple[Subset, ...]

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "ElementPartition":
        masks = [to_mask(s) for s in sets]
        return cls(tuple(sorted(masks, key=lambda b: (b & -b))))

    def block_of(self, e: int) -> Subset:
        for b in self.blocks:
            if b >> e & 1:
                return b
        raise InputError(f"element {e} is not covered by the partition")

    def nontrivial(self) -> tuple[Subset, ...]:
        return tuple(b for b in self.blocks if b.bit_count() >= 2)


def weak_elimination_violation(
    circuits: Sequence[Subset], is_dependent
) -> tuple[Subset, Subset, int] | None:
    """First (C1, C2, e) for which (C1 u C2) - e contains no circuit."""
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1:]:
            common = c1 & c2
            if not common:
                continue
            union = c1 | c2
            for e in elements(common):
                if not is_dependent(union & ~(1 << e)):
                    return c1, c2, e
    return None


def strong_elimination_violation(
    circuits: Sequence[Subset],
) -> tuple[Subset, Subset, int, int] | None:
    """First (C1, C2, e, f) with no circuit C3 such that f in C3 within (C1 u C2) - e."""
    for c1 in circuits:
        for c2 in circuits:
            if c1 == c2 or not c1 & c2:
                continue
            union = c1 | c2
            for e in elements(c1 & c2):
                allowed = union & ~(1 << e)
                inside = [c for c in circuits if c & ~allowed == 0]
                for f in elements(c1 & ~c2):
                    if not any(c >> f & 1 for c in inside):
                        return c1, c2, e, f
    return None


# -------------------------------------------------
# Matroid
# -------------------------------------------------
class Matroid:
    """A matroid on ``{0, ..., n-1}`` given by its circuits.

    Instances are immutable.  Caches are filled lazily under a lock and
    never change what any method returns.  ``labels`` are display names
    carried through minors and constructions; they take no part in
    equality.
    """

    def __init__(
        self,
        n: int,
        circuits: CircuitFamily | Iterable[Subset | Iterable[int]],
        labels: Sequence[str] | None = None,
    ):
        family = circuits if isinstance(circuits, CircuitFamily) else CircuitFamily.from_sets(n, circuits)
        if family.n != n:
            raise InputError(f"circuit family is over {family.n} elements, expected {n}")
        if labels is not None and len(labels) != n:
            raise InputError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.family = family
        self.circuits: tuple[Subset, ...] = family.members
        self.labels: tuple[str, ...] = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self._lock = threading.Lock()
        self._dependent: np.ndarray | None = None
        self._rank_table: np.ndarray | None = None
        self._rank_memo: dict[Subset, int] = {}
        self._dual: Matroid | None = None
        self._key: tuple | None = None
        self._flats: tuple[Subset, ...] | None = None
        # set on minors: parent index -> index here
        self.element_map: dict[int, int] | None = None

        bad = weak_elimination_violation(self.circuits, self.is_dependent)
        if bad is not None:
            c1, c2, e = bad
            raise AxiomError(
                f"circuits {format_subset(c1)} and {format_subset(c2)} violate elimination at {e}",
                {"C1": c1, "C2": c2, "e": e},
            )

    # -- identity ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.circuits == other.circuits

    def __hash__(self) -> int:
        return hash((self.n, self.circuits))

    def __repr__(self) -> str:
        body = ", ".join(format_subset(c, self.labels) for c in self.circuits)
        return f"Matroid(n={self.n}, circuits=[{body}])"

    @property
    def ground(self) -> Subset:
        return full_set(self.n)

    def with_labels(self, labels: Sequence[str]) -> "Matroid":
        return Matroid(self.n, self.family, labels)

    # -- tables ---------------------------------------------------------
    def _table(self) -> np.ndarray | None:
        if self.n > TABLE_LIMIT:
            return None
        if self._dependent is None:
            with self._lock:
                if self._dependent is None:
                    self._dependent = dependency_table(self.n, self.circuits)
        return self._dependent

    def _require_table(self, what: str) -> None:
        if self.n > TABLE_LIMIT:
            raise InputError(f"{what} needs exhaustive tables; ground size {self.n} exceeds {TABLE_LIMIT}")

    def rank_table(self) -> np.ndarray:
        """Rank of every subset, indexed by mask."""
        self._require_table("rank_table")
        if self._rank_table is None:
            dependent = self._table()
            sizes = popcount_table(self.n)
            independent_sizes = np.where(dependent, 0, sizes).astype(np.int16)
            table = subset_max(independent_sizes, self.n)
            logger.debug("rank table built for %d elements", self.n)
            with self._lock:
                self._rank_table = table
        return self._rank_table

    # -- oracles ----------------------------------------------------------
    def is_dependent(self, x: Subset) -> bool:
        table = self._table()
        if table is not None:
            return bool(table[x])
        return any(c & x == c for c in self.circuits)

    def is_independent(self, x: Subset) -> bool:
        check_subset(self.n, x)
        return not self.is_dependent(x)

    def rank(self, x: Subset | None = None) -> int:
        x = self.ground if x is None else check_subset(self.n, x)
        cached = self._rank_memo.get(x)
        if cached is not None:
            return cached
        basis = 0
        for e in elements(x):
            if not self.is_dependent(basis | (1 << e)):
                basis |= 1 << e
        value = basis.bit_count()
        with self._lock:
            self._rank_memo[x] = value
        return value

    def closure(self, x: Subset) -> Subset:
        r = self.rank(x)
        out = x
        for e in elements(self.ground & ~x):
            if self.rank(x | (1 << e)) == r:
                out |= 1 << e
        return out

    def flats(self) -> tuple[Subset, ...]:
        if self._flats is None:
            ranks = self.rank_table()
            idx = mask_indices(self.n)
            closed = np.ones(1 << self.n, dtype=bool)
            for i in range(self.n):
                bit = 1 << i
                outside = ((idx >> i) & 1) == 0
                closed &= ~outside | (ranks[idx | bit] > ranks)
            found = canonical_order(int(x) for x in np.flatnonzero(closed))
            with self._lock:
                self._flats = found
        return self._flats

    def bases(self) -> tuple[Subset, ...]:
        self._require_table("bases")
        sizes = popcount_table(self.n)
        found = np.flatnonzero(~self._table() & (sizes == self.rank()))
        return canonical_order(int(x) for x in found)

    def loops(self) -> Subset:
        return to_mask(elements(c)[0] for c in self.circuits if c.bit_count() == 1)

    def coloops(self) -> Subset:
        covered = 0
        for c in self.circuits:
            covered |= c
        return self.ground & ~covered

    # -- structure --------------------------------------------------------
    def components(self) -> ElementPartition:
        uf = UnionFind(range(self.n))
        for c in self.circuits:
            uf.union(*elements(c))
        return ElementPartition.from_sets(uf.to_sets())

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.components().blocks) == 1

    def dual(self) -> "Matroid":
        if self._dual is None:
            self._require_table("dual")
            r = self.rank()
            spanning = up_closure(~self._table() & (popcount_table(self.n) == r), self.n)
            idx = mask_indices(self.n)
            nonspanning_complement = ~spanning[idx ^ self.ground]
            nonspanning_complement[0] = False
            cocircuits = minimal_true(nonspanning_complement, self.n)
            dual = Matroid(self.n, CircuitFamily(self.n, cocircuits), self.labels)
            dual._dual = self
            with self._lock:
                self._dual = dual
        return self._dual

    def cocircuits(self) -> tuple[Subset, ...]:
        return self.dual().circuits

    def series_classes(self) -> ElementPartition:
        uf = UnionFind(range(self.n))
        for d in self.cocircuits():
            if d.bit_count() == 2:
                uf.union(*elements(d))
        return ElementPartition.from_sets(uf.to_sets())

    # -- minors -----------------------------------------------------------
    def minor(self, contract: Subset = 0, delete: Subset = 0) -> "Matroid":
        check_subset(self.n, contract, "contract set")
        check_subset(self.n, delete, "delete set")
        if contract & delete:
            raise InputError(
                f"contract and delete sets overlap in {format_subset(contract & delete, self.labels)}"
            )
        family = self.circuits
        if contract:
            family = minimal_members(c & ~contract for c in family)
        if delete:
            family = tuple(c for c in family if not c & delete)
        mapping = surviving_map(self.n, contract | delete)
        keep = sorted(mapping)
        circuits = canonical_order(remap(c, mapping) for c in family)
        out = Matroid(len(keep), CircuitFamily(len(keep), circuits), [self.labels[e] for e in keep])
        out.element_map = mapping
        return out

    def delete(self, x: Subset) -> "Matroid":
        return self.minor(0, x)

    def contract(self, x: Subset) -> "Matroid":
        return self.minor(x, 0)

    def restrict(self, x: Subset) -> "Matroid":
        check_subset(self.n, x)
        return self.minor(0, self.ground & ~x)

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Move element ``i`` to position ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabel expects a permutation of the ground set")
        mapping = dict(enumerate(perm))
        circuits = canonical_order(remap(c, mapping) for c in self.circuits)
        labels = [""] * self.n
        for old, new in mapping.items():
            labels[new] = self.labels[old]
        return Matroid(self.n, CircuitFamily(self.n, circuits), labels)

    # -- isomorphism ------------------------------------------------------
    def canonical_key(self) -> tuple:
        if self._key is None:
            key = (self.n, canonical_form(self.n, self.circuits))
            with self._lock:
                self._key = key
        return self._key

    @classmethod
    def from_key(cls, key: tuple) -> "Matroid":
        n, circuits = key
        m = cls(n, CircuitFamily(n, tuple(circuits)))
        m._key = (n, tuple(circuits))
        return m


def surviving_map(n: int, removed: Subset) -> dict[int, int]:
    """Old index to new index for the elements a minor keeps."""
    keep = elements(full_set(n) & ~removed)
    return {old: new for new, old in enumerate(keep)}


# -------------------------------------------------
# Canonical form
# -------------------------------------------------
def _refine(n: int, members: Sequence[Subset], colors: list[int]) -> list[int]:
    while True:
        through: list[list[tuple]] = [[] for _ in range(n)]
        for m in members:
            items = elements(m)
            signature = (len(items), tuple(sorted(colors[e] for e in items)))
            for e in items:
                through[e].append(signature)
        sigs = [(colors[e], tuple(sorted(through[e]))) for e in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [order[s] for s in sigs]
        if len(order) == len(set(colors)):
            return refined
        colors = refined


def _swap(m: Subset, x: int, y: int) -> Subset:
    if (m >> x & 1) != (m >> y & 1):
        m ^= (1 << x) | (1 << y)
    return m


def canonical_form(n: int, members: Sequence[Subset]) -> tuple[Subset, ...]:
    """Lexicographically least relabelled member list over all search leaves.

    Members may repeat (multigraph edges).  Colour refinement splits the
    ground set by the multiset of member shapes through each element;
    ties are broken by individualising elements of the first non-singleton
    cell.  Two branches related by a transposition that preserves the
    member multiset give identical leaves, so only one is explored.
    """
    if n == 0:
        return tuple(sorted(members))
    member_bag = sorted(members)
    twin_memo: dict[tuple[int, int], bool] = {}

    def twins(x: int, y: int) -> bool:
        key = (min(x, y), max(x, y))
        if key not in twin_memo:
            twin_memo[key] = sorted(_swap(m, x, y) for m in members) == member_bag
        return twin_memo[key]

    best: tuple[Subset, ...] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, members, colors)
        cells: dict[int, list[int]] = defaultdict(list)
        for e, c in enumerate(colors):
            cells[c].append(e)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            mapping = dict(enumerate(colors))
            image = canonical_order(remap(m, mapping) for m in members)
            if best is None or image < best:
                best = image
            return
        tried: list[int] = []
        for x in target:
            if any(twins(x, y) for y in tried):
                continue
            tried.append(x)
            search([2 * c + (0 if e == x else 1) for e, c in enumerate(colors)])

    search([0] * n)
    return best


def canonical_key(m: Matroid) -> tuple:
    return m.canonical_key()


def are_isomorphic(a: Matroid, b: Matroid) -> bool:
    if a.n != b.n or len(a.circuits) != len(b.circuits):
        return False
    if sorted(c.bit_count() for c in a.circuits) != sorted(c.bit_count() for c in b.circuits):
        return False
    if a.rank() != b.rank():
        return False
    return a.canonical_key() == b.canonical_key()


# -------------------------------------------------
# Module-level operations
# -------------------------------------------------
def rank(m: Matroid, x: Subset) -> int:
    return m.rank(x)


def closure(m: Matroid, x: Subset) -> Subset:
    check_subset(m.n, x)
    return m.closure(x)


def flats(m: Matroid) -> tuple[Subset, ...]:
    return m.flats()


def is_connected(m: Matroid) -> bool:
    return m.is_connected()


def dual(m: Matroid) -> Matroid:
    return m.dual()


def minor(m: Matroid, contract: Subset = 0, delete: Subset = 0) -> Matroid:
    return m.minor(contract, delete)


def series_classes(m: Matroid) -> ElementPartition:
    return m.series_classes()


def strong_elimination_holds(m: Matroid) -> bool:
    return strong_elimination_violation(m.circuits) is None


def has_u24_minor(m: Matroid) -> tuple[Subset, Subset] | None:
    """A (contract, delete) pair whose minor is U_{2,4}, if one exists.

    It suffices to contract independent sets: contracting a dependent set
    T equals contracting a basis of T and deleting the rest.
    """
    if m.n < 4:
        return None
    ground = m.ground
    for four in combinations(range(m.n), 4):
        y = to_mask(four)
        pairs = [to_mask(p) for p in combinations(four, 2)]
        rest = elements(ground & ~y)
        for k in range(len(rest) + 1):
            for chosen in combinations(rest, k):
                t = to_mask(chosen)
                if not m.is_independent(t):
                    continue
                rt = k
                if m.rank(t | y) - rt != 2:
                    continue
                if all(m.rank(t | p) - rt == 2 for p in pairs):
                    return t, ground & ~(t | y)
    return None


def is_binary(m: Matroid) -> bool:
    return has_u24_minor(m) is None


def _exact_cover(target: Subset, circuits: Sequence[Subset], memo: dict[Subset, bool]) -> bool:
    if target == 0:
        return True
    if target in memo:
        return memo[target]
    low = target & -target
    result = any(
        c & low and c & ~target == 0 and _exact_cover(target & ~c, circuits, memo)
        for c in circuits
    )
    memo[target] = result
    return result


def binary_cross_check(m: Matroid) -> bool:
    """True iff every symmetric difference of two distinct circuits is a
    disjoint union of circuits, the classical characterisation of binary
    matroids."""
    memo: dict[Subset, bool] = {}
    for c1, c2 in combinations(m.circuits, 2):
        if not _exact_cover(c1 ^ c2, m.circuits, memo):
            return False
    return True
