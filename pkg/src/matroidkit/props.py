"""Predicates on matroids and on raw circuit families."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .core import (
    CircuitFamily,
    Matroid,
    Subset,
    elements,
    format_subset,
)
from .errors import InputError, SearchLimitError

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 100
SERIES_MINOR_CAP = 12

AXIOM_SYSTEMS = ("C3", "C3-strong", "C3pp", "C3pp-unique", "C3pp-weak")


# -------------------------------------------------
# Result types
# -------------------------------------------------
@dataclass(frozen=True)
class SsceWitness:
    c1: Subset
    c2: Subset
    e1: int
    e2: int
    e: int
    resolved: Subset | None = None

    def as_dict(self) -> dict:
        return {"C1": elements(self.c1), "C2": elements(self.c2), "e1": self.e1, "e2": self.e2,
                "e": self.e, "resolved": elements(self.resolved) if self.resolved is not None else None}


@dataclass(frozen=True)
class SkewFamily:
    circuits: tuple[Subset, ...]

    @property
    def union(self) -> Subset:
        out = 0
        for c in self.circuits:
            out |= c
        return out

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(c.bit_count() for c in self.circuits))

    def as_dict(self) -> dict:
        return {"circuits": [elements(c) for c in self.circuits]}


@dataclass(frozen=True)
class AxiomViolation:
    system: str
    c1: Subset
    c2: Subset
    e1: int | None = None
    e2: int | None = None
    e: int | None = None
    f: int | None = None
    note: str = ""

    def as_dict(self) -> dict:
        out = {"system": self.system, "C1": elements(self.c1), "C2": elements(self.c2)}
        for name in ("e1", "e2", "e", "f"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.note:
            out["note"] = self.note
        return out


class CheckResult(NamedTuple):
    holds: bool
    violations: list
    total: int

    def __bool__(self) -> bool:
        return self.holds


class SuResult(NamedTuple):
    found: bool
    k: int
    l: int

    def __bool__(self) -> bool:
        return self.found


class SeriesMinorResult(NamedTuple):
    found: bool
    moves: tuple[tuple[str, str], ...]

    def __bool__(self) -> bool:
        return self.found


# -------------------------------------------------
# SSCE
# -------------------------------------------------
def ssce_check(m: Matroid, limit: int = DEFAULT_LIMIT) -> CheckResult:
    violations: list[SsceWitness] = []
    total = 0
    circuits = m.circuits
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1:]:
            common = c1 & c2
            if not common:
                continue
            union = c1 | c2
            only1, only2 = c1 & ~c2, c2 & ~c1
            inside = [c for c in circuits if c & ~union == 0]
            for e in elements(common):
                avoiding = [c for c in inside if not c >> e & 1]
                for e1 in elements(only1):
                    covered = 0
                    for c in avoiding:
                        if c >> e1 & 1:
                            covered |= c
                    for e2 in elements(only2 & ~covered):
                        total += 1
                        if len(violations) < limit:
                            violations.append(SsceWitness(c1, c2, e1, e2, e))
    return CheckResult(total == 0, violations, total)


def ssce_resolve(m: Matroid, c1: Subset, c2: Subset, e1: int, e2: int, e: int) -> SsceWitness:
    need = (1 << e1) | (1 << e2)
    allowed = (c1 | c2) & ~(1 << e)
    found = next((c for c in m.circuits if c & need == need and c & ~allowed == 0), None)
    return SsceWitness(c1, c2, e1, e2, e, found)


# -------------------------------------------------
# Skew circuits
# -------------------------------------------------
def is_skew(m: Matroid, x: Subset, y: Subset) -> bool:
    return m.rank(x) + m.rank(y) == m.rank(x | y)


def skew_circuit_pairs(m: Matroid, avoiding: int | None = None) -> list[SkewFamily]:
    circuits = [c for c in m.circuits if avoiding is None or not c >> avoiding & 1]
    pairs = []
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1:]:
            if is_skew(m, c1, c2):
                pairs.append(SkewFamily((c1, c2)))
    return pairs


def is_direct_sum_of_members(m: Matroid, family: SkewFamily) -> bool:
    """M restricted to the union has one component per member."""
    return len(m.restrict(family.union).components().blocks) == len(family.circuits)


def rank_is_additive(m: Matroid, family: SkewFamily) -> bool:
    return sum(c.bit_count() - 1 for c in family.circuits) == m.rank(family.union)


def has_k_skew(m: Matroid, k: int) -> tuple[bool, SkewFamily | None]:
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    circuits = m.circuits
    if k == 1:
        return (True, SkewFamily((circuits[0],))) if circuits else (False, None)

    def extend(start: int, chosen: list[Subset], union: Subset) -> SkewFamily | None:
        if len(chosen) == k:
            family = SkewFamily(tuple(chosen))
            return family if is_direct_sum_of_members(m, family) else None
        for j in range(start, len(circuits)):
            c = circuits[j]
            # distinct skew circuits are disjoint
            if c & union or not all(is_skew(m, c, d) for d in chosen):
                continue
            found = extend(j + 1, chosen + [c], union | c)
            if found is not None:
                return found
        return None

    family = extend(0, [], 0)
    return family is not None, family


# -------------------------------------------------
# Unbreakable, circuit-difference
# -------------------------------------------------
def is_unbreakable(m: Matroid) -> bool:
    if not m.is_connected():
        return False
    for flat in m.flats():
        if flat == m.ground:
            continue
        if not m.contract(flat).is_connected():
            logger.debug("contraction by flat %s is disconnected", format_subset(flat, m.labels))
            return False
    return True


def is_circuit_difference(m: Matroid) -> bool:
    members = set(m.circuits)
    circuits = m.circuits
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1:]:
            if c1 & c2 and (c1 ^ c2) not in members:
                return False
    return True


# -------------------------------------------------
# Series minors
# -------------------------------------------------
def series_moves(m: Matroid) -> Iterator[tuple[str, int, Matroid]]:
    """Every single series-minor move: any deletion, or contraction of an
    element lying in a nontrivial series class."""
    in_series = 0
    for block in m.series_classes().nontrivial():
        in_series |= block
    for e in range(m.n):
        yield "delete", e, m.delete(1 << e)
    for e in elements(in_series):
        yield "contract", e, m.contract(1 << e)


def _check_cap(m: Matroid, cap: int, allow_large: bool) -> None:
    if m.n > cap and not allow_large:
        raise SearchLimitError(
            f"series-minor search on {m.n} elements exceeds the cap of {cap}; pass allow_large to override"
        )


def has_series_minor(
    m: Matroid, target: Matroid, cap: int = SERIES_MINOR_CAP, allow_large: bool = False
) -> SeriesMinorResult:
    """Breadth-first search by element count, deduplicated by canonical key."""
    _check_cap(m, cap, allow_large)
    missing = SeriesMinorResult(False, ())
    if target.n > m.n:
        return missing
    target_key = target.canonical_key()
    target_rank = target.rank()
    target_corank = target.n - target_rank
    level: dict[tuple, tuple[Matroid, tuple]] = {m.canonical_key(): (m, ())}
    size = m.n
    while size > target.n:
        following: dict[tuple, tuple[Matroid, tuple]] = {}
        for current, moves in level.values():
            for op, e, child in series_moves(current):
                r = child.rank()
                if r < target_rank or child.n - r < target_corank:
                    continue
                key = child.canonical_key()
                if key not in following:
                    following[key] = (child, moves + ((op, current.labels[e]),))
        logger.debug("series-minor search: %d matroids on %d elements", len(following), size - 1)
        if not following:
            return missing
        level = following
        size -= 1
    hit = level.get(target_key)
    return SeriesMinorResult(True, hit[1]) if hit else missing


@lru_cache(maxsize=100_000)
def _minor_keys(key: tuple, down_to: int) -> frozenset:
    m = Matroid.from_key(key)
    found = {key}
    if m.n > down_to:
        for _, _, child in series_moves(m):
            found |= _minor_keys(child.canonical_key(), down_to)
    return frozenset(found)


def series_minor_keys(
    m: Matroid, down_to: int, cap: int = SERIES_MINOR_CAP, allow_large: bool = False
) -> frozenset:
    """Canonical keys of every series minor of ``m`` with at least ``down_to`` elements."""
    _check_cap(m, cap, allow_large)
    return _minor_keys(m.canonical_key(), max(down_to, 0))


@lru_cache(maxsize=None)
def _su_key(k: int, l: int) -> tuple:
    from .construct import su

    return su(k, l).matroid.canonical_key()


def has_su_series_minor(m: Matroid, cap: int = SERIES_MINOR_CAP, allow_large: bool = False) -> SuResult:
    _check_cap(m, cap, allow_large)
    if m.n < 5:
        return SuResult(False, 0, 0)
    keys = series_minor_keys(m, 5, cap, allow_large)
    for k in range(3, m.n):
        for l in range(k, m.n + 2 - k):
            if _su_key(k, l) in keys:
                return SuResult(True, k, l)
    return SuResult(False, 0, 0)


# -------------------------------------------------
# Circuit axiom systems
# -------------------------------------------------
def _family(family: CircuitFamily | Iterable, n: int) -> tuple[Subset, ...]:
    if isinstance(family, CircuitFamily):
        if family.n != n:
            raise InputError(f"family is over {family.n} elements, expected {n}")
        return family.members
    return CircuitFamily.from_sets(n, family).members


def axiom_check(
    family: CircuitFamily | Iterable,
    n: int,
    system: str,
    limit: int = DEFAULT_LIMIT,
    exhaustive: bool = True,
) -> CheckResult:
    """Evaluate one circuit-axiom system on a clutter.

    With ``exhaustive=False`` the scan stops at the first violation.
    """
    if system not in AXIOM_SYSTEMS:
        raise InputError(f"unknown axiom system {system!r}; expected one of {', '.join(AXIOM_SYSTEMS)}")
    members = _family(family, n)
    violations: list[AxiomViolation] = []
    total = 0

    def inside(s: Subset) -> list[Subset]:
        return [c for c in members if c & ~s == 0]

    def report(v: AxiomViolation) -> bool:
        nonlocal total
        total += 1
        if len(violations) < limit:
            violations.append(v)
        return not exhaustive

    for i, c1 in enumerate(members):
        partners = members if system == "C3-strong" else members[i + 1:]
        for c2 in partners:
            common = c1 & c2
            if c1 == c2 or not common:
                continue
            union = c1 | c2
            for e in elements(common):
                allowed = union & ~(1 << e)
                within = inside(allowed)
                if system == "C3":
                    if not within and report(AxiomViolation(system, c1, c2, e=e)):
                        return CheckResult(False, violations, total)
                elif system == "C3-strong":
                    for f in elements(c1 & ~c2):
                        if not any(c >> f & 1 for c in within):
                            if report(AxiomViolation(system, c1, c2, e=e, f=f)):
                                return CheckResult(False, violations, total)
                else:
                    if _symmetric_system(system, members, c1, c2, e, within, report):
                        return CheckResult(False, violations, total)
    return CheckResult(total == 0, violations, total)


def _symmetric_system(system, members, c1, c2, e, within, report) -> bool:
    """The (C3)'' family; returns True when the caller should stop."""
    union = c1 | c2
    weak = system == "C3pp-weak"
    firsts = elements(c1) if weak else elements(c1 & ~c2)
    seconds = elements(c2) if weak else elements(c2 & ~c1)
    for e1 in firsts:
        for e2 in seconds:
            if e1 == e2 or e in (e1, e2):
                continue
            premise_set = union & ~((1 << e1) | (1 << e2))
            if any(c & ~premise_set == 0 for c in members):
                continue
            need = (1 << e1) | (1 << e2)
            hits = [c for c in within if c & need == need]
            note = ""
            if weak:
                literal = (c1 & ~(1 << e1)) | (c2 & ~(1 << e2))
                literal_holds = not any(c & ~literal == 0 for c in members)
                note = f"union-reading premise holds; literal premise holds: {literal_holds}"
            if not hits:
                if not note:
                    note = "premise holds but no member contains {e1,e2}"
                if report(AxiomViolation(system, c1, c2, e1, e2, e, note=note)):
                    return True
            elif system == "C3pp-unique" and len(within) != 1:
                extra = ", ".join(format_subset(c) for c in within)
                if report(AxiomViolation(system, c1, c2, e1, e2, e, note=f"several members inside: {extra}")):
                    return True
    return False

