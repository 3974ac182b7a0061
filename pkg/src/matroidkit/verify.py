"""Instance catalogs and the exhaustive verification harness.

Every sweep walks a finite, deterministic catalog and records a violation
for each instance where the checked statement fails.  Instances are
encoded with ``textio.encode_instance`` so any violation can be replayed.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from .construct import (
    K23_NAMES,
    GF2Matrix,
    Multigraph,
    PointedMatroid,
    as_matroid,
    cycle_matroid,
    direct_sum,
    free_extension,
    from_gf2,
    g_family,
    k23_graph,
    l_family,
    n5,
    named,
    registry,
    series_connection,
    su,
    uniform,
)
from .core import (
    CircuitFamily,
    Matroid,
    canonical_form,
    canonical_order,
    dependency_table,
    elements,
    is_binary,
    mask_indices,
    popcount_table,
    to_mask,
)
from .errors import InputError
from .props import (
    axiom_check,
    has_k_skew,
    has_su_series_minor,
    is_circuit_difference,
    is_unbreakable,
    series_minor_keys,
    series_moves,
    skew_circuit_pairs,
    ssce_check,
)
from .textio import encode_instance

logger = logging.getLogger(__name__)

CATALOG_FAMILIES = ("graphic", "binary", "uniform", "named", "clutter")
G_SKEW_SIZES = {1: (2, 2), 2: (2, 2), 3: (2, 3), 4: (2, 4), 5: (2, 2)}
# catalog families that only produce binary matroids
BINARY_FAMILIES = ("graphic", "binary")
# work cap for the series-minor searches the harness runs
HARNESS_CAP = 12


# -------------------------------------------------
# Clutters
# -------------------------------------------------
def _check_clutter_n(n: int, allow_large: bool) -> None:
    top = 6 if allow_large else 5
    if not 1 <= n <= top:
        hint = "" if allow_large or n != 6 else " (n = 6 needs allow_large)"
        raise InputError(f"clutter ground size must be in 1..{top}, got {n}{hint}")


def enumerate_clutters(n: int) -> Iterator[CircuitFamily]:
    """Every antichain of nonempty subsets of an n-set, exactly once.

    Subsets are taken in canonical order, so a later subset is never
    contained in an earlier one and only supersets need blocking.
    """
    if not 1 <= n <= 6:
        raise InputError(f"clutters are enumerated for 1 <= n <= 6, got {n}")
    subsets = canonical_order(range(1, 1 << n))
    count = len(subsets)
    above = []
    for s in subsets:
        bits = 0
        for j, t in enumerate(subsets):
            if t != s and t & s == s:
                bits |= 1 << j
        above.append(bits)

    stack: list[tuple[tuple[int, ...], int, int]] = [((), (1 << count) - 1, 0)]
    while stack:
        chosen, avail, start = stack.pop()
        yield CircuitFamily(n, tuple(subsets[j] for j in chosen))
        children = []
        rest = avail >> start
        j = start
        while rest:
            if rest & 1:
                children.append((chosen + (j,), avail & ~above[j], j + 1))
            rest >>= 1
            j += 1
        stack.extend(reversed(children))


def augmentation_oracle(family: CircuitFamily | Iterable, n: int) -> bool:
    """Matroid test by the independence augmentation axiom.

    Independent sets are those containing no member; the family is a circuit
    set iff for independent I, J with |J| = |I| + 1 some x in J - I keeps
    I + x independent.
    """
    members = family.members if isinstance(family, CircuitFamily) else CircuitFamily.from_sets(n, family).members
    independent = ~dependency_table(n, members)
    idx = mask_indices(n)
    sizes = popcount_table(n)
    extendable = np.zeros(1 << n, dtype=np.int64)
    for x in range(n):
        bit = 1 << x
        ok = independent[idx | bit] & ((idx & bit) == 0)
        extendable |= np.where(ok, bit, 0)
    pair = independent[:, None] & independent[None, :] & (sizes[None, :] == sizes[:, None] + 1)
    helped = ((idx[None, :] & ~idx[:, None]) & extendable[:, None]) != 0
    return not bool((pair & ~helped).any())


# -------------------------------------------------
# Catalogs
# -------------------------------------------------
@dataclass(frozen=True)
class CatalogSpec:
    family: str
    max_edges: int = 8
    max_rank: int = 3
    max_cols: int = 7
    max_n: int = 4
    connected_only: bool = True
    dedup: bool = True
    allow_large: bool = False

    def __post_init__(self):
        if self.family not in CATALOG_FAMILIES:
            raise InputError(f"unknown catalog family {self.family!r}; expected one of {', '.join(CATALOG_FAMILIES)}")
        for name in ("max_edges", "max_rank", "max_cols", "max_n"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive")
        if not self.allow_large:
            if self.family == "graphic" and self.max_edges > 12:
                raise InputError("graphic catalogs above 12 edges need allow_large")
            if self.family == "binary" and self.max_cols > 12:
                raise InputError("binary catalogs above 12 columns need allow_large")
        if self.family == "clutter":
            _check_clutter_n(self.max_n, self.allow_large)

    def as_dict(self) -> dict:
        common = {"family": self.family, "connected_only": self.connected_only}
        bounds = {
            "graphic": {"max_edges": self.max_edges},
            "binary": {"max_rank": self.max_rank, "max_cols": self.max_cols},
            "uniform": {"max_n": self.max_n},
            "clutter": {"max_n": self.max_n},
            "named": {},
        }[self.family]
        return {**common, **bounds}


def _graph_key(vertex_count: int, edges: tuple[tuple[int, int], ...]) -> tuple:
    return vertex_count, canonical_form(vertex_count, [(1 << u) | (1 << v) for u, v in edges])


def connected_multigraphs(max_edges: int, loops: bool = True) -> Iterator[Multigraph]:
    """Connected multigraphs with 1..max_edges edges, one per isomorphism class.

    Each is grown from a smaller one by adding a loop, an edge between
    existing vertices, or a pendant edge to a new vertex; removing a loop,
    a non-bridge edge or a leaf reverses every such step.
    """
    level = {_graph_key(1, ()): (1, ())}
    for size in range(1, max_edges + 1):
        following: dict[tuple, tuple[int, tuple]] = {}
        for vertex_count, edges in level.values():
            options = [(u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)]
            options += [(u, vertex_count) for u in range(vertex_count)]
            if loops:
                options += [(u, u) for u in range(vertex_count)]
            for u, v in options:
                grown = (max(vertex_count, v + 1), edges + ((u, v),))
                key = _graph_key(*grown)
                if key not in following:
                    following[key] = grown
        logger.debug("multigraphs with %d edges: %d", size, len(following))
        for vertex_count, edges in following.values():
            yield Multigraph(vertex_count, edges)
        level = following


def _graphic(spec: CatalogSpec) -> Iterator[Matroid]:
    if spec.connected_only:
        # the only connected graphic matroid with a loop is a single loop
        yield uniform(0, 1)
    for graph in connected_multigraphs(spec.max_edges, loops=not spec.connected_only):
        yield cycle_matroid(graph)


def _binary(spec: CatalogSpec) -> Iterator[Matroid]:
    for r in range(1, spec.max_rank + 1):
        vectors = range(1, 1 << r)
        for c in range(1, min(spec.max_cols, len(vectors)) + 1):
            for columns in combinations(vectors, c):
                rows = [[col >> i & 1 for col in columns] for i in range(r)]
                yield from_gf2(GF2Matrix.from_rows(rows))


def _uniform(spec: CatalogSpec) -> Iterator[Matroid]:
    for n in range(0, spec.max_n + 1):
        for r in range(0, n + 1):
            yield uniform(r, n)


def _named(spec: CatalogSpec) -> Iterator[Matroid]:
    for _, value in registry():
        yield as_matroid(value)


def _clutter(spec: CatalogSpec) -> Iterator[Matroid]:
    for family in enumerate_clutters(spec.max_n):
        if augmentation_oracle(family, spec.max_n):
            yield Matroid(spec.max_n, family)


_GENERATORS: dict[str, Callable[[CatalogSpec], Iterator[Matroid]]] = {
    "graphic": _graphic,
    "binary": _binary,
    "uniform": _uniform,
    "named": _named,
    "clutter": _clutter,
}


def catalog(spec: CatalogSpec) -> Iterator[Matroid]:
    seen: set[tuple] = set()
    produced = 0
    for m in _GENERATORS[spec.family](spec):
        if spec.connected_only and not m.is_connected():
            continue
        if spec.dedup:
            key = m.canonical_key()
            if key in seen:
                continue
            seen.add(key)
        produced += 1
        yield m
    logger.info("catalog %s: %d matroids", spec.family, produced)


def catalogs(specs: Iterable[CatalogSpec]) -> Iterator[Matroid]:
    """Chained catalogs, deduplicated across families."""
    seen: set[tuple] = set()
    for spec in specs:
        for m in catalog(spec):
            key = m.canonical_key()
            if key not in seen:
                seen.add(key)
                yield m


# -------------------------------------------------
# Reports
# -------------------------------------------------
@dataclass
class VerificationReport:
    check_name: str
    parameters: dict = field(default_factory=dict)
    instances_tested: int = 0
    not_applicable: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    elapsed: float = 0.0
    counts: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    parts: list["VerificationReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0 and all(p.passed for p in self.parts)

    def add_violation(self, instance: str, witness: dict, limit: int) -> None:
        self.violation_count += 1
        if len(self.violations) < limit:
            self.violations.append({"instance": instance, "witness": witness})

    def finish(self, started: float) -> "VerificationReport":
        self.violations.sort(key=lambda v: _instance_order(v["instance"]))
        self.elapsed = round(time.perf_counter() - started, 3)
        logger.info(
            "%s: %d instances, %d violations in %.2fs",
            self.check_name, self.instances_tested, self.violation_count, self.elapsed,
        )
        return self

    def summary(self) -> str:
        status = "passed" if self.passed else "FAILED"
        text = f"{self.check_name}: instances={self.instances_tested}, violations={self.violation_count}, {status}"
        if self.not_applicable:
            text += f", not-applicable={self.not_applicable}"
        return text

    def as_records(self) -> list[dict]:
        """One record per violation plus a closing summary record."""
        records = [
            {"check": self.check_name, "instance": v["instance"], "verdict": "fail",
             "witnesses": [v["witness"]], "params": self.parameters}
            for v in self.violations
        ]
        for part in self.parts:
            records += part.as_records()
        records.append({
            "check": self.check_name,
            "instance": None,
            "verdict": "pass" if self.passed else "fail",
            "witnesses": [],
            "params": {**self.parameters, "instances_tested": self.instances_tested,
                       "not_applicable": self.not_applicable, "violation_count": self.violation_count,
                       "counts": self.counts, "notes": self.notes, "elapsed": self.elapsed},
        })
        return records


def _instance_order(code: str) -> tuple:
    head, _, body = code.partition(":")
    return (int(head) if head.isdigit() else 0, body)


def _fan_out(func: Callable, codes: Iterable, workers: int) -> Iterator:
    if workers <= 1:
        return map(func, codes)
    pool = ProcessPoolExecutor(max_workers=workers)

    def drain():
        with pool:
            yield from pool.map(func, codes, chunksize=16)

    return drain()


def _from_code(code: tuple) -> Matroid:
    n, circuits = code
    return Matroid(n, CircuitFamily(n, circuits))


# -------------------------------------------------
# Four-way equivalence for connected matroids
# -------------------------------------------------
def theorem1_row(m: Matroid, cap: int = HARNESS_CAP) -> dict:
    su_hit = has_su_series_minor(m, cap=cap, allow_large=True)
    return {
        "ssce": ssce_check(m, limit=1).holds,
        "no_skew_pair": not skew_circuit_pairs(m),
        "no_su_minor": not su_hit.found,
        "dual_unbreakable": is_unbreakable(m.dual()),
        "su": [su_hit.k, su_hit.l] if su_hit.found else None,
    }


def _theorem1_task(code: tuple) -> tuple[str, dict | None]:
    m = _from_code(code)
    row = theorem1_row(m)
    agree = len({row["ssce"], row["no_skew_pair"], row["no_su_minor"], row["dual_unbreakable"]}) == 1
    return encode_instance(m), None if agree else row


def verify_theorem1(spec: CatalogSpec | Iterable[CatalogSpec], workers: int = 1, limit: int = 100) -> VerificationReport:
    specs = [spec] if isinstance(spec, CatalogSpec) else list(spec)
    report = VerificationReport("theorem1", {"catalogs": [s.as_dict() for s in specs]})
    started = time.perf_counter()
    codes = []
    for m in catalogs(specs):
        if not m.is_connected():
            report.not_applicable += 1
            continue
        codes.append((m.n, m.circuits))
    holding = 0
    for instance, row in _fan_out(_theorem1_task, codes, workers):
        report.instances_tested += 1
        if row is None:
            holding += 1
        else:
            report.add_violation(instance, row, limit)
    report.counts = {"all_four_hold": holding}
    return report.finish(started)


# -------------------------------------------------
# Three skew circuits in binary matroids
# -------------------------------------------------
def _l_keys() -> dict[int, tuple]:
    return {i: l_family(i).matroid.canonical_key() for i in range(1, 6)}


def _theorem3_task(code: tuple) -> tuple[str, str, dict | None]:
    n, circuits, known_binary = code
    m = _from_code((n, circuits))
    instance = encode_instance(m)
    if not m.is_connected():
        return instance, "skip", None
    found, family = has_k_skew(m, 3)
    if not found or not (known_binary or is_binary(m)):
        return instance, "skip", None
    keys = series_minor_keys(m, 7, cap=HARNESS_CAP, allow_large=True)
    hits = [i for i, key in _l_keys().items() if key in keys]
    if hits:
        return instance, "pass", None
    return instance, "fail", {"skew_circuits": [elements(c) for c in family.circuits]}


def verify_theorem3(spec: CatalogSpec | Iterable[CatalogSpec], workers: int = 1, limit: int = 100) -> VerificationReport:
    specs = [spec] if isinstance(spec, CatalogSpec) else list(spec)
    report = VerificationReport("theorem3", {"catalogs": [s.as_dict() for s in specs]})
    started = time.perf_counter()
    seen: set[tuple] = set()
    codes = []
    for s in specs:
        for m in catalog(s):
            key = m.canonical_key()
            if key not in seen:
                seen.add(key)
                codes.append((m.n, m.circuits, s.family in BINARY_FAMILIES))
    for instance, verdict, witness in _fan_out(_theorem3_task, codes, workers):
        if verdict == "skip":
            report.not_applicable += 1
            continue
        report.instances_tested += 1
        if verdict == "fail":
            report.add_violation(instance, witness, limit)
    return report.finish(started)


# -------------------------------------------------
# Circuit axiom equivalence on clutters
# -------------------------------------------------
def verify_axiom_equivalence(n: int, allow_large: bool = False, limit: int = 100) -> VerificationReport:
    _check_clutter_n(n, allow_large)
    report = VerificationReport("axiom", {"n": n})
    started = time.perf_counter()
    counts = {"families": 0, "c3pp": 0, "c3pp_unique": 0, "c3": 0, "oracle": 0}
    for family in enumerate_clutters(n):
        report.instances_tested += 1
        verdicts = {
            "c3pp": axiom_check(family, n, "C3pp", exhaustive=False).holds,
            "c3pp_unique": axiom_check(family, n, "C3pp-unique", exhaustive=False).holds,
            "c3": axiom_check(family, n, "C3", exhaustive=False).holds,
            "oracle": augmentation_oracle(family, n),
        }
        counts["families"] += 1
        for name, value in verdicts.items():
            counts[name] += value
        if len(set(verdicts.values())) > 1:
            code = f"{n}:" + ";".join(",".join(map(str, elements(c))) for c in family.members)
            report.add_violation(code, verdicts, limit)
    report.counts = counts
    logger.info("clutters on %d elements: %d families, %d matroids", n, counts["families"], counts["oracle"])
    return report.finish(started)


# -------------------------------------------------
# Lemma suite
# -------------------------------------------------
def _part(name: str) -> VerificationReport:
    return VerificationReport(f"lemmas.{name}")


def _series_closure_part(instances: list[Matroid], limit: int) -> VerificationReport:
    report = _part("a")
    started = time.perf_counter()
    for m in instances:
        if not ssce_check(m, limit=1).holds:
            continue
        report.instances_tested += 1
        for op, e, child in series_moves(m):
            if not ssce_check(child, limit=1).holds:
                report.add_violation(encode_instance(m), {"move": op, "element": e}, limit)
                break
    return report.finish(started)


def _two_cocircuit_part(instances: list[Matroid], limit: int) -> VerificationReport:
    report = _part("b")
    started = time.perf_counter()
    for m in instances:
        if not m.is_connected():
            continue
        for pair in skew_circuit_pairs(m):
            rest = elements(m.ground & ~pair.union)
            if len(rest) != 1:
                continue
            e = rest[0]
            report.instances_tested += 1
            if any(d.bit_count() == 2 and not d >> e & 1 for d in m.cocircuits()):
                continue
            k, l = (s + 1 for s in pair.sizes)
            if m.canonical_key() != su(k, l).matroid.canonical_key():
                report.add_violation(
                    encode_instance(m), {"D1": elements(pair.circuits[0]), "D2": elements(pair.circuits[1]), "e": e},
                    limit,
                )
    return report.finish(started)


def _lemma_c_pool() -> tuple[list[PointedMatroid], list[PointedMatroid]]:
    left = [
        PointedMatroid(uniform(1, 3), 2),
        PointedMatroid(uniform(2, 4), 3),
        n5(),
        PointedMatroid(named("MK4"), 0),
    ]
    right = [
        PointedMatroid(uniform(1, 3), 2),
        PointedMatroid(uniform(1, 4), 3),
        PointedMatroid(uniform(2, 4), 3),
        n5(),
        PointedMatroid(named("MK4"), 0),
    ]
    return left, right


def _single_circuit_part(limit: int) -> VerificationReport:
    report = _part("c")
    started = time.perf_counter()
    left, right = _lemma_c_pool()
    for p1 in left:
        for p2 in right:
            avoiding = [c for c in p2.matroid.circuits if not c >> p2.basepoint & 1]
            host = series_connection(p1, p2)
            m = host.matroid
            if not avoiding or not m.is_connected():
                continue
            report.instances_tested += 1
            k_max = p2.matroid.n
            smallest = p1.matroid.n + 2
            keys = series_minor_keys(m, smallest, cap=HARNESS_CAP, allow_large=True)
            hit = None
            for k in range(3, k_max + 1):
                target = series_connection(p1, PointedMatroid(uniform(k - 2, k), k - 1))
                if target.matroid.canonical_key() in keys:
                    hit = (k, target)
                    break
            if hit is None:
                report.add_violation(encode_instance(m), {"left": p1.matroid.n, "right": p2.matroid.n}, limit)
                continue
            k, target = hit
            t = target.matroid
            # the left side keeps its indices; the uniform side follows it
            left_side = ((1 << p1.matroid.n) - 1) & ~(1 << target.basepoint)
            uniform_side = t.ground & ~((1 << p1.matroid.n) - 1)
            if t.rank(left_side) + t.rank(uniform_side) != t.rank(left_side | uniform_side):
                report.add_violation(encode_instance(m), {"k": k, "reason": "sides not skew"}, limit)
    return report.finish(started)


def _g_keys() -> dict[int, tuple]:
    return {i: g_family(i).matroid.canonical_key() for i in range(1, 6)}


def _g_family_part(instances: list[Matroid], limit: int) -> VerificationReport:
    report = _part("d")
    started = time.perf_counter()
    for i, sizes in G_SKEW_SIZES.items():
        pointed = g_family(i)
        m = pointed.matroid
        report.instances_tested += 1
        pairs = skew_circuit_pairs(m, avoiding=pointed.basepoint)
        found = {
            "connected": m.is_connected(),
            "binary": is_binary(m),
            "pairs": [[elements(c) for c in p.circuits] for p in pairs],
        }
        if not (found["connected"] and found["binary"] and len(pairs) == 1 and pairs[0].sizes == sizes):
            report.add_violation(f"G:{i}", found, limit)
    if g_family(3).matroid.canonical_key() == g_family(5).matroid.canonical_key():
        report.notes.append("G(3) and G(5) are isomorphic as unlabeled matroids")
    else:
        report.add_violation("G:3", {"reason": "G(3) and G(5) differ"}, limit)

    g_keys = set(_g_keys().values())
    for m in instances:
        if not m.is_connected() or not is_binary(m):
            continue
        if not any(skew_circuit_pairs(m, avoiding=e) for e in range(m.n)):
            continue
        report.instances_tested += 1
        if not g_keys & series_minor_keys(m, 5, cap=HARNESS_CAP, allow_large=True):
            report.add_violation(encode_instance(m), {"reason": "no G(i) series minor"}, limit)
    return report.finish(started)


def _circuit_difference_part(instances: list[Matroid], limit: int) -> VerificationReport:
    report = _part("e")
    started = time.perf_counter()
    for m in instances:
        if not m.is_connected():
            continue
        report.instances_tested += 1
        ssce = ssce_check(m, limit=1).holds
        difference = is_circuit_difference(m)
        if ssce != difference:
            report.add_violation(encode_instance(m), {"ssce": ssce, "circuit_difference": difference}, limit)
    return report.finish(started)


def free_extension_facts(circuit_sizes: tuple[int, ...]) -> dict:
    """Facts about freely extending a direct sum of circuits."""
    base = uniform(circuit_sizes[0] - 1, circuit_sizes[0])
    for s in circuit_sizes[1:]:
        base = direct_sum(base, uniform(s - 1, s))
    pointed = free_extension(base)
    m, e = pointed.matroid, pointed.basepoint
    k = len(circuit_sizes)
    images = [d | (1 << e) for d in base.cocircuits() if d.bit_count() == 2]
    cocircuits = set(m.cocircuits())
    proper = [
        key for key in series_minor_keys(m, 0, cap=HARNESS_CAP, allow_large=True) if key != m.canonical_key()
    ]
    offending = []
    for key in proper:
        minor = Matroid.from_key(key)
        if minor.is_connected() and has_k_skew(minor, k)[0]:
            offending.append(encode_instance(minor))
    return {
        "instance": encode_instance(m),
        "connected": m.is_connected(),
        "binary": is_binary(m),
        "has_k_skew": has_k_skew(m, k)[0],
        "cocircuits_lifted": all(d in cocircuits for d in images),
        "proper_minors_with_k_skew": offending,
        "isomorphic_to_n5": m.canonical_key() == n5().matroid.canonical_key(),
    }


def _free_extension_part(limit: int) -> VerificationReport:
    report = _part("f")
    started = time.perf_counter()
    for sizes in ((3, 3), (3, 3, 3)):
        report.instances_tested += 1
        facts = free_extension_facts(sizes)
        ok = (
            facts["connected"]
            and not facts["binary"]
            and facts["has_k_skew"]
            and facts["cocircuits_lifted"]
            and not facts["proper_minors_with_k_skew"]
        )
        if not ok:
            report.add_violation(facts["instance"], {"sizes": list(sizes), **facts}, limit)
    small = free_extension_facts((2, 2))
    report.notes.append(
        f"free extension of two 2-circuits: binary={small['binary']}, isomorphic to N5={small['isomorphic_to_n5']}"
    )
    report.notes.append("minimality is checked over proper series minors")
    return report.finish(started)


def k23_weak_variant() -> dict:
    """The weakened symmetric axiom evaluated on K_{2,3} with its named edges."""
    m = cycle_matroid(k23_graph())
    index = {name: i for i, name in enumerate(K23_NAMES)}
    c1 = to_mask(index[x] for x in ("e1", "a", "e", "e2"))
    c2 = to_mask(index[x] for x in ("b", "c", "e", "e2"))
    e1, e2, e = index["e1"], index["e2"], index["e"]
    premise = (c1 | c2) & ~((1 << e1) | (1 << e2))
    inside = [c for c in m.circuits if c & ~((c1 | c2) & ~(1 << e)) == 0]
    return {
        "premise_contains_circuit": any(c & ~premise == 0 for c in m.circuits),
        "circuits_avoiding_e": [[K23_NAMES[x] for x in elements(c)] for c in inside],
        "omits_e2": all(not c >> e2 & 1 for c in inside),
        "c3pp_weak_holds": axiom_check(m.family, m.n, "C3pp-weak").holds,
    }


def _k23_part(limit: int) -> VerificationReport:
    report = _part("g")
    started = time.perf_counter()
    report.instances_tested = 1
    facts = k23_weak_variant()
    if (
        facts["premise_contains_circuit"]
        or len(facts["circuits_avoiding_e"]) != 1
        or not facts["omits_e2"]
        or facts["c3pp_weak_holds"]
    ):
        report.add_violation("K23", facts, limit)
    else:
        report.notes.append(f"unique circuit in (C1 u C2) - e: {{{','.join(facts['circuits_avoiding_e'][0])}}}")
    return report.finish(started)


def _uniqueness_part(instances: list[Matroid], limit: int) -> VerificationReport:
    report = _part("h")
    started = time.perf_counter()
    for m in instances:
        report.instances_tested += 1
        for system in ("C3", "C3-strong", "C3pp-unique"):
            result = axiom_check(m.family, m.n, system, limit=1)
            if not result.holds:
                report.add_violation(encode_instance(m), result.violations[0].as_dict(), limit)
                break
    return report.finish(started)


def verify_lemma_suite(
    graphic_max_edges: int = 7,
    binary_max_rank: int = 3,
    binary_max_cols: int = 6,
    uniform_max: int = 8,
    limit: int = 100,
) -> VerificationReport:
    started = time.perf_counter()
    specs = [
        CatalogSpec("graphic", max_edges=graphic_max_edges),
        CatalogSpec("binary", max_rank=binary_max_rank, max_cols=binary_max_cols),
        CatalogSpec("uniform", max_n=uniform_max),
        CatalogSpec("named"),
    ]
    instances = list(catalogs(specs))
    graphic = list(catalog(specs[0]))
    report = VerificationReport("lemmas", {"catalogs": [s.as_dict() for s in specs]})
    report.parts = [
        _series_closure_part(instances, limit),
        _two_cocircuit_part(instances, limit),
        _single_circuit_part(limit),
        _g_family_part(instances, limit),
        _circuit_difference_part(graphic, limit),
        _free_extension_part(limit),
        _k23_part(limit),
        _uniqueness_part(instances, limit),
    ]
    report.instances_tested = sum(p.instances_tested for p in report.parts)
    return report.finish(started)

