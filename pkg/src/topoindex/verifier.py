"""Exhaustive verification of identities and extremal bounds on small graphs.

Every graph of a class (labeled trees, or labeled connected graphs) of each
order ``n`` is scanned once. A scan splits the rank space into chunks, reduces
each chunk to a pure :class:`ChunkResult`, and merges chunk results with an
associative, commutative rule: extremal values by min/max, ties broken by the
lexicographically smallest sorted edge list. Reports therefore do not depend
on chunking or on the number of worker processes.

Claims come in three kinds:

``identity``
    an equation between invariants that must hold on every graph of a class.
``exact-extreme``
    the exact minimum or maximum over a class, as a closed form attained by a
    named family (path, star, complete graph).
``stated-bound``
    a bound as stated in the literature this package follows. These are
    checked as written and may be reported as failing; that is information
    about the statement, not about the implementation.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .batch import batch_invariants, decode_key, lexmin_row, sorted_edge_keys
from .enumeration import (
    GRAPH_GUARD,
    TREE_GUARD,
    check_graph_guard,
    check_tree_guard,
    connected_batch,
    prufer_batch,
    tree_count,
    vertex_pairs,
)
from .graph import Graph, complete_graph, format_edge_list, path_graph, star_graph
from .indices import INDEX_LABELS, ev_zagreb, ve_zagreb_alpha, ve_zagreb_beta, ve_zagreb_mu

log = logging.getLogger(__name__)

TREES = "trees"
CONNECTED = "connected"
TRIANGLE_FREE = "triangle-free connected"

EXTREMAL_INDICES: tuple[str, ...] = ("s_ev", "s_alpha", "s_beta", "s_mu")
MAX_COUNTEREXAMPLES = 5
CHUNK = 1 << 16

_SCALAR_INDEX: dict[str, Callable[[Graph], int]] = {
    "s_ev": ev_zagreb,
    "s_alpha": ve_zagreb_alpha,
    "s_beta": ve_zagreb_beta,
    "s_mu": ve_zagreb_mu,
}

_FAMILIES: dict[str, Callable[[int], Graph]] = {
    "path": path_graph,
    "star": star_graph,
    "complete": complete_graph,
}


def family_size(family: str, n: int) -> int:
    """Number of labeled graphs on ``n`` vertices in a named family."""
    if family == "path":
        return 1 if n <= 2 else math.factorial(n) // 2
    if family == "star":
        return 1 if n <= 2 else n
    if family == "complete":
        return 1
    raise KeyError(family)


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class Identity:
    claim_id: str
    statement: str
    graph_class: str
    # (invariants) -> (holds mask, observed, claimed)
    check: Callable[[dict], tuple[np.ndarray, np.ndarray, np.ndarray]]
    applies: Callable[[dict], np.ndarray] | None = None


def _eq(lhs: str, rhs: Callable[[dict], np.ndarray]):
    def check(inv):
        left = inv[lhs]
        right = rhs(inv)
        return left == right, left, right

    return check


IDENTITIES: tuple[Identity, ...] = (
    Identity(
        "total-ev-equals-total-ve",
        "sum of ev-degrees over edges equals sum of ve-degrees over vertices",
        CONNECTED,
        _eq("t_ev", lambda inv: inv["t_ve"]),
    ),
    Identity(
        "total-ev-equals-m1-minus-3-triangles",
        "total ev-degree = M1 - 3 * (number of triangles)",
        CONNECTED,
        _eq("t_ev", lambda inv: inv["m1"] - 3 * inv["triangles"]),
    ),
    Identity(
        "tree-total-degrees-equal-m1",
        "for trees, total ev-degree = total ve-degree = M1",
        TREES,
        lambda inv: (
            (inv["t_ev"] == inv["m1"]) & (inv["t_ve"] == inv["m1"]),
            inv["t_ev"],
            inv["m1"],
        ),
    ),
    Identity(
        "tree-ve-degree-is-neighbour-degree-sum",
        "for trees, ve-degree of v = sum of degrees of the neighbours of v",
        TREES,
        lambda inv: (
            inv["ve_is_neighbour_degree_sum"],
            inv["ve_is_neighbour_degree_sum"].astype(np.int64),
            np.ones_like(inv["m1"]),
        ),
    ),
    Identity(
        "tree-sbeta-equals-2-m2",
        "for trees, Sbeta = 2 * M2",
        TREES,
        _eq("s_beta", lambda inv: 2 * inv["m2"]),
    ),
    Identity(
        "triangle-free-s-equals-f-plus-2-m2",
        "for triangle-free connected graphs, S = F + 2 * M2",
        TRIANGLE_FREE,
        _eq("s_ev", lambda inv: inv["forgotten"] + 2 * inv["m2"]),
        applies=lambda inv: inv["triangles"] == 0,
    ),
    Identity(
        "tree-s-equals-f-plus-sbeta",
        "for trees, S = F + Sbeta",
        TREES,
        _eq("s_ev", lambda inv: inv["forgotten"] + inv["s_beta"]),
    ),
)


# ---------------------------------------------------------------------------
# bound claims


@dataclass(frozen=True)
class BoundClaim:
    claim_id: str
    kind: str  # "exact-extreme" | "stated-bound"
    index: str
    graph_class: str  # TREES | CONNECTED
    side: str  # "lower" | "upper"
    family: str
    formula: Callable[[int], int]
    formula_text: str
    n_min: int

    @property
    def statement(self) -> str:
        label = INDEX_LABELS[self.index]
        rel = ">=" if self.side == "lower" else "<="
        return (
            f"{label}(G) {rel} {self.formula_text} over {self.graph_class} with n >= {self.n_min}, "
            f"equality for the {self.family}"
        )


def _claim(kind, index, cls, side, family, formula, text, n_min):
    tag = "exact" if kind == "exact-extreme" else "stated"
    short = "tree" if cls == TREES else "connected"
    label = INDEX_LABELS[index]
    cid = f"{tag}:{label}-{short}-{'min' if side == 'lower' else 'max'}"
    return BoundClaim(cid, kind, index, cls, side, family, formula, text, n_min)


EXACT = "exact-extreme"
STATED = "stated-bound"

BOUND_CLAIMS: tuple[BoundClaim, ...] = (
    # exact extremes over trees
    _claim(EXACT, "s_ev", TREES, "lower", "path", lambda n: 16 * n - 30, "16n-30", 3),
    _claim(EXACT, "s_ev", TREES, "upper", "star", lambda n: n * n * (n - 1), "n^2(n-1)", 3),
    _claim(EXACT, "s_alpha", TREES, "lower", "path", lambda n: 16 * n - 38, "16n-38", 5),
    _claim(EXACT, "s_alpha", TREES, "upper", "star", lambda n: n * (n - 1) ** 2, "n(n-1)^2", 5),
    _claim(EXACT, "s_beta", TREES, "lower", "path", lambda n: 8 * n - 16, "8n-16", 5),
    _claim(EXACT, "s_beta", TREES, "upper", "star", lambda n: 2 * (n - 1) ** 2, "2(n-1)^2", 5),
    _claim(EXACT, "s_mu", TREES, "lower", "path", lambda n: 16 * n - 44, "16n-44", 5),
    _claim(EXACT, "s_mu", TREES, "upper", "star", lambda n: (n - 1) ** 3, "(n-1)^3", 5),
    # exact extremes over connected graphs
    _claim(EXACT, "s_ev", CONNECTED, "lower", "path", lambda n: 16 * n - 30, "16n-30", 3),
    _claim(EXACT, "s_alpha", CONNECTED, "lower", "path", lambda n: 16 * n - 38, "16n-38", 5),
    _claim(EXACT, "s_beta", CONNECTED, "lower", "path", lambda n: 8 * n - 16, "8n-16", 5),
    _claim(EXACT, "s_mu", CONNECTED, "lower", "path", lambda n: 16 * n - 44, "16n-44", 5),
    _claim(EXACT, "s_ev", CONNECTED, "upper", "complete", lambda n: n**3 * (n - 1) // 2, "n^3(n-1)/2", 3),
    _claim(EXACT, "s_alpha", CONNECTED, "upper", "complete", lambda n: n**3 * (n - 1) ** 2 // 4, "n^3(n-1)^2/4", 3),
    _claim(EXACT, "s_beta", CONNECTED, "upper", "complete", lambda n: n**2 * (n - 1) ** 2 // 2, "n^2(n-1)^2/2", 3),
    _claim(EXACT, "s_mu", CONNECTED, "upper", "complete", lambda n: n**3 * (n - 1) ** 3 // 8, "n^3(n-1)^3/8", 3),
    # bounds as stated in the source literature
    _claim(STATED, "s_ev", CONNECTED, "lower", "path", lambda n: 16 * n - 30, "16n-30", 3),
    _claim(STATED, "s_ev", CONNECTED, "upper", "complete", lambda n: n**3 * (n - 1) // 2, "n^3(n-1)/2", 3),
    _claim(STATED, "s_ev", TREES, "lower", "path", lambda n: 16 * n - 30, "16n-30", 3),
    _claim(STATED, "s_ev", TREES, "upper", "star", lambda n: n * n * (n - 1), "n^2(n-1)", 3),
    _claim(STATED, "s_alpha", CONNECTED, "lower", "path", lambda n: 16 * n - 6, "16n-6", 5),
    _claim(STATED, "s_alpha", CONNECTED, "upper", "complete", lambda n: n**3 * (n - 1) ** 2 // 4, "n^3(n-1)^2/4", 5),
    _claim(STATED, "s_alpha", TREES, "lower", "path", lambda n: 16 * n - 6, "16n-6", 5),
    _claim(STATED, "s_alpha", TREES, "upper", "star", lambda n: n * (n - 1) ** 2, "n(n-1)^2", 5),
    _claim(STATED, "s_beta", CONNECTED, "lower", "path", lambda n: 8 * n - 16, "8n-16", 5),
    _claim(STATED, "s_beta", CONNECTED, "upper", "complete", lambda n: n**2 * (n - 1) ** 2 // 2, "n^2(n-1)^2/2", 5),
    _claim(STATED, "s_beta", TREES, "lower", "path", lambda n: 16 * n - 6, "16n-6", 5),
    _claim(STATED, "s_beta", TREES, "upper", "star", lambda n: 2 * n * (n - 1), "2n(n-1)", 5),
    _claim(STATED, "s_mu", CONNECTED, "lower", "path", lambda n: 16 * n - 44, "16n-44", 5),
    _claim(STATED, "s_mu", CONNECTED, "upper", "complete", lambda n: n**3 * (n - 1) ** 3 // 8, "n^3(n-1)^3/8", 5),
    _claim(STATED, "s_mu", TREES, "lower", "path", lambda n: 16 * n - 6, "16n-6", 5),
    _claim(STATED, "s_mu", TREES, "upper", "star", lambda n: (n - 1) ** 3, "(n-1)^3", 5),
)


# ---------------------------------------------------------------------------
# scanning


@dataclass
class Extreme:
    value: int
    key: tuple[int, ...]
    count: int

    def merge(self, other: "Extreme", better: Callable[[int, int], bool]) -> "Extreme":
        if better(other.value, self.value):
            return other
        if better(self.value, other.value):
            return self
        return Extreme(self.value, min(self.key, other.key), self.count + other.count)


@dataclass
class IdentityTally:
    checked: int = 0
    failures: int = 0
    # (key, observed, claimed), smallest keys kept
    examples: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)

    def merge(self, other: "IdentityTally") -> "IdentityTally":
        examples = sorted(self.examples + other.examples)[:MAX_COUNTEREXAMPLES]
        return IdentityTally(self.checked + other.checked, self.failures + other.failures, examples)


@dataclass
class ChunkResult:
    count: int
    minima: dict[str, Extreme]
    maxima: dict[str, Extreme]
    identities: dict[str, IdentityTally]

    def merge(self, other: "ChunkResult") -> "ChunkResult":
        if self.count == 0:
            return other
        if other.count == 0:
            return self
        return ChunkResult(
            self.count + other.count,
            {k: self.minima[k].merge(other.minima[k], lambda a, b: a < b) for k in self.minima},
            {k: self.maxima[k].merge(other.maxima[k], lambda a, b: a > b) for k in self.maxima},
            {k: self.identities[k].merge(other.identities[k]) for k in self.identities},
        )


@dataclass
class ScanResult:
    graph_class: str
    n: int
    count: int
    minima: dict[str, Extreme]
    maxima: dict[str, Extreme]
    identities: dict[str, IdentityTally]


def _empty_chunk() -> ChunkResult:
    return ChunkResult(0, {}, {}, {})


def _reduce_chunk(n: int, graph_class: str, edges: np.ndarray, valid: np.ndarray) -> ChunkResult:
    if len(valid) == 0:
        return _empty_chunk()
    inv = batch_invariants(n, edges, valid)
    keys = sorted_edge_keys(n, edges, valid)

    def pick(values: np.ndarray, target) -> Extreme:
        hits = np.flatnonzero(values == target)
        row = hits[lexmin_row(keys[hits])]
        return Extreme(int(target), tuple(int(c) for c in keys[row]), len(hits))

    minima = {k: pick(inv[k], inv[k].min()) for k in EXTREMAL_INDICES}
    maxima = {k: pick(inv[k], inv[k].max()) for k in EXTREMAL_INDICES}
    tallies = {}
    for ident in IDENTITIES:
        if (ident.graph_class == TREES) != (graph_class == TREES):
            continue
        ok, observed, claimed = ident.check(inv)
        scope = ident.applies(inv) if ident.applies else np.ones(len(ok), dtype=bool)
        bad = np.flatnonzero(scope & ~ok)
        examples = []
        if len(bad):
            order = np.lexsort(keys[bad].T[::-1])[:MAX_COUNTEREXAMPLES]
            for row in bad[order]:
                examples.append((tuple(int(c) for c in keys[row]), int(observed[row]), int(claimed[row])))
        tallies[ident.claim_id] = IdentityTally(int(scope.sum()), len(bad), examples)
    return ChunkResult(len(valid), minima, maxima, tallies)


def _tree_chunk(args: tuple[int, int, int]) -> ChunkResult:
    n, start, stop = args
    edges = prufer_batch(n, start, stop)
    valid = np.ones(edges.shape[:2], dtype=bool)
    return _reduce_chunk(n, TREES, edges, valid)


def _graph_chunk(args: tuple[int, int, int]) -> ChunkResult:
    n, start, stop = args
    masks, bits = connected_batch(n, start, stop)
    pairs = vertex_pairs(n)
    edges = np.broadcast_to(pairs, (len(masks),) + pairs.shape)
    return _reduce_chunk(n, CONNECTED, edges, bits)


def scan(graph_class: str, n: int, workers: int = 1, chunk: int = CHUNK) -> ScanResult:
    """Reduce every graph of ``graph_class`` on ``n`` vertices."""
    if graph_class == TREES:
        total, job = tree_count(n), _tree_chunk
    elif graph_class == CONNECTED:
        total, job = 1 << (n * (n - 1) // 2), _graph_chunk
    else:
        raise ValueError(f"unknown graph class {graph_class!r}")
    tasks = [(n, s, min(total, s + chunk)) for s in range(0, total, chunk)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, tasks))
    else:
        parts = [job(t) for t in tasks]
    merged = _empty_chunk()
    for part in parts:
        merged = merged.merge(part)
    return ScanResult(graph_class, n, merged.count, merged.minima, merged.maxima, merged.identities)


class ScanCache:
    """Memoises scans so identity and bound checks share one pass per (class, n)."""

    def __init__(self, workers: int = 1, tree_guard: int = TREE_GUARD, graph_guard: int = GRAPH_GUARD):
        self.workers = workers
        self.tree_guard = tree_guard
        self.graph_guard = graph_guard
        self._scans: dict[tuple[str, int], ScanResult] = {}

    def get(self, graph_class: str, n: int) -> ScanResult:
        if graph_class == TREES:
            check_tree_guard(n, self.tree_guard)
        else:
            check_graph_guard(n, self.graph_guard)
        key = (graph_class, n)
        if key not in self._scans:
            log.info("scanning %s on %d vertices", graph_class, n)
            self._scans[key] = scan(graph_class, n, self.workers)
        return self._scans[key]


# ---------------------------------------------------------------------------
# reports


@dataclass
class Counterexample:
    graph: Graph
    observed: int
    claimed: int
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "graph": format_edge_list(self.graph),
            "observed": self.observed,
            "claimed": self.claimed,
            "note": self.note,
        }


@dataclass
class Witnesses:
    n: int
    min_graph: Graph
    min_value: int
    min_count: int
    max_graph: Graph
    max_value: int
    max_count: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min": self.min_value,
            "min_graph": format_edge_list(self.min_graph),
            "min_count": self.min_count,
            "max": self.max_value,
            "max_graph": format_edge_list(self.max_graph),
            "max_count": self.max_count,
        }


@dataclass
class VerificationReport:
    claim_id: str
    kind: str
    statement: str
    graph_class: str
    n_range: tuple[int, int]
    graphs_checked: int
    status: str  # "holds" | "fails"
    counterexamples: list[Counterexample] = field(default_factory=list)
    witnesses: list[Witnesses] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "kind": self.kind,
            "statement": self.statement,
            "class": self.graph_class,
            "range": list(self.n_range),
            "checked": self.graphs_checked,
            "status": self.status,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "witnesses": [w.to_dict() for w in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lo, hi = self.n_range
        lines = [
            f"[{self.status.upper()}] {self.claim_id} ({self.kind})",
            f"  {self.statement}",
            f"  {self.graph_class}, n = {lo}..{hi}, {self.graphs_checked} graphs checked",
        ]
        for w in self.witnesses:
            lines.append(
                f"  n={w.n}: min {w.min_value} ({w.min_count} graphs, e.g. {list(w.min_graph.edges)}), "
                f"max {w.max_value} ({w.max_count} graphs, e.g. {list(w.max_graph.edges)})"
            )
        for c in self.counterexamples:
            note = f" [{c.note}]" if c.note else ""
            lines.append(
                f"  counterexample n={c.graph.n}: observed {c.observed}, claimed {c.claimed}{note}: "
                f"{list(c.graph.edges)}"
            )
        return "\n".join(lines)


def _graph_from_key(n: int, key: Sequence[int]) -> Graph:
    return Graph(n, decode_key(n, key))


def verify_identities(
    n_max_tree: int = 8,
    n_max_graph: int = 6,
    *,
    cache: ScanCache | None = None,
    workers: int = 1,
) -> list[VerificationReport]:
    """One report per identity, each over its full hypothesis class."""
    cache = cache or ScanCache(workers)
    reports = []
    for ident in IDENTITIES:
        on_trees = ident.graph_class == TREES
        cls = TREES if on_trees else CONNECTED
        hi = n_max_tree if on_trees else n_max_graph
        checked = 0
        counterexamples: list[Counterexample] = []
        for n in range(2, hi + 1):
            tally = cache.get(cls, n).identities[ident.claim_id]
            checked += tally.checked
            for key, observed, claimed in tally.examples:
                if len(counterexamples) < MAX_COUNTEREXAMPLES:
                    counterexamples.append(Counterexample(_graph_from_key(n, key), observed, claimed))
            if tally.failures and not tally.examples:
                raise AssertionError("failure tallied without an example")
        status = "fails" if counterexamples else "holds"
        reports.append(
            VerificationReport(
                ident.claim_id, "identity", ident.statement, ident.graph_class,
                (2, hi), checked, status, counterexamples,
            )
        )
    return reports


def _check_bound(claim: BoundClaim, lo: int, hi: int, cache: ScanCache) -> VerificationReport:
    lo = max(lo, claim.n_min)
    checked = 0
    counterexamples: list[Counterexample] = []
    witnesses: list[Witnesses] = []
    index_fn = _SCALAR_INDEX[claim.index]
    for n in range(lo, hi + 1):
        result = cache.get(claim.graph_class, n)
        checked += result.count
        lo_ext, hi_ext = result.minima[claim.index], result.maxima[claim.index]
        witnesses.append(
            Witnesses(
                n,
                _graph_from_key(n, lo_ext.key), lo_ext.value, lo_ext.count,
                _graph_from_key(n, hi_ext.key), hi_ext.value, hi_ext.count,
            )
        )
        claimed = claim.formula(n)
        family_graph = _FAMILIES[claim.family](n)
        # closed form checked on the directly built family member first
        family_value = index_fn(family_graph)
        if family_value != claimed:
            counterexamples.append(
                Counterexample(family_graph, family_value, claimed, f"{claim.family} does not attain the stated value")
            )
        extreme = lo_ext if claim.side == "lower" else hi_ext
        violated = extreme.value < claimed if claim.side == "lower" else extreme.value > claimed
        if violated:
            counterexamples.append(
                Counterexample(_graph_from_key(n, extreme.key), extreme.value, claimed, "bound violated")
            )
    status = "fails" if counterexamples else "holds"
    return VerificationReport(
        claim.claim_id, claim.kind, claim.statement, claim.graph_class,
        (lo, hi), checked, status, counterexamples, witnesses,
    )


def verify_bounds(
    index: str,
    n_range: tuple[int, int],
    graph_class: str,
    *,
    cache: ScanCache | None = None,
    workers: int = 1,
    kinds: Iterable[str] = (EXACT, STATED),
) -> list[VerificationReport]:
    """Reports for every registered bound claim on ``index`` over ``graph_class``."""
    cache = cache or ScanCache(workers)
    kinds = tuple(kinds)
    lo, hi = n_range
    return [
        _check_bound(claim, lo, hi, cache)
        for claim in BOUND_CLAIMS
        if claim.index == index and claim.graph_class == graph_class and claim.kind in kinds
        and max(lo, claim.n_min) <= hi
    ]


def verify_all(
    n_max_tree: int = TREE_GUARD,
    n_max_graph: int = GRAPH_GUARD,
    *,
    workers: int = 1,
    tree_guard: int = TREE_GUARD,
    graph_guard: int = GRAPH_GUARD,
) -> list[VerificationReport]:
    """Identities, then bound claims for S, Salpha, Sbeta, Smu on both classes."""
    # fail before any scanning rather than after the smaller orders
    check_tree_guard(n_max_tree, tree_guard)
    check_graph_guard(n_max_graph, graph_guard)
    cache = ScanCache(workers, tree_guard, graph_guard)
    reports = verify_identities(n_max_tree, n_max_graph, cache=cache)
    for cls, hi in ((TREES, n_max_tree), (CONNECTED, n_max_graph)):
        for index in EXTREMAL_INDICES:
            reports.extend(verify_bounds(index, (3, hi), cls, cache=cache))
    return reports


def must_hold(report: VerificationReport) -> bool:
    """Identities and exact extremes are proven facts; a failure means a bug."""
    return report.kind in ("identity", EXACT)
