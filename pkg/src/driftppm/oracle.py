"""Independent ground truth for code optimality.

A zero-error code is exactly an independent set of the confusion graph, so
an exact maximum-independent-set solver gives the true optimal code size on
small instances.  The solver is a deterministic branch-and-bound over bitmask
neighborhoods with a greedy clique-cover upper bound; it never exploits any
structure of the construction it is asked to validate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import ChannelSpec, Codebook, Runs, enumerate_inputs
from .distinguish import ConfusionGraph, confusion_graph, indistinguishable_pairs

__all__ = [
    "EXACT",
    "BUDGET_EXCEEDED",
    "MisResult",
    "max_independent_set",
    "OracleResult",
    "optimal_code_bruteforce",
    "ZeroErrorReport",
    "verify_zero_error",
]

EXACT = "EXACT"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class MisResult:
    indices: tuple[int, ...]
    status: str

    @property
    def size(self) -> int:
        return len(self.indices)


class _Budget:
    """Node and wall-clock limits; the node limit is the reproducible one."""

    def __init__(self, node_budget, time_budget):
        self.node_budget = node_budget
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        if self.exhausted:
            return False
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            self.exhausted = True
        elif self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
        return not self.exhausted


def _components(neighbors: Sequence[int], n: int) -> list[int]:
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            grown = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                grown |= neighbors[v]
                f &= f - 1
            frontier = grown & remaining & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def _clique_cover_bound(candidates: int, neighbors) -> int:
    """Upper bound on the independent set inside candidates: greedily cover
    them with cliques; any independent set takes at most one vertex per clique."""
    count = 0
    rest = candidates
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        grow = rest & neighbors[v]
        while grow:
            u = (grow & -grow).bit_length() - 1
            clique |= 1 << u
            grow &= neighbors[u]
        rest &= ~clique
        count += 1
    return count


def _branch_vertex(candidates: int, neighbors) -> int:
    """Highest degree within the candidate set, lowest index on ties."""
    best_v = -1
    best_deg = -1
    c = candidates
    while c:
        v = (c & -c).bit_length() - 1
        deg = (neighbors[v] & candidates).bit_count()
        if deg > best_deg:
            best_deg = deg
            best_v = v
        c &= c - 1
    return best_v


def _greedy_seed(neighbors, comp: int) -> list[int]:
    taken: list[int] = []
    blocked = 0
    c = comp
    while c:
        v = (c & -c).bit_length() - 1
        if not blocked >> v & 1:
            taken.append(v)
            blocked |= neighbors[v]
        c &= c - 1
    return taken


def _mis_component(neighbors, comp: int, budget: _Budget) -> list[int]:
    # a greedy incumbent makes budget-exceeded lower bounds useful and
    # lets the very first bound checks prune
    best = _greedy_seed(neighbors, comp)

    def expand(candidates: int, current: list[int]):
        nonlocal best
        if not budget.tick():
            return
        # vertices isolated within the candidate set always join
        c = candidates
        while c:
            v = (c & -c).bit_length() - 1
            if not neighbors[v] & candidates:
                current.append(v)
                candidates &= ~(1 << v)
            c &= c - 1
        if not candidates:
            if len(current) > len(best) or (
                len(current) == len(best) and sorted(current) < best
            ):
                best = sorted(current)
            return
        if len(current) + _clique_cover_bound(candidates, neighbors) <= len(best):
            return
        v = _branch_vertex(candidates, neighbors)
        bit = 1 << v
        taken = len(current)
        current.append(v)
        expand(candidates & ~neighbors[v] & ~bit, current)
        del current[taken:]
        expand(candidates & ~bit, current)
        del current[taken:]

    expand(comp, [])
    return best


def max_independent_set(
    graph: ConfusionGraph,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> MisResult:
    """Exact maximum independent set, or the best set found within budget.

    Deterministic given the vertex order: branching follows descending
    candidate degree with lowest-index tie-breaks, and among equal-size
    solutions the lexicographically least one reached is kept.  Budget
    exhaustion is reported as a status, not an error.
    """
    budget = _Budget(node_budget, time_budget)
    chosen: list[int] = []
    for comp in _components(graph.neighbors, graph.n):
        chosen.extend(_mis_component(graph.neighbors, comp, budget))
    status = BUDGET_EXCEEDED if budget.exhausted else EXACT
    return MisResult(tuple(sorted(chosen)), status)


@dataclass(frozen=True)
class OracleResult:
    codebook: Codebook
    status: str

    @property
    def exact(self) -> bool:
        return self.status == EXACT


def optimal_code_bruteforce(
    k: int,
    m: int,
    spec: ChannelSpec,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> OracleResult:
    """True optimal zero-error code for small frames, by exhaustive MIS."""
    inputs = enumerate_inputs(k, m)
    graph = confusion_graph(inputs, spec)
    mis = max_independent_set(graph, node_budget, time_budget)
    words = tuple(sorted(inputs[i] for i in mis.indices))
    return OracleResult(Codebook(k, m, spec, "custom", words), mis.status)


@dataclass(frozen=True)
class ZeroErrorReport:
    spec: ChannelSpec
    pairs_checked: int
    violations: tuple[tuple[Runs, Runs], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        state = "zero-error" if self.ok else f"{len(self.violations)} violating pairs"
        return f"{self.pairs_checked} pairs checked under {self.spec}: {state}"


def verify_zero_error(
    codebook: Codebook, spec: Optional[ChannelSpec] = None
) -> ZeroErrorReport:
    """Check every unordered codeword pair with the general predicate."""
    spec = codebook.spec if spec is None else spec
    words = codebook.codewords
    violations = tuple(
        (words[i], words[j]) for i, j in indistinguishable_pairs(words, spec)
    )
    n = len(words)
    return ZeroErrorReport(spec, n * (n - 1) // 2, violations)
