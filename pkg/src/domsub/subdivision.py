"""Domination subdivision number sd(G) and multisubdivision number msd(G)."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .domination import dominates_within, domination_number
from .errors import EdgeNotPresentError, NotConnectedError, PreconditionError, TheoremViolation
from .graph import Edge, Graph, normalize_edge, subdivide, subdivide_edges

log = logging.getLogger(__name__)

EXCEEDS_BUDGET = "exceeds-budget"


@dataclass(frozen=True)
class MsdReport:
    msd: int
    witness_edge: Edge
    per_edge: dict[Edge, int] = field(compare=False)
    gamma_base: int


@dataclass(frozen=True)
class SdReport:
    """Result of the subset search; ``sd`` is ``None`` when the budget ran out."""

    sd: Optional[int]
    witness_edges: tuple[Edge, ...]
    budget: int
    gamma_base: int

    @property
    def exceeds_budget(self) -> bool:
        return self.sd is None

    def value(self):
        return EXCEEDS_BUDGET if self.sd is None else self.sd


def _require_connected(g: Graph) -> None:
    if not g.connected:
        raise NotConnectedError("graph must be connected")


def _raises_gamma(h: Graph, base: int, timeout: Optional[float] = None) -> bool:
    # gamma(h) > base  <=>  no dominating set of size <= base
    return not dominates_within(h, base, timeout=timeout)


def msd_edge(g: Graph, e: Iterable[int], gamma_base: Optional[int] = None) -> int:
    """Fewest subdivision vertices on edge ``e`` that increase the domination number."""
    _require_connected(g)
    if g.n < 2:
        raise PreconditionError("msd needs at least one edge")
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(f"edge {u}-{v} is not in the graph")
    base = domination_number(g) if gamma_base is None else gamma_base
    for t in (1, 2, 3):
        if _raises_gamma(subdivide(g, (u, v), t), base):
            return t
    raise TheoremViolation(f"subdividing edge {u}-{v} three times did not raise gamma={base}: {g!r}")


def msd(g: Graph) -> MsdReport:
    _require_connected(g)
    if g.m == 0:
        raise PreconditionError("msd is undefined for edgeless graphs")
    if g.tree:
        profiles = tree_gamma_profiles(g)
        base = domination_number(g)
        per_edge = {}
        for e, prof in profiles.items():
            raised = [t for t, value in zip((1, 2, 3), prof) if value > base]
            if not raised:
                raise TheoremViolation(f"subdividing edge {e} three times did not raise gamma={base}: {g!r}")
            per_edge[e] = raised[0]
    else:
        base = domination_number(g)
        per_edge = {e: msd_edge(g, e, base) for e in g.edges}
    witness = min(g.edges, key=lambda e: (per_edge[e], e))
    return MsdReport(per_edge[witness], witness, per_edge, base)


def gamma_profile(g: Graph, e: Iterable[int], ts: Iterable[int] = (1, 2, 3)) -> tuple[int, ...]:
    """Domination numbers of ``g`` with edge ``e`` subdivided ``t`` times, for each ``t``."""
    return tuple(domination_number(subdivide(g, tuple(e), t)) for t in ts)


def _check_sd_domain(g: Graph) -> None:
    _require_connected(g)
    if g.n < 3:
        raise PreconditionError("sd is defined for connected graphs of order at least 3")


def default_budget(g: Graph) -> int:
    return min(g.m, 5)


def sd(g: Graph, budget: Optional[int] = None) -> SdReport:
    """Smallest number of edges which, each subdivided once, raise the domination number.

    Edge subsets are scanned by increasing size and lexicographically within
    a size, so the witness is the first such subset in that order. A budget
    larger than the edge count is clamped to it.
    """
    _check_sd_domain(g)
    if budget is None:
        budget = default_budget(g)
    if budget < 1:
        raise PreconditionError(f"budget must be positive, got {budget}")
    budget = min(budget, g.m)
    base = domination_number(g)
    for k in range(1, budget + 1):
        for subset in combinations(g.edges, k):
            if _raises_gamma(subdivide_edges(g, subset), base):
                return SdReport(k, subset, budget, base)
    return SdReport(None, (), budget, base)


def sd_is_greater_than_one(g: Graph, timeout: Optional[float] = None) -> bool:
    """True iff no single edge subdivision raises the domination number."""
    _check_sd_domain(g)
    deadline = None if timeout is None else time.monotonic() + timeout

    def remaining() -> Optional[float]:
        return None if deadline is None else max(deadline - time.monotonic(), 0.0)

    base = domination_number(g, timeout=remaining())
    return not any(_raises_gamma(subdivide(g, e, 1), base, remaining()) for e in g.edges)


def nonmonotone_edges(g: Graph) -> list[tuple[Edge, tuple[int, ...]]]:
    """Edges whose gamma profile over t = 1, 2, 3 rises and later falls back.

    Diagnostic only; logged, never asserted.
    """
    found = []
    for e in g.edges:
        prof = gamma_profile(g, e)
        if any(prof[i] > prof[j] for i in range(3) for j in range(i + 1, 3)):
            log.info("non-monotone gamma profile %s on edge %s of %r", prof, e, g)
            found.append((e, prof))
    return found


# --- trees: all edges at once ------------------------------------------------
#
# A rooted subtree is summarised by three costs (root in the set, root
# dominated by a child, root still undominated). Summaries of the two sides
# of every edge come from one downward and one rerooting pass; joining them
# through a chain of t new vertices gives gamma of the subdivided tree.

_BIG = 1 << 40
_LEAF = (1, _BIG, 0)


def _add_child(node: tuple[int, int, int], child: tuple[int, int, int]) -> tuple[int, int, int]:
    tk, cv, wt = node
    a, b, w = child
    best = a if a < b else b
    return (
        tk + (best if best < w else w),
        min(cv + best, wt + a),
        wt + b,
    )


def _join(side_u: tuple[int, int, int], side_v: tuple[int, int, int], t: int) -> int:
    chain = side_v
    for _ in range(t):
        chain = _add_child(_LEAF, chain)
    tk, cv, _ = _add_child(side_u, chain)
    return min(tk, cv)


def tree_gamma_profiles(t: Graph, ts: Iterable[int] = (1, 2, 3)) -> dict[Edge, tuple[int, ...]]:
    """``gamma_profile`` for every edge of a tree in O(sum of squared degrees)."""
    if not t.tree:
        raise PreconditionError("tree_gamma_profiles requires a tree")
    ts = tuple(ts)
    adj = t.adjacency
    n = t.n
    parent = [-1] * n
    parent[0] = 0
    order = [0]
    for u in order:
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    parent[0] = -1
    down: list = [None] * n
    for u in reversed(order):
        acc = _LEAF
        for c in adj[u]:
            if c != parent[u]:
                acc = _add_child(acc, down[c])
        down[u] = acc
    # up[c]: the side of parent(c) once edge parent(c)-c is removed, rooted at parent(c)
    up: list = [None] * n
    for p in order:
        kids = [c for c in adj[p] if c != parent[p]]
        for c in kids:
            acc = _LEAF if parent[p] == -1 else _add_child(_LEAF, up[p])
            for other in kids:
                if other != c:
                    acc = _add_child(acc, down[other])
            up[c] = acc
    profiles = {}
    for c in range(n):
        p = parent[c]
        if p == -1:
            continue
        profiles[normalize_edge(p, c)] = tuple(_join(up[c], down[c], k) for k in ts)
    return profiles
