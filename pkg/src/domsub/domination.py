"""Exact minimum dominating sets.

The general solver is a branch-and-bound over closed-neighbourhood bitmasks;
trees get a linear dynamic program. ``gamma_bruteforce`` is an independent
subset-enumeration oracle used to check both.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import NotATreeError, PreconditionError, SolverTimeout
from .graph import Graph


@dataclass(frozen=True)
class DominatingSet:
    vertices: frozenset[int]
    graph_fingerprint: str

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    witness: DominatingSet


def _result(g: Graph, vertices: Iterable[int]) -> GammaResult:
    ds = DominatingSet(frozenset(vertices), g.fingerprint)
    return GammaResult(len(ds), ds)


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    covered = set()
    for v in d:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range for n={g.n}")
        covered.add(v)
        covered.update(g.adjacency[v])
    return len(covered) == g.n


# --- branch and bound ------------------------------------------------------


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _greedy(closed: tuple[int, ...], full: int, covered: int, chosen: list[int]) -> list[int]:
    chosen = list(chosen)
    n = len(closed)
    while covered != full:
        unc = full & ~covered
        best_v, best_gain = -1, 0
        for v in range(n):
            gain = (closed[v] & unc).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        covered |= closed[best_v]
    return chosen


class _Search:
    """One branch-and-bound run; finds a dominating set smaller than ``limit``."""

    def __init__(self, closed: tuple[int, ...], limit: int, deadline: Optional[float]):
        self.closed = closed
        self.n = len(closed)
        self.full = (1 << self.n) - 1
        self.best: Optional[list[int]] = None
        self.limit = limit  # exclusive bound on the size of an acceptable set
        self.deadline = deadline
        self.nodes = 0

    def lower_bound(self, unc: int, allowed: int) -> int:
        closed = self.closed
        # vertices whose admissible dominators are pairwise disjoint need distinct ones
        packing, blocked = 0, 0
        rest = unc
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            opts = closed[u] & allowed
            if not opts:
                return self.n + 1
            if opts & blocked == 0:
                blocked |= opts
                packing += 1
        maxgain = 0
        for v in _bits(allowed):
            gain = (closed[v] & unc).bit_count()
            if gain > maxgain:
                maxgain = gain
        if maxgain == 0:
            return self.n + 1
        by_volume = -(-unc.bit_count() // maxgain)
        return max(packing, by_volume)

    def run(self, covered: int, chosen: list[int]) -> None:
        self._rec(covered, chosen, self.full)

    def _rec(self, covered: int, chosen: list[int], allowed: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout("domination search exceeded its time budget")
        if covered == self.full:
            if len(chosen) < self.limit:
                self.best = list(chosen)
                self.limit = len(chosen)
            return
        unc = self.full & ~covered
        if len(chosen) + self.lower_bound(unc, allowed) >= self.limit:
            return
        closed = self.closed
        # branch on the uncovered vertex with the fewest admissible dominators
        pick, pick_opts = -1, None
        rest = unc
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            opts = closed[u] & allowed
            c = opts.bit_count()
            if pick_opts is None or c < pick_opts.bit_count():
                pick, pick_opts = u, opts
                if c <= 1:
                    break
        if not pick_opts:
            return
        options = sorted(_bits(pick_opts), key=lambda w: -(closed[w] & unc).bit_count())
        for w in options:
            chosen.append(w)
            self._rec(covered | closed[w], chosen, allowed)
            chosen.pop()
            # sets containing w were all explored in that branch
            allowed &= ~(1 << w)
            if len(chosen) + 1 >= self.limit:
                return


def _solve(
    g: Graph,
    forced: Iterable[int] = (),
    limit: Optional[int] = None,
    deadline: Optional[float] = None,
) -> Optional[list[int]]:
    """Minimum dominating set containing ``forced``; ``None`` if none has size < limit."""
    closed = g.closed_masks
    full = (1 << g.n) - 1
    forced = sorted(set(forced))
    covered = 0
    for v in forced:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range for n={g.n}")
        covered |= closed[v]
    greedy = _greedy(closed, full, covered, forced)
    if limit is None or len(greedy) < limit:
        search = _Search(closed, len(greedy), deadline)
        search.run(covered, list(forced))
        return search.best if search.best is not None else greedy
    search = _Search(closed, limit, deadline)
    search.run(covered, list(forced))
    return search.best


def gamma(g: Graph, timeout: Optional[float] = None) -> GammaResult:
    """Domination number with a minimum dominating set as witness.

    ``timeout`` is a wall-clock budget in seconds; :class:`SolverTimeout` is
    raised when it runs out.
    """
    if g.n == 0:
        raise PreconditionError("domination number of the empty graph is undefined")
    deadline = None if timeout is None else time.monotonic() + timeout
    return _result(g, _solve(g, deadline=deadline))


def gamma_forced(g: Graph, forced: Iterable[int], timeout: Optional[float] = None) -> GammaResult:
    """Smallest dominating set among those containing every vertex of ``forced``."""
    if g.n == 0:
        raise PreconditionError("domination number of the empty graph is undefined")
    deadline = None if timeout is None else time.monotonic() + timeout
    return _result(g, _solve(g, forced=forced, deadline=deadline))


def dominates_within(g: Graph, k: int, timeout: Optional[float] = None) -> bool:
    """Decide ``gamma(g) <= k`` without necessarily computing ``gamma(g)``."""
    if k >= g.n:
        return True
    if g.tree:
        return tree_domination_number(g) <= k
    deadline = None if timeout is None else time.monotonic() + timeout
    return _solve(g, limit=k + 1, deadline=deadline) is not None


def domination_number(g: Graph, timeout: Optional[float] = None) -> int:
    """``gamma(g)`` using the tree DP when ``g`` is a tree."""
    if g.tree:
        return tree_domination_number(g)
    return gamma(g, timeout=timeout).gamma


# --- oracle ----------------------------------------------------------------


def gamma_bruteforce(g: Graph, cap: int = 20) -> GammaResult:
    """Exact domination number by scanning subsets in increasing size.

    Subsets of each size are visited in lexicographic order, so the witness
    is the lexicographically first minimum dominating set.
    """
    if g.n == 0:
        raise PreconditionError("domination number of the empty graph is undefined")
    if g.n > cap:
        raise PreconditionError(f"brute force limited to {cap} vertices, graph has {g.n}")
    full = (1 << g.n) - 1
    closed = []
    for v in range(g.n):
        mask = 1 << v
        for w in g.adjacency[v]:
            mask |= 1 << w
        closed.append(mask)
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return _result(g, subset)
    raise AssertionError("unreachable: the whole vertex set dominates")


# --- trees -----------------------------------------------------------------


_BIG = 1 << 40  # "impossible" cost; sums of a few stay far above any real size


def _tree_tables(t: Graph, forced: Iterable[int]):
    n = t.n
    forced_set = set(forced)
    for v in forced_set:
        if not 0 <= v < n:
            raise PreconditionError(f"vertex {v} out of range for n={n}")
    adj = t.adjacency
    parent = [-1] * n
    parent[0] = 0
    order = [0]
    for u in order:
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    parent[0] = -1

    take = [0] * n
    covered = [0] * n
    waiting = [0] * n
    for u in reversed(order):
        p = parent[u]
        in_cost = 1
        out_sum = 0
        wait_sum = 0
        extra = _BIG
        for c in adj[u]:
            if c == p:
                continue
            a, b, w = take[c], covered[c], waiting[c]
            best = a if a < b else b
            in_cost += best if best < w else w
            out_sum += best
            if a - best < extra:
                extra = a - best
            wait_sum += b
        take[u] = in_cost
        if u in forced_set:
            covered[u] = waiting[u] = _BIG
        else:
            covered[u] = out_sum + extra
            waiting[u] = wait_sum
    return order, parent, take, covered, waiting


def tree_domination_number(t: Graph, forced: Iterable[int] = ()) -> int:
    """Value-only version of :func:`gamma_tree`."""
    if not t.tree:
        raise NotATreeError("tree_domination_number requires a tree")
    _, _, take, covered, _ = _tree_tables(t, forced)
    return min(take[0], covered[0])


def gamma_tree(t: Graph, forced: Iterable[int] = ()) -> GammaResult:
    """Linear-time domination number of a tree (optionally with forced vertices).

    Each vertex gets three costs over its rooted subtree: it is in the set,
    it is outside but dominated by a child, or it is outside and still
    waiting for its parent.
    """
    if not t.tree:
        raise NotATreeError("gamma_tree requires a tree")
    order, parent, take, covered, waiting = _tree_tables(t, forced)
    adj = t.adjacency

    # reconstruct; state 0 = take, 1 = covered, 2 = waiting
    chosen = []
    root = order[0]
    stack = [(root, 0 if take[root] <= covered[root] else 1)]
    while stack:
        u, state = stack.pop()
        children = [c for c in adj[u] if c != parent[u]]
        if state == 0:
            chosen.append(u)
            for c in children:
                vals = (take[c], covered[c], waiting[c])
                stack.append((c, vals.index(min(vals))))
        elif state == 2:
            stack.extend((c, 1) for c in children)
        else:
            states = [0 if take[c] <= covered[c] else 1 for c in children]
            if 0 not in states:
                # pay the cheapest upgrade so that some child dominates u
                j = min(range(len(children)), key=lambda i: take[children[i]] - covered[children[i]])
                states[j] = 0
            stack.extend(zip(children, states))
    return _result(t, chosen)


def no_gamma_set_vertices(g: Graph) -> set[int]:
    """Vertices that belong to no minimum dominating set."""
    if g.tree:
        base = tree_domination_number(g)
        return {v for v in g.vertices() if tree_domination_number(g, (v,)) > base}
    result = gamma(g)
    in_some = set(result.witness.vertices)
    outside = set()
    for v in g.vertices():
        if v in in_some:
            continue
        r = gamma_forced(g, {v})
        if r.gamma > result.gamma:
            outside.add(v)
        else:
            in_some.update(r.witness.vertices)
    return outside
