"""Named graph families, seeded random graphs and exhaustive small corpora."""

from __future__ import annotations

import heapq
import random
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import PreconditionError
from .graph import Graph, is_connected


def path(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs at least 1 vertex")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with parts ``0..p-1`` and ``p..p+q-1``."""
    if p < 1 or q < 1:
        raise PreconditionError("both parts of K_{p,q} must be nonempty")
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(q: int) -> Graph:
    """K_{1,q}; the center is vertex 0."""
    return complete_bipartite(1, q)


def wheel(n: int) -> Graph:
    """Cycle on ``n`` rim vertices ``0..n-1`` plus hub ``n``."""
    if n < 3:
        raise PreconditionError("wheel needs at least 3 rim vertices")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n + 1, rim + [(i, n) for i in range(n)])


def spider(legs: Sequence[int]) -> Graph:
    """Center 0 with a pendant path of each given length."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


# --- trees -----------------------------------------------------------------


def prufer_to_tree(seq: Sequence[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length ``n - 2`` over ``range(n)``."""
    if n < 2 or len(seq) != n - 2:
        raise PreconditionError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniformly random labelled tree via a random Prüfer sequence."""
    if n < 2:
        raise PreconditionError("random_tree needs n >= 2")
    rng = random.Random(seed)
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labelled trees on ``n`` vertices (2 <= n <= 9)."""
    if not 2 <= n <= 9:
        raise PreconditionError("enumerate_trees supports 2 <= n <= 9")
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


# --- general graphs --------------------------------------------------------


def random_connected_graph(n: int, m: int, seed: int = 0) -> Graph:
    """A random spanning tree plus ``m - n + 1`` random extra edges.

    Not uniform over connected graphs.
    """
    if n < 1:
        raise PreconditionError("need at least one vertex")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise PreconditionError(f"no connected simple graph has n={n}, m={m}")
    rng = random.Random(seed)
    if n == 1:
        return Graph(1)
    tree = prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)
    present = set(tree.edges)
    absent = [e for e in combinations(range(n), 2) if e not in present]
    return Graph(n, list(present) + rng.sample(absent, m - (n - 1)))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices (feasible for n <= 6)."""
    if n < 1:
        raise PreconditionError("need at least one vertex")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if is_connected(g):
            yield g


def random_family_f_script(length: int, seed: int = 0):
    """A random build script for :func:`domsub.trees.build_family_f`.

    Each step picks T1 or T2 with equal probability, then a uniformly random
    vertex of the status that operation requires.
    """
    from .trees import FamilyStep, Status

    if length < 0:
        raise PreconditionError("script length must be nonnegative")
    rng = random.Random(seed)
    statuses = [Status.A, Status.B, Status.B, Status.A]
    steps = []
    for _ in range(length):
        op = rng.choice(("T1", "T2"))
        need = Status.A if op == "T1" else Status.B
        anchor = rng.choice([v for v, s in enumerate(statuses) if s is need])
        steps.append(FamilyStep(op, anchor))
        if op == "T1":
            statuses += [Status.B, Status.B, Status.A]
        else:
            statuses += [Status.B, Status.A]
    return steps
