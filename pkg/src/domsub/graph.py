"""Immutable simple undirected graphs on dense integer vertex ids.

Vertices are ``0 .. n-1``. Every operation that "changes" a graph returns a
new :class:`Graph`; subdivision vertices are appended after the existing
ids, so original vertices keep their ids across subdivisions.
"""

from __future__ import annotations

import hashlib
from collections import deque
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import EdgeNotPresentError, InputError, NotConnectedError, PreconditionError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered vertex pairs. Self-loops and repeated pairs are rejected.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise PreconditionError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as sorted ``(a, b)`` pairs with ``a < b``, in lexicographic order."""
        return self._edges

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighbourhood ``N[v]`` of every vertex as an int bitmask."""
        masks = []
        for v, nbrs in enumerate(self._adj):
            mask = 1 << v
            for w in nbrs:
                mask |= 1 << w
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def fingerprint(self) -> str:
        return hashlib.blake2b(format_edge_list(self).encode(), digest_size=12).hexdigest()

    @cached_property
    def connected(self) -> bool:
        return is_connected(self)

    @cached_property
    def tree(self) -> bool:
        return self.m == self._n - 1 and self.connected

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise PreconditionError(f"vertex {v} out of range for n={self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)!r})"


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def subdivide(g: Graph, e: Sequence[int], t: int = 1) -> Graph:
    """Replace edge ``e = uv`` by the path ``u, x1, ..., xt, v``.

    The new vertices get ids ``n .. n+t-1`` in path order starting from the
    smaller endpoint of ``e``.
    """
    if t < 1:
        raise PreconditionError(f"subdivision count must be positive, got {t}")
    return subdivide_edges(g, [e], t)


def subdivide_edges(g: Graph, edges: Iterable[Sequence[int]], t: int = 1) -> Graph:
    """Subdivide several edges of ``g`` simultaneously, each ``t`` times.

    Only original edges are subdivided; new vertices are numbered in the
    order the edges are given.
    """
    chosen = []
    for e in edges:
        u, v = normalize_edge(*e)
        if not g.has_edge(u, v):
            raise EdgeNotPresentError(f"edge {u}-{v} is not in the graph")
        chosen.append((u, v))
    if len(set(chosen)) != len(chosen):
        raise PreconditionError("an edge may be subdivided at most once per call")
    removed = set(chosen)
    new_edges = [e for e in g.edges if e not in removed]
    nxt = g.n
    for u, v in chosen:
        prev = u
        for _ in range(t):
            new_edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        new_edges.append((prev, v))
    h = Graph(nxt, new_edges)
    # subdivision preserves connectivity (and hence tree-ness)
    if "connected" in g.__dict__:
        h.__dict__["connected"] = g.connected
    return h


class VertexKind(NamedTuple):
    leaf: bool
    support: bool
    strong_support: bool


def classify_vertices(g: Graph) -> list[VertexKind]:
    """Leaf / support / strong-support flags for every vertex."""
    leaf = [len(nb) == 1 for nb in g.adjacency]
    kinds = []
    for v, nbrs in enumerate(g.adjacency):
        leaves = sum(1 for w in nbrs if leaf[w])
        kinds.append(VertexKind(leaf[v], leaves >= 1, leaves >= 2))
    return kinds


def has_strong_support(g: Graph) -> bool:
    return any(k.strong_support for k in classify_vertices(g))


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    g._check_vertex(source)
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length between ``u`` and ``v``; ``None`` if unreachable."""
    g._check_vertex(v)
    return bfs_distances(g, u)[v]


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise NotConnectedError("diameter is only defined for connected graphs")
    return max((max(bfs_distances(g, v)) for v in g.vertices()), default=0)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.tree


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> Optional[list[int]]:
    """A proper 2-colouring as a list of 0/1, or ``None`` if none exists."""
    color: list[Optional[int]] = [None] * g.n
    for s in g.vertices():
        if color[s] is not None:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] is None:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color  # type: ignore[return-value]


def private_neighborhood(g: Graph, u: int, d: Iterable[int]) -> set[int]:
    """``N[u] - N[D - {u}]``: vertices dominated by ``u`` and no other member of ``d``."""
    d = set(d)
    if u not in d:
        raise PreconditionError(f"vertex {u} is not a member of the set")
    closed = set(g.neighbors(u)) | {u}
    for w in d - {u}:
        closed -= g.neighbors(w)
        closed.discard(w)
    return closed


# --- text formats ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``a b`` lines format (``#`` comments allowed)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1]), lineno))
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise InputError("empty edge list: missing 'n m' header")
    n, m, _ = rows[0]
    if n < 0 or m < 0:
        raise InputError("header values must be nonnegative")
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} were given")
    for a, b, lineno in body:
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"line {lineno}: vertex id out of range [0, {n})")
    try:
        return Graph(n, [(a, b) for a, b, _ in body])
    except PreconditionError as exc:
        raise InputError(str(exc)) from None


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, labels: Optional[Mapping[int, str]] = None, name: str = "G") -> str:
    """Graphviz DOT source; ``labels`` maps vertex ids to extra text (e.g. A/B status)."""
    out = [f"graph {name} {{"]
    for v in g.vertices():
        if labels is not None and v in labels:
            out.append(f'  {v} [label="{v}:{labels[v]}"];')
        else:
            out.append(f'  {v} [label="{v}"];')
    out.extend(f"  {a} -- {b};" for a, b in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"
