"""Trees with sd = msd = 3 (the labelled family F) and tree classification.

F is generated from the path a-b-c-d labelled A, B, B, A by two operations:

* T1 at a vertex of status A: attach a path x-y-z (statuses B, B, A).
* T2 at a vertex of status B: attach a path x-y (statuses B, A).

The recogniser undoes these operations by peeling pendant paths off the
end of a longest path, then replays the peeled steps forward from P4 and
accepts only if every replayed step is a legal operation.
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple, Optional, Sequence

from .domination import gamma, gamma_tree, is_dominating, no_gamma_set_vertices
from .errors import InputError, NotATreeError, PreconditionError
from .graph import Graph, has_strong_support, to_dot

log = logging.getLogger(__name__)


class Status(str, enum.Enum):
    A = "A"
    B = "B"


class FamilyStep(NamedTuple):
    op: Literal["T1", "T2"]
    anchor: int


@dataclass(frozen=True)
class TreeStatusLabeling:
    statuses: tuple[Status, ...]

    @property
    def a_set(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.statuses) if s is Status.A)

    @property
    def b_set(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.statuses) if s is Status.B)

    def to_json(self) -> dict[str, str]:
        return {str(v): s.value for v, s in enumerate(self.statuses)}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> "TreeStatusLabeling":
        n = len(data)
        try:
            return cls(tuple(Status(data[str(v)]) for v in range(n)))
        except (KeyError, ValueError) as exc:
            raise InputError(f"bad labeling: {exc}") from None

    def to_dot(self, t: Graph) -> str:
        return to_dot(t, {v: s.value for v, s in enumerate(self.statuses)})


Reason = Literal["strong-support", "leaf-in-N", "edge-in-N", "family-F", "residual-2"]


@dataclass(frozen=True)
class TreeClassification:
    msd: int
    sd: int
    reason: Reason
    labeling: Optional[TreeStatusLabeling] = None


def _require_tree(t: Graph, min_order: int = 3) -> None:
    if not t.tree:
        raise NotATreeError("input graph is not a tree")
    if t.n < min_order:
        raise PreconditionError(f"tree must have at least {min_order} vertices")


# --- construction ------------------------------------------------------------

BASE_EDGES = ((0, 1), (1, 2), (2, 3))
BASE_STATUSES = (Status.A, Status.B, Status.B, Status.A)


def build_family_f(script: Iterable[FamilyStep | Sequence]) -> tuple[Graph, TreeStatusLabeling]:
    """Grow a labelled tree of F from the base P4 by replaying ``script``."""
    edges = list(BASE_EDGES)
    statuses = list(BASE_STATUSES)
    for i, raw in enumerate(script):
        op, v = FamilyStep(*raw)
        if not 0 <= v < len(statuses):
            raise InputError(f"step {i}: anchor {v} out of range")
        n = len(statuses)
        if op == "T1":
            if statuses[v] is not Status.A:
                raise InputError(f"step {i}: T1 needs an A-vertex, {v} has status {statuses[v].value}")
            edges += [(v, n), (n, n + 1), (n + 1, n + 2)]
            statuses += [Status.B, Status.B, Status.A]
        elif op == "T2":
            if statuses[v] is not Status.B:
                raise InputError(f"step {i}: T2 needs a B-vertex, {v} has status {statuses[v].value}")
            edges += [(v, n), (n, n + 1)]
            statuses += [Status.B, Status.A]
        else:
            raise InputError(f"step {i}: unknown operation {op!r}")
    return Graph(len(statuses), edges), TreeStatusLabeling(tuple(statuses))


# --- recognition -------------------------------------------------------------


def _bfs(adj: dict[int, set[int]], src: int) -> tuple[dict[int, int], int]:
    """BFS parent map from ``src`` and the last (hence farthest) vertex reached."""
    parent = {src: src}
    queue = deque([src])
    last = src
    while queue:
        last = queue.popleft()
        for w in adj[last]:
            if w not in parent:
                parent[w] = last
                queue.append(w)
    return parent, last


def _path_to(parent: dict[int, int], src: int, dst: int) -> list[int]:
    out = [dst]
    while out[-1] != src:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def _longest_path_start(adj: dict[int, set[int]], tie_break: str) -> Optional[list[int]]:
    """First four vertices (v0, v1, v2, v3) of the chosen longest path."""
    _, far = _bfs(adj, next(iter(adj)))
    parent, other = _bfs(adj, far)
    diam = len(_path_to(parent, far, other)) - 1
    if diam < 3:
        return None
    best_key, best = None, None
    for v0 in sorted(adj):
        if len(adj[v0]) != 1:
            continue
        par, end = _bfs(adj, v0)
        p = _path_to(par, v0, end)
        if len(p) - 1 != diam:
            continue
        key = (-len(adj[p[2]]), p[2], v0) if tie_break == "max-degree" else (v0,)
        if best_key is None or key < best_key:
            best_key, best = key, p[:4]
    return best


def recognize_family_f(t: Graph, tie_break: str = "max-degree") -> Optional[TreeStatusLabeling]:
    """Return an F-labelling of ``t`` if it belongs to F, else ``None``.

    Among longest paths ``(v0, v1, v2, ...)`` the one whose ``v2`` has the
    largest degree is peeled first (ties: smallest ``v2``, then ``v0``).
    ``tie_break="first"`` peels the path starting at the smallest leaf
    instead; it exists to compare verdicts, not for general use.
    """
    _require_tree(t)
    if tie_break not in ("max-degree", "first"):
        raise PreconditionError(f"unknown tie_break {tie_break!r}")
    adj = {v: set(nb) for v, nb in enumerate(t.adjacency)}
    peeled: list[tuple[str, int, tuple[int, ...]]] = []
    while len(adj) > 4:
        start = _longest_path_start(adj, tie_break)
        if start is None:
            return None
        v0, v1, v2, v3 = start
        if len(adj[v1]) != 2:
            return None  # v1 carries two leaves
        if len(adj[v2]) == 2:
            removed, anchor, op = (v2, v1, v0), v3, "T1"
        else:
            removed, anchor, op = (v1, v0), v2, "T2"
        for x in removed:
            for w in adj.pop(x):
                if w in adj:
                    adj[w].discard(x)
        peeled.append((op, anchor, removed))
    if len(adj) != 4:
        return None
    degrees = sorted(len(nb) for nb in adj.values())
    if degrees != [1, 1, 2, 2]:
        return None
    status: dict[int, Status] = {v: Status.A if len(nb) == 1 else Status.B for v, nb in adj.items()}
    for op, anchor, removed in reversed(peeled):
        need = Status.A if op == "T1" else Status.B
        if status[anchor] is not need:
            return None
        *inner, tip = removed
        for x in inner:
            status[x] = Status.B
        status[tip] = Status.A
    return TreeStatusLabeling(tuple(status[v] for v in range(t.n)))


# --- characterisation ----------------------------------------------------------


def msd_one_tree(t: Graph) -> tuple[bool, Optional[Reason]]:
    """Whether msd(t) = 1, decided from the vertices lying in no minimum dominating set."""
    _require_tree(t)
    outside = no_gamma_set_vertices(t)
    for v in sorted(outside):
        if t.degree(v) == 1:
            return True, "leaf-in-N"
    for a, b in t.edges:
        if a in outside and b in outside:
            return True, "edge-in-N"
    return False, None


def classify_tree(t: Graph) -> TreeClassification:
    """msd(t) and sd(t) (equal for trees) from the structural characterisations."""
    _require_tree(t)
    if has_strong_support(t):
        return TreeClassification(1, 1, "strong-support")
    one, reason = msd_one_tree(t)
    if one:
        return TreeClassification(1, 1, reason)
    labeling = recognize_family_f(t)
    if labeling is not None:
        return TreeClassification(3, 3, "family-F", labeling)
    return TreeClassification(2, 2, "residual-2")


class Violation(NamedTuple):
    rule: str
    vertices: tuple[int, ...]
    message: str


def verify_labeling(t: Graph, labeling: TreeStatusLabeling) -> list[Violation]:
    """Check the structural properties every labelled tree of F must have.

    Rules ``1``-``5``: leaves are A; supports are B; A-vertices only see
    B-vertices; every B-vertex sees exactly one A and at least one B;
    A-vertices are pairwise at distance >= 3. Rule ``gamma-set``: the
    A-vertices form a minimum dominating set.
    """
    if len(labeling.statuses) != t.n:
        raise PreconditionError("labeling must cover every vertex")
    st = labeling.statuses
    adj = t.adjacency
    out: list[Violation] = []
    leaves = {v for v in t.vertices() if len(adj[v]) == 1}
    for v in t.vertices():
        if v in leaves and st[v] is not Status.A:
            out.append(Violation("1", (v,), f"leaf {v} has status B"))
        if adj[v] & leaves and st[v] is not Status.B:
            out.append(Violation("2", (v,), f"support vertex {v} has status A"))
        if st[v] is Status.A:
            bad = sorted(w for w in adj[v] if st[w] is Status.A)
            if bad:
                out.append(Violation("3", (v, *bad), f"A-vertex {v} has A-neighbours {bad}"))
        else:
            a_nbrs = sum(1 for w in adj[v] if st[w] is Status.A)
            b_nbrs = len(adj[v]) - a_nbrs
            if a_nbrs != 1 or b_nbrs < 1:
                out.append(
                    Violation("4", (v,), f"B-vertex {v} has {a_nbrs} A- and {b_nbrs} B-neighbours")
                )
    a_set = labeling.a_set
    for v in sorted(a_set):
        # any A-vertex within distance 2 of v
        near = set(adj[v])
        for w in adj[v]:
            near |= adj[w]
        near.discard(v)
        for w in sorted(near & a_set):
            if w > v:
                out.append(Violation("5", (v, w), f"A-vertices {v} and {w} are closer than 3"))
    g = gamma_tree(t).gamma if t.tree else gamma(t).gamma
    if not is_dominating(t, a_set) or len(a_set) != g:
        out.append(
            Violation(
                "gamma-set",
                tuple(sorted(a_set)),
                f"A(T) of size {len(a_set)} is not a minimum dominating set (gamma={g})",
            )
        )
    return out
