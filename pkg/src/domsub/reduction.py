"""3-SAT to bipartite graph compilation and instance-level checks of the
satisfiability / sd > 1 equivalence.

Each variable ``i`` becomes a 6-vertex gadget: literal vertices ``u_i`` and
``~u_i`` hang off ``a_i`` and ``b_i``, which are joined through ``c_i`` and
``d_i`` into the 4-cycle ``a-c-b-d``. Clause vertices see their literal
vertices and a hub ``x1``, which also carries the pendant ``x0``.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple, Optional, Sequence

from .domination import domination_number
from .errors import InputError, PreconditionError, SolverTimeout
from .graph import Graph, subdivide
from .subdivision import sd_is_greater_than_one

log = logging.getLogger(__name__)

GADGET_ROLES = ("pos", "neg", "a", "b", "c", "d")


class Literal(NamedTuple):
    var: int
    positive: bool

    def __str__(self) -> str:
        # DIMACS spelling: 1-based, minus sign for negation
        return f"{'' if self.positive else '-'}{self.var + 1}"


Clause = tuple[Literal, Literal, Literal]


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise InputError(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if not 0 <= lit.var < self.num_vars:
                    raise InputError(f"variable {lit.var} out of range for {self.num_vars} variables")

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Sequence[Sequence[int]]) -> "CnfFormula":
        """Build from DIMACS-style signed 1-based integers."""
        return cls(num_vars, tuple(tuple(Literal(abs(x) - 1, x > 0) for x in c) for c in clauses))

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[l.var] == l.positive for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        for c in self.clauses:
            lines.append(" ".join(str(l.var + 1 if l.positive else -(l.var + 1)) for l in c) + " 0")
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF whose clauses all have exactly three literals."""
    header = None
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"line {lineno}: malformed header {raw!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise InputError(f"line {lineno}: malformed header {raw!r}") from None
            continue
        if header is None:
            raise InputError(f"line {lineno}: clause before 'p cnf' header")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise InputError(f"line {lineno}: non-integer literal in {raw!r}") from None
    if header is None:
        raise InputError("missing 'p cnf' header")
    num_vars, num_clauses = header
    if num_vars < 1:
        raise InputError("formula must have at least one variable")
    clauses = []
    current: list[int] = []
    for x in literals:
        if x == 0:
            if len(current) != 3:
                raise InputError(f"clause {current} has width {len(current)}, expected 3")
            clauses.append(current)
            current = []
        else:
            if abs(x) > num_vars:
                raise InputError(f"literal {x} exceeds declared variable count {num_vars}")
            current.append(x)
    if current:
        raise InputError(f"unterminated clause {current}")
    if not clauses:
        raise InputError("formula has no clauses")
    if len(clauses) != num_clauses:
        raise InputError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula.from_ints(num_vars, clauses)


def duplicate_literal_clauses(f: CnfFormula) -> list[int]:
    """Indices of clauses that repeat a literal (allowed, but worth flagging)."""
    return [i for i, c in enumerate(f.clauses) if len(set(c)) < 3]


def preprocess(f: CnfFormula) -> CnfFormula:
    """Drop pure literals until every remaining variable occurs in both polarities.

    Clauses containing a pure literal are satisfied by setting it, so they
    are deleted; unused variables are removed and the rest renumbered.
    """
    clauses = list(f.clauses)
    while True:
        seen = {l for c in clauses for l in c}
        pure = {l for l in seen if Literal(l.var, not l.positive) not in seen}
        if not pure:
            break
        clauses = [c for c in clauses if not pure & set(c)]
    used = sorted({l.var for c in clauses for l in c})
    remap = {v: i for i, v in enumerate(used)}
    for i in duplicate_literal_clauses(f):
        log.warning("clause %d repeats a literal: %s", i, " ".join(map(str, f.clauses[i])))
    new = tuple(tuple(Literal(remap[l.var], l.positive) for l in c) for c in clauses)
    return CnfFormula(len(used), new)


@dataclass(frozen=True)
class ReductionGraph:
    graph: Graph
    formula: CnfFormula
    literal_vertex: dict[tuple[int, bool], int] = field(compare=False)
    clause_vertex: dict[int, int] = field(compare=False)
    x0: int
    x1: int
    gadget_vertices: tuple[dict[str, int], ...] = field(compare=False)

    @property
    def expected_gamma(self) -> int:
        return 2 * self.formula.num_vars + 1


def build_reduction(f: CnfFormula, repair: bool = True) -> ReductionGraph:
    """Compile ``f`` into the bipartite reduction graph.

    Numbering: gadget ``i`` occupies ``6i .. 6i+5`` in the order
    pos, neg, a, b, c, d; then one vertex per clause; then ``x1``, ``x0``.
    """
    g_formula = preprocess(f) if repair else f
    n, m = g_formula.num_vars, len(g_formula.clauses)
    if m == 0:
        raise PreconditionError("formula has no clauses left after removing pure literals")
    seen = {l for c in g_formula.clauses for l in c}
    for v in range(n):
        if Literal(v, True) not in seen or Literal(v, False) not in seen:
            raise PreconditionError(f"variable {v} does not occur in both polarities")
    edges = []
    gadgets = []
    literal_vertex = {}
    for i in range(n):
        ids = dict(zip(GADGET_ROLES, range(6 * i, 6 * i + 6)))
        gadgets.append(ids)
        edges += [
            (ids["pos"], ids["a"]),
            (ids["neg"], ids["b"]),
            (ids["a"], ids["c"]),
            (ids["c"], ids["b"]),
            (ids["b"], ids["d"]),
            (ids["d"], ids["a"]),
        ]
        literal_vertex[(i, True)] = ids["pos"]
        literal_vertex[(i, False)] = ids["neg"]
    x1 = 6 * n + m
    x0 = x1 + 1
    clause_vertex = {}
    for j, clause in enumerate(g_formula.clauses):
        cv = 6 * n + j
        clause_vertex[j] = cv
        for lit in sorted(set(clause)):
            edges.append((cv, literal_vertex[(lit.var, lit.positive)]))
        edges.append((cv, x1))
    edges.append((x1, x0))
    return ReductionGraph(
        Graph(6 * n + m + 2, edges), g_formula, literal_vertex, clause_vertex, x0, x1, tuple(gadgets)
    )


def sat_bruteforce(f: CnfFormula, cap: int = 24) -> Optional[tuple[bool, ...]]:
    """First satisfying assignment in truth-table order, or ``None``."""
    if f.num_vars > cap:
        raise PreconditionError(f"truth-table scan limited to {cap} variables")
    for bits in product((False, True), repeat=f.num_vars):
        if f.evaluate(bits):
            return bits
    return None


@dataclass(frozen=True)
class BiconditionalReport:
    n: int
    m: int
    vertices: int
    edges: int
    gamma: int
    satisfiable: bool
    sd_gt_1: bool
    gamma_x0x1_subdivided: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "vertices": self.vertices,
            "edges": self.edges,
            "gamma": self.gamma,
            "satisfiable": self.satisfiable,
            "sd_gt_1": self.sd_gt_1,
            "gamma_x0x1_subdivided": self.gamma_x0x1_subdivided,
            "pass": self.passed,
        }


def verify_biconditional(
    f: CnfFormula,
    max_vars: int = 4,
    max_clauses: int = 8,
    timeout: Optional[float] = 600.0,
) -> BiconditionalReport:
    """Check ``gamma(G) = 2n + 1`` and ``satisfiable <=> sd(G) > 1`` on one instance.

    Limits apply to the formula after pure-literal removal. ``timeout`` is
    the wall-clock budget in seconds for all domination searches together.
    """
    red = build_reduction(f)
    ff = red.formula
    if ff.num_vars > max_vars or len(ff.clauses) > max_clauses:
        raise PreconditionError(
            f"instance too large for exact checking: {ff.num_vars} vars, {len(ff.clauses)} clauses"
        )
    deadline = None if timeout is None else time.monotonic() + timeout

    def remaining() -> Optional[float]:
        if deadline is None:
            return None
        left = deadline - time.monotonic()
        if left <= 0:
            raise SolverTimeout("verification exceeded its time budget")
        return left

    g = red.graph
    gam = domination_number(g, timeout=remaining())
    sat = sat_bruteforce(ff) is not None
    gt1 = sd_is_greater_than_one(g, timeout=remaining())
    gx = domination_number(subdivide(g, (red.x1, red.x0), 1), timeout=remaining())
    ok = (sat == gt1) and gam == red.expected_gamma
    return BiconditionalReport(ff.num_vars, len(ff.clauses), g.n, g.m, gam, sat, gt1, gx, ok)


# --- instance generators ---------------------------------------------------------


def random_cnf(num_vars: int, num_clauses: int, seed: int = 0) -> CnfFormula:
    """Random 3-CNF over distinct variables per clause, resampled until every
    variable occurs in both polarities."""
    if num_vars < 3:
        raise PreconditionError("need at least 3 variables for clauses over distinct variables")
    if 3 * num_clauses < 2 * num_vars:
        raise PreconditionError("too few clauses for every variable to occur in both polarities")
    rng = random.Random(seed)
    while True:
        clauses = []
        for _ in range(num_clauses):
            vars_ = rng.sample(range(num_vars), 3)
            clauses.append(tuple(Literal(v, rng.random() < 0.5) for v in vars_))
        f = CnfFormula(num_vars, tuple(clauses))
        seen = {l for c in f.clauses for l in c}
        if all(Literal(v, p) in seen for v in range(num_vars) for p in (True, False)):
            return f


def complete_polarity_cnf(vars_: Sequence[int] = (0, 1, 2), num_vars: Optional[int] = None) -> CnfFormula:
    """All 8 sign patterns over three variables: unsatisfiable by construction."""
    if len(vars_) != 3:
        raise PreconditionError("need exactly three variables")
    nv = max(vars_) + 1 if num_vars is None else num_vars
    clauses = tuple(
        tuple(Literal(v, s) for v, s in zip(vars_, signs)) for signs in product((True, False), repeat=3)
    )
    return CnfFormula(nv, clauses)


EXAMPLE_DIMACS = """c (u0 v u1 v u2)(~u0 v u1 v u2)(~u1 v ~u2 v u3)(~u1 v ~u2 v ~u3)
p cnf 4 4
1 2 3 0
-1 2 3 0
-2 -3 4 0
-2 -3 -4 0
"""
