"""Corpus sweeps that check the theorems on concrete graphs.

Each ``check_*`` function returns a :class:`CheckResult`; on the first
violation it stops and records the offending graph, so callers can print it
as an edge list.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, Iterable, Optional

from .domination import (
    dominates_within,
    domination_number,
    gamma,
    gamma_bruteforce,
    gamma_tree,
    is_dominating,
)
from .errors import DomsubError
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    enumerate_connected_graphs,
    enumerate_trees,
    path,
    random_connected_graph,
    random_family_f_script,
    random_tree,
    wheel,
)
from .graph import Graph, format_edge_list, subdivide
from .reduction import (
    EXAMPLE_DIMACS,
    CnfFormula,
    complete_polarity_cnf,
    parse_dimacs,
    random_cnf,
    verify_biconditional,
)
from .subdivision import msd, nonmonotone_edges, sd, sd_is_greater_than_one
from .trees import build_family_f, classify_tree, recognize_family_f, verify_labeling

log = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    detail: str = ""
    counterexample: Optional[Graph] = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def fail(self, detail: str, g: Optional[Graph] = None) -> "CheckResult":
        self.passed = False
        self.detail = detail
        self.counterexample = g
        return self

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.checked} checked in {self.seconds:.1f}s"
        if self.detail:
            text += f" -- {self.detail}"
        return text

    def dump(self) -> str:
        if self.counterexample is None:
            return ""
        return format_edge_list(self.counterexample)


def _timed(fn: Callable[..., CheckResult]) -> Callable[..., CheckResult]:
    def wrapper(*args, **kwargs) -> CheckResult:
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def mod3_value(n: int) -> int:
    """msd = sd of the path and the cycle on ``n`` vertices."""
    return {0: 1, 2: 2, 1: 3}[n % 3]


def kpq_msd(p: int, q: int) -> int:
    p, q = sorted((p, q))
    if p == 1:
        return 1 if q > 1 else 2
    return 3


@_timed
def check_closed_forms(max_cycle: int = 30, max_complete: int = 10, max_part: int = 6,
                       inject_fault: bool = False) -> CheckResult:
    """Paths, cycles, complete graphs, wheels and complete bipartite graphs."""
    res = CheckResult("closed-form msd/sd tables")
    cases: list[tuple[str, Graph, Optional[int], Optional[int]]] = []
    for n in range(3, max_cycle + 1):
        expect = mod3_value(n)
        if inject_fault and n == 4:
            expect = 2
        cases.append((f"P{n}", path(n), expect, expect))
        cases.append((f"C{n}", cycle(n), expect, expect))
    for n in range(3, max_complete + 1):
        cases.append((f"K{n}", complete(n), 1, 1))
        cases.append((f"W{n}", wheel(n), 1, 1))
    for p in range(1, max_part + 1):
        for q in range(p, max_part + 1):
            if p == 1:
                want_sd = 1 if q > 1 else None
            else:
                want_sd = 2 if p >= 3 else None
            cases.append((f"K{p},{q}", complete_bipartite(p, q), kpq_msd(p, q), want_sd))
    for name, g, want_msd, want_sd in cases:
        got = msd(g).msd
        res.checked += 1
        if got != want_msd:
            return res.fail(f"msd({name}) = {got}, expected {want_msd}", g)
        if want_sd is not None:
            got_sd = sd(g, budget=3).sd
            if got_sd != want_sd:
                return res.fail(f"sd({name}) = {got_sd}, expected {want_sd}", g)
    return res


def general_corpus(max_n: int = 6, samples: int = 500, sample_max_n: int = 10,
                   seed: int = 0) -> Iterable[Graph]:
    """All connected labelled graphs with 2..max_n vertices, then random ones."""
    for n in range(2, max_n + 1):
        yield from enumerate_connected_graphs(n)
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(3, sample_max_n)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        yield random_connected_graph(n, m, seed=seed * 1_000_003 + i)


@_timed
def check_msd_bound(corpus: Iterable[Graph]) -> CheckResult:
    """gamma(G with e subdivided 3 times) > gamma(G) on every edge; msd in {1, 2, 3}."""
    res = CheckResult("universal msd bound")
    for g in corpus:
        base = domination_number(g)
        for e in g.edges:
            if dominates_within(subdivide(g, e, 3), base):
                return res.fail(f"edge {e}: three subdivisions keep gamma = {base}", g)
        try:
            value = msd(g).msd
        except DomsubError as exc:
            return res.fail(str(exc), g)
        if value not in (1, 2, 3):
            return res.fail(f"msd = {value}", g)
        res.checked += 1
    return res


@_timed
def check_sd_msd_one(corpus: Iterable[Graph]) -> CheckResult:
    """sd(G) = 1 exactly when msd(G) = 1 (graphs with at least 3 vertices)."""
    res = CheckResult("sd = 1 iff msd = 1")
    for g in corpus:
        if g.n < 3:
            continue
        sd_one = not sd_is_greater_than_one(g)
        msd_one = msd(g).msd == 1
        if sd_one != msd_one:
            return res.fail(f"sd=1 is {sd_one} but msd=1 is {msd_one}", g)
        res.checked += 1
    return res


def tree_corpus(max_n: int = 8, samples: int = 1000, sample_max_n: int = 16,
                seed: int = 0) -> Iterable[Graph]:
    for n in range(3, max_n + 1):
        yield from enumerate_trees(n)
    rng = random.Random(seed)
    for i in range(samples):
        yield random_tree(rng.randint(3, sample_max_n), seed=seed * 1_000_003 + i)


@_timed
def check_tree_theorem(corpus: Iterable[Graph]) -> CheckResult:
    """Brute-force sd, msd and the characterisation agree on every tree."""
    res = CheckResult("trees: sd = msd = characterisation")
    for t in corpus:
        brute = sd(t, budget=3)
        m = msd(t).msd
        c = classify_tree(t)
        if brute.sd is None:
            return res.fail("sd exceeds 3 on a tree", t)
        if not brute.sd == m == c.msd == c.sd:
            return res.fail(f"brute sd={brute.sd}, msd={m}, classified msd={c.msd} sd={c.sd}", t)
        if (c.labeling is not None) != (m == 3):
            return res.fail("labelling presence disagrees with msd = 3", t)
        res.checked += 1
    return res


@_timed
def check_family_f(samples: int = 500, max_steps: int = 12, seed: int = 0) -> CheckResult:
    """Random F-trees: labelling properties, |A(T)| = gamma, every edge has msd 3."""
    res = CheckResult("family F validity")
    rng = random.Random(seed)
    for i in range(samples):
        script = random_family_f_script(rng.randint(0, max_steps), seed=seed * 1_000_003 + i)
        t, lab = build_family_f(script)
        bad = verify_labeling(t, lab)
        if bad:
            return res.fail(f"labelling violations {[v.rule for v in bad]}", t)
        g = gamma_tree(t).gamma
        if len(lab.a_set) != g:
            return res.fail(f"|A(T)| = {len(lab.a_set)} but gamma = {g}", t)
        report = msd(t)
        low = {e: k for e, k in report.per_edge.items() if k != 3}
        if low:
            return res.fail(f"edges with msd != 3: {low}", t)
        if recognize_family_f(t) is None:
            return res.fail("recogniser rejects a generated member", t)
        res.checked += 1
    return res


def reduction_instances(samples: int = 100, seed: int = 0) -> list[tuple[str, CnfFormula]]:
    out = [("example", parse_dimacs(EXAMPLE_DIMACS))]
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.choice((3, 4))
        m = rng.randint(2 if n == 3 else 3, 8)
        out.append((f"random-{i}", random_cnf(n, m, seed=seed * 1_000_003 + i)))
    for triple in combinations(range(4), 3):
        out.append((f"complete-polarity{triple}", complete_polarity_cnf(triple, num_vars=4)))
    out.append(("one-variable-unsat", CnfFormula.from_ints(1, [(1, 1, 1), (-1, -1, -1)])))
    out.append(("one-variable-taut", CnfFormula.from_ints(1, [(1, -1, 1)])))
    return out


@_timed
def check_reduction(instances: Iterable[tuple[str, CnfFormula]], timeout: float = 600.0) -> CheckResult:
    """gamma = 2n + 1 and (satisfiable iff sd > 1) on each compiled instance."""
    res = CheckResult("3-SAT reduction biconditional")
    sat = unsat = 0
    for name, f in instances:
        rep = verify_biconditional(f, timeout=timeout)
        if not rep.passed:
            return res.fail(f"{name}: {rep.to_dict()}")
        expected_gx = rep.gamma + (0 if rep.satisfiable else 1)
        if rep.gamma_x0x1_subdivided != expected_gx:
            return res.fail(f"{name}: gamma after subdividing x0x1 is {rep.gamma_x0x1_subdivided}")
        sat += rep.satisfiable
        unsat += not rep.satisfiable
        res.checked += 1
    res.notes.append(f"{sat} satisfiable, {unsat} unsatisfiable")
    return res


@_timed
def check_incomparability() -> CheckResult:
    res = CheckResult("K3,3: sd = 2, msd = 3")
    g = complete_bipartite(3, 3)
    s, m = sd(g, budget=3).sd, msd(g).msd
    res.checked = 1
    if (s, m) != (2, 3):
        return res.fail(f"sd={s}, msd={m}", g)
    return res


@_timed
def check_oracle(corpus: Iterable[Graph], max_n: int = 8) -> CheckResult:
    """Branch-and-bound gamma equals the brute-force oracle (graphs up to ``max_n``)."""
    res = CheckResult("branch-and-bound vs brute force")
    for g in corpus:
        if g.n > max_n:
            continue
        fast = gamma(g)
        slow = gamma_bruteforce(g)
        if fast.gamma != slow.gamma:
            return res.fail(f"branch-and-bound {fast.gamma} vs brute force {slow.gamma}", g)
        if not is_dominating(g, fast.witness.vertices):
            return res.fail("witness does not dominate", g)
        res.checked += 1
    return res


def scan_nonmonotone(corpus: Iterable[Graph]) -> int:
    """Count edges whose gamma profile over t = 1..3 is not monotone (logged only)."""
    return sum(len(nonmonotone_edges(g)) for g in corpus)


def scan_tie_break(corpus: Iterable[Graph]) -> int:
    """Count trees where peeling from the smallest leaf changes the recogniser's verdict."""
    diffs = 0
    for t in corpus:
        a = recognize_family_f(t) is not None
        b = recognize_family_f(t, tie_break="first") is not None
        if a != b:
            diffs += 1
            log.info("tie-break changes F-membership verdict: %r", t)
    return diffs


def run_suite(max_n: int = 6, samples: int = 500, seed: int = 0, tree_max_n: int = 8,
              tree_samples: int = 1000, inject_fault: bool = False) -> list[CheckResult]:
    general = list(general_corpus(max_n=max_n, samples=samples, seed=seed))
    results = [
        check_closed_forms(inject_fault=inject_fault),
        check_msd_bound(general),
        check_sd_msd_one(general),
        check_tree_theorem(tree_corpus(tree_max_n, tree_samples, seed=seed)),
        check_family_f(samples=samples, seed=seed),
        check_reduction(reduction_instances(seed=seed)),
        check_incomparability(),
        check_oracle(chain(general, tree_corpus(tree_max_n, tree_samples, seed=seed))),
    ]
    return results
