"""Reference implementations that share no code with the package.

Everything here is plain set arithmetic over adjacency dicts; slow but
obviously correct on the small inputs the tests feed it.
"""

from itertools import combinations, product


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def dominates(adj, d):
    seen = set(d)
    for v in d:
        seen |= adj[v]
    return len(seen) == len(adj)


def gamma(n, edges):
    adj = adjacency(n, edges)
    for k in range(1, n + 1):
        for d in combinations(range(n), k):
            if dominates(adj, d):
                return k
    raise AssertionError


def minimum_dominating_sets(n, edges):
    adj = adjacency(n, edges)
    for k in range(1, n + 1):
        found = [set(d) for d in combinations(range(n), k) if dominates(adj, d)]
        if found:
            return found
    raise AssertionError


def subdivided(n, edges, chosen, t=1):
    """Edge list after replacing each edge in ``chosen`` by a path with ``t`` inner vertices."""
    chosen = {tuple(sorted(e)) for e in chosen}
    out = [tuple(sorted(e)) for e in edges if tuple(sorted(e)) not in chosen]
    nxt = n
    for a, b in sorted(chosen):
        walk = [a] + list(range(nxt, nxt + t)) + [b]
        nxt += t
        out += list(zip(walk, walk[1:]))
    return nxt, out


def msd(n, edges):
    base = gamma(n, edges)
    best = None
    for e in edges:
        for t in (1, 2, 3, 4):
            if gamma(*subdivided(n, edges, [e], t)) > base:
                break
        best = t if best is None else min(best, t)
    return best


def sd(n, edges, budget=3):
    base = gamma(n, edges)
    for k in range(1, budget + 1):
        for chosen in combinations(edges, k):
            if gamma(*subdivided(n, edges, chosen)) > base:
                return k
    return None


def satisfiable(num_vars, clauses):
    """``clauses`` are DIMACS-style signed 1-based integers."""
    for bits in product((False, True), repeat=num_vars):
        if all(any(bits[abs(x) - 1] == (x > 0) for x in c) for c in clauses):
            return True
    return False
