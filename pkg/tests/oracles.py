"""Independent brute-force reference implementations used as test oracles.

Everything here is a direct, unoptimized transcription of the defining
conditions, sharing only the data types (Program/Rule/AlphabetSpec) with
the package under test.  Expected values frozen into the tests were
computed with these functions.
"""
from __future__ import annotations

from itertools import combinations

from hypereq import AlphabetSpec, Program, Rule


def subsets(atoms):
    atoms = sorted(atoms)
    for k in range(len(atoms) + 1):
        for combo in combinations(atoms, k):
            yield frozenset(combo)


def holds(m, r: Rule) -> bool:
    return r.pos_body <= m and not (r.neg_body & m)


def naive_satisfies(m, p: Program) -> bool:
    return all(not holds(m, r) or (r.head & m) for r in p)


def naive_tp(p: Program, m):
    out = set()
    for r in p:
        if holds(m, r):
            if not r.head:
                return None
            out |= r.head
    return frozenset(out)


def naive_reduct(p: Program, m) -> Program:
    return Program(Rule(r.head, r.pos_body, frozenset()) for r in p if not (r.neg_body & m))


def naive_is_minimal_model(p: Program, m) -> bool:
    if not naive_satisfies(m, p):
        return False
    return not any(z < m and naive_satisfies(z, p) for z in subsets(m))


def naive_stable_models(p: Program):
    out = []
    for m in subsets(p.atoms):
        if naive_is_minimal_model(naive_reduct(p, m), m):
            out.append(m)
    return out


def naive_supported_models(p: Program):
    out = []
    for m in subsets(p.head_atoms):
        family = [r.head for r in p if holds(m, r)]
        if any(not h for h in family):
            continue
        if any(not (h & m) for h in family):
            continue
        minimal = True
        for z in subsets(m):
            if z < m and all(h & z for h in family):
                minimal = False
                break
        if minimal:
            out.append(m)
    return out


def naive_suppmin_models(p: Program):
    return [m for m in naive_supported_models(p) if naive_is_minimal_model(p, m)]


def _restrict(v, specs) -> frozenset:
    return frozenset(a for a in v if any(a in s for s in specs))


def naive_in_mod_a(p: Program, y, heads: AlphabetSpec) -> bool:
    if not naive_satisfies(y, p):
        return False
    t = naive_tp(p, y)
    return t is not None and all(a in heads for a in y - t)


def naive_in_mod_ab(p: Program, x, y, heads, bodies) -> bool:
    if not naive_in_mod_a(p, y, heads):
        return False
    if not x <= _restrict(y, (heads, bodies)):
        return False
    for z in subsets(y):
        if z < y and _restrict(z, (heads, bodies)) == _restrict(y, (heads, bodies)) \
                and naive_satisfies(z, p):
            return False
    for z in subsets(y):
        if z < y and _restrict(z, (bodies,)) == _restrict(x, (bodies,)) \
                and _restrict(z, (heads,)) >= _restrict(x, (heads,)) \
                and naive_satisfies(z, p):
            return False
    if _restrict(x, (bodies,)) == _restrict(y, (bodies,)):
        t = naive_tp(p, y)
        if not (y - t <= x):
            return False
    return True


def naive_in_se(p: Program, x, y, heads, bodies) -> bool:
    if not naive_satisfies(y, p):
        return False
    xa, ya = _restrict(x, (heads,)), _restrict(y, (heads,))
    if not (x == y or (x <= _restrict(y, (heads, bodies)) and xa < ya)):
        return False
    red = naive_reduct(p, y)
    for z in subsets(y):
        if z < y and _restrict(z, (heads,)) == ya and naive_satisfies(z, red):
            return False
    xb = _restrict(x, (bodies,))
    for z in subsets(y):
        if z == y:
            continue
        za, zb = _restrict(z, (heads,)), _restrict(z, (bodies,))
        if ((zb <= xb and za > xa) or (zb < xb and za >= xa)) and naive_satisfies(z, red):
            return False
    xab = _restrict(x, (heads, bodies))
    return any(_restrict(z, (heads, bodies)) == xab and naive_satisfies(z, red)
               for z in subsets(y))


def naive_se_pairs(p: Program, heads, bodies, universe):
    out = []
    for y in subsets(universe):
        for x in subsets(y):
            if naive_in_se(p, x, y, heads, bodies):
                out.append((x, y))
    return out


def naive_mod_pairs(p: Program, heads, bodies, universe):
    out = []
    for y in subsets(universe):
        for x in subsets(y):
            if naive_in_mod_ab(p, x, y, heads, bodies):
                out.append((x, y))
    return out


def dpll(clauses) -> bool:
    """Independent DPLL satisfiability check; clauses are lists of
    (atom, positive) literals."""
    clauses = [list(c) for c in clauses]
    while True:
        if not clauses:
            return True
        if any(not c for c in clauses):
            return False
        unit = next((c[0] for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        clauses = _assign(clauses, unit)
    atom = clauses[0][0][0]
    return dpll(_assign(clauses, (atom, True))) or dpll(_assign(clauses, (atom, False)))


def _assign(clauses, lit):
    atom, value = lit
    out = []
    for c in clauses:
        if (atom, value) in c:
            continue
        out.append([l for l in c if l[0] != atom])
    return out


def random_program(rng, atoms, max_rules, max_head=1, max_body=2) -> Program:
    """Random program over the given atoms; head size 0..max_head."""
    atoms = sorted(atoms)
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        head = frozenset(rng.sample(atoms, rng.randint(0, min(max_head, len(atoms)))))
        nbody = rng.randint(0, max_body)
        body = rng.sample(atoms, min(nbody, len(atoms)))
        pos = frozenset(a for a in body if rng.random() < 0.5)
        neg = frozenset(body) - pos
        rules.append(Rule(head, pos, neg))
    return Program(rules)
