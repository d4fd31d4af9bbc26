"""Relativized hyperequivalence deciders for supp / suppmin / stable semantics.

Each decider enumerates candidate interpretations (or pairs) over the
finite bounding universe and compares characterization-set membership for
the two programs; the first mismatch in canonical order is reported as a
witness.  Membership is evaluated on bitmasks for speed; every witness is
re-verified through the set-level membership functions in `semchar`
before it is returned.

Verdicts are deterministic: the reported witness is the least one under
(|Y|, lex(Y), |X|, lex(X)) regardless of the worker count.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _bits, semchar
from ._bits import Space
from .alphabets import AlphabetSpec, ProblemSpec, bounding_universe, problem
from .semantics import shift
from .syntax import Program

#: Enumeration refuses universes larger than this unless overridden;
#: the pair space grows as 3^|universe|.
DEFAULT_MAX_UNIVERSE = 24

_SIDE_RANK = {"p_only": 0, "q_only": 1, "t_mismatch": 2}


class UniverseTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """Evidence of non-equivalence.

    kind "interpretation": y is in the Mod set of exactly one program, or
    in both with a T mismatch (supp).  kind "pair": (x, y) is in the pair
    characterization set of exactly one program, or in both with a
    restricted T mismatch (suppmin).
    """

    kind: str
    y: frozenset
    x: frozenset | None
    side: str
    detail: dict

    def sort_key(self):
        x = self.x if self.x is not None else frozenset()
        return (len(self.y), tuple(sorted(self.y)), len(x), tuple(sorted(x)),
                _SIDE_RANK[self.side])


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    witness: Witness | None
    semantics: str
    shifted: bool
    fast_path: bool
    candidates: int
    elapsed: float
    universe: frozenset


def _amask(space: Space, spec: AlphabetSpec) -> int:
    return space.mask(a for a in space.atoms if a in spec)


def _guard(universe: frozenset, max_universe: int) -> None:
    if len(universe) > max_universe:
        raise UniverseTooLargeError(
            f"witness universe has {len(universe)} atoms (limit {max_universe}); "
            "raise the limit explicitly to proceed"
        )


# ---------------------------------------------------------------- supp ----

def _scan_supp(sp: Program, sq: Program, heads: AlphabetSpec,
               atoms: tuple, chunk) -> tuple:
    space = Space(atoms)
    rp = _bits.compile_rules(sp, space)
    rq = _bits.compile_rules(sq, space)
    am = _amask(space, heads)
    count = 0
    for y in chunk:
        count += 1
        tp_p = _bits.tp(rp, y) if _bits.sat(rp, y) else None
        tp_q = _bits.tp(rq, y) if _bits.sat(rq, y) else None
        in_p = tp_p is not None and (y & ~tp_p) & ~am == 0
        in_q = tp_q is not None and (y & ~tp_q) & ~am == 0
        if in_p == in_q:
            if in_p and tp_p != tp_q:
                w = Witness(
                    "interpretation", space.unmask(y), None, "t_mismatch",
                    {"tp_p": sorted(space.unmask(tp_p)),
                     "tp_q": sorted(space.unmask(tp_q))},
                )
                return w, count
            continue
        absent_tp = tp_q if in_p else tp_p
        side = "p_only" if in_p else "q_only"
        reason = "model" if absent_tp is None else "justification"
        w = Witness("interpretation", space.unmask(y), None, side,
                    {"failed": reason})
        return w, count
    return None, count


def decide_supp(p: Program, q: Program, heads: AlphabetSpec, *,
                jobs: int = 1, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Verdict:
    """Supp-equivalence of P and Q relative to HB(A', B') for every body
    alphabet B' (the body alphabet plays no role and is not a parameter).

    Disjunctive inputs are shifted first.
    """
    t0 = time.perf_counter()
    shifted = not (p.is_normal and q.is_normal)
    sp, sq = shift(p), shift(q)
    spec = problem("supp", heads, AlphabetSpec.complement())
    universe = bounding_universe(sp, sq, spec)
    _guard(universe, max_universe)
    witness, count = _run(_scan_supp, (sp, sq, heads), universe, jobs)
    if witness is not None:
        _verify_supp_witness(sp, sq, heads, witness)
    return Verdict(witness is None, witness, "supp", shifted, False, count,
                   time.perf_counter() - t0, universe)


def _verify_supp_witness(sp, sq, heads, w: Witness) -> None:
    from .semantics import tp as tp_sets

    in_p = semchar.in_mod_a(sp, w.y, heads)
    in_q = semchar.in_mod_a(sq, w.y, heads)
    if w.side == "p_only":
        assert in_p and not in_q
    elif w.side == "q_only":
        assert in_q and not in_p
    else:
        assert in_p and in_q and tp_sets(sp, w.y) != tp_sets(sq, w.y)


# ------------------------------------------------------------- suppmin ----

def _prep_suppmin(rules, y, am, abm):
    """Per-Y data for Mod_A^B membership: T_P(Y), the justification-gap
    test, the models of P among subsets of Y, and condition (3)."""
    if not _bits.sat(rules, y):
        return None
    t = _bits.tp(rules, y)
    gap_ok = (y & ~t) & ~am == 0
    models = []
    sub = y
    while True:
        if _bits.sat(rules, sub):
            models.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & y
    c3 = any(z != y and z & abm == y & abm for z in models)
    return t, gap_ok, models, c3


def _member_suppmin(prep, x, y, am, bm, abm) -> bool:
    if prep is None:
        return False
    t, gap_ok, models, c3 = prep
    if not gap_ok:
        return False
    if x & ~(y & abm):
        return False
    if c3:
        return False
    xa, xb = x & am, x & bm
    for z in models:
        if z != y and z & bm == xb and xa & ~z == 0:
            return False
    if xb == y & bm and (y & ~t) & ~x:
        return False
    return True


def _scan_suppmin(sp: Program, sq: Program, heads: AlphabetSpec,
                  bodies: AlphabetSpec, atoms: tuple, chunk) -> tuple:
    space = Space(atoms)
    rp = _bits.compile_rules(sp, space)
    rq = _bits.compile_rules(sq, space)
    am = _amask(space, heads)
    bm = _amask(space, bodies)
    abm = am | bm
    count = 0
    for y in chunk:
        sat_p = _bits.sat(rp, y)
        sat_q = _bits.sat(rq, y)
        if not (sat_p or sat_q):
            continue
        prep_p = _prep_suppmin(rp, y, am, abm) if sat_p else None
        prep_q = _prep_suppmin(rq, y, am, abm) if sat_q else None
        tdiff = (
            prep_p is not None and prep_q is not None
            and prep_p[0] & bm != prep_q[0] & bm
        )
        for x in space.masks_by_size(y):
            count += 1
            in_p = _member_suppmin(prep_p, x, y, am, bm, abm)
            in_q = _member_suppmin(prep_q, x, y, am, bm, abm)
            if in_p != in_q:
                side = "p_only" if in_p else "q_only"
                absent = sq if in_p else sp
                failed = semchar.in_mod_ab(
                    absent, space.unmask(x), space.unmask(y), heads, bodies
                ).failed_condition
                return (
                    Witness("pair", space.unmask(y), space.unmask(x), side,
                            {"failed_condition": failed}),
                    count,
                )
            if in_p and tdiff:
                return (
                    Witness(
                        "pair", space.unmask(y), space.unmask(x), "t_mismatch",
                        {"tp_p": sorted(space.unmask(prep_p[0] & bm)),
                         "tp_q": sorted(space.unmask(prep_q[0] & bm))},
                    ),
                    count,
                )
    return None, count


def decide_suppmin(p: Program, q: Program, heads: AlphabetSpec,
                   bodies: AlphabetSpec, *, jobs: int = 1,
                   max_universe: int = DEFAULT_MAX_UNIVERSE) -> Verdict:
    """Suppmin-equivalence of P and Q relative to HB(A', B').

    Disjunctive inputs are shifted first.
    """
    t0 = time.perf_counter()
    shifted = not (p.is_normal and q.is_normal)
    sp, sq = shift(p), shift(q)
    spec = problem("suppmin", heads, bodies)
    universe = bounding_universe(sp, sq, spec)
    _guard(universe, max_universe)
    witness, count = _run(_scan_suppmin, (sp, sq, heads, bodies), universe, jobs)
    if witness is not None:
        _verify_pair_witness(sp, sq, heads, bodies, witness, semchar.in_mod_ab,
                             tdiff=_suppmin_tdiff)
    return Verdict(witness is None, witness, "suppmin", shifted, False, count,
                   time.perf_counter() - t0, universe)


def _suppmin_tdiff(sp, sq, heads, bodies, y):
    from .alphabets import restrict
    from .semantics import tp as tp_sets

    return restrict(tp_sets(sp, y), (bodies,)) != restrict(tp_sets(sq, y), (bodies,))


def _verify_pair_witness(sp, sq, heads, bodies, w: Witness, membership, tdiff) -> None:
    in_p = membership(sp, w.x, w.y, heads, bodies).member
    in_q = membership(sq, w.x, w.y, heads, bodies).member
    if w.side == "p_only":
        assert in_p and not in_q
    elif w.side == "q_only":
        assert in_q and not in_p
    else:
        assert in_p and in_q and tdiff is not None and tdiff(sp, sq, heads, bodies, w.y)


# --------------------------------------------------------------- stable ----

def _prep_stable(rules, y, am, abm):
    """Per-Y data for SE_A^B membership: models of the reduct P^Y among
    subsets of Y, condition (3), and the projections used by (4)/(5)."""
    if not _bits.sat(rules, y):
        return None
    red = _bits.reduct(rules, y)
    models = []
    sub = y
    while True:
        if _bits.sat(red, sub):
            models.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & y
    c3 = any(z != y and z & am == y & am for z in models)
    proper = [z for z in models if z != y]
    set5 = {z & abm for z in models}
    return c3, proper, set5


def _member_stable(prep, x, y, am, bm, abm) -> bool:
    if prep is None:
        return False
    c3, proper, set5 = prep
    xa = x & am
    ya = y & am
    if not (x == y or (x & ~(y & abm) == 0 and xa & ~ya == 0 and xa != ya)):
        return False
    if c3:
        return False
    xb = x & bm
    for z in proper:
        za, zb = z & am, z & bm
        if zb & ~xb == 0 and xa & ~za == 0 and (za != xa or zb != xb):
            return False
    if (x & abm) not in set5:
        return False
    return True


def _horn_least(definite, constraints, facts: int) -> int | None:
    """Least model of compiled definite rules + fact mask; None when a
    constraint fires."""
    least = facts
    changed = True
    while changed:
        changed = False
        for h, p, _ in definite:
            if p & ~least == 0 and h & ~least:
                least |= h
                changed = True
    for _, p, _ in constraints:
        if p & ~least == 0:
            return None
    return least


def _prep_stable_normal(rules, y, am, abm):
    if not _bits.sat(rules, y):
        return None
    red = _bits.reduct(rules, y)
    definite = tuple(r for r in red if r[0])
    constraints = tuple(r for r in red if not r[0])
    ya = y & am
    least = _horn_least(definite, constraints, ya)
    c3 = least is not None and least & ~y == 0 and least != y and least & am == ya
    return definite, constraints, c3


def _member_stable_normal(prep, x, y, am, bm, abm) -> bool:
    if prep is None:
        return False
    definite, constraints, c3 = prep
    xa = x & am
    ya = y & am
    if not (x == y or (x & ~(y & abm) == 0 and xa & ~ya == 0 and xa != ya)):
        return False
    if c3:
        return False
    xb = x & bm
    least = _horn_least(definite, constraints, xa)
    if least is not None and least & ~y == 0 and least != y \
            and least & bm & ~xb == 0 and least & bm != xb:
        return False  # (4')
    extras = (y & ~x) & am
    while extras:
        bit = extras & -extras
        extras &= extras - 1
        least = _horn_least(definite, constraints, xa | bit)
        if least is not None and least & ~y == 0 and least != y \
                and least & bm & ~xb == 0:
            return False  # (4'')
    least = _horn_least(definite, constraints, x & abm)
    if not (least is not None and least & ~y == 0 and least & abm == x & abm):
        return False  # (5)
    return True


def _scan_stable(p: Program, q: Program, heads: AlphabetSpec,
                 bodies: AlphabetSpec, atoms: tuple, chunk) -> tuple:
    space = Space(atoms)
    rp = _bits.compile_rules(p, space)
    rq = _bits.compile_rules(q, space)
    am = _amask(space, heads)
    bm = _amask(space, bodies)
    abm = am | bm
    normal = p.is_normal and q.is_normal
    prep = _prep_stable_normal if normal else _prep_stable
    member = _member_stable_normal if normal else _member_stable
    reference = semchar.in_se_ab_normal if normal else semchar.in_se_ab
    count = 0
    for y in chunk:
        prep_p = prep(rp, y, am, abm)
        prep_q = prep(rq, y, am, abm)
        if prep_p is None and prep_q is None:
            continue
        for x in space.masks_by_size(y):
            count += 1
            in_p = member(prep_p, x, y, am, bm, abm)
            in_q = member(prep_q, x, y, am, bm, abm)
            if in_p != in_q:
                side = "p_only" if in_p else "q_only"
                absent = q if in_p else p
                failed = reference(
                    absent, space.unmask(x), space.unmask(y), heads, bodies
                ).failed_condition
                return (
                    Witness("pair", space.unmask(y), space.unmask(x), side,
                            {"failed_condition": failed}),
                    count,
                )
    return None, count


def decide_stable(p: Program, q: Program, heads: AlphabetSpec,
                  bodies: AlphabetSpec, *, jobs: int = 1,
                  max_universe: int = DEFAULT_MAX_UNIVERSE) -> Verdict:
    """Stable-equivalence of P and Q relative to HB(A', B').

    When both inputs are normal the Horn least-model membership is used;
    otherwise membership enumerates reduct models.  With a cofinite head
    alphabet the universe carries reserved padding atoms (and up to two
    body-base atoms) to probe interpretations outside At(P u Q).
    """
    t0 = time.perf_counter()
    spec = problem("stable", heads, bodies)
    universe = bounding_universe(p, q, spec)
    _guard(universe, max_universe)
    witness, count = _run(_scan_stable, (p, q, heads, bodies), universe, jobs)
    fast = p.is_normal and q.is_normal
    if witness is not None:
        membership = semchar.in_se_ab_normal if fast else semchar.in_se_ab
        _verify_pair_witness(p, q, heads, bodies, witness, membership, tdiff=None)
    return Verdict(witness is None, witness, "stable", False, fast, count,
                   time.perf_counter() - t0, universe)


# ----------------------------------------------------------- dispatcher ----

def decide(p: Program, q: Program, spec: ProblemSpec, *, jobs: int = 1,
           max_universe: int = DEFAULT_MAX_UNIVERSE) -> Verdict:
    """Route a ProblemSpec to the matching decider.

    "stable_normal" insists that both inputs are normal and then shares the
    stable decider, which selects the Horn fast path on its own.
    """
    heads = spec.context.heads
    bodies = spec.context.bodies
    if spec.semantics == "supp":
        return decide_supp(p, q, heads, jobs=jobs, max_universe=max_universe)
    if spec.semantics == "suppmin":
        return decide_suppmin(p, q, heads, bodies, jobs=jobs, max_universe=max_universe)
    if spec.semantics == "stable_normal":
        if not (p.is_normal and q.is_normal):
            raise ValueError("stable_normal requires normal input programs")
    return decide_stable(p, q, heads, bodies, jobs=jobs, max_universe=max_universe)


# ------------------------------------------------------------- execution ----

def _worker(args):
    scan, scan_args, atoms, chunk = args
    return scan(*scan_args, atoms, chunk)


def _run(scan, scan_args, universe: frozenset, jobs: int) -> tuple:
    space = Space(universe)
    atoms = space.atoms
    if jobs <= 1:
        return scan(*scan_args, atoms, space.masks_by_size())
    masks = list(space.masks_by_size())
    chunks = [masks[i::jobs] for i in range(jobs)]
    results = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_worker, [(scan, scan_args, atoms, c) for c in chunks]))
    count = sum(c for _, c in results)
    found = [w for w, _ in results if w is not None]
    if not found:
        return None, count
    return min(found, key=Witness.sort_key), count
