"""Base semantics: satisfaction, T_P, reduct, shift, and model enumeration.

Model enumerators return lists in (size, lexicographic) order so that all
downstream output is deterministic.
"""
from __future__ import annotations

from . import _bits
from ._bits import Space
from .syntax import Program, Rule


def body_holds(m: frozenset, r: Rule) -> bool:
    """M |= B(r): positive body contained in M, negative body disjoint."""
    return r.pos_body <= m and not (r.neg_body & m)


def satisfies(m: frozenset, program: Program) -> bool:
    """M |= P: for every rule, a satisfied body implies a hit head."""
    for r in program:
        if body_holds(m, r) and not (r.head & m):
            return False
    return True


def tp(program: Program, m: frozenset) -> frozenset | None:
    """One-step provability T_P(M) for a normal program.

    Returns None (undefined) when M satisfies the body of a constraint;
    otherwise the set of heads of rules whose bodies M satisfies.
    """
    if not program.is_normal:
        raise ValueError("T_P is only defined for normal programs")
    out: set = set()
    for r in program:
        if body_holds(m, r):
            if r.is_constraint:
                return None
            out |= r.head
    return frozenset(out)


def reduct(program: Program, m: frozenset) -> Program:
    """P^M: drop rules whose negative body meets M, strip negative bodies."""
    return Program(
        Rule(r.head, r.pos_body, frozenset())
        for r in program
        if not (r.neg_body & m)
    )


def shift(program: Program) -> Program:
    """sh(P): replace each k-ary disjunctive rule (k >= 2) by its k
    head-selecting normal rules; normal rules are kept as they are."""
    out = []
    for r in program:
        if r.is_normal:
            out.append(r)
        else:
            for a in sorted(r.head):
                out.append(Rule(frozenset({a}), r.pos_body, r.neg_body | (r.head - {a})))
    return Program(out)


def is_minimal_model(program: Program, m: frozenset) -> bool:
    """M |= P and no proper subset of M is a model of P."""
    space = Space(program.atoms | m)
    rules = _bits.compile_rules(program, space)
    mm = space.mask(m)
    if not _bits.sat(rules, mm):
        return False
    sub = mm
    while True:
        sub = (sub - 1) & mm
        if sub == mm:
            break
        if _bits.sat(rules, sub):
            return False
        if sub == 0:
            break
    return True


def _minimal_within(rules: tuple, mm: int) -> bool:
    if not _bits.sat(rules, mm):
        return False
    sub = mm
    while True:
        sub = (sub - 1) & mm
        if sub == mm:
            break
        if _bits.sat(rules, sub):
            return False
        if sub == 0:
            break
    return True


def stable_models(program: Program) -> list:
    """All stable models: M that are minimal models of the reduct P^M.

    Every stable model is a subset of At(P), so the enumeration is bounded.
    """
    space = Space(program.atoms)
    rules = _bits.compile_rules(program, space)
    out = []
    for m in space.masks_by_size():
        if _minimal_within(_bits.reduct(rules, m), m):
            out.append(space.unmask(m))
    return out


def supported_models(program: Program) -> list:
    """All supported models: minimal hitting sets M of the family of heads
    of rules whose bodies M satisfies.

    A triggered constraint puts the empty set into the family, which no set
    hits.  Supported models are subsets of H(P).  For normal programs the
    result coincides with the fixpoints of T_P.
    """
    space = Space(program.atoms)
    rules = _bits.compile_rules(program, space)
    heads_mask = space.mask(program.head_atoms)
    out = []
    for m in space.masks_by_size(heads_mask):
        fired = [h for h, p, n in rules if p & ~m == 0 and n & m == 0]
        if any(h == 0 for h in fired):
            continue
        if any(h & m == 0 for h in fired):
            continue
        # minimal: removing any single atom must break some head set
        needed = 0
        for h in fired:
            hm = h & m
            if hm & (hm - 1) == 0:  # exactly one atom of m in this head
                needed |= hm
        if needed == m:
            out.append(space.unmask(m))
    return out


def suppmin_models(program: Program) -> list:
    """Supported models that are also minimal classical models."""
    return [m for m in supported_models(program) if is_minimal_model(program, m)]


def horn_least_model(program: Program) -> frozenset | None:
    """Least model of a Horn program (definite rules plus constraints).

    Iterates one-step provability of the definite rules to the fixpoint L,
    then returns L if L satisfies all constraints and None (inconsistent)
    otherwise.
    """
    definite = []
    constraints = []
    for r in program:
        if not r.is_normal or r.neg_body:
            raise ValueError("horn_least_model requires a Horn program")
        (definite if r.head else constraints).append(r)
    least: set = set()
    changed = True
    while changed:
        changed = False
        for r in definite:
            if r.pos_body <= least and not (r.head <= least):
                least |= r.head
                changed = True
    for r in constraints:
        if r.pos_body <= least:
            return None
    return frozenset(least)
