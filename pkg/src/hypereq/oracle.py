"""Brute-force ground truth: enumerate context programs R in HB(A',B')
within finite bounds and compare the semantics of P u R and Q u R.

A "bounded-equivalent" answer is *not* a proof of equivalence, only the
absence of a distinguishing context within the bounds.  A found context is
always a genuine distinguisher: it is verified by direct model computation
before being returned.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator

from .alphabets import ProblemSpec
from .decide import Verdict, Witness
from .semantics import stable_models, supported_models, suppmin_models, tp
from .syntax import Program, Rule

_MODEL_FNS = {
    "supp": supported_models,
    "suppmin": suppmin_models,
    "stable": stable_models,
    "stable_normal": stable_models,
}


@dataclass(frozen=True)
class ContextBounds:
    """Finite window into HB(A',B') for context enumeration."""

    universe: frozenset
    max_rules: int = 2
    max_head: int = 1
    max_body: int = 2
    facts_only: bool = False


@dataclass(frozen=True)
class OracleVerdict:
    """equivalent=True means bounded-equivalent: nothing found at these
    bounds, which proves nothing beyond them."""

    equivalent: bool
    context: Program | None
    contexts_examined: int
    elapsed: float


def candidate_rules(spec: ProblemSpec, bounds: ContextBounds) -> list:
    """Canonical candidate rules, sorted by printed form.

    Rules with head and positive body sharing an atom, or with positive and
    negative body sharing an atom, are dropped: a context containing them
    has an equivalent context without them, so they can never be the unique
    distinguisher.
    """
    head_pool = sorted(a for a in bounds.universe if a in spec.context.heads)
    body_pool = sorted(a for a in bounds.universe if a in spec.context.bodies)
    rules = []
    if bounds.facts_only:
        for a in head_pool:
            rules.append(Rule(frozenset({a}), frozenset(), frozenset()))
        return sorted(rules, key=str)
    heads: list = []
    for k in range(min(bounds.max_head, len(head_pool)) + 1):
        heads.extend(frozenset(c) for c in combinations(head_pool, k))
    bodies: list = []
    for k in range(min(bounds.max_body, len(body_pool)) + 1):
        for atoms in combinations(body_pool, k):
            for signs in range(1 << k):
                pos = frozenset(a for i, a in enumerate(atoms) if not signs >> i & 1)
                neg = frozenset(a for i, a in enumerate(atoms) if signs >> i & 1)
                bodies.append((pos, neg))
    for h in heads:
        for pos, neg in bodies:
            if h & pos or pos & neg:
                continue
            if not h and not pos and not neg:
                continue  # the empty constraint kills both sides alike
            rules.append(Rule(h, pos, neg))
    return sorted(rules, key=str)


def enumerate_contexts(spec: ProblemSpec, bounds: ContextBounds) -> Iterator[Program]:
    """Contexts in deterministic order: by rule count, then lexicographic
    on the printed program."""
    pool = candidate_rules(spec, bounds)
    for k in range(min(bounds.max_rules, len(pool)) + 1):
        for combo in combinations(pool, k):
            yield Program(combo)


def oracle_equiv(p: Program, q: Program, spec: ProblemSpec,
                 bounds: ContextBounds) -> OracleVerdict:
    """Search for a context R within bounds with different model sets for
    P u R and Q u R under the spec's semantics."""
    t0 = time.perf_counter()
    model_fn = _MODEL_FNS[spec.semantics]
    n = 0
    for r in enumerate_contexts(spec, bounds):
        n += 1
        if model_fn(p | r) != model_fn(q | r):
            assert r in spec.context
            return OracleVerdict(False, r, n, time.perf_counter() - t0)
    return OracleVerdict(True, None, n, time.perf_counter() - t0)


def _distinguishes(p: Program, q: Program, r: Program, spec: ProblemSpec) -> bool:
    model_fn = _MODEL_FNS[spec.semantics]
    return model_fn(p | r) != model_fn(q | r)


def witness_to_context(p: Program, q: Program, witness: Witness | Verdict,
                       spec: ProblemSpec, bounds: ContextBounds) -> Program | None:
    """Turn a decider witness into a concrete distinguishing context.

    For supp the fact set Y \\ T(Y) (restricted to the head alphabet) is
    tried for both programs first; after that, and for suppmin/stable
    always, contexts are enumerated within bounds, seeded with the witness
    atoms added to the universe.  Returns None when the bounds are
    exhausted (distinct from an equivalence claim).  Every returned context
    is verified to distinguish before it is returned.
    """
    if isinstance(witness, Verdict):
        if witness.witness is None:
            raise ValueError("verdict carries no witness: programs were equivalent")
        witness = witness.witness
    heads = spec.context.heads
    from .semantics import shift

    if spec.semantics == "supp":
        for side in (shift(p), shift(q)):
            t = tp(side, witness.y)
            if t is None:
                continue
            gap = frozenset(a for a in witness.y - t if a in heads)
            r = Program(Rule(frozenset({a}), frozenset(), frozenset()) for a in sorted(gap))
            if r in spec.context and _distinguishes(p, q, r, spec):
                return r
    seed = witness.y | (witness.x or frozenset())
    search = replace(bounds, universe=bounds.universe | seed)
    for r in enumerate_contexts(spec, search):
        if _distinguishes(p, q, r, spec):
            assert r in spec.context
            return r
    return None
