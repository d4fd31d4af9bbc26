"""Labeled test-instance generators and brute-force formula evaluators.

Each generator materializes a known program construction whose
hyperequivalence verdict is determined by the satisfiability (or 2-QBF
truth) of an input formula; the expected label is always computed by the
exhaustive evaluators here, never assumed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from .alphabets import AlphabetSpec, ProblemSpec, problem
from .semantics import stable_models
from .syntax import Program, Rule

MAX_EVAL_VARS = 20

Literal = tuple  # (atom, positive)
Clause = tuple  # of Literal


@dataclass(frozen=True)
class CnfFormula:
    variables: tuple
    clauses: tuple

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables")
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for atom, positive in c:
                if atom not in self.variables:
                    raise ValueError(f"clause atom {atom!r} not among the variables")
                if not isinstance(positive, bool):
                    raise ValueError("literal sign must be a bool")

    def clause_strings(self) -> list:
        return [" ".join(("" if pos else "-") + a for a, pos in c) for c in self.clauses]


@dataclass(frozen=True)
class Qbf2:
    """A 2-block QBF: forall universals exists existentials . matrix."""

    universals: tuple
    existentials: tuple
    matrix: CnfFormula

    def __post_init__(self):
        u, e = set(self.universals), set(self.existentials)
        if u & e:
            raise ValueError("universals and existentials overlap")
        if not set(self.matrix.variables) <= u | e:
            raise ValueError("matrix variables escape the prefix")


@dataclass(frozen=True)
class LabeledInstance:
    p: Program
    q: Program
    spec: ProblemSpec
    expected_equivalent: bool
    provenance: dict


def eval_cnf_satisfiable(cnf: CnfFormula) -> bool:
    """Exhaustive truth-table satisfiability (at most MAX_EVAL_VARS vars)."""
    if len(cnf.variables) > MAX_EVAL_VARS:
        raise ValueError("too many variables for exhaustive evaluation")
    for bits in product((False, True), repeat=len(cnf.variables)):
        assign = dict(zip(cnf.variables, bits))
        if all(any(assign[a] == pos for a, pos in c) for c in cnf.clauses):
            return True
    return False


def eval_qbf(qbf: Qbf2) -> bool:
    """forall-exists evaluation by exhaustive enumeration."""
    if len(qbf.universals) + len(qbf.existentials) > MAX_EVAL_VARS:
        raise ValueError("too many variables for exhaustive evaluation")
    for ubits in product((False, True), repeat=len(qbf.universals)):
        uassign = dict(zip(qbf.universals, ubits))
        for ebits in product((False, True), repeat=len(qbf.existentials)):
            assign = {**uassign, **dict(zip(qbf.existentials, ebits))}
            if all(any(assign[a] == pos for a, pos in c) for c in qbf.matrix.clauses):
                break
        else:
            return False
    return True


# ------------------------------------------------------------- plumbing ----

def prime_map(atoms, avoid=()) -> dict:
    """z -> z' with extra apostrophes until fresh w.r.t. atoms and avoid."""
    taken = set(atoms) | set(avoid)
    out = {}
    for a in sorted(set(atoms)):
        c = a + "'"
        while c in taken:
            c += "'"
        out[a] = c
        taken.add(c)
    return out


def hat_clause(clause: Clause, priming: dict) -> list:
    """The body sequence for a clause constraint: primed positives in
    clause order, then unprimed negatives."""
    pos = [priming[a] for a, positive in clause if positive]
    neg = [a for a, positive in clause if not positive]
    return pos + neg


def _fresh(base: str, taken) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def rename_apart(p: Program, q: Program, forbidden) -> tuple:
    """Consistently rename atoms of `forbidden` occurring in P or Q to
    fresh atoms outside At(P u Q) u forbidden.  Returns (P', Q', map)."""
    forbidden = frozenset(forbidden)
    occurring = (p.atoms | q.atoms) & forbidden
    taken = set(p.atoms | q.atoms | forbidden)
    mapping = {}
    for a in sorted(occurring):
        fresh = _fresh(a, taken)
        mapping[a] = fresh
        taken.add(fresh)
    return apply_renaming(p, mapping), apply_renaming(q, mapping), mapping


def apply_renaming(program: Program, mapping: dict) -> Program:
    sub = lambda s: frozenset(mapping.get(a, a) for a in s)
    return Program(Rule(sub(r.head), sub(r.pos_body), sub(r.neg_body)) for r in program)


def _rename_qbf(qbf: Qbf2, forbidden) -> tuple:
    """Rename QBF variables clashing with `forbidden` to fresh names."""
    clash = (set(qbf.universals) | set(qbf.existentials)) & set(forbidden)
    if not clash:
        return qbf, {}
    taken = set(qbf.universals) | set(qbf.existentials) | set(forbidden)
    mapping = {}
    for a in sorted(clash):
        fresh = _fresh(a, taken)
        mapping[a] = fresh
        taken.add(fresh)
    ren = lambda a: mapping.get(a, a)
    matrix = CnfFormula(
        tuple(ren(a) for a in qbf.matrix.variables),
        tuple(tuple((ren(a), pos) for a, pos in c) for c in qbf.matrix.clauses),
    )
    return (
        Qbf2(tuple(ren(a) for a in qbf.universals), tuple(ren(a) for a in qbf.existentials), matrix),
        mapping,
    )


def _r(head=(), pos=(), neg=()) -> Rule:
    return Rule(frozenset(head), frozenset(pos), frozenset(neg))


# ----------------------------------------------------------- generators ----

def gen_supp_cnf(cnf: CnfFormula, a=()) -> LabeledInstance:
    """Supp instance from a CNF:  P encodes a choice over the variables and
    forbids every clause being falsified; Q has no models at all.  P and Q
    are supp-equivalent relative to HB(A^c, B) iff the CNF is unsatisfiable.
    """
    a = frozenset(a)
    y = list(cnf.variables)
    if "f" in y:
        raise ValueError("atom collision: 'f' is reserved by this construction")
    priming = prime_map(y)
    if set(priming.values()) & set(y):
        raise ValueError("atom collision between variables and primed copies")
    rules = []
    for v in sorted(y):
        rules.append(_r({v}, neg={priming[v]}))
        rules.append(_r({priming[v]}, neg={v}))
        rules.append(_r((), pos={v, priming[v]}))
    for c in cnf.clauses:
        rules.append(_r((), pos=hat_clause(c, priming)))
    p = Program(rules)
    if a & p.atoms:
        raise ValueError("head base must be disjoint from the construction atoms")
    q = Program([_r({"f"}), _r((), pos={"f"})])
    spec = problem("supp", AlphabetSpec.complement(a), AlphabetSpec.direct())
    return LabeledInstance(
        p, q, spec, not eval_cnf_satisfiable(cnf),
        {"generator": "supp-cnf", "clauses": cnf.clause_strings()},
    )


def gen_suppmin_dc(qbf: Qbf2, a=()) -> LabeledInstance:
    """Suppmin direct-complement instance: P(phi) and Q(phi) are
    suppmin-equivalent relative to HB(A, B^c) iff the 2-QBF is true.

    Requires A disjoint from the existentials (renaming applied) and
    A inside the universals (dummy tautology clauses added)."""
    a = frozenset(a)
    qbf, _ = _rename_qbf(qbf, a & set(qbf.existentials))
    xs = sorted(qbf.existentials)
    ys = sorted(qbf.universals)
    clauses = list(qbf.matrix.clauses)
    for extra in sorted(a - set(ys) - set(xs)):
        ys.append(extra)
        clauses.append(((extra, True), (extra, False)))
    ys = sorted(ys)
    qbf = Qbf2(tuple(ys), tuple(xs), CnfFormula(tuple(ys) + tuple(xs), tuple(clauses)))
    priming = prime_map(xs + ys, avoid=a)
    rules = []
    for z in sorted(xs + ys):
        rules.append(_r({z}, neg={priming[z]}))
        rules.append(_r({priming[z]}, neg={z}))
    for v in ys:
        rules.append(_r((), pos={v, priming[v]}))
    for x in xs:
        for u in xs:
            rules.append(_r({x}, pos={u, priming[u]}))
            rules.append(_r({priming[x]}, pos={u, priming[u]}))
    for c in clauses:
        hat = hat_clause(c, priming)
        for x in xs:
            rules.append(_r({x}, pos=hat))
            rules.append(_r({priming[x]}, pos=hat))
    p = Program(rules)
    qrules = []
    for z in sorted(xs + ys):
        qrules.append(_r({z}, neg={priming[z]}))
        qrules.append(_r({priming[z]}, neg={z}))
    for z in sorted(xs + ys):
        qrules.append(_r((), pos={z, priming[z]}))
    for c in clauses:
        qrules.append(_r((), pos=hat_clause(c, priming)))
    q = Program(qrules)
    b = frozenset(xs) | frozenset(ys) | frozenset(priming.values())
    spec = problem("suppmin", AlphabetSpec.direct(a), AlphabetSpec.complement(b))
    return LabeledInstance(
        p, q, spec, eval_qbf(qbf),
        {"generator": "suppmin-dc", "universals": ys, "existentials": xs,
         "clauses": qbf.matrix.clause_strings()},
    )


def gen_suppmin_cd(qbf: Qbf2, a, b=()) -> LabeledInstance:
    """Suppmin complement-direct instance: P(phi) and Q(phi) are
    suppmin-equivalent relative to HB(A^c, B) iff the 2-QBF is true.

    A must be nonempty; the least atom of A plays the marker role.  Both
    quantifier blocks must be nonempty."""
    a = frozenset(a)
    b = frozenset(b)
    if not a:
        raise ValueError("the head base A must be nonempty for this construction")
    if not qbf.universals or not qbf.existentials:
        raise ValueError("both quantifier blocks must be nonempty")
    qbf, _ = _rename_qbf(qbf, a | b)
    xs = sorted(qbf.existentials)
    ys = sorted(qbf.universals)
    priming = prime_map(xs + ys, avoid=a | b)
    g = min(sorted(a))
    x0 = xs[0]
    x0p = priming[x0]
    w = sorted(set(xs) | set(ys) | set(priming.values()) | {g})
    rules = []
    for v in ys:
        rules.append(_r((), neg={v, priming[v]}))
        rules.append(_r((), pos={v, priming[v]}))
    for u in xs:
        for v in xs:
            rules.append(_r((), pos={u}, neg={v, priming[v]}))
            rules.append(_r((), pos={priming[u]}, neg={v, priming[v]}))
            rules.append(_r((), pos={v, priming[v]}, neg={u}))
            rules.append(_r((), pos={v, priming[v]}, neg={priming[u]}))
    for c in qbf.matrix.clauses:
        hat = hat_clause(c, priming)
        rules.append(_r((), pos=hat + [x0], neg={x0p}))
        rules.append(_r((), pos=hat + [x0p], neg={x0}))
    rules.append(_r((), neg={g}))
    for u in w:
        rules.append(_r({u}, pos={x0, x0p, u}))
    p = Program(rules)
    q = Program(list(p) + [_r((), neg={x0, x0p})])
    spec = problem("suppmin", AlphabetSpec.complement(a), AlphabetSpec.direct(b))
    return LabeledInstance(
        p, q, spec, eval_qbf(qbf),
        {"generator": "suppmin-cd", "universals": ys, "existentials": xs,
         "clauses": qbf.matrix.clause_strings(), "marker": g},
    )


def gen_stable_cd(qbf: Qbf2, a=(), b=()) -> LabeledInstance:
    """Stable complement-direct instance: P(phi) and Q(phi) are
    stable-equivalent relative to HB(A^c, B) iff the 2-QBF is true.

    Every clause of the matrix must mention an existential literal."""
    a = frozenset(a)
    b = frozenset(b)
    qbf, _ = _rename_qbf(qbf, a | b)
    xs = sorted(qbf.existentials)
    ys = sorted(qbf.universals)
    for c in qbf.matrix.clauses:
        if not any(atom in xs for atom, _ in c):
            raise ValueError("every clause must contain an existential literal")
    priming = prime_map(xs + ys, avoid=a | b)
    aux = _fresh("a", set(xs) | set(ys) | set(priming.values()) | a | b)
    shared = []
    for x in xs:
        shared.append(_r({aux}, pos={x, priming[x]}))
        shared.append(_r({x}, pos={aux}))
        shared.append(_r({priming[x]}, pos={aux}))
    for v in ys:
        shared.append(_r({v, priming[v]}))
        shared.append(_r((), pos={v, priming[v]}))
    for c in qbf.matrix.clauses:
        shared.append(_r({aux}, pos=hat_clause(c, priming)))
    shared.append(_r((), neg={aux}))
    p = Program([_r({x, priming[x]}) for x in xs] + shared)
    q = Program(
        [
            _r({x, priming[x]}, pos={u})
            for x in xs
            for u in [aux] + xs + [priming[v] for v in xs]
        ]
        + shared
    )
    spec = problem("stable", AlphabetSpec.complement(a), AlphabetSpec.direct(b))
    return LabeledInstance(
        p, q, spec, eval_qbf(qbf),
        {"generator": "stable-cd", "universals": ys, "existentials": xs,
         "clauses": qbf.matrix.clause_strings(), "marker": aux},
    )


def gen_stable_dc(p: Program, a=(), b=(), bodies_kind: str = "direct") -> LabeledInstance:
    """Stable direct-head instance against the model-free program {f. :- f.}:
    with At(P) disjoint from A (renaming applied), P and Q are
    stable-equivalent relative to HB(A, B') iff P has no stable models."""
    a = frozenset(a)
    b = frozenset(b)
    p, _, mapping = rename_apart(p, Program(), a)
    f = _fresh("f", p.atoms | a | b)
    q = Program([_r({f}), _r((), pos={f})])
    bodies = AlphabetSpec(bodies_kind, b)
    spec = problem("stable", AlphabetSpec.direct(a), bodies)
    return LabeledInstance(
        p, q, spec, not stable_models(p),
        {"generator": "stable-dc", "renamed": mapping, "sink": f},
    )


# ------------------------------------------------------- file interfaces ----

def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF; variable i becomes atom v{i}."""
    nvars = None
    ints = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            nvars = int(parts[2])
            continue
        ints.extend(int(tok) for tok in line.split())
    if nvars is None:
        raise ValueError("missing DIMACS header")
    clauses = []
    current = []
    for lit in ints:
        if lit == 0:
            if not current:
                raise ValueError("empty clause in DIMACS input")
            clauses.append(tuple(current))
            current = []
            continue
        if not 1 <= abs(lit) <= nvars:
            raise ValueError(f"literal {lit} out of range")
        current.append((f"v{abs(lit)}", lit > 0))
    if current:
        raise ValueError("clause not terminated by 0")
    return CnfFormula(tuple(f"v{i}" for i in range(1, nvars + 1)), tuple(clauses))


def parse_qdimacs(text: str) -> Qbf2:
    """QDIMACS restricted to a single 'a' block followed by a single 'e'
    block (either may be missing); every variable must be quantified."""
    nvars = None
    universals: list = []
    existentials: list = []
    seen_a = seen_e = False
    ints = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad QDIMACS header: {line!r}")
            nvars = int(parts[2])
            continue
        if line.startswith("a ") or line == "a":
            if seen_a or seen_e:
                raise ValueError("only a single 'a' block before the 'e' block is supported")
            seen_a = True
            universals = [int(t) for t in line.split()[1:]]
            if universals[-1:] != [0]:
                raise ValueError("quantifier line not terminated by 0")
            universals = universals[:-1]
            continue
        if line.startswith("e ") or line == "e":
            if seen_e:
                raise ValueError("only a single 'e' block is supported")
            seen_e = True
            existentials = [int(t) for t in line.split()[1:]]
            if existentials[-1:] != [0]:
                raise ValueError("quantifier line not terminated by 0")
            existentials = existentials[:-1]
            continue
        ints.extend(int(tok) for tok in line.split())
    if nvars is None:
        raise ValueError("missing QDIMACS header")
    quantified = set(universals) | set(existentials)
    if len(quantified) != len(universals) + len(existentials):
        raise ValueError("variable quantified twice")
    if quantified != set(range(1, nvars + 1)):
        raise ValueError("every variable must appear in exactly one quantifier block")
    clauses = []
    current = []
    for lit in ints:
        if lit == 0:
            if not current:
                raise ValueError("empty clause in QDIMACS input")
            clauses.append(tuple(current))
            current = []
            continue
        if not 1 <= abs(lit) <= nvars:
            raise ValueError(f"literal {lit} out of range")
        current.append((f"v{abs(lit)}", lit > 0))
    if current:
        raise ValueError("clause not terminated by 0")
    matrix = CnfFormula(tuple(f"v{i}" for i in range(1, nvars + 1)), tuple(clauses))
    return Qbf2(
        tuple(f"v{i}" for i in universals),
        tuple(f"v{i}" for i in existentials),
        matrix,
    )


def write_instance(inst: LabeledInstance, directory) -> Path:
    """Write {p.lp, q.lp, spec.json, label.json} into a directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "p.lp").write_text(inst.p.to_text() + "\n")
    (directory / "q.lp").write_text(inst.q.to_text() + "\n")
    (directory / "spec.json").write_text(json.dumps({
        "semantics": inst.spec.semantics,
        "heads": inst.spec.context.heads.spec_string(),
        "bodies": inst.spec.context.bodies.spec_string(),
    }, indent=2) + "\n")
    (directory / "label.json").write_text(json.dumps({
        "expected_equivalent": inst.expected_equivalent,
        "provenance": inst.provenance,
    }, indent=2) + "\n")
    return directory
