"""Relativized hyperequivalence of propositional disjunctive logic programs.

Decides whether two programs behave identically under stable, supported,
or supported-minimal semantics when extended by arbitrary context programs
from a class HB(A',B') with directly- or complement-specified head/body
alphabets, producing re-verifiable witnesses and concrete distinguishing
contexts.
"""

from .alphabets import (
    AlphabetSpec,
    ContextClass,
    ProblemSpec,
    bounding_universe,
    problem,
    restrict,
)
from .decide import (
    UniverseTooLargeError,
    Verdict,
    Witness,
    decide,
    decide_stable,
    decide_supp,
    decide_suppmin,
)
from .oracle import ContextBounds, OracleVerdict, oracle_equiv, witness_to_context
from .reductions import (
    CnfFormula,
    LabeledInstance,
    Qbf2,
    eval_cnf_satisfiable,
    eval_qbf,
    gen_stable_cd,
    gen_stable_dc,
    gen_supp_cnf,
    gen_suppmin_cd,
    gen_suppmin_dc,
    rename_apart,
)
from .semantics import (
    horn_least_model,
    is_minimal_model,
    reduct,
    satisfies,
    shift,
    stable_models,
    supported_models,
    suppmin_models,
    tp,
)
from .semchar import (
    CharPair,
    in_mod_a,
    in_mod_ab,
    in_se_ab,
    in_se_ab_normal,
    mod_ab_pairs,
    se_ab_pairs,
)
from .syntax import Program, ParseError, ReservedAtomError, Rule, parse_program

__version__ = "0.1.0"

__all__ = [
    "AlphabetSpec",
    "CharPair",
    "CnfFormula",
    "ContextBounds",
    "ContextClass",
    "LabeledInstance",
    "OracleVerdict",
    "ParseError",
    "ProblemSpec",
    "Program",
    "Qbf2",
    "ReservedAtomError",
    "Rule",
    "UniverseTooLargeError",
    "Verdict",
    "Witness",
    "bounding_universe",
    "decide",
    "decide_stable",
    "decide_supp",
    "decide_suppmin",
    "eval_cnf_satisfiable",
    "eval_qbf",
    "gen_stable_cd",
    "gen_stable_dc",
    "gen_supp_cnf",
    "gen_suppmin_cd",
    "gen_suppmin_dc",
    "horn_least_model",
    "in_mod_a",
    "in_mod_ab",
    "in_se_ab",
    "in_se_ab_normal",
    "is_minimal_model",
    "mod_ab_pairs",
    "oracle_equiv",
    "parse_program",
    "problem",
    "reduct",
    "rename_apart",
    "restrict",
    "satisfies",
    "se_ab_pairs",
    "shift",
    "stable_models",
    "supported_models",
    "suppmin_models",
    "tp",
    "witness_to_context",
]
