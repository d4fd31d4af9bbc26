"""Head/body alphabets, context classes HB(A',B') and witness universes.

An alphabet is either a finite atom set given directly or the complement
of a finite set within the (never materialized) countable atom universe.
Every condition in the characterizations only ever restricts *finite*
interpretations to an alphabet, so a kind flag plus the finite base is a
complete representation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .syntax import Program, is_atom_name

DIRECT = "direct"
COMPLEMENT = "complement"

#: Reserved padding atoms used to probe interpretations that reach outside
#: At(P u Q) when the head alphabet is cofinite (stable semantics only).
PAD_ATOMS = ("_hx_p1", "_hx_p2")

SEMANTICS = ("supp", "suppmin", "stable", "stable_normal")


@dataclass(frozen=True)
class AlphabetSpec:
    """A finite or cofinite atom alphabet."""

    kind: str
    base: frozenset

    def __post_init__(self):
        if self.kind not in (DIRECT, COMPLEMENT):
            raise ValueError(f"unknown alphabet kind: {self.kind!r}")
        object.__setattr__(self, "base", frozenset(self.base))

    @classmethod
    def direct(cls, atoms: Iterable[str] = ()) -> "AlphabetSpec":
        return cls(DIRECT, frozenset(atoms))

    @classmethod
    def complement(cls, atoms: Iterable[str] = ()) -> "AlphabetSpec":
        return cls(COMPLEMENT, frozenset(atoms))

    @classmethod
    def parse(cls, text: str) -> "AlphabetSpec":
        """Parse CLI syntax: "direct:a,b,c", "complement:a", "direct:",
        "complement:" (the whole atom universe)."""
        kind, sep, rest = text.partition(":")
        if not sep or kind not in (DIRECT, COMPLEMENT):
            raise ValueError(f"bad alphabet spec {text!r}; expected 'direct:...' or 'complement:...'")
        atoms = [a for a in rest.split(",") if a]
        for a in atoms:
            if not is_atom_name(a):
                raise ValueError(f"bad atom name {a!r} in alphabet spec {text!r}")
        return cls(kind, frozenset(atoms))

    def spec_string(self) -> str:
        return f"{self.kind}:{','.join(sorted(self.base))}"

    @property
    def is_complement(self) -> bool:
        return self.kind == COMPLEMENT

    def __contains__(self, atom: str) -> bool:
        if self.kind == DIRECT:
            return atom in self.base
        return atom not in self.base

    def restrict(self, v: Iterable[str]) -> frozenset:
        """V restricted to this alphabet (V \\ base for complements)."""
        if self.kind == DIRECT:
            return frozenset(v) & self.base
        return frozenset(a for a in v if a not in self.base)


def restrict(v: Iterable[str], parts: Sequence[AlphabetSpec]) -> frozenset:
    """V restricted to the union of the given alphabets, e.g. V|_{A u B}."""
    vs = frozenset(v)
    return frozenset(a for a in vs if any(a in part for part in parts))


@dataclass(frozen=True)
class ContextClass:
    """HB(A',B'): programs with heads in A' and bodies in B'."""

    heads: AlphabetSpec
    bodies: AlphabetSpec

    def __contains__(self, program: Program) -> bool:
        return all(a in self.heads for a in program.head_atoms) and all(
            a in self.bodies for a in program.body_atoms
        )


@dataclass(frozen=True)
class ProblemSpec:
    """One decision problem: a semantics plus a context class."""

    semantics: str
    context: ContextClass

    def __post_init__(self):
        if self.semantics not in SEMANTICS:
            raise ValueError(f"unknown semantics {self.semantics!r}")


def problem(semantics: str, heads: AlphabetSpec, bodies: AlphabetSpec) -> ProblemSpec:
    return ProblemSpec(semantics, ContextClass(heads, bodies))


def bounding_universe(p: Program, q: Program, spec: ProblemSpec) -> frozenset:
    """Finite candidate universe for witness interpretations.

    supp / suppmin: At(P u Q) plus the head-alphabet base, for direct and
    complement heads alike (the characterization-set differences always
    project into that set).

    stable with direct heads: At(P u Q) u A — every SE pair lives inside it.

    stable with complement heads: At(P u Q) plus two reserved fresh padding
    atoms.  SE pair membership outside At(P u Q) depends only on padding
    counts as far as set *differences* are concerned, so two fresh
    representatives suffice.
    """
    core = p.atoms | q.atoms
    heads = spec.context.heads
    bodies = spec.context.bodies
    if spec.semantics in ("supp", "suppmin") or not heads.is_complement:
        return core | heads.base
    # stable, cofinite head alphabet
    taken = core | heads.base | bodies.base
    for pad in PAD_ATOMS:
        if pad in taken:
            raise ValueError(f"reserved padding atom {pad!r} occurs in the input")
    return core | frozenset(PAD_ATOMS)
