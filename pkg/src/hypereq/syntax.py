"""Atoms, rules, programs, and the program text format.

A program is a finite set of disjunctive rules

    a1 | ... | ak :- b1, ..., bm, not c1, ..., not cn.

with k = 0 allowed (constraint) and m = n = 0 allowed (fact, the ":-" is
then omitted).  Rules are kept in first-seen order but compare as sets:
two programs are equal iff they contain the same rules.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

# Interpretations are plain frozensets of atom names.
Interpretation = frozenset

#: Atom names starting with this prefix are reserved for internally
#: generated atoms (e.g. padding atoms) and are rejected by the parser.
RESERVED_PREFIX = "_"

_ATOM_RE = re.compile(r"[a-z_][A-Za-z0-9_']*\Z")


def is_atom_name(name: str, allow_reserved: bool = False) -> bool:
    """True iff `name` is a well-formed atom name.

    User-facing atoms start with a lowercase letter; names starting with
    an underscore are reserved for internal use and only valid when
    `allow_reserved` is set.
    """
    if not _ATOM_RE.match(name):
        return False
    if name.startswith(RESERVED_PREFIX) and not allow_reserved:
        return False
    return True


def _check_atoms(atoms: Iterable[str]) -> None:
    for a in atoms:
        if not is_atom_name(a, allow_reserved=True):
            raise ValueError(f"invalid atom name: {a!r}")


@dataclass(frozen=True)
class Rule:
    """One disjunctive rule H :- B+, not B-."""

    head: frozenset
    pos_body: frozenset
    neg_body: frozenset

    def __post_init__(self):
        object.__setattr__(self, "head", frozenset(self.head))
        object.__setattr__(self, "pos_body", frozenset(self.pos_body))
        object.__setattr__(self, "neg_body", frozenset(self.neg_body))
        _check_atoms(self.head)
        _check_atoms(self.pos_body)
        _check_atoms(self.neg_body)

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_normal(self) -> bool:
        return len(self.head) <= 1

    @property
    def is_fact(self) -> bool:
        return not self.pos_body and not self.neg_body

    @property
    def atoms(self) -> frozenset:
        return self.head | self.pos_body | self.neg_body

    def __str__(self) -> str:
        head = " | ".join(sorted(self.head))
        body = [*sorted(self.pos_body)] + [f"not {c}" for c in sorted(self.neg_body)]
        if body:
            return f"{head}{' ' if head else ''}:- {', '.join(body)}."
        if head:
            return f"{head}."
        return ":-."


def rule(head: Iterable[str] = (), pos: Iterable[str] = (), neg: Iterable[str] = ()) -> Rule:
    """Convenience constructor: rule({'a','b'}, pos={'c'}, neg={'d'})."""
    return Rule(frozenset(head), frozenset(pos), frozenset(neg))


def fact(atom: str) -> Rule:
    return Rule(frozenset({atom}), frozenset(), frozenset())


class Program:
    """A finite set of rules, deduplicated, in first-seen order.

    Programs compare and hash as rule sets; the stored order only drives
    printing.  Instances are immutable and safe to share.
    """

    __slots__ = ("rules", "_ruleset", "_atoms", "_heads", "_bodies")

    def __init__(self, rules: Iterable[Rule] = ()):
        seen: dict[Rule, None] = {}
        for r in rules:
            if not isinstance(r, Rule):
                raise TypeError(f"expected Rule, got {type(r).__name__}")
            seen.setdefault(r)
        object.__setattr__(self, "rules", tuple(seen))
        object.__setattr__(self, "_ruleset", frozenset(seen))
        a: set = set()
        h: set = set()
        b: set = set()
        for r in self.rules:
            h |= r.head
            b |= r.pos_body | r.neg_body
            a |= r.atoms
        object.__setattr__(self, "_atoms", frozenset(a))
        object.__setattr__(self, "_heads", frozenset(h))
        object.__setattr__(self, "_bodies", frozenset(b))

    def __setattr__(self, *_):
        raise AttributeError("Program is immutable")

    def __reduce__(self):
        return (Program, (self.rules,))

    @property
    def atoms(self) -> frozenset:
        """At(P): every atom occurring in the program."""
        return self._atoms

    @property
    def head_atoms(self) -> frozenset:
        """H(P): atoms occurring in rule heads."""
        return self._heads

    @property
    def body_atoms(self) -> frozenset:
        """B±(P): atoms occurring in rule bodies, positive or negative."""
        return self._bodies

    @property
    def is_normal(self) -> bool:
        return all(r.is_normal for r in self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, r: Rule) -> bool:
        return r in self._ruleset

    def __or__(self, other: "Program") -> "Program":
        return Program(self.rules + other.rules)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._ruleset == other._ruleset

    def __hash__(self) -> int:
        return hash(self._ruleset)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Program({len(self.rules)} rules, atoms={sorted(self._atoms)})"

    def to_text(self) -> str:
        return "\n".join(str(r) for r in self.rules)


EMPTY_PROGRAM = Program()


class ParseError(ValueError):
    """Syntax error in program text, with 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ReservedAtomError(ParseError):
    """Atom with a reserved (underscore) prefix in parsed input."""


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>%[^\n]*)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
      | (?P<if>:-)
      | (?P<pipe>\|)
      | (?P<comma>,)
      | (?P<dot>\.)
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    """Yield (kind, value, line, col) with 1-based positions."""
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            yield (kind, value, line, col)
        nl = value.count("\n")
        if nl:
            line += nl
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    yield ("eof", "", line, col)


def parse_program(text: str) -> Program:
    """Parse program text into a Program.

    Grammar (whitespace insignificant, % starts a line comment):
        program   := statement*
        statement := rule "."
        rule      := head | head ":-" body | ":-" body | ":-"
        head      := atom ("|" atom)*
        body      := literal ("," literal)*
        literal   := atom | "not" atom

    Raises ParseError (with line/column) on malformed input and
    ReservedAtomError on atoms starting with an underscore.
    """
    tokens = list(_tokenize(text))
    i = 0

    def peek():
        return tokens[i]

    def take(kind):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2], tok[3])
        i += 1
        return tok

    def take_atom():
        tok = take("ident")
        name = tok[1]
        if name == "not":
            raise ParseError("'not' is a keyword, not an atom", tok[2], tok[3])
        if name.startswith(RESERVED_PREFIX):
            raise ReservedAtomError(
                f"atom {name!r} uses the reserved '_' prefix", tok[2], tok[3]
            )
        return name

    rules = []
    while peek()[0] != "eof":
        head: list[str] = []
        if peek()[0] == "ident":
            head.append(take_atom())
            while peek()[0] == "pipe":
                take("pipe")
                head.append(take_atom())
        pos_body: list[str] = []
        neg_body: list[str] = []
        if peek()[0] == "if":
            take("if")
            while peek()[0] != "dot":
                if pos_body or neg_body:
                    take("comma")
                tok = peek()
                if tok[0] == "ident" and tok[1] == "not":
                    take("ident")
                    neg_body.append(take_atom())
                else:
                    pos_body.append(take_atom())
        elif not head:
            tok = peek()
            raise ParseError(f"expected rule, found {tok[1]!r}", tok[2], tok[3])
        take("dot")
        rules.append(Rule(frozenset(head), frozenset(pos_body), frozenset(neg_body)))
    return Program(rules)
