"""Characterization sets: Mod_A(P), Mod_A^B(P) and SE_A^B(P) membership.

The pair memberships evaluate their five defining conditions in order and
record the first failing index, so non-membership is always explainable.
Subset quantifiers run by exhaustive enumeration over subsets of Y; this
is fine at desk scale (|Y| <= ~16).  For normal programs the SE membership
has an equivalent polynomial path through Horn least models
(`in_se_ab_normal`), kept as a separate implementation and cross-checked
against the generic one in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .alphabets import PAD_ATOMS, AlphabetSpec, restrict
from .semantics import horn_least_model, reduct, satisfies, tp
from .syntax import Program, Rule


@dataclass(frozen=True)
class CharPair:
    """A candidate pair (X, Y) with membership evidence."""

    x: frozenset
    y: frozenset
    failed_condition: int | None = None

    @property
    def member(self) -> bool:
        return self.failed_condition is None


def _subsets(s: frozenset) -> Iterator[frozenset]:
    atoms = sorted(s)
    for k in range(len(atoms) + 1):
        for combo in combinations(atoms, k):
            yield frozenset(combo)


def in_mod_a(program: Program, y: frozenset, heads: AlphabetSpec) -> bool:
    """Y in Mod_A'(P): Y |= P and Y \\ T_P(Y) lies inside the head alphabet."""
    if not satisfies(y, program):
        return False
    t = tp(program, y)
    assert t is not None  # Y |= P rules out triggered constraints
    return all(a in heads for a in y - t)


def in_mod_ab(
    program: Program,
    x: frozenset,
    y: frozenset,
    heads: AlphabetSpec,
    bodies: AlphabetSpec,
) -> CharPair:
    """Membership of (X, Y) in Mod_{A'}^{B'}(P) for a normal program."""
    ab = (heads, bodies)
    if not in_mod_a(program, y, heads):
        return CharPair(x, y, 1)
    if not x <= restrict(y, ab):
        return CharPair(x, y, 2)
    y_ab = restrict(y, ab)
    x_a = restrict(x, (heads,))
    x_b = restrict(x, (bodies,))
    for z in _subsets(y):
        if z == y:
            continue
        if restrict(z, ab) == y_ab and satisfies(z, program):
            return CharPair(x, y, 3)
    for z in _subsets(y):
        if z == y:
            continue
        if (
            restrict(z, (bodies,)) == x_b
            and restrict(z, (heads,)) >= x_a
            and satisfies(z, program)
        ):
            return CharPair(x, y, 4)
    if x_b == restrict(y, (bodies,)):
        t = tp(program, y)
        assert t is not None
        if not (y - t <= x):
            return CharPair(x, y, 5)
    return CharPair(x, y, None)


def in_se_ab(
    program: Program,
    x: frozenset,
    y: frozenset,
    heads: AlphabetSpec,
    bodies: AlphabetSpec,
) -> CharPair:
    """Membership of (X, Y) in SE_{A'}^{B'}(P); P may be disjunctive."""
    ab = (heads, bodies)
    if not satisfies(y, program):
        return CharPair(x, y, 1)
    x_a = restrict(x, (heads,))
    y_a = restrict(y, (heads,))
    if not (x == y or (x <= restrict(y, ab) and x_a < y_a)):
        return CharPair(x, y, 2)
    red = reduct(program, y)
    x_b = restrict(x, (bodies,))
    for z in _subsets(y):
        if z == y:
            continue
        if restrict(z, (heads,)) == y_a and satisfies(z, red):
            return CharPair(x, y, 3)
    for z in _subsets(y):
        if z == y:
            continue
        z_a = restrict(z, (heads,))
        z_b = restrict(z, (bodies,))
        if ((z_b <= x_b and z_a > x_a) or (z_b < x_b and z_a >= x_a)) and satisfies(z, red):
            return CharPair(x, y, 4)
    x_ab = restrict(x, ab)
    if not any(restrict(z, ab) == x_ab and satisfies(z, red) for z in _subsets(y)):
        return CharPair(x, y, 5)
    return CharPair(x, y, None)


def _facts(atoms: frozenset) -> Program:
    return Program(Rule(frozenset({a}), frozenset(), frozenset()) for a in sorted(atoms))


def in_se_ab_normal(
    program: Program,
    x: frozenset,
    y: frozenset,
    heads: AlphabetSpec,
    bodies: AlphabetSpec,
) -> CharPair:
    """SE membership for a normal program via Horn least models.

    Each subset quantifier over Z collapses to one or two least-model
    computations on P^Y extended with facts; the verdict agrees with
    `in_se_ab` on every normal program.
    """
    if not program.is_normal:
        raise ValueError("in_se_ab_normal requires a normal program")
    ab = (heads, bodies)
    if not satisfies(y, program):
        return CharPair(x, y, 1)
    x_a = restrict(x, (heads,))
    y_a = restrict(y, (heads,))
    if not (x == y or (x <= restrict(y, ab) and x_a < y_a)):
        return CharPair(x, y, 2)
    red = reduct(program, y)

    # (3) fails iff P^Y + Y|_A' has a least model strictly below Y that
    # still agrees with Y on A'.
    least = horn_least_model(red | _facts(y_a))
    if least is not None and least < y and restrict(least, (heads,)) == y_a:
        return CharPair(x, y, 3)

    x_b = restrict(x, (bodies,))
    # (4'): some Z < Y with X|_A' <= Z|_A' drops strictly below X on B'.
    least = horn_least_model(red | _facts(x_a))
    if least is not None and least < y and restrict(least, (bodies,)) < x_b:
        return CharPair(x, y, 4)
    # (4''): growing X|_A' by one atom of (Y-X)|_A' stays within X on B'.
    for extra in sorted(restrict(y - x, (heads,))):
        least = horn_least_model(red | _facts(x_a | {extra}))
        if least is not None and least < y and restrict(least, (bodies,)) <= x_b:
            return CharPair(x, y, 4)

    x_ab = restrict(x, ab)
    least = horn_least_model(red | _facts(x_ab))
    if not (least is not None and least <= y and restrict(least, ab) == x_ab):
        return CharPair(x, y, 5)
    return CharPair(x, y, None)


def _pad_count(y: frozenset) -> int:
    return len(y & frozenset(PAD_ATOMS))


def _pairs(
    program: Program,
    heads: AlphabetSpec,
    bodies: AlphabetSpec,
    universe: frozenset,
    membership,
    padding: int,
) -> list:
    out = []
    atoms = sorted(universe)
    for ky in range(len(atoms) + 1):
        for ycombo in combinations(atoms, ky):
            y = frozenset(ycombo)
            if _pad_count(y) > padding:
                continue
            if not satisfies(y, program):
                continue  # condition (1) always fails
            for kx in range(ky + 1):
                for xcombo in combinations(ycombo, kx):
                    pair = membership(program, frozenset(xcombo), y, heads, bodies)
                    if pair.member:
                        out.append(pair)
    return out


def mod_ab_pairs(
    program: Program,
    heads: AlphabetSpec,
    bodies: AlphabetSpec,
    universe: frozenset,
) -> list:
    """All member pairs of Mod_{A'}^{B'}(P) with X <= Y <= universe,
    in (|Y|, lex, |X|, lex) order."""
    return _pairs(program, heads, bodies, universe, in_mod_ab, len(PAD_ATOMS))


def se_ab_pairs(
    program: Program,
    heads: AlphabetSpec,
    bodies: AlphabetSpec,
    universe: frozenset,
    padding: int = 2,
) -> list:
    """All member pairs of SE_{A'}^{B'}(P) with X <= Y <= universe where Y
    carries at most `padding` reserved padding atoms; same order as
    mod_ab_pairs."""
    membership = in_se_ab_normal if program.is_normal else in_se_ab
    return _pairs(program, heads, bodies, universe, membership, padding)
