"""Bitmask workspace over a fixed finite atom universe.

All model and pair enumerations run over explicitly finite universes, so
interpretations are represented internally as integer masks.  Atom order
is lexicographic by name; masks enumerate in (size, lexicographic) order,
which is the canonical output order everywhere in this package.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .syntax import Program


class Space:
    """Indexing of a finite atom set for mask arithmetic."""

    __slots__ = ("atoms", "index", "full")

    def __init__(self, atoms: Iterable[str]):
        self.atoms = tuple(sorted(set(atoms)))
        self.index = {a: i for i, a in enumerate(self.atoms)}
        self.full = (1 << len(self.atoms)) - 1

    def __len__(self) -> int:
        return len(self.atoms)

    def mask(self, atoms: Iterable[str]) -> int:
        m = 0
        for a in atoms:
            m |= 1 << self.index[a]
        return m

    def unmask(self, m: int) -> frozenset:
        return frozenset(a for i, a in enumerate(self.atoms) if m >> i & 1)

    def masks_by_size(self, bits: int | None = None) -> Iterator[int]:
        """All submasks of `bits` (default: the full universe) in
        (size, lexicographic-by-name) order."""
        if bits is None:
            bits = self.full
        idx = [i for i in range(len(self.atoms)) if bits >> i & 1]
        for k in range(len(idx) + 1):
            for combo in combinations(idx, k):
                m = 0
                for i in combo:
                    m |= 1 << i
                yield m

    def sort_key(self, m: int):
        return (bin(m).count("1"), tuple(a for i, a in enumerate(self.atoms) if m >> i & 1))


def compile_rules(program: Program, space: Space) -> tuple:
    """Rules as (head, pos, neg) mask triples; atoms must lie in the space."""
    out = []
    for r in program:
        out.append((space.mask(r.head), space.mask(r.pos_body), space.mask(r.neg_body)))
    return tuple(out)


def sat(rules: tuple, m: int) -> bool:
    """M |= P for compiled rules."""
    for h, p, n in rules:
        if p & ~m == 0 and n & m == 0 and h & m == 0:
            return False
    return True


def tp(rules: tuple, m: int) -> int | None:
    """One-step provability for compiled *normal* rules.

    None when a constraint body is satisfied by m (T_P(m) undefined).
    """
    out = 0
    for h, p, n in rules:
        if p & ~m == 0 and n & m == 0:
            if h == 0:
                return None
            out |= h
    return out


def reduct(rules: tuple, m: int) -> tuple:
    """Compiled reduct: drop rules blocked by m, strip negative bodies."""
    return tuple((h, p, 0) for h, p, n in rules if n & m == 0)


def models_within(rules: tuple, space: Space, bits: int) -> list:
    """All submasks of `bits` satisfying the rules, in canonical order."""
    return [m for m in space.masks_by_size(bits) if sat(rules, m)]
