"""Cactus words over gamma_I generators, their relations, and evaluation to W.

Words are the currency here; canonical forms and the word problem live in the
racg module.  A letter is a subset I in F(S) (connected, finite parabolic),
stored as a frozenset of generator indices.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

from .coxeter import (
    CoxeterSystem,
    GroupElement,
    connected_subsets,
    conjugate_subset,
    longest_element,
)
from .errors import InputError, RelationApplicationError


def _fset_lookup(system: CoxeterSystem) -> frozenset:
    cached = system._cache.get("fset_lookup")
    if cached is None:
        cached = frozenset(connected_subsets(system))
        system._cache["fset_lookup"] = cached
    return cached


_TRUSTED = object()  # sentinel: letters come from an already validated word


class CactusWord:
    """A finite sequence of generators gamma_I.  Equality is letterwise;
    use racg.cactus_equal for equality in the group.

    The default alphabet is F(S).  Passing alphabet= substitutes another
    family of subsets (it must still consist of finite-type subsets); this
    backs the dihedral n = 2 reading where the full generator set is kept
    even though it splits as a product.
    """

    __slots__ = ("system", "letters")

    def __init__(self, system: CoxeterSystem, letters: Iterable[frozenset] = (), alphabet=None):
        letters = tuple(frozenset(l) for l in letters)
        if alphabet is not _TRUSTED:
            valid = _fset_lookup(system) if alphabet is None else frozenset(
                frozenset(a) for a in alphabet
            )
            for l in letters:
                if l not in valid:
                    raise InputError(
                        f"letter outside the generating family: {system.format_subset(l)}"
                    )
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("CactusWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other):
        if not isinstance(other, CactusWord):
            return NotImplemented
        return self.system == other.system and self.letters == other.letters

    def __hash__(self):
        return hash((self.system, self.letters))

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        if self.system != other.system:
            raise InputError("words over different systems")
        return CactusWord(self.system, self.letters + other.letters, alphabet=_TRUSTED)

    def inverse(self) -> "CactusWord":
        # every letter is an involution, so reversal inverts the word
        return CactusWord(self.system, tuple(reversed(self.letters)), alphabet=_TRUSTED)

    def __repr__(self):
        return f"CactusWord({format_word(self)!r})"


def parse_word(system: CoxeterSystem, text: str) -> CactusWord:
    """Parse the word grammar: whitespace-separated letters `g{s1,s2}`."""
    letters = []
    for tok in text.split():
        if not (tok.startswith("g{") and tok.endswith("}")):
            raise InputError(f"bad cactus letter: {tok!r}")
        letters.append(system.parse_subset(tok[1:]))
    return CactusWord(system, letters)


def format_word(word: CactusWord) -> str:
    return " ".join("g" + word.system.format_subset(l) for l in word.letters)


def free_reduce(word: CactusWord) -> CactusWord:
    """Cancel adjacent equal letters (gamma_I^2 = 1) to a fixed point."""
    stack: list[frozenset] = []
    for l in word.letters:
        if stack and stack[-1] == l:
            stack.pop()
        else:
            stack.append(l)
    return CactusWord(word.system, stack, alphabet=_TRUSTED)


def commuting_subsets(system: CoxeterSystem, I: frozenset, J: frozenset) -> bool:
    """Whether W_{I u J} = W_I x W_J: disjoint and every cross bond is 2."""
    if I & J:
        return False
    return all(system.m(s, t) == 2 for s in I for t in J)


def apply_relation(word: CactusWord, position: int) -> CactusWord:
    """Rewrite (gamma_I, gamma_J) at position to (gamma_J, gamma_{w_J(I)}).

    Applies when I is contained in J, or when the parabolics commute (then
    w_J(I) = I and the pair just swaps).  Left-to-right only.
    """
    sys_ = word.system
    if not 0 <= position <= len(word) - 2:
        raise RelationApplicationError("relation not applicable")
    I, J = word.letters[position], word.letters[position + 1]
    if I <= J:
        new_pair = (J, conjugate_subset(sys_, J, I))
    elif commuting_subsets(sys_, I, J):
        new_pair = (J, I)
    else:
        raise RelationApplicationError("relation not applicable")
    letters = word.letters[:position] + new_pair + word.letters[position + 2:]
    return CactusWord(sys_, letters, alphabet=_TRUSTED)


def evaluate_to_coxeter(word: CactusWord) -> GroupElement:
    """Image under g_W: gamma_I -> w_I (longest element of W_I)."""
    acc = GroupElement.identity(word.system)
    for l in word.letters:
        acc = acc * longest_element(word.system, l)
    return acc


def is_pure(word: CactusWord) -> bool:
    """Membership in PC_W = kernel of the evaluation to W."""
    return evaluate_to_coxeter(word).is_identity()


_CLASSICAL_RE = re.compile(r"^s_?\{(\d+),(\d+)\}$")


def _require_type_a(system: CoxeterSystem) -> None:
    n = system.rank
    for i in range(n):
        for j in range(i + 1, n):
            want = 3 if j == i + 1 else 2
            if system.m(i, j) != want:
                raise InputError("type A system required")


def type_a_dictionary(system: CoxeterSystem, direction: str = "to_cactus") -> dict:
    """Bijection s_{p,q} <-> gamma over the interval {s_p,...,s_{q-1}}.

    Classical cactus generators s_{p,q} (1 <= p < q <= n, n = rank+1) name
    interval reversals; the matching gamma letter is the interval of
    generator indices p-1..q-2.  direction: "to_cactus" or "to_classical".
    """
    _require_type_a(system)
    n = system.rank + 1
    pairs = {
        (p, q): frozenset(range(p - 1, q - 1))
        for p in range(1, n + 1)
        for q in range(p + 1, n + 1)
    }
    if direction == "to_cactus":
        return pairs
    if direction == "to_classical":
        return {v: k for k, v in pairs.items()}
    raise InputError(f"unknown direction: {direction!r}")


def parse_classical_generator(text: str) -> tuple[int, int]:
    """Parse "s_{p,q}" (underscore optional) to the pair (p, q)."""
    m = _CLASSICAL_RE.match(text.strip())
    if not m:
        raise InputError(f"bad classical generator: {text!r}")
    p, q = int(m.group(1)), int(m.group(2))
    if not p < q:
        raise InputError(f"need p < q in s_{{p,q}}: {text!r}")
    return p, q
