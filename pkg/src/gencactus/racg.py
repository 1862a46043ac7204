"""The right-angled system on parabolic conjugates and the cactus embedding.

Everything here needs W finite.  A context enumerates the set S of parabolic
conjugates w W_I w^-1 once, computes the big right-angled Coxeter matrix M on
it, and exposes the embedding gamma_I -> (tau_{W_I}, g_I) into the semidirect
product.  Words in the big group are canonicalized by deletion to a reduced
word followed by the lexicographically least commutation shuffle, which
solves the word problem there and, through the embedding, equality in C_W.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .cactus import CactusWord, is_pure
from .coxeter import (
    CoxeterSystem,
    GroupElement,
    GroupTable,
    connected_subsets,
    conjugate_subset,
    is_finite_parabolic,
    longest_element,
)
from .errors import InfiniteGroupError, InputError


class ParabolicConjugate:
    """A subgroup w W_I w^-1 of the ambient finite group.

    Identity is the element set; origin keeps one witness pair (w, I) with
    w an element index of the ambient table and I the generating subset.
    """

    __slots__ = ("elements", "origin", "genset", "words", "table")

    def __init__(self, elements, origin, genset, words, table):
        self.elements = frozenset(elements)
        self.origin = origin
        self.genset = frozenset(genset)  # conjugated simple reflections
        self.words = words  # sorted tuple of reduced words (index form)
        self.table = table

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, ParabolicConjugate):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def label(self) -> str:
        system = self.table.system
        gens = sorted(self.table.elements[i].word for i in self.genset)
        inner = ",".join(" ".join(system.labels[i] for i in w) for w in gens)
        return "<" + inner + ">"

    def __repr__(self):
        return f"ParabolicConjugate({self.label()})"


def _sorted_words(table: GroupTable, elements) -> tuple:
    return tuple(sorted(table.elements[i].word for i in elements))


def build_S(
    system: CoxeterSystem,
    family: Optional[Iterable[frozenset]] = None,
    table: Optional[GroupTable] = None,
) -> list[ParabolicConjugate]:
    """All conjugates of the W_I, I in the family (default F(S)).

    Deduplicated by element set and ordered by (subgroup size, sorted tuple
    of element reduced words); the ordering is deterministic because BFS
    enumeration of the ambient group is.
    """
    full = frozenset(range(system.rank))
    if not is_finite_parabolic(system, full):
        raise InfiniteGroupError(f"infinite group: {system.format_subset(full)}")
    if table is None:
        table = GroupTable(system)
    fam = _checked_family(system, family)
    seen = {}
    queue = []
    for I in fam:
        elems = table.subgroup(I)
        if elems in seen:
            continue
        genset = frozenset(table.simple_index[s] for s in I)
        seen[elems] = (genset, (0, I))
        queue.append(elems)
    qi = 0
    while qi < len(queue):
        elems = queue[qi]
        qi += 1
        genset, (w_idx, I) = seen[elems]
        for s in range(system.rank):
            new_elems = frozenset(table.conjugate_by_gen(s, x) for x in elems)
            if new_elems not in seen:
                new_genset = frozenset(table.conjugate_by_gen(s, x) for x in genset)
                seen[new_elems] = (new_genset, (table.gen_left[s][w_idx], I))
                queue.append(new_elems)
    entries = sorted(seen, key=lambda e: (len(e), _sorted_words(table, e)))
    return [
        ParabolicConjugate(e, seen[e][1], seen[e][0], _sorted_words(table, e), table)
        for e in entries
    ]


def _checked_family(system, family) -> list[frozenset]:
    if family is None:
        return list(connected_subsets(system))
    fam = sorted({frozenset(I) for I in family}, key=lambda I: (len(I), sorted(I)))
    full = frozenset(range(system.rank))
    for I in fam:
        if not I or not I <= full:
            raise InputError("family subsets must be nonempty subsets of S")
        if not is_finite_parabolic(system, I):
            raise InfiniteGroupError(f"infinite parabolic: {system.format_subset(I)}")
    fam_set = set(fam)
    for I in fam:
        for J in fam:
            if I < J and conjugate_subset(system, J, I) not in fam_set:
                raise InputError(
                    "family is not closed under conjugation by longest elements"
                )
    return fam


def big_matrix(conjugates: Sequence[ParabolicConjugate]) -> tuple:
    """The right-angled Coxeter matrix on S; entry 0 encodes infinity.

    2 for containment either way, 2 for trivial intersection with elementwise
    commutation (checked on generating sets), else 0.
    """
    n = len(conjugates)
    if n == 0:
        return ()
    table = conjugates[0].table
    rows = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = conjugates[i], conjugates[j]
            if a.elements <= b.elements or b.elements <= a.elements:
                m = 2
            elif len(a.elements & b.elements) == 1 and _commute(table, a, b):
                m = 2
            else:
                m = 0
            rows[i][j] = rows[j][i] = m
    return tuple(tuple(r) for r in rows)


def _commute(table: GroupTable, a: ParabolicConjugate, b: ParabolicConjugate) -> bool:
    # subgroups commute elementwise iff their generating sets do
    return all(
        table.product(x, y) == table.product(y, x) for x in a.genset for y in b.genset
    )


def normal_form(word: Sequence[int], M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical form of a word in the big right-angled group.

    Deletes equal pairs separated only by letters commuting with them until
    the word is reduced, then emits the lexicographically least commutation
    shuffle by greedy selection of the smallest available letter.  Words are
    equal in the group iff their normal forms coincide.
    """
    n = len(M)
    w = list(word)
    for x in w:
        if not isinstance(x, int) or not 0 <= x < n:
            raise InputError(f"letter out of range for S: {x!r}")
    changed = True
    while changed:
        changed = False
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                if w[j] == w[i]:
                    del w[j]
                    del w[i]
                    changed = True
                    break
                if M[w[i]][w[j]] != 2:
                    break
            if changed:
                break
    out = []
    while w:
        best = None
        for p in range(len(w)):
            if (best is None or w[p] < w[best]) and all(
                M[w[q]][w[p]] == 2 for q in range(p)
            ):
                best = p
        out.append(w.pop(best))
    return tuple(out)


class InducedAutomorphism:
    """Diagram automorphism of (W, S) given as a permutation of S-indices."""

    __slots__ = ("perm",)

    def __init__(self, perm: Iterable[int]):
        self.perm = tuple(perm)

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm)))

    def compose(self, other: "InducedAutomorphism") -> "InducedAutomorphism":
        # self after other: (self . other)(i) = self(other(i))
        return InducedAutomorphism(self.perm[p] for p in other.perm)

    def inverse(self) -> "InducedAutomorphism":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return InducedAutomorphism(inv)

    def __eq__(self, other):
        if not isinstance(other, InducedAutomorphism):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"InducedAutomorphism({list(self.perm)})"


class SemidirectElement:
    """Element (racg_part, aut_part) of the semidirect product.

    racg_part is stored in normal form, so componentwise equality decides
    equality in the group.
    """

    __slots__ = ("context", "racg_part", "aut_part")

    def __init__(self, context, racg_part, aut_part):
        self.context = context
        self.racg_part = tuple(racg_part)
        self.aut_part = aut_part

    def is_identity(self) -> bool:
        return not self.racg_part and self.aut_part.is_identity()

    def __eq__(self, other):
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        return self.racg_part == other.racg_part and self.aut_part == other.aut_part

    def __hash__(self):
        return hash((self.racg_part, self.aut_part))

    def to_json(self) -> dict:
        return {"racg": list(self.racg_part), "aut": list(self.aut_part.perm)}

    def __repr__(self):
        return f"SemidirectElement(racg={list(self.racg_part)}, aut={list(self.aut_part.perm)})"


def semidirect_mul(a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    """(t1, g1)(t2, g2) = (t1 . g1(t2), g1 . g2), renormalized."""
    if a.context is not b.context:
        raise InputError("elements from different contexts")
    ctx = a.context
    word = a.racg_part + tuple(a.aut_part(i) for i in b.racg_part)
    return SemidirectElement(
        ctx, normal_form(word, ctx.M), a.aut_part.compose(b.aut_part)
    )


class RacgContext:
    """Immutable bundle: ambient table, S, M, and embedding caches.

    family overrides the gamma alphabet (default: F(S)).  A custom family
    must be closed under nested conjugation I -> w_J(I) so that the defining
    relations stay inside the alphabet; this is checked.
    """

    def __init__(self, system: CoxeterSystem, family: Optional[Iterable[frozenset]] = None):
        self.system = system
        full = frozenset(range(system.rank))
        if not is_finite_parabolic(system, full):
            raise InfiniteGroupError(f"infinite group: {system.format_subset(full)}")
        self.table = GroupTable(system)
        self.family = tuple(_checked_family(system, family))
        self.conjugates = build_S(system, self.family, self.table)
        self.M = big_matrix(self.conjugates)
        self.set_index = {pc.elements: i for i, pc in enumerate(self.conjugates)}
        self.base_index = {
            I: self.set_index[self.table.subgroup(I)] for I in self.family
        }
        self._gen_perms = [
            InducedAutomorphism(
                self.set_index[
                    frozenset(self.table.conjugate_by_gen(s, x) for x in pc.elements)
                ]
                for pc in self.conjugates
            )
            for s in range(system.rank)
        ]
        self._identity_aut = InducedAutomorphism(range(len(self.conjugates)))
        self._aut_cache: dict[int, InducedAutomorphism] = {0: self._identity_aut}
        self._letter_cache: dict[frozenset, SemidirectElement] = {}
        self.caches: dict = {}  # scratch space for representation layers

    def identity(self) -> SemidirectElement:
        return SemidirectElement(self, (), self._identity_aut)

    def induced_aut(self, w) -> InducedAutomorphism:
        """g_w, the permutation of S by conjugation with w."""
        if isinstance(w, GroupElement):
            idx = self.table.element_index(w)
        else:
            idx = int(w)
        cached = self._aut_cache.get(idx)
        if cached is None:
            acc = self._identity_aut
            for s in self.table.elements[idx].word:
                acc = acc.compose(self._gen_perms[s])
            cached = self._aut_cache[idx] = acc
        return cached

    def _letter(self, subset: frozenset) -> SemidirectElement:
        el = self._letter_cache.get(subset)
        if el is None:
            pos = self.base_index.get(subset)
            if pos is None:
                raise InputError(
                    f"letter not in the generating family: {self.system.format_subset(subset)}"
                )
            aut = self.induced_aut(longest_element(self.system, subset))
            el = self._letter_cache[subset] = SemidirectElement(self, (pos,), aut)
        return el

    def embed(self, word: CactusWord) -> SemidirectElement:
        """Image under gamma_I -> (tau_{W_I}, g_I), multiplied out left to right."""
        if word.system != self.system:
            raise InputError("word over a different system")
        acc = self.identity()
        for letter in word.letters:
            acc = semidirect_mul(acc, self._letter(letter))
        return acc

    def normal_form(self, word: Sequence[int]) -> tuple[int, ...]:
        return normal_form(word, self.M)

    def cactus_equal(self, u: CactusWord, v: CactusWord) -> bool:
        """Word problem for C_W through the injective embedding."""
        return self.embed(u) == self.embed(v)

    def purity_consistency(self, w: CactusWord) -> bool:
        """Whether (aut part trivial) and (evaluation trivial) agree on w.

        Purity always forces a trivial aut part.  The converse can fail when
        the center of W is nontrivial: conjugation by a central evaluation
        relabels nothing.  Exposed so harnesses can probe both directions.
        """
        return self.embed(w).aut_part.is_identity() == is_pure(w)

    def sset_json(self) -> dict:
        """S as lists of reduced element words, M with 0 standing for infinity."""
        labels = self.system.labels
        out_sets = []
        for pc in self.conjugates:
            out_sets.append(
                [" ".join(labels[i] for i in w) if w else "e" for w in pc.words]
            )
        return {"S": out_sets, "M": [list(row) for row in self.M]}


def cactus_equal(ctx: RacgContext, u: CactusWord, v: CactusWord) -> bool:
    return ctx.cactus_equal(u, v)


def purity_consistency(ctx: RacgContext, w: CactusWord) -> bool:
    return ctx.purity_consistency(w)
