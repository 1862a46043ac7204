"""Coxeter systems and exact computation in their reflection representation.

A system is a finite generating set with a Coxeter matrix (entry 0 encodes an
infinite bond).  Group elements are represented by exact matrices of the
reflection (Tits) representation at parameter t = 1, where the representation
is faithful, together with a reduced word.  All equality tests reduce to exact
matrix equality; lengths and reduced words come from descent extraction.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InfiniteGroupError, InputError
from .linalg import Matrix, determinant, is_identity, mat_mul
from .scalar import (
    CycloReal,
    Scalar,
    cos_pi_over,
    rational_cos_pi_over,
    scalar_sign,
)

__all__ = [
    "CoxeterSystem",
    "GroupElement",
    "GroupTable",
    "is_finite_parabolic",
    "connected_subsets",
    "longest_element",
    "conjugate_subset",
    "enumerate_group",
]

_LABEL_FORBIDDEN = set("{}, \t*")


class CoxeterSystem:
    """Immutable Coxeter system: labels plus symmetric Coxeter matrix.

    matrix[i][j] is the order of s_i s_j; 0 means infinite.  Derived data
    (reflection matrices, group tables, subset classifications) is cached on
    the instance.
    """

    def __init__(self, labels: Sequence[str], matrix: Sequence[Sequence[int]]):
        labels = tuple(labels)
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(labels)
        if n == 0:
            raise InputError("a Coxeter system needs at least one generator")
        if len(set(labels)) != n:
            raise InputError("generator labels must be distinct")
        for lab in labels:
            if not lab or any(ch in _LABEL_FORBIDDEN for ch in lab):
                raise InputError(f"bad generator label {lab!r}")
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise InputError("Coxeter matrix shape does not match labels")
        for i in range(n):
            if matrix[i][i] != 1:
                raise InputError("Coxeter matrix diagonal must be 1")
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise InputError("Coxeter matrix must be symmetric")
                if i != j and matrix[i][j] == 1 or matrix[i][j] < 0:
                    raise InputError("off-diagonal entries must be 0 or >= 2")
        self.labels = labels
        self.matrix = matrix
        self._cache: dict = {}

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CoxeterSystem):
            return self.labels == other.labels and self.matrix == other.matrix
        return NotImplemented

    def __hash__(self):
        return hash((self.labels, self.matrix))

    def __repr__(self):
        return f"CoxeterSystem({list(self.labels)!r})"

    @property
    def rank(self) -> int:
        return len(self.labels)

    def m(self, i: int, j: int) -> int:
        """Coxeter matrix entry; 0 encodes infinity."""
        return self.matrix[i][j]

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown generator {label!r}") from None

    # -- subset syntax ---------------------------------------------------------

    def parse_subset(self, text: str) -> frozenset[int]:
        text = text.strip()
        if text.startswith("{") and text.endswith("}"):
            text = text[1:-1]
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise InputError("empty generator subset")
        return frozenset(self.label_index(p) for p in parts)

    def format_subset(self, subset: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(subset)) + "}"

    # -- scalars ---------------------------------------------------------------

    @property
    def conductor(self) -> Optional[int]:
        """Conductor of the cyclotomic field holding all Gram entries.

        None when every finite bond is 2 or 3, so that all entries are
        rational and plain Fractions are used.  Otherwise 2*lcm of the bonds
        whose cosine is irrational; bonds 2 and 3 contribute rational cosines
        and do not enlarge the field.
        """
        if "conductor" not in self._cache:
            irrational = [
                self.matrix[i][j]
                for i in range(self.rank)
                for j in range(i + 1, self.rank)
                if self.matrix[i][j] >= 4
            ]
            self._cache["conductor"] = (
                2 * math.lcm(*irrational) if irrational else None
            )
        return self._cache["conductor"]

    def _wrap(self, value) -> Scalar:
        if self.conductor is None:
            return Fraction(value)
        if isinstance(value, CycloReal):
            return value.lift(self.conductor)
        return CycloReal.from_rational(Fraction(value), self.conductor)

    def bilinear_entry(self, i: int, j: int, t) -> Scalar:
        """B_t(e_i, e_j): 1 on the diagonal, -cos(pi/m) for finite bonds, -t else."""
        if i == j:
            return self._wrap(1)
        m = self.matrix[i][j]
        if m == 0:
            return self._wrap(-Fraction(t))
        q = rational_cos_pi_over(m)
        if q is not None:
            return self._wrap(-q)
        return -cos_pi_over(m, self.conductor)

    def gram_matrix(self, t) -> Matrix:
        t = Fraction(t)
        key = ("gram", t)
        if key not in self._cache:
            self._cache[key] = tuple(
                tuple(self.bilinear_entry(i, j, t) for j in range(self.rank))
                for i in range(self.rank)
            )
        return self._cache[key]

    def reflection_matrix(self, s: int, t=1) -> Matrix:
        """Matrix of the simple reflection s at parameter t, columns = images."""
        t = Fraction(t)
        key = ("refl", s, t)
        if key not in self._cache:
            n = self.rank
            zero, one = self._wrap(0), self._wrap(1)
            rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
            for v in range(n):
                b = self.bilinear_entry(v, s, t)
                rows[s][v] = rows[s][v] - 2 * b
            self._cache[key] = tuple(tuple(row) for row in rows)
        return self._cache[key]

    def generator_matrices(self, t=1) -> tuple[Matrix, ...]:
        return tuple(self.reflection_matrix(s, t) for s in range(self.rank))

    def identity_matrix(self) -> Matrix:
        key = "idmat"
        if key not in self._cache:
            n = self.rank
            zero, one = self._wrap(0), self._wrap(1)
            self._cache[key] = tuple(
                tuple(one if i == j else zero for j in range(n)) for i in range(n)
            )
        return self._cache[key]

    # -- serialized forms ------------------------------------------------------

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, data: dict) -> "CoxeterSystem":
        if not isinstance(data, dict) or "labels" not in data or "matrix" not in data:
            raise InputError('system JSON needs "labels" and "matrix" keys')
        return cls(data["labels"], data["matrix"])

    @classmethod
    def from_name(cls, name: str) -> "CoxeterSystem":
        return _system_from_name(name)

    def group_table(self) -> "GroupTable":
        if "table" not in self._cache:
            self._cache["table"] = GroupTable(self)
        return self._cache["table"]


class GroupElement:
    """Group element: reduced word plus exact matrix at t = 1.

    Equality and hashing use the matrix (the representation is faithful at
    t = 1), so two elements with different reduced words for the same group
    element compare equal.
    """

    __slots__ = ("system", "word", "matrix", "_hash")

    def __init__(self, system: CoxeterSystem, word: tuple[int, ...], matrix: Matrix):
        self.system = system
        self.word = word
        self.matrix = matrix
        self._hash = None

    @classmethod
    def identity(cls, system: CoxeterSystem) -> "GroupElement":
        return cls(system, (), system.identity_matrix())

    @classmethod
    def simple(cls, system: CoxeterSystem, s: int) -> "GroupElement":
        return cls(system, (s,), system.reflection_matrix(s))

    @classmethod
    def from_word(cls, system: CoxeterSystem, word: Iterable[int]) -> "GroupElement":
        mat = system.identity_matrix()
        for s in word:
            mat = mat_mul(mat, system.reflection_matrix(s))
        return cls(system, _reduced_word(system, mat), mat)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return self.word == ()

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.system != other.system:
            raise InputError("elements of different systems")
        mat = mat_mul(self.matrix, other.matrix)
        return GroupElement(self.system, _reduced_word(self.system, mat), mat)

    def inverse(self) -> "GroupElement":
        return GroupElement.from_word(self.system, tuple(reversed(self.word)))

    def __eq__(self, other):
        if isinstance(other, GroupElement):
            return self.system == other.system and self.matrix == other.matrix
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.matrix)
        return self._hash

    def __repr__(self):
        if not self.word:
            return "<e>"
        return "<" + " ".join(self.system.labels[s] for s in self.word) + ">"


def _column_nonpositive(matrix: Matrix, s: int) -> bool:
    return all(scalar_sign(row[s]) <= 0 for row in matrix)


def _reduced_word(system: CoxeterSystem, matrix: Matrix) -> tuple[int, ...]:
    """Reduced word by greedy right-descent extraction."""
    rev: list[int] = []
    work = matrix
    while not is_identity(work):
        for s in range(system.rank):
            if _column_nonpositive(work, s):
                rev.append(s)
                work = mat_mul(work, system.reflection_matrix(s))
                break
        else:
            raise ArithmeticError("matrix has no descent; not a group element")
    return tuple(reversed(rev))


def is_finite_parabolic(system: CoxeterSystem, subset: Iterable[int]) -> bool:
    """Whether the parabolic subgroup on the subset is finite.

    Finiteness is equivalent to positive definiteness of the restricted
    bilinear form at t = 1, decided by the signs of the leading principal
    minors.  An infinite bond inside the subset answers immediately.
    """
    subset = frozenset(subset)
    key = ("finite", subset)
    if key in system._cache:
        return system._cache[key]
    idx = sorted(subset)
    result = True
    for i, j in itertools.combinations(idx, 2):
        if system.m(i, j) == 0:
            result = False
    if result:
        gram = system.gram_matrix(Fraction(1))
        sub = [[gram[a][b] for b in idx] for a in idx]
        for k in range(1, len(idx) + 1):
            minor = determinant(tuple(tuple(row[:k]) for row in sub[:k]))
            if scalar_sign(minor) <= 0:
                result = False
                break
    system._cache[key] = result
    return result


def _diagram_components(system: CoxeterSystem, subset: frozenset[int]) -> list[set[int]]:
    # bond of order >= 3 (or infinite) is an edge of the diagram
    remaining = set(subset)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for u in list(remaining):
                m = system.m(v, u)
                if m >= 3 or m == 0:
                    remaining.remove(u)
                    comp.add(u)
                    frontier.append(u)
        comps.append(comp)
    return comps


def connected_subsets(system: CoxeterSystem) -> list[frozenset[int]]:
    """All subsets that generate a finite parabolic with no direct-product split.

    The no-split condition is evaluated as connectivity of the induced Coxeter
    diagram.  Sorted by size, then lexicographically.
    """
    if "fset" in system._cache:
        return system._cache["fset"]
    out = []
    indices = range(system.rank)
    for size in range(1, system.rank + 1):
        for combo in itertools.combinations(indices, size):
            subset = frozenset(combo)
            if len(_diagram_components(system, subset)) != 1:
                continue
            if not is_finite_parabolic(system, subset):
                continue
            out.append(subset)
    out.sort(key=lambda s: (len(s), tuple(sorted(s))))
    system._cache["fset"] = out
    return out


def longest_element(system: CoxeterSystem, subset: Iterable[int]) -> GroupElement:
    """Longest element of the (finite) parabolic subgroup on the subset.

    Greedy ascent: starting from the identity, repeatedly multiply by any
    generator in the subset that increases length, until every generator in
    the subset is a descent.
    """
    subset = frozenset(subset)
    key = ("longest", subset)
    if key in system._cache:
        return system._cache[key]
    if not is_finite_parabolic(system, subset):
        raise InfiniteGroupError(
            f"infinite parabolic: {system.format_subset(subset)}"
        )
    idx = sorted(subset)
    word: list[int] = []
    mat = system.identity_matrix()
    while True:
        for s in idx:
            if not _column_nonpositive(mat, s):
                word.append(s)
                mat = mat_mul(mat, system.reflection_matrix(s))
                break
        else:
            break
    elem = GroupElement(system, tuple(word), mat)
    system._cache[key] = elem
    return elem


def conjugate_subset(
    system: CoxeterSystem, outer: Iterable[int], inner: Iterable[int]
) -> frozenset[int]:
    """Image of the inner subset under conjugation by the longest element of
    the outer subset.  Defined whenever the image consists of generators
    again, which holds for inner subsets of the outer one."""
    outer = frozenset(outer)
    inner = frozenset(inner)
    if not inner <= outer:
        raise InputError("inner subset must lie inside the outer subset")
    w = longest_element(system, outer)
    gens = system.generator_matrices()
    out = set()
    for s in inner:
        conj = mat_mul(mat_mul(w.matrix, gens[s]), w.matrix)
        for v in range(system.rank):
            if conj == gens[v]:
                out.add(v)
                break
        else:
            raise ArithmeticError("conjugate of a generator is not a generator")
    return frozenset(out)


def enumerate_group(
    system: CoxeterSystem, subset: Optional[Iterable[int]] = None, max_length: Optional[int] = None
) -> list[GroupElement]:
    """All elements of the (finite) parabolic subgroup, in BFS order.

    BFS over right multiplication, deduplicated by matrix; the first visit of
    an element happens at its length, so stored words are reduced.  With
    max_length set, raises if the group is not exhausted within that radius.
    """
    subset = frozenset(subset) if subset is not None else frozenset(range(system.rank))
    if max_length is None and not is_finite_parabolic(system, subset):
        raise InfiniteGroupError(f"infinite group: {system.format_subset(subset)}")
    idx = sorted(subset)
    identity = GroupElement.identity(system)
    elements = [identity]
    seen = {identity.matrix: 0}
    frontier = [identity]
    depth = 0
    while frontier:
        nxt = []
        for el in frontier:
            for s in idx:
                mat = mat_mul(el.matrix, system.reflection_matrix(s))
                if mat not in seen:
                    new = GroupElement(system, el.word + (s,), mat)
                    seen[mat] = len(elements)
                    elements.append(new)
                    nxt.append(new)
        depth += 1
        if nxt and max_length is not None and depth > max_length:
            raise InfiniteGroupError(f"group not exhausted within length {max_length}")
        frontier = nxt
    return elements


class GroupTable:
    """Index tables for a finite Coxeter group.

    Elements are indexed in BFS order.  Left/right multiplication by a
    generator is a table lookup, so products and conjugations cost one lookup
    per letter instead of a matrix multiplication.
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.elements = enumerate_group(system)
        self.index = {el.matrix: i for i, el in enumerate(self.elements)}
        n = system.rank
        size = len(self.elements)
        self.gen_right = [[0] * size for _ in range(n)]
        for i, el in enumerate(self.elements):
            for s in range(n):
                mat = mat_mul(el.matrix, system.reflection_matrix(s))
                self.gen_right[s][i] = self.index[mat]
        self.simple_index = [self.gen_right[s][0] for s in range(n)]
        # left tables from right tables: s*w follows w's word from index of s
        self.gen_left = [[0] * size for _ in range(n)]
        for s in range(n):
            for i, el in enumerate(self.elements):
                j = self.simple_index[s]
                for letter in el.word:
                    j = self.gen_right[letter][j]
                self.gen_left[s][i] = j
        self.inverse = [0] * size
        for i, el in enumerate(self.elements):
            j = 0
            for letter in reversed(el.word):
                j = self.gen_right[letter][j]
            self.inverse[i] = j

    def __len__(self):
        return len(self.elements)

    def product(self, i: int, j: int) -> int:
        out = i
        for letter in self.elements[j].word:
            out = self.gen_right[letter][out]
        return out

    def conjugate(self, w: int, x: int) -> int:
        return self.product(self.product(w, x), self.inverse[w])

    def conjugate_by_gen(self, s: int, x: int) -> int:
        return self.gen_left[s][self.gen_right[s][x]]

    def element_index(self, element: GroupElement) -> int:
        try:
            return self.index[element.matrix]
        except KeyError:
            raise InputError("element does not belong to this group") from None

    def subgroup(self, gens: Iterable[int]) -> frozenset[int]:
        """Closure of simple generators (generator indices) inside the group."""
        gens = sorted(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for s in gens:
                    j = self.gen_right[s][i]
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
        return frozenset(seen)


# -- named systems -------------------------------------------------------------


def _chain_matrix(n: int, bonds: dict[tuple[int, int], int]) -> list[list[int]]:
    mat = [[2] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 1
    for (i, j), m in bonds.items():
        mat[i][j] = m
        mat[j][i] = m
    return mat


def _named_matrix(family: str, n: int) -> list[list[int]]:
    if family == "A":
        if n < 1:
            raise InputError("A<n> needs n >= 1")
        return _chain_matrix(n, {(i, i + 1): 3 for i in range(n - 1)})
    if family == "B":
        if n < 2:
            raise InputError("B<n> needs n >= 2")
        bonds = {(i, i + 1): 3 for i in range(n - 2)}
        bonds[(n - 2, n - 1)] = 4
        return _chain_matrix(n, bonds)
    if family == "D":
        if n < 2:
            raise InputError("D<n> needs n >= 2")
        if n == 2:
            return _chain_matrix(2, {})
        bonds = {(i, i + 1): 3 for i in range(n - 2)}
        bonds[(n - 3, n - 1)] = 3
        return _chain_matrix(n, bonds)
    if family == "E":
        if n not in (6, 7, 8):
            raise InputError("E<n> needs n in {6, 7, 8}")
        bonds = {(i, i + 1): 3 for i in range(n - 2)}
        bonds[(2, n - 1)] = 3
        return _chain_matrix(n, bonds)
    if family == "F":
        if n != 4:
            raise InputError("only F4 exists")
        return _chain_matrix(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3})
    if family == "H":
        if n not in (3, 4):
            raise InputError("H<n> needs n in {3, 4}")
        bonds = {(0, 1): 5}
        for i in range(1, n - 1):
            bonds[(i, i + 1)] = 3
        return _chain_matrix(n, bonds)
    raise InputError(f"unknown family {family!r}")


_NAME_RE = re.compile(r"^([ABDEFH])(\d+)$|^I2\((\d+)\)$")


def _system_from_name(name: str) -> CoxeterSystem:
    factors = [f.strip() for f in name.strip().split("*")]
    parsed = []
    for f in factors:
        match = _NAME_RE.match(f)
        if not match:
            raise InputError(f"unknown system name {f!r}")
        if match.group(3) is not None:
            m = int(match.group(3))
            if m < 2:
                raise InputError("I2(m) needs m >= 2")
            parsed.append([[1, m], [m, 1]])
        else:
            parsed.append(_named_matrix(match.group(1), int(match.group(2))))
    total = sum(len(mat) for mat in parsed)
    big = [[2] * total for _ in range(total)]
    labels: list[str] = []
    offset = 0
    for k, mat in enumerate(parsed):
        r = len(mat)
        for i in range(r):
            for j in range(r):
                big[offset + i][offset + j] = mat[i][j]
        if len(parsed) == 1:
            if r == 2 and _NAME_RE.match(factors[k]) and factors[k].startswith("I2"):
                labels += ["a", "b"]
            else:
                labels += [f"s{i + 1}" for i in range(r)]
        else:
            prefix = chr(ord("a") + k)
            labels += [prefix] if r == 1 else [f"{prefix}{i + 1}" for i in range(r)]
        offset += r
    return CoxeterSystem(labels, big)
