"""Coxeter systems from a Coxeter matrix, with a hard length budget.

Elements are identified with their ShortLex-minimal reduced word (a tuple of
generator indices).  The group is enumerated layer by layer up to the budget;
each element stores its full set of reduced words (its braid-equivalence
class), which solves the word problem by Matsumoto's theorem and makes
descent sets, rex graphs and rex moves cheap to read off.  No geometric
representation is used, so arbitrary Coxeter matrices (including infinite
entries, encoded as 0) are supported uniformly.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import (
    BudgetExceeded,
    DifferentElements,
    InvalidMatrix,
    NotInJ,
    NotReduced,
    PreconditionViolated,
)

Word = tuple[int, ...]
IDENTITY: Word = ()

INFINITY = 0  # sentinel for an infinite bond in the matrix file format


@dataclass(frozen=True)
class CoxeterMatrix:
    generators: tuple[str, ...]
    m: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n or n == 0:
            raise InvalidMatrix("generator names must be nonempty and distinct")
        if len(self.m) != n or any(len(row) != n for row in self.m):
            raise InvalidMatrix("matrix shape does not match generator count")
        for i in range(n):
            if self.m[i][i] != 1:
                raise InvalidMatrix("diagonal entries must be 1")
            for j in range(n):
                if self.m[i][j] != self.m[j][i]:
                    raise InvalidMatrix("matrix must be symmetric")
                if i != j and self.m[i][j] != INFINITY and self.m[i][j] < 2:
                    raise InvalidMatrix("off-diagonal entries must be >= 2 or 0 (infinity)")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def order(self, i: int, j: int) -> int:
        """m_st; 0 means infinity."""
        return self.m[i][j]

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "m": [list(r) for r in self.m]}

    @classmethod
    def from_json(cls, data: dict) -> "CoxeterMatrix":
        try:
            gens = tuple(str(g) for g in data["generators"])
            m = tuple(tuple(int(x) for x in row) for row in data["m"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidMatrix(f"malformed matrix data: {exc}") from exc
        return cls(gens, m)

    @classmethod
    def load(cls, path: str) -> "CoxeterMatrix":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class ParabolicData:
    J: frozenset[int]
    finitary: bool
    w_J: Word
    d_J: int


@dataclass
class _ElemData:
    canonical: Word
    words: frozenset[Word]  # all reduced words (braid class)
    right_mult: dict[int, Word] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return len(self.canonical)


def _alternating(a: int, b: int, length: int) -> Word:
    return tuple(a if i % 2 == 0 else b for i in range(length))


class CoxeterSystem:
    """A Coxeter group enumerated up to a length budget."""

    def __init__(self, matrix: CoxeterMatrix, length_budget: int):
        if length_budget < 0:
            raise InvalidMatrix("length budget must be nonnegative")
        self.matrix = matrix
        self.budget = length_budget
        self._elems: dict[Word, _ElemData] = {}
        self._word_index: dict[Word, Word] = {}  # any reduced word -> canonical
        self._layers: list[list[Word]] = []
        self._closed = False
        self._bruhat_memo: dict[tuple[Word, Word], bool] = {}
        self._build()

    # -- construction --------------------------------------------------------

    def _register(self, words: frozenset[Word]) -> Word:
        canon = min(words)
        self._elems[canon] = _ElemData(canon, words)
        for w in words:
            self._word_index[w] = canon
        return canon

    def _braid_class(self, word: Word) -> frozenset[Word]:
        """All words reachable from a reduced word by braid relations."""
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for nb in self._braid_neighbors(w):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return frozenset(seen)

    def _braid_neighbors(self, word: Word) -> list[Word]:
        out = []
        n = len(word)
        for i in range(n - 1):
            s, t = word[i], word[i + 1]
            if s == t:
                continue
            m = self.matrix.order(s, t)
            if m == INFINITY or i + m > n:
                continue
            if word[i : i + m] == _alternating(s, t, m):
                out.append(word[:i] + _alternating(t, s, m) + word[i + m :])
        return out

    def _build(self):
        self._register(frozenset({IDENTITY}))
        self._layers.append([IDENTITY])
        for length in range(self.budget):
            layer: list[Word] = []
            for w in self._layers[length]:
                data = self._elems[w]
                rdesc = self.right_descents(w)
                for s in range(self.matrix.rank):
                    if s in data.right_mult:
                        continue
                    if s in rdesc:
                        shorter = next(rw for rw in data.words if rw[-1] == s)
                        data.right_mult[s] = self._word_index[shorter[:-1]]
                    else:
                        grown = w + (s,)
                        canon = self._word_index.get(grown)
                        if canon is None:
                            canon = self._register(self._braid_class(grown))
                            layer.append(canon)
                        data.right_mult[s] = canon
            if not layer:
                self._closed = True
                break
            self._layers.append(sorted(layer))
        else:
            # Budget reached; check whether the top layer happens to close.
            top = self._layers[-1]
            self._closed = all(
                self.right_descents(w) == set(range(self.matrix.rank)) for w in top
            )
            if self._closed:
                for w in top:
                    data = self._elems[w]
                    for rw in data.words:
                        s = rw[-1]
                        if s not in data.right_mult:
                            data.right_mult[s] = self._word_index[rw[:-1]]

    # -- basic element operations --------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self._closed

    def elements(self, max_length: int | None = None) -> list[Word]:
        """All enumerated elements, sorted by (length, ShortLex)."""
        if max_length is not None and max_length > self.budget and not self._closed:
            raise BudgetExceeded(f"requested length {max_length} > budget {self.budget}")
        out = []
        for layer in self._layers:
            if max_length is not None and layer and len(layer[0]) > max_length:
                break
            out.extend(layer)
        return out

    def length(self, w: Word) -> int:
        return len(w)

    def check_letters(self, word: Sequence[int]):
        for s in word:
            if not 0 <= s < self.matrix.rank:
                raise InvalidMatrix(f"letter {s} out of range")

    def right_mult(self, w: Word, s: int) -> Word:
        """Canonical word of w*s."""
        data = self._elems[w]
        out = data.right_mult.get(s)
        if out is None:
            raise BudgetExceeded(
                f"product of length {len(w) + 1} exceeds budget {self.budget}"
            )
        return out

    def normalize(self, word: Sequence[int]) -> tuple[Word, bool]:
        """Canonical element of a word, plus whether the word was reduced."""
        self.check_letters(word)
        w = IDENTITY
        for s in word:
            w = self.right_mult(w, s)
        return w, len(w) == len(word)

    def element(self, word: Sequence[int]) -> Word:
        return self.normalize(word)[0]

    def mult(self, x: Word, y: Word) -> Word:
        w = x
        for s in y:
            w = self.right_mult(w, s)
        return w

    def inverse(self, w: Word) -> Word:
        rev = tuple(reversed(w))
        # The reverse of a reduced word is a reduced word of the inverse.
        return self._word_index[rev]

    def reduced_words(self, w: Word) -> frozenset[Word]:
        return self._elems[w].words

    def right_descents(self, w: Word) -> set[int]:
        return {rw[-1] for rw in self._elems[w].words if rw}

    def left_descents(self, w: Word) -> set[int]:
        return {rw[0] for rw in self._elems[w].words if rw}

    # -- Bruhat order ----------------------------------------------------------

    def bruhat_leq(self, x: Word, y: Word) -> bool:
        """x <= y in Bruhat order, by the lifting-property recursion."""
        if len(x) > len(y):
            return False
        if x == y or not x:
            return True
        key = (x, y)
        memo = self._bruhat_memo
        if key in memo:
            return memo[key]
        s = y[0]  # left descent of y (canonical word starts with one)
        sy = self._left_strip(y, s)
        if s in self.left_descents(x):
            out = self.bruhat_leq(self._left_strip(x, s), sy)
        else:
            out = self.bruhat_leq(x, sy)
        memo[key] = out
        return out

    def _left_strip(self, w: Word, s: int) -> Word:
        """Canonical word of s*w when s is a left descent of w."""
        rw = next(u for u in self._elems[w].words if u and u[0] == s)
        return self._word_index[rw[1:]]

    def left_mult(self, s: int, w: Word) -> Word:
        if s in self.left_descents(w):
            return self._left_strip(w, s)
        grown = (s,) + w
        canon = self._word_index.get(grown)
        if canon is None:
            raise BudgetExceeded(
                f"product of length {len(w) + 1} exceeds budget {self.budget}"
            )
        return canon

    # -- rex graph --------------------------------------------------------------

    def rex_graph(self, w: Word) -> list[Word]:
        """All reduced words of w, sorted lexicographically."""
        return sorted(self._elems[w].words)

    def rex_path(self, frm: Sequence[int], to: Sequence[int]) -> "RexMove":
        """A shortest braid-move path between two reduced words of one element.

        BFS in lexicographic layer order; the first shortest path found wins,
        so the output is deterministic.
        """
        frm = tuple(frm)
        to = tuple(to)
        for word in (frm, to):
            _, reduced = self.normalize(word)
            if not reduced:
                raise NotReduced(f"{word} is not reduced")
        if self._word_index[frm] != self._word_index[to]:
            raise DifferentElements(f"{frm} and {to} are different elements")
        return self.find_rex(frm, lambda word: word == to)

    def find_rex(self, frm: Sequence[int], goal: Callable[[Word], bool]) -> "RexMove":
        """BFS over braid moves from a reduced word to the first word satisfying
        the predicate, lexicographic tie-breaking.  The goal is guaranteed
        reachable when it holds for some reduced word of the element."""
        frm = tuple(frm)
        if goal(frm):
            return RexMove(frm, frm, ())
        parent: dict[Word, tuple[Word, tuple[int, int, int, int]]] = {frm: None}
        queue = deque([frm])
        while queue:
            w = queue.popleft()
            for nb, app in sorted(self._braid_applications(w)):
                if nb in parent:
                    continue
                parent[nb] = (w, app)
                if goal(nb):
                    apps = []
                    cur = nb
                    while parent[cur] is not None:
                        prev, a = parent[cur]
                        apps.append(a)
                        cur = prev
                    return RexMove(frm, nb, tuple(reversed(apps)))
                queue.append(nb)
        raise DifferentElements("no reduced word of this element satisfies the goal")

    def _braid_applications(self, word: Word) -> list[tuple[Word, tuple[int, int, int, int]]]:
        out = []
        n = len(word)
        for i in range(n - 1):
            s, t = word[i], word[i + 1]
            if s == t:
                continue
            m = self.matrix.order(s, t)
            if m == INFINITY or i + m > n:
                continue
            if word[i : i + m] == _alternating(s, t, m):
                nb = word[:i] + _alternating(t, s, m) + word[i + m :]
                out.append((nb, (i, s, t, m)))
        return out

    # -- parabolic data -----------------------------------------------------------

    def parabolic(self, J: Iterable[int]) -> ParabolicData:
        J = frozenset(J)
        self.check_letters(sorted(J))
        members = self.parabolic_elements(J)
        longest = max(members, key=lambda w: (len(w), w))
        return ParabolicData(J, True, longest, len(longest))

    def parabolic_elements(self, J: Iterable[int]) -> list[Word]:
        """All elements of W_J, certified finite within the budget."""
        J = frozenset(J)
        seen = {IDENTITY}
        frontier = [IDENTITY]
        while frontier:
            nxt = []
            for w in frontier:
                for s in J:
                    data = self._elems[w].right_mult
                    if s not in data:
                        raise BudgetExceeded(
                            f"cannot certify that J={sorted(J)} is finitary "
                            f"within budget {self.budget}"
                        )
                    ws = data[s]
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            frontier = nxt
        return sorted(seen, key=lambda w: (len(w), w))

    def is_mcr(self, w: Word, J: frozenset[int]) -> bool:
        """True iff w is the minimal representative of its coset W_J w."""
        return not (self.left_descents(w) & J)

    def min_coset_reps(self, J: Iterable[int], max_length: int | None = None) -> list[Word]:
        J = frozenset(J)
        return [w for w in self.elements(max_length) if self.is_mcr(w, J)]

    def coset_decompose(self, w: Word, J: frozenset[int]) -> tuple[Word, Word]:
        """The unique w = u*z with u in W_J, z a minimal coset representative,
        and l(w) = l(u) + l(z)."""
        z = w
        stripped: list[int] = []
        while True:
            desc = self.left_descents(z) & J
            if not desc:
                break
            s = min(desc)
            stripped.append(s)
            z = self._left_strip(z, s)
        u = IDENTITY
        for s in stripped:
            u = self.right_mult(u, s)
        return u, z

    def wall_cross(self, z: Word, s: int, J: frozenset[int]) -> int:
        """The unique t in J with z*s = t*z, for z an m.c.r. with z*s not one."""
        if not self.is_mcr(z, J):
            raise PreconditionViolated(f"{z} is not a minimal coset representative")
        zs = self.right_mult(z, s)
        if self.is_mcr(zs, J):
            raise PreconditionViolated(f"z*s stays a minimal coset representative")
        if len(zs) <= len(z):
            raise PreconditionViolated("z*s should be longer than z (wall-crossing)")
        t_elem = self.mult(zs, self.inverse(z))
        if len(t_elem) != 1 or t_elem[0] not in J:
            raise NotInJ(f"conjugate {t_elem} is not a generator in J")
        return t_elem[0]

    # -- word <-> string -----------------------------------------------------------

    def parse_word(self, text: str) -> Word:
        """Parse 'tst' (single-char names) or 's1,s2,s1' into a word."""
        text = text.strip()
        if not text:
            return IDENTITY
        names = {g: i for i, g in enumerate(self.matrix.generators)}
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        elif all(len(g) == 1 for g in self.matrix.generators):
            parts = list(text)
        else:
            parts = [text]
        try:
            return tuple(names[p] for p in parts)
        except KeyError as exc:
            raise InvalidMatrix(f"unknown generator {exc.args[0]!r}") from exc

    def format_word(self, word: Word) -> str:
        gens = self.matrix.generators
        if not word:
            return ""
        if all(len(g) == 1 for g in gens):
            return "".join(gens[s] for s in word)
        return ",".join(gens[s] for s in word)

    def sort_key(self, w: Word) -> tuple[int, Word]:
        return (len(w), w)


@dataclass(frozen=True)
class RexMove:
    """A sequence of braid-relation applications between reduced words.

    Each application (pos, s, t, m) replaces the alternating pattern
    s,t,s,... of length m starting at pos by t,s,t,... of length m.
    """

    source: Word
    target: Word
    applications: tuple[tuple[int, int, int, int], ...]

    def replay(self, system: CoxeterSystem) -> list[Word]:
        """All intermediate words, source first and target last.  Raises if an
        application does not fit or an intermediate is not reduced."""
        word = self.source
        trail = [word]
        for pos, s, t, m in self.applications:
            if word[pos : pos + m] != _alternating(s, t, m):
                raise NotReduced(f"braid application {(pos, s, t, m)} does not match {word}")
            word = word[:pos] + _alternating(t, s, m) + word[pos + m :]
            _, reduced = system.normalize(word)
            if not reduced:
                raise NotReduced(f"intermediate word {word} is not reduced")
            trail.append(word)
        if word != self.target:
            raise DifferentElements(f"replay ended at {word}, expected {self.target}")
        return trail

    @property
    def is_identity(self) -> bool:
        return not self.applications

    def to_json(self) -> list[list[int]]:
        return [list(app) for app in self.applications]
