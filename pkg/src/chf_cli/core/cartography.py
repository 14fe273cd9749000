"""Words in the cartography group C2+[3] = <r0, r1 | r0^3 = r1^2 = 1> and its action on darts.

Words are read like operator products: the rightmost letter acts first, so
``act(Word((R1, R0SQ)), d)`` is ``rho1(rho0(rho0(d)))``.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from sympy.combinatorics import Permutation, PermutationGroup

from chf_cli.core.errors import ClosureBoundError, WordError

if TYPE_CHECKING:
    from collections.abc import Iterable

    from chf_cli.core.ribbon_graph import DartId, RibbonGraph

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_BOUND = 10**6


class Letter(str, Enum):
    """Generators of the cartography group."""

    R0 = "r0"
    R0SQ = "r0^2"
    R1 = "r1"

    @property
    def rotation(self) -> int:
        """Exponent of rho0 carried by the letter (0 for r1)."""
        return {"r0": 1, "r0^2": 2, "r1": 0}[self.value]


R0, R0SQ, R1 = Letter.R0, Letter.R0SQ, Letter.R1

_BY_ROTATION = {1: R0, 2: R0SQ}
_INVERSE = {R0: R0SQ, R0SQ: R0, R1: R1}

# BFS letter order for coset representatives
BFS_LETTERS = (R0, R0SQ, R1)

_SEPARATORS = re.compile(r"[·*\s]+")


def reduce(raw: Iterable[Letter]) -> Word:
    """Normal form: no adjacent rotations, no adjacent r1."""
    stack: list[Letter] = []
    for letter in raw:
        if not stack:
            stack.append(letter)
            continue
        top = stack[-1]
        if letter is R1 and top is R1:
            stack.pop()
        elif letter is not R1 and top is not R1:
            stack.pop()
            exponent = (top.rotation + letter.rotation) % 3
            if exponent:
                stack.append(_BY_ROTATION[exponent])
        else:
            stack.append(letter)
    return Word(tuple(stack))


@dataclass(frozen=True)
class Word:
    """A reduced element of C2+[3]; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def identity(cls) -> Word:
        return cls()

    @classmethod
    def of(cls, *letters: Letter) -> Word:
        return reduce(letters)

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse ``r1·r0^2`` (``*`` and spaces also separate letters; ``1`` is the identity)."""
        tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
        letters: list[Letter] = []
        for token in tokens:
            if token == "1":
                continue
            try:
                letters.append(Letter(token))
            except ValueError:
                raise WordError(f"unknown letter {token!r} in word {text!r}")
        return reduce(letters)

    def inverse(self) -> Word:
        return Word(tuple(_INVERSE[x] for x in reversed(self.letters)))

    def __mul__(self, other: Word) -> Word:
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return "·".join(x.value for x in self.letters) if self.letters else "1"

    @property
    def crossings(self) -> int:
        """Number of r1 letters."""
        return sum(1 for x in self.letters if x is R1)


def compose(w2: Word, w1: Word) -> Word:
    """The product w2·w1 (w1 acts first)."""
    return reduce(w2.letters + w1.letters)


def apply_letter(letter: Letter, d: DartId, graph: RibbonGraph) -> DartId:
    if letter is R1:
        return graph.rho1[d]
    if letter is R0:
        return graph.rho0[d]
    return graph.rho0[graph.rho0[d]]


def act(w: Word, d: DartId, graph: RibbonGraph) -> DartId:
    """Apply the letters of w to dart d, rightmost first."""
    for letter in reversed(w.letters):
        d = apply_letter(letter, d, graph)
    return d


@dataclass(frozen=True)
class CosetTable:
    """Breadth-first coset representatives of B(E, eps).

    ``order`` lists darts in discovery order; ``parent`` maps each non-base
    dart to the dart and letter it was reached from.
    """

    eps: DartId
    order: tuple[DartId, ...]
    words: dict[DartId, Word]
    parent: dict[DartId, tuple[DartId, Letter]]

    def rank(self, d: DartId) -> int:
        return self.order.index(d)


def coset_table(graph: RibbonGraph, eps: DartId) -> CosetTable:
    words = {eps: Word()}
    parent: dict[DartId, tuple[DartId, Letter]] = {}
    order = [eps]
    queue = deque([eps])
    while queue:
        d = queue.popleft()
        for letter in BFS_LETTERS:
            nxt = apply_letter(letter, d, graph)
            if nxt in words:
                continue
            words[nxt] = reduce((letter, *words[d].letters))
            parent[nxt] = (d, letter)
            order.append(nxt)
            queue.append(nxt)
    return CosetTable(eps, tuple(order), words, parent)


def coset_representatives(graph: RibbonGraph, eps: DartId) -> dict[DartId, Word]:
    """For each dart d a shortest word w_d with act(w_d, eps) = d, in BFS order."""
    return dict(coset_table(graph, eps).words)


@dataclass(frozen=True)
class FaceLoop:
    """A Borel generator going once around a face.

    ``word`` is ``conjugator^-1 · (r1·r0^2)^degree · conjugator`` in normal form,
    where the conjugator carries eps to the face's entry dart.
    """

    face_index: int
    face: tuple[DartId, ...]
    entry: DartId
    conjugator: Word
    word: Word

    @property
    def degree(self) -> int:
        return len(self.face)


FACE_LOOP = (R1, R0SQ)

# Edge ends at a dart of the truncated graph, in counterclockwise order r1 -> r0^2 -> r0.
_SIGMA = {R1: R0SQ, R0SQ: R0, R0: R1}


def _partner(letter: Letter, d: DartId, graph: RibbonGraph) -> tuple[DartId, Letter]:
    return apply_letter(letter, d, graph), _INVERSE[letter]


def _corner_positions(graph: RibbonGraph, table: CosetTable) -> dict[DartId, int]:
    """Position of each dart's face corner along the boundary walk of the coset tree.

    The coset tree lives in the truncated graph (one small triangle per vertex).
    Walking around it visits every corner once; the corner between the r1 end and
    the r0^2 end of dart d belongs to the face of d.
    """
    tree: set[tuple[DartId, Letter]] = set()
    for child, (par, letter) in table.parent.items():
        tree.add((par, letter))
        tree.add((child, _INVERSE[letter]))
    positions: dict[DartId, int] = {}
    node, end = table.eps, R1
    for step in range(3 * graph.dart_count):
        if end is R1:
            positions[node] = step
        following = _SIGMA[end]
        if (node, following) in tree:
            node, end = _partner(following, node, graph)
        else:
            end = following
    return positions


def face_loops(graph: RibbonGraph, eps: DartId) -> list[FaceLoop]:
    """One Borel generator per face, ordered so that the last-to-first product is trivial on genus 0.

    The face of eps comes first; the rest follow the boundary walk of the coset
    tree backwards.
    """
    table = coset_table(graph, eps)
    rank = {d: i for i, d in enumerate(table.order)}
    positions = _corner_positions(graph, table)
    total = 3 * graph.dart_count

    loops: list[tuple[int, FaceLoop]] = []
    for index, face in enumerate(graph.faces()):
        entry = min(face, key=rank.__getitem__)
        conjugator = table.words[entry]
        word = reduce(conjugator.inverse().letters + FACE_LOOP * len(face) + conjugator.letters)
        position = positions[entry]
        key = 0 if position == 0 else total - position
        loops.append((key, FaceLoop(index, face, entry, conjugator, word)))
    loops.sort(key=lambda item: item[0])
    return [loop for _, loop in loops]


def borel_face_generators(graph: RibbonGraph, eps: DartId) -> list[Word]:
    return [loop.word for loop in face_loops(graph, eps)]


def schreier_generators(graph: RibbonGraph, eps: DartId) -> list[Word]:
    """Schreier generators w_{s·d}^-1 · s · w_d of B(E, eps) for s in {r0, r1}."""
    table = coset_table(graph, eps)
    generators: list[Word] = []
    seen: set[Word] = set()
    for d in table.order:
        for s in (R0, R1):
            target = apply_letter(s, d, graph)
            h = reduce(table.words[target].inverse().letters + (s,) + table.words[d].letters)
            if h and h not in seen:
                seen.add(h)
                generators.append(h)
    logger.debug("%d Schreier generators for %d darts", len(generators), graph.dart_count)
    return generators


def schreier_rewrite(w: Word, graph: RibbonGraph, eps: DartId) -> list[Word]:
    """Rewrite a Borel word as Schreier generators h_1, ..., h_m with w = h_m ··· h_1.

    Raises:
        WordError: If w does not stabilize eps.
    """
    table = coset_table(graph, eps)
    d = eps
    factors: list[Word] = []
    for letter in reversed(w.letters):
        for s in (R0, R0) if letter is R0SQ else (letter,):
            target = apply_letter(s, d, graph)
            h = reduce(table.words[target].inverse().letters + (s,) + table.words[d].letters)
            if h:
                factors.append(h)
            d = target
    if d != eps:
        raise WordError(f"word {w} does not stabilize the base dart")
    return factors


def is_regular(graph: RibbonGraph, eps: DartId) -> bool:
    """True iff B(E, eps) is normal, i.e. every Schreier generator fixes every dart."""
    generators = schreier_generators(graph, eps)
    return all(act(h, d, graph) == d for h in generators for d in range(graph.dart_count))


def monodromy_order(graph: RibbonGraph, bound: int = DEFAULT_CLOSURE_BOUND) -> int:
    """Order of the permutation group generated by rho0 and rho1.

    Raises:
        ClosureBoundError: If the order exceeds ``bound``.
    """
    group = PermutationGroup([Permutation(list(graph.rho0)), Permutation(list(graph.rho1))])
    order = int(group.order())
    if order > bound:
        raise ClosureBoundError(f"monodromy group order {order} exceeds the bound {bound}")
    return order
