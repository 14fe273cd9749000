"""The Chekhov-Fock map from words to PSL2(R) and the Fuchsian group of a labeled dessin.

CHF is defined by ``CHF(1) = 1``, ``CHF(r0·w) = L·CHF(w)`` and
``CHF(r1·w) = X_{z(w eps)}·CHF(w)``. When every shear is 0 the values are
integer matrices and ``X_0 = S``, ``S·L = T``, so CHF becomes the usual
isomorphism of the cartography group with PSL2(Z).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from mpmath import mp

from chf_cli.core.cartography import R0, R0SQ, R1, FaceLoop, Letter, Word, act, face_loops, reduce
from chf_cli.core.errors import MatrixDomainError, NotParabolicError
from chf_cli.core.mobius import DEFAULT_TOLERANCE, INF, ExtendedReal, Mobius

if TYPE_CHECKING:
    from collections.abc import Sequence

    from chf_cli.core.ribbon_graph import DartId, EdgeLabeling, RibbonGraph

logger = logging.getLogger(__name__)

_L = Mobius(0, 1, -1, -1)
_L2 = _L @ _L
_S = Mobius(0, -1, 1, 0)


def matrix_L() -> Mobius:
    """Counterclockwise rotation of T0 = (-1, 0, inf): ``[[0, 1], [-1, -1]]``."""
    return _L


def matrix_X(a: Fraction | float) -> Mobius:
    """Edge crossing with shear a: ``[[0, -e^{a/2}], [e^{-a/2}, 0]]``; exact integers at a = 0."""
    if a == 0:
        return _S
    e = math.exp(float(a) / 2)
    return Mobius(0.0, -e, 1.0 / e, 0.0)


def chf_eval(w: Word, graph: RibbonGraph, z: EdgeLabeling, eps: DartId) -> Mobius:
    """CHF(w) by one right-to-left pass over the letters of w."""
    d = eps
    m = Mobius.identity()
    for letter in reversed(w.letters):
        if letter is R1:
            m = matrix_X(z.at(d)) @ m
            d = graph.rho1[d]
        else:
            for _ in range(letter.rotation):
                m = _L @ m
                d = graph.rho0[d]
    return m if m.is_exact() else m.renormalize()


def chf_eval_precise(w: Word, graph: RibbonGraph, z: EdgeLabeling, eps: DartId) -> mp.matrix:
    """CHF(w) as an mpmath matrix at the working precision of the caller's ``mp`` context."""
    d = eps
    m = mp.eye(2)
    for letter in reversed(w.letters):
        if letter is R1:
            a = z.at(d)
            e = mp.exp(mp.mpf(a.numerator) / a.denominator / 2)
            m = mp.matrix([[0, -e], [1 / e, 0]]) * m
            d = graph.rho1[d]
        else:
            for _ in range(letter.rotation):
                m = mp.matrix([[0, 1], [-1, -1]]) * m
                d = graph.rho0[d]
    return m


def word_matrix_z0(w: Word) -> Mobius:
    """CHF(w) at z = 0, which does not depend on the graph."""
    m = Mobius.identity()
    for letter in reversed(w.letters):
        m = (_S if letter is R1 else _L if letter is R0 else _L2) @ m
    return m


@dataclass(frozen=True)
class FuchsianGenerator:
    """The CHF image of one face loop."""

    loop: FaceLoop
    matrix: Mobius

    @property
    def word(self) -> Word:
        return self.loop.word


def fuchsian_generators(graph: RibbonGraph, z: EdgeLabeling, eps: DartId) -> list[FuchsianGenerator]:
    """One generator per face in the face-loop order; on genus 0 their last-to-first product is 1."""
    generators = [
        FuchsianGenerator(loop, chf_eval(loop.word, graph, z, eps)) for loop in face_loops(graph, eps)
    ]
    logger.debug("computed %d face generators", len(generators))
    return generators


def product_relation(generators: Sequence[FuchsianGenerator]) -> Mobius:
    """The product gamma_n ··· gamma_1 of the generator matrices."""
    result = Mobius.identity()
    for generator in generators:
        result = generator.matrix @ result
    return result if result.is_exact() else result.renormalize()


def relation_holds(generators: Sequence[FuchsianGenerator], tol: float = DEFAULT_TOLERANCE) -> bool:
    return product_relation(generators).is_identity(tol)


def is_parabolic(m: Mobius, tol: float = DEFAULT_TOLERANCE) -> bool:
    """|trace| = 2 (within tol in float mode) and m is not the identity."""
    if m.is_exact():
        return abs(m.trace()) == 2 and not m.is_identity()
    return abs(abs(float(m.trace())) - 2.0) <= tol * m.scale() and not m.is_identity(tol)


def parabolic_fixed_point(m: Mobius, tol: float = DEFAULT_TOLERANCE) -> ExtendedReal:
    """The cusp fixed by a parabolic m: (a - d) / 2c after making the trace +2, or inf when c = 0.

    Raises:
        NotParabolicError: If m is not parabolic.
    """
    if not is_parabolic(m, tol):
        raise NotParabolicError(f"{m} is not parabolic (trace {m.trace()})")
    if m.trace() < 0:
        m = -m
    if m.is_exact():
        if m.c == 0:
            return INF
        return Fraction(int(m.a) - int(m.d), 2 * int(m.c))
    if abs(float(m.c)) <= tol * m.scale():
        return INF
    return (float(m.a) - float(m.d)) / (2.0 * float(m.c))


def face_shear_sum(graph: RibbonGraph, z: EdgeLabeling, face: Sequence[DartId]) -> Fraction:
    """Sum of z over the darts of a face; an edge seen from both sides counts twice."""
    return sum((z.at(d) for d in face), Fraction(0))


_T_WORD = (R1, R0)
_T_INVERSE_WORD = (R0SQ, R1)


def psl2z_to_word(m: Mobius) -> Word:
    """Decompose an integer matrix of determinant 1 into the word whose CHF at z = 0 is m.

    Euclid on the first column writes m = T^q1 · S · T^q2 · S ··· T^qn, then
    T maps to ``r1·r0`` and S to ``r1``.

    Raises:
        MatrixDomainError: If m has non-integer entries or determinant other than 1.
    """
    if not m.is_exact():
        raise MatrixDomainError(f"{m} does not have integer entries")
    if m.det() != 1:
        raise MatrixDomainError(f"{m} has determinant {m.det()}, expected 1")
    a, b, c, d = (int(x) for x in m.entries)
    letters: list[Letter] = []

    def power_of_t(n: int) -> None:
        letters.extend((_T_WORD if n > 0 else _T_INVERSE_WORD) * abs(n))

    while c != 0:
        q = a // c
        a, b = a - q * c, b - q * d
        power_of_t(q)
        a, b, c, d = c, d, -a, -b
        letters.append(R1)
    # now m = +-[[1, b'], [0, 1]] projectively
    power_of_t(a * b)
    return reduce(letters)


def membership_z0(m: Mobius, graph: RibbonGraph, eps: DartId) -> bool:
    """Whether the integer matrix m lies in the image of the Borel subgroup at z = 0."""
    return act(psl2z_to_word(m), eps, graph) == eps
