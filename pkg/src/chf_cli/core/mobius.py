"""PSL2(R) elements and points of the extended real line."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Entry = int | float

DEFAULT_TOLERANCE = 1e-9


class Infinity:
    """The point at infinity of the extended real line (a singleton)."""

    _instance: Infinity | None = None

    def __new__(cls) -> Infinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __str__(self) -> str:
        return "inf"

    def __hash__(self) -> int:
        return hash("chf-infinity")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Infinity)


INF = Infinity()

ExtendedReal = Fraction | float | Infinity


def format_extended(x: ExtendedReal) -> str:
    """``inf``, ``p/q`` (or ``p`` for integers), or the shortest float repr."""
    if isinstance(x, Infinity):
        return "inf"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def parse_extended(token: str) -> ExtendedReal:
    if token == "inf":
        return INF
    return Fraction(token)


def _format_entry(x: Entry) -> str:
    return str(x) if isinstance(x, int) else repr(float(x))


@dataclass(frozen=True)
class Mobius:
    """A 2x2 matrix ``[[a, b], [c, d]]`` with determinant 1, read projectively.

    Entries are Python ints in integer mode and floats otherwise.
    """

    a: Entry
    b: Entry
    c: Entry
    d: Entry

    @classmethod
    def identity(cls) -> Mobius:
        return cls(1, 0, 0, 1)

    @property
    def entries(self) -> tuple[Entry, Entry, Entry, Entry]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: Mobius) -> Mobius:
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> Mobius:
        return Mobius(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> Mobius:
        base = self if n >= 0 else self.inverse()
        result = Mobius.identity()
        for _ in range(abs(n)):
            result = result @ base
        return result

    def inverse(self) -> Mobius:
        return Mobius(self.d, -self.b, -self.c, self.a)

    def trace(self) -> Entry:
        return self.a + self.d

    def det(self) -> Entry:
        return self.a * self.d - self.b * self.c

    def is_exact(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    def scale(self) -> float:
        return max(1.0, *(abs(float(x)) for x in self.entries))

    def renormalize(self) -> Mobius:
        """Divide by the square root of the determinant (float mode only)."""
        if self.is_exact():
            return self
        root = math.sqrt(float(self.det()))
        return Mobius(self.a / root, self.b / root, self.c / root, self.d / root)

    def canonical_sign(self) -> Mobius:
        """The representative with positive trace, or with positive first nonzero entry when the trace is 0."""
        t = self.trace()
        if t < 0:
            return -self
        if t == 0:
            for x in self.entries:
                if x != 0:
                    return -self if x < 0 else self
        return self

    def apply(self, x: ExtendedReal) -> ExtendedReal:
        """Act on the extended real line by ``t -> (a t + b) / (c t + d)``."""
        exact = self.is_exact() and not isinstance(x, float)
        if isinstance(x, Infinity):
            num: Fraction | float = self.a
            den: Fraction | float = self.c
        elif exact:
            num = self.a * x + self.b
            den = self.c * x + self.d
        else:
            num = float(self.a) * float(x) + float(self.b)
            den = float(self.c) * float(x) + float(self.d)
        if exact:
            if den == 0:
                return INF
            return Fraction(num) / Fraction(den)
        if abs(float(den)) <= 1e-12 * max(1.0, abs(float(num))):
            return INF
        return float(num) / float(den)

    def projectively_equal(self, other: Mobius, tol: float = DEFAULT_TOLERANCE) -> bool:
        """M and N are equal iff M = N or M = -N; entrywise within tol times the entry scale in float mode."""
        if self.is_exact() and other.is_exact():
            return self.entries == other.entries or self.entries == (-other).entries
        scale = max(self.scale(), other.scale())
        for sign in (1, -1):
            error = max(abs(float(x) - sign * float(y)) for x, y in zip(self.entries, other.entries))
            if error <= tol * scale:
                return True
        return False

    def is_identity(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        return self.projectively_equal(Mobius.identity(), tol)

    def __str__(self) -> str:
        a, b, c, d = (_format_entry(x) for x in self.entries)
        return f"[[{a},{b}],[{c},{d}]]"

    def pretty(self) -> str:
        """Two-row form ``(a b / c d)`` used in console tables."""
        a, b, c, d = (_format_entry(x) for x in self.entries)
        return f"({a} {b} / {c} {d})"
