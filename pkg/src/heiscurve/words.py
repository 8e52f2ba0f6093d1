"""Reduced words in the free group on A, B (the group Gamma-bar(2)).

Words are stored run-length encoded as tuples of ``(generator, exponent)``
pairs.  The string format used by the CLI and fixtures spells a word over
the alphabet ``A a B b`` with lowercase letters meaning inverses, so
``"ABab"`` is the commutator C = A B A^-1 B^-1.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence, Tuple

GENERATORS = ("A", "B")

Letter = Tuple[str, int]


def reduce(raw: Iterable[Letter]) -> "FreeWord":
    """Freely reduce a sequence of ``(generator, exponent)`` letters."""
    out: list[list] = []
    for gen, exp in raw:
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return FreeWord(tuple((g, e) for g, e in out), _reduced=True)


class FreeWord:
    __slots__ = ("letters",)

    def __init__(self, letters: Sequence[Letter] = (), _reduced: bool = False):
        if _reduced:
            self.letters = tuple(letters)
        else:
            self.letters = reduce(letters).letters

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls((), _reduced=True)

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "FreeWord":
        return reduce([(name, exp)])

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse the ``A a B b`` string format; whitespace is ignored."""
        raw = []
        for ch in text:
            if ch.isspace():
                continue
            if ch not in "AaBb":
                raise ValueError(f"bad letter {ch!r} in word {text!r}")
            raw.append((ch.upper(), 1 if ch.isupper() else -1))
        return reduce(raw)

    def __str__(self) -> str:
        parts = []
        for gen, exp in self.letters:
            ch = gen if exp > 0 else gen.lower()
            parts.append(ch * abs(exp))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FreeWord({str(self) or '1'!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return reduce(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)), _reduced=True)

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return self.inverse() ** (-k)
        result = FreeWord.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return not self.letters


A = FreeWord.gen("A")
B = FreeWord.gen("B")


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def conjugate(g: FreeWord, w: FreeWord) -> FreeWord:
    """g w g^-1."""
    return g * w * g.inverse()


C = commutator(A, B)


def exponent_sums(w: FreeWord) -> Tuple[int, int]:
    sa = sum(e for g, e in w.letters if g == "A")
    sb = sum(e for g, e in w.letters if g == "B")
    return sa, sb


def product(words: Iterable[FreeWord]) -> FreeWord:
    raw: list = []
    for w in words:
        raw.extend(w.letters)
    return reduce(raw)


def phi_relation_sides(N: int, order: str = "ij") -> Tuple[FreeWord, FreeWord]:
    """Both sides of the relation among the generators of Phi_N.

    Left: A^N B^N A^-N B^-N.  Right: the product of the conjugates
    A^(N-1-i) B^j C B^-j A^(i+1-N).  ``order`` picks the loop nesting
    ("ij": i outer) and a trailing "r" reverses the factor order.
    """
    lhs = A ** N * B ** N * A ** (-N) * B ** (-N)
    nest = order.rstrip("r")
    pairs = [(i, j) for i in range(N) for j in range(N)]
    if nest == "ji":
        pairs = [(i, j) for j in range(N) for i in range(N)]
    if order.endswith("r"):
        pairs.reverse()
    rhs = product(
        A ** (N - 1 - i) * B ** j * C * B ** (-j) * A ** (i + 1 - N) for i, j in pairs
    )
    return lhs, rhs


def verify_phi_relation(N: int) -> bool:
    if N < 1:
        raise ValueError("N must be >= 1")
    lhs, rhs = phi_relation_sides(N)
    return lhs == rhs


def search_phi_relation_order(N: int) -> list[str]:
    """Which of the four natural factor orders make the relation hold."""
    found = []
    for order in ("ij", "ji", "ijr", "jir"):
        lhs, rhs = phi_relation_sides(N, order)
        if lhs == rhs:
            found.append(order)
    return found


def conjugation_expansion_sides(N: int) -> Tuple[FreeWord, FreeWord]:
    lhs = A * B ** N * A.inverse() * B ** (-N)
    rhs = product(B ** i * C * B ** (-i) for i in range(N))
    return lhs, rhs


def verify_conjugation_expansion(N: int) -> bool:
    if N < 1:
        raise ValueError("N must be >= 1")
    lhs, rhs = conjugation_expansion_sides(N)
    return lhs == rhs


def random_word(rng: random.Random, length: int) -> FreeWord:
    return reduce((rng.choice(GENERATORS), rng.choice((-1, 1))) for _ in range(length))
