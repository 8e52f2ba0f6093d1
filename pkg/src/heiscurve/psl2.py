"""PSL_2(Z/nZ): canonical matrices, subgroup closure, derived subgroups."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

MAX_LEVEL = 30


class GuardError(RuntimeError):
    pass


def _guard(n: int) -> None:
    limit = int(os.environ.get("HEISCURVE_GUARD_PSL2", MAX_LEVEL))
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > limit:
        raise GuardError(f"level n={n} exceeds the guard {limit}")


@dataclass(frozen=True)
class ProjMat:
    """A matrix (a b; c d) of determinant 1 mod n, up to sign."""

    a: int
    b: int
    c: int
    d: int
    n: int

    @classmethod
    def make(cls, a: int, b: int, c: int, d: int, n: int) -> "ProjMat":
        if (a * d - b * c - 1) % n:
            raise ValueError(f"determinant of ({a} {b}; {c} {d}) is not 1 mod {n}")
        pos = (a % n, b % n, c % n, d % n)
        neg = (-a % n, -b % n, -c % n, -d % n)
        return cls(*min(pos, neg), n)

    def __mul__(self, o: "ProjMat") -> "ProjMat":
        if o.n != self.n:
            raise ValueError("matrices of different levels")
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        return ProjMat.make(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.n)

    def inverse(self) -> "ProjMat":
        return ProjMat.make(self.d, -self.b, -self.c, self.a, self.n)

    def __pow__(self, k: int) -> "ProjMat":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def entries(self):
        return (self.a, self.b, self.c, self.d)


def identity(n: int) -> ProjMat:
    return ProjMat.make(1, 0, 0, 1, n)


def gen_A(n: int) -> ProjMat:
    return ProjMat.make(1, 2, 0, 1, n)


def gen_B(n: int) -> ProjMat:
    return ProjMat.make(1, 0, 2, 1, n)


def psl2_order(n: int) -> int:
    _guard(n)
    seen = set()
    for a, b, c in itertools.product(range(n), repeat=3):
        for d in range(n):
            if (a * d - b * c) % n == 1 % n:
                seen.add(ProjMat.make(a, b, c, d, n))
    return len(seen)


def closure(gens: Iterable[ProjMat], n: int) -> FrozenSet[ProjMat]:
    """Subgroup generated by ``gens``, by breadth-first multiplication."""
    gens = list(gens)
    for g in gens:
        if g.n != n:
            raise ValueError("generator of the wrong level")
    one = identity(n)
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = h * g
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return frozenset(seen)


def derived_closure(H: Iterable[ProjMat]) -> FrozenSet[ProjMat]:
    H = list(H)
    if not H:
        raise ValueError("empty subgroup")
    n = H[0].n
    comms = {g * h * g.inverse() * h.inverse() for g in H for h in H}
    return closure(comms, n)


def gamma2_image(n: int) -> FrozenSet[ProjMat]:
    _guard(n)
    return closure([gen_A(n), gen_B(n)], n)


def D3() -> FrozenSet[ProjMat]:
    """The Klein four-subgroup of PSL_2(Z/3Z)."""
    return frozenset(
        ProjMat.make(*m, 3)
        for m in ((1, 0, 0, 1), (0, -1, 1, 0), (-1, 1, 1, 1), (1, 1, 1, -1))
    )


def is_klein_group(G: Iterable[ProjMat]) -> bool:
    G = list(G)
    if len(G) != 4:
        return False
    one = identity(G[0].n)
    Gs = set(G)
    closed = all(g * h in Gs for g in G for h in G)
    involutions = all(g * g == one for g in G)
    abelian = all(g * h == h * g for g in G for h in G)
    return closed and involutions and abelian


def phi_image_mod3(N: int) -> FrozenSet[ProjMat]:
    """Image of Phi_N (generated by A^N, B^N and the derived subgroup) in PSL_2(Z/3Z)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    A, B = gen_A(3), gen_B(3)
    derived = derived_closure(gamma2_image(3))
    return closure([A ** N, B ** N, *derived], 3)


def gamma2_index_mod(n: int) -> int:
    """[Gamma-bar(2) : Gamma-bar(2) cap Gamma-bar(n)], the size of the image mod n."""
    return len(gamma2_image(n))


def sorted_elements(G: Iterable[ProjMat]) -> List[tuple]:
    return sorted(g.entries() for g in G)


def coset_action(subgroup: Iterable[ProjMat], n: int):
    """Right action of A-bar, B-bar on the right cosets H g inside the image of Gamma-bar(2)."""
    from .actions import action_from_group

    H = list(subgroup)
    G = gamma2_image(n)

    def key(g):
        return min((h * g).entries() for h in H)

    reps = {}
    for g in sorted(G, key=lambda m: m.entries()):
        reps.setdefault(key(g), g)
    points = sorted(reps)
    A, B = gen_A(n), gen_B(n)
    return action_from_group(points, lambda k: key(reps[k] * A), lambda k: key(reps[k] * B))
