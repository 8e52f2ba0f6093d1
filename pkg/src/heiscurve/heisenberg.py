"""Finite Heisenberg groups H_{M,N,L}.

An element (a, c, b) stands for x^a z^c y^b with x of order M, y of order N
and z = [x, y] central of order L.  Since z = x y x^-1 y^-1 we have
y x = z^-1 x y, which gives the law

    (a, c, b) * (a', c', b') = (a + a', c + c' - a' b, b + b').

This is the same sign as the C-coordinate of the class-3 collection engine,
so the map A -> x, B -> y reads off (eA, eC, eB) of a collected word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence

from .actions import PermAction, action_from_group, orbit_closure
from .words import FreeWord


@dataclass(frozen=True)
class HeisParams:
    M: int
    N: int
    L: int

    def __post_init__(self):
        if min(self.M, self.N, self.L) < 1:
            raise ValueError("M, N, L must be >= 1")
        if math.gcd(self.M, self.N) % self.L:
            raise ValueError(f"L={self.L} does not divide gcd(M={self.M}, N={self.N})")

    @property
    def order(self) -> int:
        return self.M * self.N * self.L

    def elements(self) -> Iterator["HeisElement"]:
        for a in range(self.M):
            for c in range(self.L):
                for b in range(self.N):
                    yield HeisElement(a, c, b, self)

    def index(self, g: "HeisElement") -> int:
        return (g.a * self.L + g.c) * self.N + g.b

    def identity(self) -> "HeisElement":
        return HeisElement(0, 0, 0, self)

    def x(self) -> "HeisElement":
        return HeisElement(1, 0, 0, self)

    def y(self) -> "HeisElement":
        return HeisElement(0, 0, 1, self)

    def z(self) -> "HeisElement":
        return HeisElement(0, 1, 0, self)


class ParameterMismatch(ValueError):
    pass


@dataclass(frozen=True)
class HeisElement:
    a: int
    c: int
    b: int
    params: HeisParams

    def __post_init__(self):
        p = self.params
        object.__setattr__(self, "a", self.a % p.M)
        object.__setattr__(self, "c", self.c % p.L)
        object.__setattr__(self, "b", self.b % p.N)

    def __mul__(self, o: "HeisElement") -> "HeisElement":
        if o.params != self.params:
            raise ParameterMismatch(f"{self.params} vs {o.params}")
        return HeisElement(self.a + o.a, self.c + o.c - o.a * self.b, self.b + o.b, self.params)

    def inverse(self) -> "HeisElement":
        return HeisElement(-self.a, -self.c - self.a * self.b, -self.b, self.params)

    def __pow__(self, k: int) -> "HeisElement":
        # closed form: g^k = (ka, kc - ab k(k-1)/2, kb), valid for negative k too
        return HeisElement(k * self.a, k * self.c - self.a * self.b * (k * (k - 1) // 2), k * self.b, self.params)

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def astuple(self):
        return (self.a, self.c, self.b)


def h_mul(g: HeisElement, h: HeisElement) -> HeisElement:
    return g * h


def h_inv(g: HeisElement) -> HeisElement:
    return g.inverse()


def h_from_word(w: FreeWord, params: HeisParams) -> HeisElement:
    out = params.identity()
    for gen, exp in w.letters:
        step = HeisElement(exp, 0, 0, params) if gen == "A" else HeisElement(0, 0, exp, params)
        out = out * step
    return out


def h_order(g: HeisElement) -> int:
    p = g.params
    bound = 2 * p.M * p.N * p.L // math.gcd(p.M, p.N)
    for k in range(1, bound + 1):
        if (g ** k).is_identity():
            return k
    raise AssertionError(f"no order found for {g} below {bound}")


def h_order_by_iteration(g: HeisElement) -> int:
    cur = g
    k = 1
    while not cur.is_identity():
        cur = cur * g
        k += 1
    return k


def h_exponent(params: HeisParams) -> int:
    e = 1
    for g in params.elements():
        o = h_order(g)
        e = e * o // math.gcd(e, o)
    return e


def exponent_closed_form(params: HeisParams) -> int:
    T = params.M * params.N // math.gcd(params.M, params.N)
    if T % 2 == 1 or (T // params.L) % 2 == 0:
        return T
    return 2 * T


def h_center_order(params: HeisParams) -> int:
    x, y = params.x(), params.y()
    return sum(1 for g in params.elements() if g * x == x * g and g * y == y * g)


def subgroup_closure(params: HeisParams, gens: Sequence[HeisElement]) -> List[HeisElement]:
    moves = [lambda h, g=g: h * g for g in gens]
    return orbit_closure(params.identity(), moves)


def h_coset_action(params: HeisParams, subgroup_gens: Iterable[HeisElement] = ()) -> PermAction:
    """Right action of x and y on the right cosets K g of K = <subgroup_gens>."""
    gens = list(subgroup_gens)
    for g in gens:
        if g.params != params:
            raise ParameterMismatch("subgroup generator from another group")
    K = subgroup_closure(params, gens)

    def key(g: HeisElement):
        return min(params.index(k * g) for k in K)

    reps = {}
    for g in params.elements():
        reps.setdefault(key(g), g)
    points = sorted(reps)
    x, y = params.x(), params.y()
    return action_from_group(points, lambda k: key(reps[k] * x), lambda k: key(reps[k] * y))


def regular_action(params: HeisParams) -> PermAction:
    """Right regular action, point index (a*L + c)*N + b."""
    M, N, L = params.M, params.N, params.L
    x = [0] * params.order
    y = [0] * params.order
    for a in range(M):
        for c in range(L):
            for b in range(N):
                i = (a * L + c) * N + b
                # (a,c,b)*(1,0,0) = (a+1, c-b, b); (a,c,b)*(0,0,1) = (a, c, b+1)
                x[i] = (((a + 1) % M) * L + (c - b) % L) * N + b
                y[i] = (a * L + c) * N + (b + 1) % N
    return PermAction(tuple(x), tuple(y))


def heisenberg_level(N: int) -> HeisParams:
    """H_{N,N,N'}, the quotient Gamma-bar(2) / Phi'_N."""
    return HeisParams(N, N, N if N % 2 else N // 2)
