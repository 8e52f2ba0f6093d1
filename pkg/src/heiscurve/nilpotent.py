"""The free class-3 nilpotent quotient of Gamma-bar(2) and the level-N maps.

Elements are kept in the normal form A^a B^b C^c D^d E^e with C = [A, B],
D = [C, A], E = [C, B]; D and E are central modulo weight-4 commutators.
The rewrite rules

    B A -> A B C^-1 D^-1 E^-1,   C A -> A C D,   C B -> B C E

integrate to the closed-form product used by ``Class3Element.__mul__``::

    B^b A^a = A^a B^b C^(-ab) D^(-b a(a+1)/2) E^(-a b(b+1)/2)
    C^c A^a = A^a C^c D^(ca),    C^c B^b = B^b C^c E^(cb)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .actions import PermAction, orbit_closure, action_from_group
from .words import FreeWord, exponent_sums


class DomainError(ValueError):
    """An argument lies outside the subgroup where the map is defined."""


@dataclass(frozen=True)
class Class3Element:
    eA: int = 0
    eB: int = 0
    eC: int = 0
    eD: int = 0
    eE: int = 0

    def __mul__(self, o: "Class3Element") -> "Class3Element":
        a, b, c, d, e = self.eA, self.eB, self.eC, self.eD, self.eE
        a2, b2 = o.eA, o.eB
        c_mid = c - a2 * b
        return Class3Element(
            a + a2,
            b + b2,
            c_mid + o.eC,
            d + o.eD + c * a2 - b * a2 * (a2 + 1) // 2,
            e + o.eE - a2 * b * (b + 1) // 2 + c_mid * b2,
        )

    def inverse(self) -> "Class3Element":
        a, b, c, d, e = self.astuple()
        return Class3Element(
            -a,
            -b,
            -c - a * b,
            -d + c * a + a * b * (a - 1) // 2,
            -e - a * b * (b + 1) // 2 + (c + a * b) * b,
        )

    def __pow__(self, k: int) -> "Class3Element":
        if k < 0:
            return self.inverse() ** (-k)
        result = Class3Element()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def astuple(self) -> Tuple[int, int, int, int, int]:
        return (self.eA, self.eB, self.eC, self.eD, self.eE)

    def is_identity(self) -> bool:
        return not any(self.astuple())

    def in_derived(self) -> bool:
        return self.eA == 0 and self.eB == 0


IDENTITY = Class3Element()
GEN_A = Class3Element(1, 0, 0, 0, 0)
GEN_B = Class3Element(0, 1, 0, 0, 0)
GEN_C = Class3Element(0, 0, 1, 0, 0)
GEN_D = Class3Element(0, 0, 0, 1, 0)
GEN_E = Class3Element(0, 0, 0, 0, 1)


def commutator(g: Class3Element, h: Class3Element) -> Class3Element:
    return g * h * g.inverse() * h.inverse()


def collect(w: FreeWord) -> Class3Element:
    """Image of a free word in Gamma-bar(2) / Gamma-bar(2)_4."""
    out = IDENTITY
    for gen, exp in w.letters:
        out = out * (Class3Element(exp, 0) if gen == "A" else Class3Element(0, exp))
    return out


def _as_element(w: Union[FreeWord, Class3Element]) -> Class3Element:
    return w if isinstance(w, Class3Element) else collect(w)


def phi2(e: Union[FreeWord, Class3Element]) -> int:
    e = _as_element(e)
    if not e.in_derived():
        raise DomainError(f"phi2 needs an element of the derived subgroup, got {e}")
    return e.eC


def psi(e: Union[FreeWord, Class3Element]) -> Tuple[int, int, int]:
    e = _as_element(e)
    if not e.in_derived():
        raise DomainError(f"psi needs an element of the derived subgroup, got {e}")
    return (e.eD, e.eE, e.eC)


@dataclass(frozen=True)
class LevelParams:
    N: int
    Np: int
    Npp: int

    @classmethod
    def of(cls, N: int) -> "LevelParams":
        if N < 1:
            raise ValueError("N must be >= 1")
        Np = N if N % 2 else N // 2
        Npp = Np if N % 3 else Np // 3
        return cls(N, Np, Npp)


class Level(enum.IntEnum):
    NONE = 0
    PHI = 1
    PHI_PRIME = 2
    PHI_DOUBLE_PRIME = 3


def peel(e: Class3Element) -> Class3Element:
    """B^-sB A^-sA e, the derived-subgroup part of e."""
    return Class3Element(0, -e.eB) * Class3Element(-e.eA, 0) * e


def barpsi(w: Union[FreeWord, Class3Element], params: Union[LevelParams, int]) -> Tuple[int, int, int]:
    if isinstance(params, int):
        params = LevelParams.of(params)
    e = _as_element(w)
    N, Np = params.N, params.Np
    if e.eA % N or e.eB % N:
        raise DomainError(f"exponent sums ({e.eA}, {e.eB}) are not divisible by {N}")
    d, ee, c = psi(peel(e))
    return (d % Np, ee % Np, c % Np)


def membership(w: Union[FreeWord, Class3Element], params: Union[LevelParams, int]) -> Level:
    if isinstance(params, int):
        params = LevelParams.of(params)
    e = _as_element(w)
    if e.eA % params.N or e.eB % params.N:
        return Level.NONE
    d, ee, c = barpsi(e, params)
    if c % params.Np:
        return Level.PHI
    if d % params.Npp or ee % params.Npp:
        return Level.PHI_PRIME
    return Level.PHI_DOUBLE_PRIME


def mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def witt_rank(m: int, k: int) -> int:
    """Rank of G_k / G_(k+1) for a free group on m generators."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    total = sum(mobius(d) * m ** (k // d) for d in range(1, k + 1) if k % d == 0)
    assert total % k == 0
    return total // k


# Hall-Petrescu style identities


def _fit_polynomial(xs: List[int], ys: List[int]) -> List[Fraction]:
    """Coefficients (constant first) of the minimal-degree interpolant."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # Newton form -> monomial form
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [shifted[k] - xs[i] * poly[k] for k in range(n)]
        poly[0] += coef[i]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def format_polynomial(coefs: List[Fraction], var: str = "n") -> str:
    terms = []
    for k in range(len(coefs) - 1, -1, -1):
        c = coefs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c in (1, -1):
            text = ("-" if c < 0 else "") + mono
        else:
            text = str(c) + (f"*{mono}" if mono else "")
        terms.append(text)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def _hp_names():
    alpha, beta = GEN_A, GEN_B
    gamma = commutator(alpha, beta)
    alpha_p = commutator(gamma.inverse(), alpha)
    beta_p = commutator(gamma.inverse(), beta)
    return alpha, beta, gamma, alpha_p, beta_p


def betanalpha_sides(n: int) -> Tuple[Class3Element, Class3Element]:
    alpha, beta, gamma, alpha_p, beta_p = _hp_names()
    lhs = beta ** n * alpha
    rhs = alpha * gamma ** (-n) * beta ** n * alpha_p ** n * beta_p ** (-(n * (n - 1) // 2))
    return lhs, rhs


def power_identity_displayed_rhs(n: int) -> Class3Element:
    alpha, beta, gamma, alpha_p, beta_p = _hp_names()
    return (
        alpha ** n
        * gamma ** (-(n * (n - 1) // 2))
        * beta ** n
        * alpha_p ** (-n * (n - 4) * (n + 1))
        * beta_p ** (n * (n - 1) * (n + 1) // 6)
    )


def power_identity_true_exponents(n: int) -> Tuple[int, int]:
    """Exponents (p, q) with (ab)^n = a^n g^(-n(n-1)/2) b^n a'^p b'^q."""
    alpha, beta, gamma, alpha_p, beta_p = _hp_names()
    head = alpha ** n * gamma ** (-(n * (n - 1) // 2)) * beta ** n
    rest = head.inverse() * (alpha * beta) ** n
    if rest.eA or rest.eB or rest.eC:
        raise AssertionError(f"(ab)^{n} differs from the head beyond weight 3: {rest}")
    # alpha' = D^-1 and beta' = E^-1 in this normal form
    assert alpha_p == Class3Element(0, 0, 0, -1, 0) and beta_p == Class3Element(0, 0, 0, 0, -1)
    return -rest.eD, -rest.eE


def verify_hall_petrescu(n_max: int) -> dict:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ns = list(range(0, n_max + 1))
    bna_fail = []
    for n in ns:
        lhs, rhs = betanalpha_sides(n)
        if lhs != rhs:
            bna_fail.append({"n": n, "lhs": lhs.astuple(), "rhs": rhs.astuple()})
    alpha, beta, *_ = _hp_names()
    pow_fail = []
    ps, qs = [], []
    for n in ns:
        p, q = power_identity_true_exponents(n)
        ps.append(p)
        qs.append(q)
        if (alpha * beta) ** n != power_identity_displayed_rhs(n):
            pow_fail.append(n)
    p_poly = _fit_polynomial(ns, ps)
    q_poly = _fit_polynomial(ns, qs)
    shown_p = [-n * (n - 4) * (n + 1) for n in ns]
    shown_q = [n * (n - 1) * (n + 1) // 6 for n in ns]
    return {
        "n_max": n_max,
        "betanalpha": {"holds": not bna_fail, "failures": bna_fail},
        "power": {
            "holds": not pow_fail,
            "failing_n": pow_fail,
            "alpha_prime_exponent": format_polynomial(p_poly),
            "beta_prime_exponent": format_polynomial(q_poly),
            "alpha_prime_matches_display": ps == shown_p,
            "beta_prime_matches_display": qs == shown_q,
        },
    }


# The finite quotient Gamma-bar(2) / Phi''_N as a permutation action


def double_prime_coset_key(e: Class3Element, params: LevelParams) -> tuple:
    """Invariant of the coset Phi''_N e: exponent sums mod N and barpsi of the rest."""
    N = params.N
    sa, sb = e.eA % N, e.eB % N
    rep = Class3Element(sa, sb)
    u = e * rep.inverse()
    d, ee, c = barpsi(u, params)
    return (sa, sb, c % params.Np, d % params.Npp, ee % params.Npp)


def double_prime_action(N: int) -> PermAction:
    """Regular right action of A and B on Phi''_N \\ Gamma-bar(2)."""
    params = LevelParams.of(N)
    reps: dict = {}

    def key(e):
        k = double_prime_coset_key(e, params)
        reps.setdefault(k, e)
        return k

    def mover(g):
        return lambda k: key(reps[k] * g)

    start = key(IDENTITY)
    points = orbit_closure(start, [mover(GEN_A), mover(GEN_B)])
    expected = params.N ** 2 * params.Np * params.Npp ** 2
    if len(points) != expected:
        raise AssertionError(f"found {len(points)} cosets, expected {expected}")
    return action_from_group(points, mover(GEN_A), mover(GEN_B))


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out
