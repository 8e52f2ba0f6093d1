"""Genus, cusps and congruence tests for coverings of X(2) given by permutations."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .actions import PermAction, perm_cycle_type
from .heisenberg import HeisParams
from .nilpotent import LevelParams


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveData:
    degree: int
    genus: int
    cusps: Dict[str, Tuple[int, ...]]

    @property
    def cusp_count(self) -> int:
        return sum(len(v) for v in self.cusps.values())

    def to_json(self) -> str:
        data = {
            "degree": self.degree,
            "genus": self.genus,
            "cusps": {k: list(v) for k, v in self.cusps.items()},
        }
        return json.dumps(data, sort_keys=True)


def rh_genus(action: PermAction) -> CurveData:
    if not action.is_transitive():
        raise CurveError("action is not transitive; the curve is disconnected")
    d = action.degree
    cusps = {
        "inf": tuple(perm_cycle_type(action.p_inf)),
        "zero": tuple(perm_cycle_type(action.p_zero)),
        "one": tuple(perm_cycle_type(action.p_one)),
    }
    ram = sum(l - 1 for lengths in cusps.values() for l in lengths)
    two_g = 2 - 2 * d + ram
    if two_g % 2 or two_g < 0:
        raise CurveError(f"Riemann-Hurwitz gives non-integral genus ({two_g}/2)")
    return CurveData(d, two_g // 2, cusps)


def ramification_one(M: int, N: int, L: int) -> int:
    """Order of x^-1 y in H_{M,N,L}, the width over X(2) of cusps above 1."""
    T = M * N // math.gcd(M, N)
    if T % 2 == 0 and (T // L) % 2 == 1:
        return 2 * T
    return T


def genus_closed_form(M: int, N: int, L: int) -> int:
    HeisParams(M, N, L)  # validates the triple
    e = ramification_one(M, N, L)
    num = N * M * L - N * L - M * L - N * M * L // e
    assert num % 2 == 0
    return num // 2 + 1


def valid_triples(bound: int):
    for M in range(1, bound + 1):
        for N in range(1, bound + 1):
            g = math.gcd(M, N)
            for L in range(1, g + 1):
                if g % L == 0:
                    yield (M, N, L)


def classify_small_genus(bound: int, target: int) -> List[Tuple[int, int, int]]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [t for t in valid_triples(bound) if genus_closed_form(*t) == target]


def genus_prime(N: int) -> int:
    """Genus of X'_N."""
    p = LevelParams.of(N)
    return genus_closed_form(N, N, p.Np)


def genus_xpp(N: int) -> int:
    """Genus of X''_N from the unramified degree-N''^2 covering of X'_N."""
    p = LevelParams.of(N)
    return p.Npp ** 2 * (genus_prime(N) - 1) + 1


def genus_xpp_displayed(N: int) -> int:
    """The alternative form N''^2 g'_N - N^2 + 1; it goes negative at N = 3."""
    p = LevelParams.of(N)
    return p.Npp ** 2 * genus_prime(N) - N ** 2 + 1


def cusp_widths_and_level(action: PermAction) -> Tuple[List[int], int]:
    if not action.is_transitive():
        raise CurveError("action is not transitive")
    widths = []
    for p in (action.p_inf, action.p_zero, action.p_one):
        widths.extend(2 * l for l in perm_cycle_type(p))
    level = 1
    for w in widths:
        level = level * w // math.gcd(level, w)
    return sorted(widths), level


class Verdict(enum.Enum):
    NOT_CONGRUENCE = "NOT_CONGRUENCE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class CongruenceCertificate:
    verdict: Verdict
    level: int
    gamma2_index: int
    index: int
    notes: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "level": self.level,
            "gamma2_index": self.gamma2_index,
            "index": self.index,
            "notes": list(self.notes),
        }


def congruence_refutation(action: PermAction, index: int) -> CongruenceCertificate:
    """Wohlfahrt test: a congruence subgroup of level m contains Gamma(m).

    If it did, ``index`` would divide [Gamma-bar(2) : Gamma-bar(2) cap Gamma-bar(m)].
    """
    from .psl2 import gamma2_index_mod

    if index != action.degree:
        raise ValueError(f"index {index} differs from action degree {action.degree}")
    _, m = cusp_widths_and_level(action)
    h = gamma2_index_mod(m)
    verdict = Verdict.NOT_CONGRUENCE if h % index else Verdict.INCONCLUSIVE
    cert = CongruenceCertificate(verdict, m, h, index)
    if m == 6:
        cert.notes.append(
            "projective index [Gamma(2):Gamma(6)] is %d; 144 = |SL2(Z/6)| is the unreduced figure" % h
        )
    return cert
