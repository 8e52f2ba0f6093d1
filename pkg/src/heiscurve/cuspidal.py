"""Cuspidal divisor class group of the Fermat curve F_N (N odd).

The 3N cusps a_j, b_j, c_j are indexed j, N + j, 2N + j.  A degree-0 divisor
is coordinatized by dropping the coefficient at the base point P, which is
an isomorphism Z[cusps]^0 -> Z^(3N-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .zlinalg import AbelianInvariants, IntMatrix, element_order, quotient_invariants, solve_in_lattice

FAMILIES = ("a", "b", "c")


def _check_n(N: int) -> None:
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")


def cusp_index(family: str, j: int, N: int) -> int:
    return FAMILIES.index(family) * N + j % N


def sym(i: int, N: int) -> int:
    """Representative of i mod N in [-(N-1)/2, (N-1)/2]."""
    r = i % N
    return r - N if r > (N - 1) // 2 else r


class CuspDivisor:
    """Finite-support integer combination of Fermat cusps."""

    def __init__(self, N: int, coeffs: Dict[Tuple[str, int], int] = None):
        self.N = N
        self.coeffs: Dict[Tuple[str, int], int] = {}
        for (fam, j), v in (coeffs or {}).items():
            self.add(fam, j, v)

    def add(self, family: str, j: int, v: int) -> "CuspDivisor":
        if family not in FAMILIES:
            raise ValueError(f"unknown cusp family {family!r}")
        key = (family, j % self.N)
        self.coeffs[key] = self.coeffs.get(key, 0) + v
        if self.coeffs[key] == 0:
            del self.coeffs[key]
        return self

    @property
    def degree(self) -> int:
        return sum(self.coeffs.values())

    def vector(self) -> List[int]:
        v = [0] * (3 * self.N)
        for (fam, j), c in self.coeffs.items():
            v[cusp_index(fam, j, self.N)] = c
        return v

    @classmethod
    def from_vector(cls, N: int, v: List[int]) -> "CuspDivisor":
        d = cls(N)
        for k, c in enumerate(v):
            if c:
                d.add(FAMILIES[k // N], k % N, c)
        return d

    def __add__(self, o: "CuspDivisor") -> "CuspDivisor":
        return CuspDivisor.from_vector(self.N, [x + y for x, y in zip(self.vector(), o.vector())])

    def __sub__(self, o: "CuspDivisor") -> "CuspDivisor":
        return self + o.scale(-1)

    def scale(self, k: int) -> "CuspDivisor":
        return CuspDivisor.from_vector(self.N, [k * x for x in self.vector()])

    def __eq__(self, o) -> bool:
        return isinstance(o, CuspDivisor) and self.N == o.N and self.coeffs == o.coeffs

    def __repr__(self) -> str:
        terms = " + ".join(f"{v}[{f}{j}]" for (f, j), v in sorted(self.coeffs.items()))
        return f"CuspDivisor(N={self.N}: {terms or '0'})"


def point(family: str, j: int, N: int) -> CuspDivisor:
    return CuspDivisor(N, {(family, j): 1})


def fiber_sum(family: str, N: int) -> CuspDivisor:
    return CuspDivisor(N, {(family, j): 1 for j in range(N)})


def degree_zero_coords(D: CuspDivisor, base: Tuple[str, int] = ("a", 0)) -> List[int]:
    if D.degree != 0:
        raise ValueError(f"divisor has degree {D.degree}, expected 0")
    v = D.vector()
    del v[cusp_index(base[0], base[1], D.N)]
    return v


def rohrlich_generators(N: int, base: Tuple[str, int] = ("a", 0)) -> List[CuspDivisor]:
    """The six extra relations, with the fiber sums read as sum - N[P]."""
    _check_n(N)
    P = point(*base, N)
    out = [fiber_sum(f, N) - P.scale(N) for f in FAMILIES]
    wab, wac, sq = CuspDivisor(N), CuspDivisor(N), CuspDivisor(N)
    for i in range(N):
        wab.add("a", i, i).add("b", i, -i)
        wac.add("a", i, i).add("c", i, -i)
        for f in FAMILIES:
            sq.add(f, i, i * i)
    sq = sq - P.scale(3 * sum(i * i for i in range(N)))
    return out + [wab, wac, sq]


def rohrlich_lattice(N: int, base: Tuple[str, int] = ("a", 0)) -> IntMatrix:
    """Columns: N times each [Q] - [P], then the six relations, in degree-0 coordinates."""
    _check_n(N)
    P = point(*base, N)
    cols = []
    for f in FAMILIES:
        for j in range(N):
            if (f, j % N) == (base[0], base[1] % N):
                continue
            cols.append(degree_zero_coords((point(f, j, N) - P).scale(N), base))
    for D in rohrlich_generators(N, base):
        cols.append(degree_zero_coords(D, base))
    return IntMatrix.from_columns(cols, 3 * N - 1)


def cuspidal_group(N: int, base: Tuple[str, int] = ("a", 0)) -> AbelianInvariants:
    return quotient_invariants(rohrlich_lattice(N, base), 3 * N - 1)


def class_order(D: CuspDivisor, N: int, base: Tuple[str, int] = ("a", 0)) -> int:
    if D.N != N:
        raise ValueError("divisor belongs to a different Fermat curve")
    order = element_order(rohrlich_lattice(N, base), degree_zero_coords(D, base))
    if order is None:
        raise AssertionError("relation lattice has infinite index; N * Z[cusps]^0 should be inside it")
    return order


def weighted_divisor(family: str, N: int) -> CuspDivisor:
    """D_A, D_B or D_C: sum of {i}[family_i]."""
    _check_n(N)
    return CuspDivisor(N, {(family, i): sym(i, N) for i in range(N)})


def D_A(N: int) -> CuspDivisor:
    return weighted_divisor("a", N)


def D_B(N: int) -> CuspDivisor:
    return weighted_divisor("b", N)


def D_C(N: int) -> CuspDivisor:
    return weighted_divisor("c", N)


def div_x_minus(j: int, N: int) -> CuspDivisor:
    """div(x - zeta^j) = N b_j - sum c."""
    return point("b", j, N).scale(N) - fiber_sum("c", N)


def div_y_minus(j: int, N: int) -> CuspDivisor:
    """div(y - zeta^j) = N a_j - sum c."""
    return point("a", j, N).scale(N) - fiber_sum("c", N)


def div_x_minus_y(j: int, N: int) -> CuspDivisor:
    """div(x - eps xi^j y) = N c_j - sum c."""
    return point("c", j, N).scale(N) - fiber_sum("c", N)


def div_fA(N: int) -> CuspDivisor:
    """Divisor of prod_i (-y + zeta^i)^{i}, assembled from div(y - zeta^i)."""
    out = CuspDivisor(N)
    for i in range(N):
        out = out + div_y_minus(i, N).scale(sym(i, N))
    return out


@dataclass
class Check:
    name: str
    degree: int
    order: int
    ok: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "degree": self.degree, "order": self.order, "ok": self.ok}


def known_divisor_checks(N: int) -> List[Check]:
    _check_n(N)
    out = []
    named = []
    for j in range(N):
        named += [(f"div(x-zeta^{j})", div_x_minus(j, N)),
                  (f"div(y-zeta^{j})", div_y_minus(j, N)),
                  (f"div(x-eps*xi^{j}*y)", div_x_minus_y(j, N))]
    named.append(("div(f_A)", div_fA(N)))
    named.append(("N*D_A - N*D_B", D_A(N).scale(N) - D_B(N).scale(N)))
    for name, D in named:
        o = class_order(D, N)
        out.append(Check(name, D.degree, o, D.degree == 0 and o == 1))
    fa_eq = div_fA(N) == D_A(N).scale(N)
    out.append(Check("div(f_A) == N*D_A", 0, 1, fa_eq))
    return out


def literal_reading_failure(N: int) -> dict:
    """What goes wrong if the fiber sums are read as sum[a_i] - [P]."""
    _check_n(N)
    D = fiber_sum("a", N) - point("a", 0, N)
    return {"divisor": "sum[a_i] - [P]", "degree": D.degree, "in_degree_zero": D.degree == 0}


def base_point_independent(N: int) -> bool:
    """The relation lattices for P = a_0, b_0, c_0 coincide in Z[cusps]."""
    _check_n(N)
    bases = [("a", 0), ("b", 0), ("c", 0)]
    spans = {}
    for base in bases:
        gens = [(point(f, j, N) - point(*base, N)).scale(N) for f in FAMILIES for j in range(N)]
        gens += rohrlich_generators(N, base)
        spans[base] = gens
    ref = ("a", 0)
    M = IntMatrix.from_columns([degree_zero_coords(D, ref) for D in spans[ref]], 3 * N - 1)
    for base in bases[1:]:
        other = IntMatrix.from_columns([degree_zero_coords(D, ref) for D in spans[base]], 3 * N - 1)
        for D in spans[base]:
            if solve_in_lattice(M, degree_zero_coords(D, ref)) is None:
                return False
        for D in spans[ref]:
            if solve_in_lattice(other, degree_zero_coords(D, ref)) is None:
                return False
    invs = {cuspidal_group(N, b) for b in bases}
    return len(invs) == 1


def report(N: int) -> dict:
    inv = cuspidal_group(N)
    return {
        "N": N,
        "invariants": inv.as_dict(),
        "expected": {"torsion": [N] * (3 * N - 7), "free_rank": 0},
        "order_DA": class_order(D_A(N), N),
        "DA_minus_DB_order": class_order(D_A(N) - D_B(N), N),
        "DA_minus_DC_order": class_order(D_A(N) - D_C(N), N),
        "base_point_independent": base_point_independent(N),
        "literal_fiber_sum": literal_reading_failure(N),
        "checks": [c.as_dict() for c in known_divisor_checks(N)],
    }
