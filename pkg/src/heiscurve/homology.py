"""Modular-symbol presentation of H_1(X'_N; Z).

Edges are the elements g = (a, c, b) of H = H_{N,N,N'}; edge g stands for the
modular symbol {g 0, g oo}.  Cusps above oo, 0 and 1 are the right cosets
g<x>, g<y> and g<x y^-1>.  Everything is computed from group multiplication
and orbit enumeration; the closed-form labels are only cross-checked.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from .actions import orbits, perm_compose, perm_inverse
from .curves import genus_prime
from .heisenberg import heisenberg_level, regular_action
from .zlinalg import AbelianInvariants, IntMatrix, kernel_basis, quotient_invariants, rank

GUARD_LIMIT = 10 ** 5


class GuardError(RuntimeError):
    """Input too large for the default size guard."""


def check_guard(N: int, force: bool = False) -> None:
    limit = int(os.environ.get("HEISCURVE_GUARD", GUARD_LIMIT))
    if not force and N ** 3 > limit:
        raise GuardError(f"N^3 = {N ** 3} exceeds the guard {limit}; pass --force or raise HEISCURVE_GUARD")


@dataclass
class CuspSets:
    N: int
    Np: int
    inf: List[List[int]]
    zero: List[List[int]]
    one: List[List[int]]
    edge_to_inf: List[int] = field(default_factory=list)
    edge_to_zero: List[int] = field(default_factory=list)
    edge_to_one: List[int] = field(default_factory=list)

    def labels(self, fiber: str) -> List[Tuple[int, int]]:
        """Closed-form label of each cusp in a fiber, read off a representative edge."""
        N, Np = self.N, self.Np
        out = []
        for orbit in getattr(self, fiber):
            a, c, b = edge_coords(orbit[0], N, Np)
            if fiber == "inf":
                out.append((b % N, (c + a * b) % Np))
            elif fiber == "zero":
                out.append((a % N, c % Np))
            else:
                out.append(((a + b) % N, (c - b * (b + 1) // 2) % Np))
        return out


def edge_index(a: int, c: int, b: int, N: int, Np: int) -> int:
    return ((a % N) * Np + c % Np) * N + b % N


def edge_coords(i: int, N: int, Np: int) -> Tuple[int, int, int]:
    ac, b = divmod(i, N)
    a, c = divmod(ac, Np)
    return a, c, b


def _lookup(orbs: List[List[int]], degree: int) -> List[int]:
    where = [0] * degree
    for k, orb in enumerate(orbs):
        for i in orb:
            where[i] = k
    return where


def cusp_sets(N: int) -> CuspSets:
    params = heisenberg_level(N)
    act = regular_action(params)
    d = act.degree
    # g -> g x y^-1 generates the right cosets of <x y^-1>
    xyinv = perm_compose(list(act.x), perm_inverse(act.y))
    inf = sorted(orbits(d, [act.x]))
    zero = sorted(orbits(d, [act.y]))
    one = sorted(orbits(d, [xyinv]))
    cs = CuspSets(N, params.L, inf, zero, one)
    cs.edge_to_inf = _lookup(inf, d)
    cs.edge_to_zero = _lookup(zero, d)
    cs.edge_to_one = _lookup(one, d)
    return cs


def boundary_matrix(N: int, cusps: CuspSets = None) -> IntMatrix:
    """delta_N: rows are the cusps above oo then above 0, columns the edges."""
    cs = cusps or cusp_sets(N)
    d = N * N * cs.Np
    n_inf = len(cs.inf)
    rows = [[0] * d for _ in range(n_inf + len(cs.zero))]
    for g in range(d):
        rows[cs.edge_to_inf[g]][g] += 1
        rows[n_inf + cs.edge_to_zero[g]][g] -= 1
    return IntMatrix(rows, len(rows), d)


def dual_boundary_matrix(N: int, cusps: CuspSets = None) -> IntMatrix:
    """delta*_N: one column per cusp above 1, the sum over its edge cycle of [h y] - [h]."""
    cs = cusps or cusp_sets(N)
    Np = cs.Np
    d = N * N * Np
    cols = []
    for orbit in cs.one:
        col = [0] * d
        for h in orbit:
            a, c, b = edge_coords(h, N, Np)
            col[edge_index(a, c, b + 1, N, Np)] += 1
            col[h] -= 1
        cols.append(col)
    return IntMatrix.from_columns(cols, d)


def _invariants_from(delta: IntMatrix, dual: IntMatrix) -> Tuple[AbelianInvariants, int, int]:
    K, P = kernel_basis(delta, with_projection=True)
    coords = P @ dual
    if not (K @ coords) == dual:
        raise AssertionError("dual boundary columns do not lie in the kernel lattice")
    inv = quotient_invariants(coords, K.cols)
    return inv, K.cols, rank(coords)


@dataclass
class HomologyReport:
    N: int
    ambient_dim: int
    rank_S: int
    rank_R: int
    invariants: AbelianInvariants
    expected_rank: int

    @property
    def genus_check(self) -> bool:
        return self.invariants.is_free and self.invariants.free_rank == self.expected_rank

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "ambient_dim": self.ambient_dim,
            "rank_S": self.rank_S,
            "rank_R": self.rank_R,
            "invariants": self.invariants.as_dict(),
            "genus_check": self.genus_check,
        }


def h1_report(N: int, force: bool = False) -> HomologyReport:
    if N < 1:
        raise ValueError("N must be >= 1")
    check_guard(N, force)
    cs = cusp_sets(N)
    delta = boundary_matrix(N, cs)
    dual = dual_boundary_matrix(N, cs)
    inv, rank_s, rank_r = _invariants_from(delta, dual)
    return HomologyReport(N, delta.cols, rank_s, rank_r, inv, 2 * genus_prime(N))


def h1_invariants(N: int, force: bool = False) -> AbelianInvariants:
    return h1_report(N, force).invariants


# The linear conditions as printed, in label coordinates [a, b, c]


def literal_conditions(N: int, Np: int) -> IntMatrix:
    """Rows: sum_b lam[a,b,c] for each (a,c), then sum_a lam[a,b,c+ab] for each (b,c)."""
    d = N * N * Np
    rows = []
    for a in range(N):
        for c in range(Np):
            row = [0] * d
            for b in range(N):
                row[edge_index(a, c, b, N, Np)] += 1
            rows.append(row)
    for b in range(N):
        for c in range(Np):
            row = [0] * d
            for a in range(N):
                row[edge_index(a, c + a * b, b, N, Np)] += 1
            rows.append(row)
    return IntMatrix(rows, len(rows), d)


def literal_generators(N: int, Np: int) -> IntMatrix:
    """Columns e_{c,d} = sum_{a+b=d} [a, b+1, c-b(b+1)/2] - [a, b, c-b(b+1)/2]."""
    d_all = N * N * Np
    cols = []
    for dd in range(N):
        for c in range(Np):
            col = [0] * d_all
            for b in range(N):
                a = dd - b
                cc = c - b * (b + 1) // 2
                col[edge_index(a, cc, b + 1, N, Np)] += 1
                col[edge_index(a, cc, b, N, Np)] -= 1
            cols.append(col)
    return IntMatrix.from_columns(cols, d_all)


Relabel = Callable[[int, int, int], Tuple[int, int, int]]


def _relabelings(Np: int) -> Dict[str, Relabel]:
    out = {}
    for s in (1, -1):
        for t in (0, 1, -1):
            name = ("c" if s == 1 else "-c") + {0: "", 1: "+ab", -1: "-ab"}[t]
            out[name] = lambda a, b, c, s=s, t=t: (a, s * c + t * a * b, b)
    return out


def _permute_rows(M: IntMatrix, perm: List[int]) -> IntMatrix:
    """Rows of the result: row perm[i] of the result is row i of M."""
    rows = [None] * M.rows
    for i, r in enumerate(M.data):
        rows[perm[i]] = r
    return IntMatrix(rows, M.rows, M.cols)


def closed_form_check(N: int, force: bool = False) -> dict:
    """Compare the printed S_N, R_N with the group-multiplication versions."""
    check_guard(N, force)
    cs = cusp_sets(N)
    Np = cs.Np
    d = N * N * Np
    delta = boundary_matrix(N, cs)
    dual = dual_boundary_matrix(N, cs)
    group_inv, _, _ = _invariants_from(delta, dual)

    cond = literal_conditions(N, Np)
    gens = literal_generators(N, Np)
    Klit, Plit = kernel_basis(cond, with_projection=True)
    r_in_s = Klit @ (Plit @ gens) == gens
    lit_inv = quotient_invariants(Plit @ gens, Klit.cols) if r_in_s else None

    dual_cols = sorted(tuple(c) for c in dual.columns())
    matching = []
    for name, f in _relabelings(Np).items():
        perm = []
        for i in range(d):
            a, c, b = edge_coords(i, N, Np)
            a2, c2, b2 = f(a, b, c)
            perm.append(edge_index(a2, c2, b2, N, Np))
        if sorted(perm) != list(range(d)):
            continue
        # move literal lattices into edge coordinates
        Kmoved = _permute_rows(Klit, perm)
        gmoved = _permute_rows(gens, perm)
        same_s = (delta @ Kmoved).is_zero() and Klit.cols == d - rank(delta)
        same_r = sorted(tuple(c) for c in gmoved.columns()) == dual_cols
        if same_s and same_r:
            matching.append(name)
    return {
        "N": N,
        "group_invariants": group_inv.as_dict(),
        "literal_R_in_S": r_in_s,
        "literal_invariants": lit_inv.as_dict() if lit_inv else None,
        "invariants_agree": lit_inv == group_inv,
        "identity_matches": "c" in matching,
        "matching_relabelings": matching,
    }
