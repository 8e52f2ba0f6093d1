"""Exact integer linear algebra: Smith form, kernels, lattice quotients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class IntMatrix:
    """Dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]], rows: Optional[int] = None, cols: Optional[int] = None):
        self.data = [list(map(int, r)) for r in data]
        self.rows = len(self.data) if rows is None else rows
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        self.cols = cols
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("inconsistent matrix dimensions")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        cols = list(columns)
        for c in cols:
            if len(c) != rows:
                raise ValueError("column of wrong length")
        return cls([[c[i] for c in cols] for i in range(rows)], rows, len(cols))

    def column(self, j: int) -> List[int]:
        return [r[j] for r in self.data]

    def columns(self) -> List[List[int]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.data, self.cols) if self.rows else IntMatrix.zeros(self.cols, 0)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        out = []
        for r in self.data:
            nz = [(k, v) for k, v in enumerate(r) if v]
            out.append([sum(v * col[k] for k, v in nz) for col in ocols])
        return IntMatrix(out, self.rows, other.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, r in enumerate(self.data) for j, v in enumerate(r) if i != j)

    def diagonal(self) -> List[int]:
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def to_json(self) -> str:
        return json.dumps({"rows": self.rows, "cols": self.cols, "data": self.data}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "IntMatrix":
        d = json.loads(text)
        return cls(d["data"], d["rows"], d["cols"])


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: Tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if any(d < 2 for d in t):
            raise ValueError("invariant factors must be >= 2")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"divisibility chain fails: {t}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def as_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        counts: dict = {}
        for d in self.torsion:
            counts[d] = counts.get(d, 0) + 1
        for d, k in counts.items():
            parts.append(f"(Z/{d})^{k}" if k > 1 else f"Z/{d}")
        return " + ".join(parts) or "0"


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _rdiv(a: int, b: int) -> int:
    """Quotient of a by b rounded to nearest, for small remainders."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else 0
    return q


def snf(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (D, U, V) with U A V = D.

    Pivots on entries of least absolute value; the divisibility chain is
    restored by folding an offending row into the pivot row.
    """
    m, n = A.rows, A.cols
    D = [r[:] for r in A.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    # V is kept transposed so column operations are row operations on Vt
    Vt = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_axpy(M, dst, src, q):
        if q:
            rs, rd = M[src], M[dst]
            for k, v in enumerate(rs):
                if v:
                    rd[k] -= q * v

    def col_axpy(dst, src, q):
        # column dst -= q * column src
        if q:
            for r in D:
                if r[src]:
                    r[dst] -= q * r[src]
            row_axpy(Vt, dst, src, q)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for r in D:
                r[i], r[j] = r[j], r[i]
            Vt[i], Vt[j] = Vt[j], Vt[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = _rdiv(D[i][t], p)
                    row_axpy(D, i, t, q)
                    row_axpy(U, i, t, q)
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_axpy(j, t, _rdiv(D[t][j], p))
                    if D[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t onto the pivot
                cand = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                cand += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, m):
                row = D[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # row t += row bad, then eliminate again
            row_axpy(D, t, bad, -1)
            row_axpy(U, t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]

    V = [[Vt[j][i] for j in range(n)] for i in range(n)]
    return IntMatrix(D, m, n), IntMatrix(U, m, m), IntMatrix(V, n, n)


def smith_diagonal(A: IntMatrix) -> List[int]:
    D, _, _ = snf(A)
    return [d for d in D.diagonal() if d]


def column_hnf(A: IntMatrix, track_inverse: bool = True):
    """Column echelon form H = A V with V unimodular.

    Returns (H_columns, V_columns, Vinv_rows, pivot_rows) where the first
    ``len(pivot_rows)`` columns of H are the nonzero ones.  ``Vinv_rows`` is
    None when ``track_inverse`` is false.
    """
    m, n = A.rows, A.cols
    H = A.columns()
    V = [[int(i == j) for i in range(n)] for j in range(n)]  # V[j] = column j
    Vi = [[int(i == j) for j in range(n)] for i in range(n)] if track_inverse else None  # rows

    def comb(p, j, s, t, u, w):
        # new col p = s*p + t*j ; new col j = u*p + w*j  (det s*w - t*u = 1)
        for M in (H, V):
            cp, cj = M[p], M[j]
            M[p] = [s * x + t * y for x, y in zip(cp, cj)]
            M[j] = [u * x + w * y for x, y in zip(cp, cj)]
        if Vi is not None:
            # inverse acts on rows p, j by [[w, -u], [-t, s]]
            rp, rj = Vi[p], Vi[j]
            Vi[p] = [w * x - u * y for x, y in zip(rp, rj)]
            Vi[j] = [-t * x + s * y for x, y in zip(rp, rj)]

    def axpy(dst, src, q):
        # col dst -= q * col src ; inverse: row src += q * row dst
        if not q:
            return
        for M in (H, V):
            cs, cd = M[src], M[dst]
            for k, v in enumerate(cs):
                if v:
                    cd[k] -= q * v
        if Vi is not None:
            rs, rd = Vi[src], Vi[dst]
            for k, v in enumerate(rd):
                if v:
                    rs[k] += q * v

    def swap(i, j):
        if i != j:
            H[i], H[j] = H[j], H[i]
            V[i], V[j] = V[j], V[i]
            if Vi is not None:
                Vi[i], Vi[j] = Vi[j], Vi[i]

    pivots = []
    p = 0
    for r in range(m):
        if p >= n:
            break
        nz = [j for j in range(p, n) if H[j][r]]
        if not nz:
            continue
        k = min(nz, key=lambda j: abs(H[j][r]))
        swap(p, k)
        for j in range(p + 1, n):
            b = H[j][r]
            if not b:
                continue
            a = H[p][r]
            if b % a == 0:
                axpy(j, p, b // a)
            else:
                g, s, t = _xgcd(a, b)
                comb(p, j, s, t, -b // g, a // g)
        if H[p][r] < 0:
            H[p] = [-v for v in H[p]]
            V[p] = [-v for v in V[p]]
            if Vi is not None:
                Vi[p] = [-v for v in Vi[p]]
        # reduce earlier pivot columns for smaller entries
        piv = H[p][r]
        for j in range(p):
            q = H[j][r] // piv
            axpy(j, p, q)
        pivots.append(r)
        p += 1
    return H, V, Vi, pivots


def kernel_basis(A: IntMatrix, with_projection: bool = False):
    """Saturated Z-basis of ker A, as the columns of a matrix.

    With ``with_projection`` also returns P (k x n) such that P K = I and
    P v gives the coordinates of any v in ker A.
    """
    _, V, Vi, pivots = column_hnf(A, track_inverse=with_projection)
    r = len(pivots)
    for j in range(r, A.cols):
        # sign convention: first nonzero entry of each basis vector positive
        if next(v for v in V[j] if v) < 0:
            V[j] = [-v for v in V[j]]
            if Vi is not None:
                Vi[j] = [-v for v in Vi[j]]
    K = IntMatrix.from_columns(V[r:], A.cols)
    if not with_projection:
        return K
    P = IntMatrix(Vi[r:], A.cols - r, A.cols)
    return K, P


def quotient_invariants(sub: IntMatrix, ambient_rank: int) -> AbelianInvariants:
    """Invariants of Z^ambient_rank modulo the column span of ``sub``."""
    if sub.rows != ambient_rank:
        raise ValueError(f"sub has {sub.rows} rows, expected {ambient_rank}")
    if sub.cols == 0 or ambient_rank == 0:
        return AbelianInvariants((), ambient_rank)
    diag = smith_diagonal(sub)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion, ambient_rank - len(diag))


def rank(A: IntMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    M = [r[:] for r in A.data]
    m, n = A.rows, A.cols
    rk = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(rk, m) if M[i][c]), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        for i in range(rk + 1, m):
            for j in range(c + 1, n):
                M[i][j] = (M[i][j] * M[rk][c] - M[i][c] * M[rk][j]) // prev
            M[i][c] = 0
        prev = M[rk][c]
        rk += 1
        if rk == m:
            break
    return rk


def determinant(A: IntMatrix) -> int:
    """Bareiss determinant of a square matrix."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    M = [r[:] for r in A.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def solve_in_lattice(basis: IntMatrix, v: Sequence[int]) -> Optional[List[int]]:
    """Integer x with basis @ x = v, or None if v is outside the column span."""
    D, U, V = snf(basis)
    uv = [sum(a * b for a, b in zip(row, v)) for row in U.data]
    y = []
    for i, val in enumerate(uv):
        d = D.data[i][i] if i < min(D.rows, D.cols) else 0
        if d == 0:
            if val:
                return None
            if i < D.cols:
                y.append(0)
            continue
        if val % d:
            return None
        y.append(val // d)
    y += [0] * (D.cols - len(y))
    return [sum(V.data[i][j] * y[j] for j in range(D.cols)) for i in range(D.cols)]


def element_order(gens: IntMatrix, v: Sequence[int]) -> Optional[int]:
    """Order of v in Z^n / span(gens); None if infinite.

    With U gens V = D, the class of v has order lcm over i of d_i / gcd(d_i, (Uv)_i),
    and is infinite if some (Uv)_i with d_i = 0 is nonzero.
    """
    import math

    D, U, _ = snf(gens)
    uv = [sum(a * b for a, b in zip(row, v)) for row in U.data]
    order = 1
    for i, val in enumerate(uv):
        d = D.data[i][i] if i < min(D.rows, D.cols) else 0
        if d == 0:
            if val:
                return None
            continue
        k = d // math.gcd(d, val)
        order = order * k // math.gcd(order, k)
    return order
