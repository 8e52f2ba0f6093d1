"""Exact arithmetic in Z[mu_N] = Z[x] / Phi_N(x) and related identities."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .zlinalg import IntMatrix, determinant

Poly = List[int]  # integer coefficients, constant term first


def _trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_divmod_monic(p: Sequence[int], m: Sequence[int]) -> Tuple[Poly, Poly]:
    """Division by a monic integer polynomial."""
    m = _trim(m)
    if not m or m[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(p)
    dm = len(m) - 1
    q = [0] * max(len(r) - dm, 0)
    for k in range(len(r) - 1, dm - 1, -1):
        c = r[k]
        if c:
            q[k - dm] = c
            for j in range(dm + 1):
                r[k - dm + j] -= c * m[j]
    return _trim(q), _trim(r[:dm])


_PHI_CACHE: Dict[int, Poly] = {}


def cyclotomic_poly(N: int) -> Poly:
    if N < 1:
        raise ValueError("N must be >= 1")
    if N not in _PHI_CACHE:
        p = [-1] + [0] * (N - 1) + [1]
        for d in range(1, N):
            if N % d == 0:
                p, r = poly_divmod_monic(p, cyclotomic_poly(d))
                assert not r
        _PHI_CACHE[N] = p
    return _PHI_CACHE[N]


def euler_phi(N: int) -> int:
    return sum(1 for k in range(1, N + 1) if math.gcd(k, N) == 1)


class CycElement:
    """Residue class of an integer polynomial modulo Phi_N; zeta is the class of x."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Sequence[int] = ()):
        self.N = N
        phi = cyclotomic_poly(N)
        _, r = poly_divmod_monic(list(coeffs), phi)
        d = len(phi) - 1
        self.coeffs = tuple(r + [0] * (d - len(r)))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycElement":
        k %= N
        return cls(N, [0] * k + [1])

    @classmethod
    def const(cls, N: int, c: int) -> "CycElement":
        return cls(N, [c])

    def _coerce(self, o) -> "CycElement":
        if isinstance(o, int):
            return CycElement.const(self.N, o)
        if o.N != self.N:
            raise ValueError(f"mixing Z[mu_{self.N}] and Z[mu_{o.N}]")
        return o

    def __add__(self, o):
        o = self._coerce(o)
        return CycElement(self.N, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.N, [-a for a in self.coeffs])

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return CycElement(self.N, poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use exact_div for negative powers")
        out = CycElement.const(self.N, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o) -> bool:
        if isinstance(o, int):
            o = CycElement.const(self.N, o)
        return isinstance(o, CycElement) and self.N == o.N and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f"Cyc{self.N}({' + '.join(terms) or '0'})"

    def mult_matrix(self) -> IntMatrix:
        """Matrix of multiplication by self in the basis 1, zeta, ..., zeta^(d-1)."""
        d = len(self.coeffs)
        cols = [list((self * CycElement.zeta(self.N, k)).coeffs) for k in range(d)]
        return IntMatrix.from_columns(cols, d)

    def norm(self) -> int:
        return determinant(self.mult_matrix())

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def exact_div(self, o: "CycElement") -> "CycElement":
        """The q with q * o = self; raises ArithmeticError if q is not integral."""
        o = self._coerce(o)
        M = [[Fraction(v) for v in row] for row in o.mult_matrix().data]
        rhs = [Fraction(v) for v in self.coeffs]
        q = _solve_rational(M, rhs)
        if q is None or any(v.denominator != 1 for v in q):
            raise ArithmeticError(f"{self} is not divisible by {o} in Z[mu_{self.N}]")
        return CycElement(self.N, [int(v) for v in q])

    def conj(self, k: int) -> "CycElement":
        """Image under the automorphism zeta -> zeta^k."""
        out = CycElement.const(self.N, 0)
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + CycElement.zeta(self.N, j * k) * c
        return out


def _solve_rational(M: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    n = len(M)
    A = [row[:] + [rhs[i]] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [v * inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def cyc_add(u: CycElement, v: CycElement) -> CycElement:
    return u + v


def cyc_mul(u: CycElement, v: CycElement) -> CycElement:
    return u * v


def cyc_pow(u: CycElement, k: int) -> CycElement:
    return u ** k


def cyc_norm(u: CycElement) -> int:
    return u.norm()


class PrimeEmbedding:
    """Reduction Z[mu_N] -> F_p sending zeta to a root r of Phi_N mod p."""

    def __init__(self, N: int, p: int, r: int):
        if N % p == 0:
            raise ValueError(f"p={p} divides N={N}")
        if (p - 1) % N:
            raise ValueError(f"p={p} does not split completely in Q(mu_{N}); only p = 1 mod N is supported")
        if _poly_eval(cyclotomic_poly(N), r, p) != 0:
            raise ValueError(f"{r} is not a root of Phi_{N} mod {p}")
        self.N, self.p, self.r = N, p, r % p

    def __call__(self, u: CycElement) -> int:
        if u.N != self.N:
            raise ValueError("element from a different cyclotomic ring")
        return _poly_eval(u.coeffs, self.r, self.p)

    def __repr__(self) -> str:
        return f"PrimeEmbedding(N={self.N}, p={self.p}, zeta->{self.r})"


def _poly_eval(coeffs: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def cyclotomic_roots_mod(N: int, p: int) -> List[int]:
    phi = cyclotomic_poly(N)
    return [r for r in range(p) if _poly_eval(phi, r, p) == 0]


def embeddings(N: int, p: int) -> List[PrimeEmbedding]:
    return [PrimeEmbedding(N, p, r) for r in cyclotomic_roots_mod(N, p)]


def _check_odd(N: int) -> None:
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")


def fa_at_a0_forms(N: int) -> Dict[str, CycElement]:
    """The value of f_A at a_0 computed three ways."""
    _check_odd(N)
    z = lambda k: CycElement.zeta(N, k)
    h = (N - 1) // 2
    product = CycElement.const(N, 1)
    quotient = CycElement.const(N, 1)
    for i in range(1, h + 1):
        product = product * (-z(i)) ** i
        num = (z(i) - 1) ** i
        den = (z(-i) - 1) ** i
        quotient = quotient * num.exact_div(den)
    closed = z((N - 1) * (N + 1) * N // 24) * (-1) ** ((N * N - 1) // 8)
    return {"product": product, "quotient": quotient, "closed": closed}


def fa_at_a0(N: int) -> CycElement:
    forms = fa_at_a0_forms(N)
    val = forms["product"]
    if forms["quotient"] != val or forms["closed"] != val:
        raise AssertionError(f"f_A(a_0) forms disagree for N={N}: {forms}")
    if val ** 6 != 1:
        raise AssertionError(f"f_A(a_0) is not a sixth root of unity for N={N}")
    return val


def prime_factors(n: int) -> List[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def power_of(n: int, base: int) -> Optional[int]:
    """k with n = base^k, or None."""
    if n < 1 or base < 2:
        return 0 if n == 1 else None
    k = 0
    while n % base == 0:
        n //= base
        k += 1
    return k if n == 1 else None


def smoothness_unit(N: int) -> Tuple[CycElement, int]:
    """u = -prod_{j=2}^{(N-1)/2} (zeta - zeta^j)^j and |norm(u)|."""
    _check_odd(N)
    z = CycElement.zeta(N, 1)
    u = CycElement.const(N, -1)
    for j in range(2, (N - 1) // 2 + 1):
        u = u * (z - CycElement.zeta(N, j)) ** j
    n = abs(u.norm())
    if any(N % p for p in prime_factors(n)):
        raise AssertionError(f"norm {n} has a prime factor not dividing N={N}")
    return u, n


# Polynomials in Y with coefficients in Z[mu_N]


def _ypoly_mul(p: List[CycElement], q: List[CycElement]) -> List[CycElement]:
    N = p[0].N
    out = [CycElement.const(N, 0) for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _ypoly_add(p, q):
    N = (p or q)[0].N
    n = max(len(p), len(q))
    zero = CycElement.const(N, 0)
    return [(p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n)]


def _ypoly_eval(p: List[CycElement], y: int) -> CycElement:
    acc = CycElement.const(p[0].N, 0)
    for c in reversed(p):
        acc = acc * y + c
    return acc


def fivroot_coefficient() -> CycElement:
    z = lambda k: CycElement.zeta(5, k)
    return 2 - 2 * (z(2) + z(3)) - z(1) - z(4)


def fivroot_identity() -> dict:
    N = 5
    z = lambda k: CycElement.zeta(N, k)
    lin = lambda k: [z(k), CycElement.const(N, -1)]  # -Y + zeta^k
    lhs = _ypoly_add(
        _ypoly_mul(lin(1), _ypoly_mul(lin(2), lin(2))),
        _ypoly_mul(lin(4), _ypoly_mul(lin(3), lin(3))),
    )
    c = fivroot_coefficient()
    quad = [CycElement.const(N, 2), c, CycElement.const(N, 2)]
    rhs = _ypoly_mul([CycElement.const(N, 1), CycElement.const(N, -1)], quad)
    simplified = 4 + z(1) + z(4)
    return {
        "identity_holds": lhs == rhs,
        "c_equals_4_plus_zeta_plus_zeta4": c == simplified,
        "lhs_at_0": list(_ypoly_eval(lhs, 0).coeffs),
        "lhs_at_1": list(_ypoly_eval(lhs, 1).coeffs),
        "rhs_at_0": list(_ypoly_eval(rhs, 0).coeffs),
    }


def mod11_double_root() -> List[dict]:
    p = 11
    c = fivroot_coefficient()
    rows = []
    for emb in embeddings(5, p):
        cr = emb(c)
        poly = [2, cr, 2]
        double_one = cr == (-4) % p
        roots = [y for y in range(p) if _poly_eval(poly, y, p) == 0]
        rows.append({
            "root": emb.r,
            "c_mod_p": cr,
            "poly": poly,
            "discriminant": (cr * cr - 16) % p,
            "double_root_at_1": double_one,
            "roots_in_field": roots,
        })
    return rows


def galois_exponent_integral(N: int) -> bool:
    """N divides rho*{i/rho} - {i} for all i and all units rho mod N."""
    _check_odd(N)
    half = (N - 1) // 2

    def sym(i):
        r = i % N
        return r - N if r > half else r

    for rho in range(1, N):
        if math.gcd(rho, N) != 1:
            continue
        rinv = pow(rho, -1, N)
        for i in range(N):
            if (rho * sym(i * rinv) - sym(i)) % N:
                return False
    return True


def report(N: int, mod11: bool = False) -> dict:
    fa = fa_at_a0(N)
    u, norm = smoothness_unit(N)
    out = {
        "N": N,
        "fa_at_a0": list(fa.coeffs),
        "fa_sixth_power_is_one": fa ** 6 == 1,
        "smoothness_unit_norm": norm,
        "smoothness_norm_power_of_N": power_of(norm, N),
        "galois_exponent_integral": galois_exponent_integral(N),
    }
    if mod11:
        out["fivroot"] = fivroot_identity()
        out["mod11"] = mod11_double_root()
    return out
