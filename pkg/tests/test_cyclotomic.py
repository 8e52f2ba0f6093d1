import pytest
import sympy
from hypothesis import given, settings, strategies as st

from heiscurve.cyclotomic import (
    CycElement, PrimeEmbedding, cyclotomic_poly, cyclotomic_roots_mod, embeddings, euler_phi,
    fa_at_a0, fa_at_a0_forms, fivroot_identity, galois_exponent_integral, mod11_double_root,
    poly_divmod_monic, poly_mul, power_of, prime_factors, report, smoothness_unit,
)

X = sympy.Symbol("X")


def sympy_norm(u):
    f = sympy.Poly(list(reversed(u.coeffs)) or [0], X)
    return int(sympy.resultant(sympy.cyclotomic_poly(u.N, X), f.as_expr(), X))


def elements(N):
    d = euler_phi(N)
    return st.lists(st.integers(-4, 4), min_size=d, max_size=d).map(lambda c: CycElement(N, c))


def test_cyclotomic_poly_matches_sympy():
    for N in range(1, 31):
        ours = cyclotomic_poly(N)
        theirs = sympy.Poly(sympy.cyclotomic_poly(N, X), X).all_coeffs()
        assert ours == [int(c) for c in reversed(theirs)]
        assert euler_phi(N) == sympy.totient(N)


def test_poly_helpers():
    assert poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
    q, r = poly_divmod_monic([-1, 0, 0, 1], [-1, 1])
    assert q == [1, 1, 1] and r == []


@pytest.mark.parametrize("N", [3, 5, 7, 8, 9, 12])
def test_norm_matches_resultant(N):
    z = CycElement.zeta(N, 1)
    for u in (z - 1, z + 2, z ** 2 - z + 3, 1 + z + z ** 3):
        assert u.norm() == sympy_norm(u)


@given(st.sampled_from([5, 7, 9]).flatmap(lambda N: st.tuples(elements(N), elements(N))))
@settings(max_examples=60, deadline=None)
def test_norm_multiplicative(pair):
    u, v = pair
    assert (u * v).norm() == u.norm() * v.norm()


@given(st.sampled_from([3, 5, 7]).flatmap(lambda N: st.tuples(elements(N), elements(N), elements(N))))
@settings(max_examples=60, deadline=None)
def test_ring_axioms(triple):
    u, v, w = triple
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert u * v == v * u
    assert u - u == 0


@given(st.sampled_from([(5, 11), (10, 11), (3, 31), (5, 31), (6, 31), (15, 31)]).flatmap(
    lambda t: st.tuples(st.just(t), elements(t[0]), elements(t[0]))))
@settings(max_examples=80, deadline=None)
def test_embedding_is_homomorphism(data):
    (N, p), u, v = data
    for emb in embeddings(N, p):
        assert emb(u * v) == emb(u) * emb(v) % p
        assert emb(u + v) == (emb(u) + emb(v)) % p
        assert pow(emb(CycElement.zeta(N, 1)), N, p) == 1


def test_embedding_roots():
    assert sorted(cyclotomic_roots_mod(5, 11)) == [3, 4, 5, 9]
    assert len(embeddings(5, 31)) == 4
    with pytest.raises(ValueError):
        PrimeEmbedding(5, 7, 2)
    with pytest.raises(ValueError):
        PrimeEmbedding(5, 11, 2)


def test_exact_division():
    z = CycElement.zeta(7, 1)
    u = (z - 1) * (z ** 3 + 2)
    assert u.exact_div(z - 1) == z ** 3 + 2
    with pytest.raises(ArithmeticError):
        CycElement.const(7, 1).exact_div(CycElement.const(7, 2))
    # cyclotomic units divide each other
    assert (z ** 3 - 1).exact_div(z - 1) == 1 + z + z ** 2


def test_conj_is_automorphism():
    z = CycElement.zeta(9, 1)
    u, v = z + 3, z ** 4 - z
    for k in (2, 4, 5, 7):
        assert (u * v).conj(k) == u.conj(k) * v.conj(k)


def test_fa_at_a0_values():
    z3 = CycElement.zeta(3, 1)
    assert fa_at_a0(3) == -z3
    assert fa_at_a0(5) == -1
    assert fa_at_a0(7) == 1
    for N in range(3, 16, 2):
        forms = fa_at_a0_forms(N)
        assert forms["product"] == forms["quotient"] == forms["closed"]
        assert fa_at_a0(N) ** 6 == 1


def test_smoothness_unit():
    norms = {N: smoothness_unit(N)[1] for N in (3, 5, 7, 9)}
    assert norms == {3: 1, 5: 25, 7: 7 ** 5, 9: 3 ** 17}
    assert power_of(norms[7], 7) == 5
    assert power_of(norms[9], 9) is None
    for N in (5, 7):
        u, n = smoothness_unit(N)
        assert abs(sympy_norm(u)) == n


def test_fivroot_and_mod11():
    res = fivroot_identity()
    assert res["identity_holds"] and res["c_equals_4_plus_zeta_plus_zeta4"]
    rows = mod11_double_root()
    assert sorted(r["root"] for r in rows) == [3, 4, 5, 9]
    doubles = sorted(r["root"] for r in rows if r["double_root_at_1"])
    assert doubles == [5, 9]
    for r in rows:
        if r["double_root_at_1"]:
            assert r["c_mod_p"] == 7 and r["discriminant"] == 0 and r["roots_in_field"] == [1]
        else:
            assert r["poly"] == [2, 0, 2]


def test_galois_integrality():
    for N in range(3, 16, 2):
        assert galois_exponent_integral(N)


def test_helpers_and_report():
    assert prime_factors(360) == [2, 3, 5]
    assert power_of(1, 5) == 0
    assert power_of(125, 5) == 3
    rep = report(5, mod11=True)
    assert rep["smoothness_norm_power_of_N"] == 2
    assert len(rep["mod11"]) == 4
    with pytest.raises(ValueError):
        fa_at_a0(4)
