"""The ten acceptance criteria, one test each.

Every test prints a single "ACnn PASS|FAIL ..." line; the lines are also
repeated in the pytest terminal summary.
"""

import random
import time

from heiscurve.words import A, B, C, random_word, verify_conjugation_expansion, verify_phi_relation

LINES = []


def report(tag, ok, what):
    line = f"{tag} {'PASS' if ok else 'FAIL'} {what}"
    print(line)
    LINES.append(line)
    assert ok, line


def test_ac01_genus_engine():
    from heiscurve.curves import genus_closed_form, genus_prime, genus_xpp, rh_genus, valid_triples
    from heiscurve.heisenberg import HeisParams, regular_action

    bad = [t for t in valid_triples(512) if t[0] * t[1] * t[2] <= 512
           and rh_genus(regular_action(HeisParams(*t))).genus != genus_closed_form(*t)]
    fermat = all(genus_closed_form(n, n, 1) == (n - 1) * (n - 2) // 2 for n in range(1, 11))
    vals = (genus_prime(5), genus_prime(3), genus_xpp(5))
    report("AC01", not bad and fermat and vals == (26, 1, 626),
           f"genus engine: {len(bad)} mismatches up to MNL=512, g'5,g'3,g''5 = {vals}")


def test_ac02_small_genus_classification():
    from heiscurve.curves import classify_small_genus

    g0 = set(classify_small_genus(12, 0))
    g1 = set(classify_small_genus(12, 1))
    want0 = {(n, 1, 1) for n in range(1, 13)} | {(1, m, 1) for m in range(1, 13)} | {(2, 2, 1), (2, 2, 2)}
    want1 = {(3, 2, 1), (2, 3, 1), (4, 2, 1), (2, 4, 1), (4, 2, 2), (2, 4, 2), (3, 3, 1), (3, 3, 3)}
    report("AC02", g0 == want0 and g1 == want1, f"classification: {len(g0)} genus-0, {len(g1)} genus-1 triples")


def test_ac03_homology():
    from heiscurve.curves import genus_prime
    from heiscurve.homology import boundary_matrix, closed_form_check, dual_boundary_matrix, h1_report
    from heiscurve.nilpotent import LevelParams
    from heiscurve.zlinalg import rank

    ok = True
    ranks = {}
    for N in (2, 3, 4, 5, 7):
        t0 = time.perf_counter()
        rep = h1_report(N)
        elapsed = time.perf_counter() - t0
        ranks[N] = rep.invariants.free_rank
        ok &= rep.invariants.is_free and rep.invariants.free_rank == 2 * genus_prime(N)
        if N == 7:
            ok &= elapsed < 60
    for N in (2, 3, 4, 5):
        delta, dual = boundary_matrix(N), dual_boundary_matrix(N)
        ok &= (delta @ dual).is_zero()
        ok &= rank(delta) == 2 * N * LevelParams.of(N).Np - 1
        ok &= closed_form_check(N)["invariants_agree"]
    report("AC03", ok, f"homology: free ranks {ranks}, boundary checks and closed-form lattice agree")


def test_ac04_cuspidal_group():
    from heiscurve.cuspidal import D_A, D_B, D_C, base_point_independent, class_order, cuspidal_group

    ok = True
    for N in (3, 5, 7, 9):
        inv = cuspidal_group(N)
        ok &= inv.torsion == (N,) * (3 * N - 7) and inv.free_rank == 0
        ok &= class_order(D_A(N), N) == N
        ok &= class_order(D_A(N) - D_B(N), N) == 1 and class_order(D_A(N) - D_C(N), N) == 1
        ok &= base_point_independent(N)
    report("AC04", ok, "cuspidal group (Z/N)^(3N-7) for N in 3,5,7,9; D_A = D_B = D_C of order N")


def test_ac05_heisenberg_exponents():
    import math

    from heiscurve.curves import valid_triples
    from heiscurve.heisenberg import HeisParams, exponent_closed_form, h_exponent, h_from_word, heisenberg_level
    from heiscurve.nilpotent import Level, membership

    bad = []
    for M, N, L in valid_triples(12):
        if M * N // math.gcd(M, N) <= 12:
            p = HeisParams(M, N, L)
            if h_exponent(p) != exponent_closed_form(p):
                bad.append((M, N, L))
    rng = random.Random(2024)
    mismatches = 0
    kernel_hits = 0
    for N in (3, 4, 5):
        p = heisenberg_level(N)
        for k in range(500):
            w = random_word(rng, rng.randint(0, 12))
            if k % 3 == 1:
                w = w ** N
            elif k % 3 == 2:
                g = random_word(rng, rng.randint(0, 6))
                w = g * C ** N * g.inverse() * A ** (N * rng.randint(-1, 1))
            a = h_from_word(w, p).is_identity()
            b = membership(w, N) >= Level.PHI_PRIME
            mismatches += a != b
            kernel_hits += a
    report("AC05", not bad and mismatches == 0,
           f"exponents: {len(bad)} mismatches; kernel coincidence on 1500 words ({kernel_hits} in kernel)")


def test_ac06_free_group_identities():
    from heiscurve.nilpotent import Level, LevelParams, barpsi, membership, psi

    ok = all(verify_phi_relation(N) and verify_conjugation_expansion(N) for N in range(1, 7))
    for i in range(-5, 6):
        for j in range(-5, 6):
            for k in range(-5, 6):
                w = A ** i * B ** j * C ** k * B ** (-j) * A ** (-i)
                ok &= psi(w) == (-k * i, -k * j, k)
    for N in range(1, 10, 2):
        ok &= all(v % LevelParams.of(N).Np == 0 for v in barpsi(A * B ** N * A.inverse() * B ** (-N), N))
    rng = random.Random(6)
    for N in (3, 5):
        for _ in range(200):
            ok &= membership(random_word(rng, rng.randint(1, 12)) ** N, N) == Level.PHI_DOUBLE_PRIME
    report("AC06", ok, "free-group identities, psi conjugation formula, gamma^N in Phi''_N")


def test_ac07_hall_petrescu():
    from heiscurve.nilpotent import verify_hall_petrescu

    rep = verify_hall_petrescu(50)
    power = rep["power"]
    # the power display is either confirmed or reported with its true exponents
    reported = power["holds"] or bool(power.get("alpha_prime_exponent")) and bool(power.get("beta_prime_exponent"))
    status = "holds" if power["holds"] else "documented discrepancy"
    report("AC07", rep["betanalpha"]["holds"] and reported,
           f"Hall-Petrescu: commutation identity holds to n=50; power display {status} "
           f"(alpha' exponent {power['alpha_prime_exponent']}, beta' exponent {power['beta_prime_exponent']})")


def test_ac08_cyclotomic():
    from heiscurve.cyclotomic import fa_at_a0, fa_at_a0_forms, fivroot_identity, mod11_double_root, power_of, smoothness_unit

    ok = True
    for N in range(3, 16, 2):
        forms = fa_at_a0_forms(N)
        ok &= forms["product"] == forms["closed"] == forms["quotient"] and fa_at_a0(N) ** 6 == 1
    for N in (3, 5, 7):
        ok &= power_of(smoothness_unit(N)[1], N) is not None
    ok &= fivroot_identity()["identity_holds"]
    rows = mod11_double_root()
    ok &= len(rows) == 4 and any(r["double_root_at_1"] for r in rows)
    report("AC08", ok, "cyclotomic: f_A(a_0) sixth roots of unity, unit norms are powers of N, mod-11 table")


def test_ac09_psl2():
    from heiscurve.curves import Verdict, congruence_refutation
    from heiscurve.heisenberg import h_coset_action, heisenberg_level, regular_action
    from heiscurve.psl2 import D3, derived_closure, gamma2_image, phi_image_mod3

    ok = derived_closure(gamma2_image(3)) == D3() and len(D3()) == 4
    ok &= all((len(phi_image_mod3(N)) == 4) == (N % 3 == 0) for N in range(1, 10))
    ok &= len(gamma2_image(5)) == 60
    p = heisenberg_level(3)
    ok &= congruence_refutation(h_coset_action(p, [p.z()]), 9).verdict is Verdict.NOT_CONGRUENCE
    ok &= congruence_refutation(regular_action(p), 27).verdict is Verdict.NOT_CONGRUENCE
    report("AC09", ok, "PSL2: derived image mod 3 is D3, Phi_3 and Phi'_3 are not congruence")


def test_ac10_dessins():
    from heiscurve.curves import rh_genus
    from heiscurve.dessin import build_dessin, dessin_genus, export_dot, export_json, from_json, heisenberg_dessin
    from heiscurve.heisenberg import HeisParams, regular_action
    from heiscurve.psl2 import D3, coset_action

    d = heisenberg_dessin(3)
    ok = d.num_edges == 27 and len(d.black_vertices()) + len(d.white_vertices()) == 18
    ok &= len(d.faces()) == 9 and dessin_genus(d) == 1
    ok &= d.vertex_degrees() == {"black": [3] * 9, "white": [3] * 9}
    acts = [regular_action(HeisParams(*t)) for t in valid_small()] + [coset_action(D3(), 3)]
    ok &= all(dessin_genus(build_dessin(a)) == rh_genus(a).genus for a in acts)
    back = from_json(export_json(d))
    ok &= back == d and export_dot(back) == export_dot(d)
    report("AC10", ok, f"dessins: X'_3 figure, genus agreement on {len(acts)} actions, DOT/JSON round trip")


def valid_small():
    from heiscurve.curves import valid_triples

    return [t for t in valid_triples(8) if t[0] * t[1] * t[2] <= 128]
