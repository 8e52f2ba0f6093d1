import json

import pytest
from hypothesis import given, settings, strategies as st

from heiscurve.actions import PermAction
from heiscurve.curves import (
    CurveError, Verdict, classify_small_genus, congruence_refutation, cusp_widths_and_level,
    genus_closed_form, genus_prime, genus_xpp, genus_xpp_displayed, rh_genus, valid_triples,
)
from heiscurve.heisenberg import HeisParams, h_coset_action, heisenberg_level, regular_action
from heiscurve.nilpotent import double_prime_action


def test_closed_form_matches_riemann_hurwitz():
    for t in valid_triples(12):
        if t[0] * t[1] * t[2] <= 216:
            assert rh_genus(regular_action(HeisParams(*t))).genus == genus_closed_form(*t), t


def test_fermat_curves():
    for n in range(1, 11):
        assert genus_closed_form(n, n, 1) == (n - 1) * (n - 2) // 2


def test_genus_prime_values():
    # frozen from the regular-action Riemann-Hurwitz count
    assert [genus_prime(n) for n in range(1, 11)] == [0, 0, 1, 5, 26, 28, 99, 81, 244, 176]
    for n in range(2, 8):
        assert rh_genus(regular_action(heisenberg_level(n))).genus == genus_prime(n)


def test_genus_xpp():
    assert genus_xpp(5) == 626
    assert genus_xpp(3) == 1
    for n in (3, 5):
        assert rh_genus(double_prime_action(n)).genus == genus_xpp(n)


def test_genus_xpp_display_differs():
    # N''^2 g' - N^2 + 1 only agrees with the covering count when N'' = N
    assert genus_xpp_displayed(5) == genus_xpp(5)
    assert genus_xpp_displayed(3) == -7
    assert genus_xpp_displayed(9) == 2116 != genus_xpp(9) == 2188


def test_classification():
    g0 = set(classify_small_genus(12, 0))
    expected0 = {(n, 1, 1) for n in range(1, 13)} | {(1, m, 1) for m in range(1, 13)} | {(2, 2, 1), (2, 2, 2)}
    assert g0 == expected0
    g1 = set(classify_small_genus(12, 1))
    assert g1 == {(3, 2, 1), (2, 3, 1), (4, 2, 1), (2, 4, 1), (4, 2, 2), (2, 4, 2), (3, 3, 1), (3, 3, 3)}
    with pytest.raises(ValueError):
        classify_small_genus(0, 0)


def test_curve_data_json():
    data = rh_genus(regular_action(heisenberg_level(3)))
    assert data.degree == 27 and data.genus == 1 and data.cusp_count == 27
    parsed = json.loads(data.to_json())
    assert list(parsed) == sorted(parsed)
    assert parsed["cusps"]["one"] == [3] * 9


def test_intransitive_rejected():
    act = PermAction((0, 1), (0, 1))
    with pytest.raises(CurveError):
        rh_genus(act)
    with pytest.raises(CurveError):
        cusp_widths_and_level(act)


@st.composite
def transitive_actions(draw):
    n = draw(st.integers(1, 9))
    x = draw(st.permutations(range(n)))
    y = draw(st.permutations(range(n)))
    act = PermAction(tuple(x), tuple(y))
    if not act.is_transitive():
        # add an n-cycle to force transitivity
        act = PermAction(tuple(x), tuple((i + 1) % n for i in range(n)))
    return act


@given(transitive_actions())
@settings(max_examples=150)
def test_riemann_hurwitz_is_integral(act):
    data = rh_genus(act)
    assert data.genus >= 0
    assert sum(data.cusps["inf"]) == sum(data.cusps["zero"]) == sum(data.cusps["one"]) == act.degree


def test_congruence_refutation_level3():
    p = heisenberg_level(3)
    phi3 = h_coset_action(p, [p.z()])
    cert = congruence_refutation(phi3, 9)
    assert cert.verdict is Verdict.NOT_CONGRUENCE
    assert cert.level == 6 and cert.gamma2_index == 12
    assert any("144" in n for n in cert.notes)
    cert2 = congruence_refutation(regular_action(p), 27)
    assert cert2.verdict is Verdict.NOT_CONGRUENCE
    assert cert2.as_dict()["verdict"] == "NOT_CONGRUENCE"


def test_congruence_inconclusive_for_gamma2_itself():
    act = PermAction((0,), (0,))
    assert congruence_refutation(act, 1).verdict is Verdict.INCONCLUSIVE
    with pytest.raises(ValueError):
        congruence_refutation(act, 2)
