import json

import pytest

from qsc.compositions import compositions, partitions, to_string
from qsc.qsym import (
    BASES,
    DUAL_IMMACULATE,
    FUNDAMENTAL,
    IMMACULATE,
    MONOMIAL,
    YOUNG_NCSCHUR,
    YOUNG_QS,
    BasisExpansion,
    MExpr,
    check_conjectures,
    dimm_f_expansion,
    dimm_to_yqs,
    dual_immaculate_mexpr,
    expand_in,
    f_to_m,
    is_symmetric,
    m_to_f,
    monomial,
    monomial_coefficient_oracle,
    principal_specialization,
    quasi_shuffle,
    schur_m_expansion,
    yns_to_imm,
    young_qs_mexpr,
    yqs_f_expansion,
)


def test_mexpr_basics():
    f = MExpr(2, {(2,): 1, (1, 1): 3})
    assert f.coefficient((1, 1)) == 3
    assert f.coefficient((2,)) == 1
    g = f - monomial((2,))
    assert g == 3 * monomial((1, 1))
    assert g.coefficient((2,)) == 0
    assert hash(f) == hash(MExpr(2, {(1, 1): 3, (2,): 1}))
    assert MExpr(2, {(2,): 0}) == MExpr(2)


def test_mexpr_validation():
    with pytest.raises(ValueError):
        MExpr(2, {(1,): 1})
    with pytest.raises(ValueError):
        MExpr(2, {(2,): 1.5})
    with pytest.raises(ValueError):
        monomial((2,)) + monomial((3,))
    with pytest.raises(AttributeError):
        monomial((2,)).degree = 5


def test_basis_constants():
    assert BASES == {MONOMIAL, FUNDAMENTAL, YOUNG_QS, DUAL_IMMACULATE,
                     IMMACULATE, YOUNG_NCSCHUR}


def test_basis_expansion_json():
    table = BasisExpansion(YOUNG_QS, 4, {(1, 3): 1, (2, 2): 1})
    obj = table.to_json_obj()
    assert obj == {"basis": "young-qs", "degree": 4,
                   "coeffs": {"2,2": 1, "1,3": 1}}
    assert list(obj["coeffs"]) == ["2,2", "1,3"]
    assert BasisExpansion.from_json_obj(json.loads(json.dumps(obj))) == table
    assert BasisExpansion(MONOMIAL, 2, {(2,): 0}).coeffs == {}
    with pytest.raises(ValueError):
        BasisExpansion("powersum", 2, {})
    with pytest.raises(ValueError):
        BasisExpansion(MONOMIAL, 2, {(1,): 1})


def test_fundamental_monomial_change():
    assert f_to_m((2,)) == MExpr(2, {(2,): 1, (1, 1): 1})
    assert m_to_f(monomial((2,))) == BasisExpansion(
        FUNDAMENTAL, 2, {(2,): 1, (1, 1): -1})
    for n in range(6):
        for alpha in compositions(n):
            table = m_to_f(monomial(alpha))
            back = MExpr(n)
            for beta, c in table.coeffs.items():
                back = back + c * f_to_m(beta)
            assert back == monomial(alpha)


def test_quasi_shuffle_goldens():
    one = monomial((1,))
    assert one * one == MExpr(2, {(1, 1): 2, (2,): 1})
    assert one * monomial((2,)) == MExpr(
        3, {(1, 2): 1, (2, 1): 1, (3,): 1})
    assert quasi_shuffle(MExpr(2), one) == MExpr(3)


def test_quasi_shuffle_is_commutative_and_associative():
    gens = [monomial(a) for a in [(1,), (2,), (1, 1), (2, 1)]]
    for f in gens:
        for g in gens:
            assert f * g == g * f
            for h in [monomial((1,)), monomial((2,))]:
                assert (f * g) * h == f * (g * h)


def test_descent_expansions():
    assert yqs_f_expansion((1, 2, 1)) == BasisExpansion(
        FUNDAMENTAL, 4, {(1, 2, 1): 1})
    assert dimm_f_expansion((1, 2, 1)) == BasisExpansion(
        FUNDAMENTAL, 4, {(1, 2, 1): 1, (1, 1, 2): 1})
    assert dimm_f_expansion((2, 2)) == BasisExpansion(
        FUNDAMENTAL, 4, {(2, 2): 1, (1, 2, 1): 1, (1, 3): 1})


def test_oracle_agrees_with_descent_route():
    for n in range(1, 5):
        for alpha in compositions(n):
            young = young_qs_mexpr(alpha)
            dual = dual_immaculate_mexpr(alpha)
            for gamma in compositions(n):
                assert young.coefficient(gamma) == monomial_coefficient_oracle(
                    YOUNG_QS, alpha, gamma)
                assert dual.coefficient(gamma) == monomial_coefficient_oracle(
                    DUAL_IMMACULATE, alpha, gamma)


def test_schur_expansion():
    assert schur_m_expansion((2, 1)) == MExpr(
        3, {(2, 1): 1, (1, 2): 1, (1, 1, 1): 2})
    assert schur_m_expansion((1, 1)) == monomial((1, 1))
    with pytest.raises(ValueError):
        schur_m_expansion((1, 2))


def test_expand_in_goldens():
    assert expand_in(dual_immaculate_mexpr((2, 2)), YOUNG_QS) == \
        BasisExpansion(YOUNG_QS, 4, {(2, 2): 1, (1, 3): 1})
    assert expand_in(young_qs_mexpr((2, 1)), DUAL_IMMACULATE) == \
        BasisExpansion(DUAL_IMMACULATE, 3, {(2, 1): 1, (1, 2): -1})
    f = f_to_m((2, 1))
    assert expand_in(f, MONOMIAL).coeffs == f.coeffs
    assert expand_in(f, FUNDAMENTAL) == BasisExpansion(
        FUNDAMENTAL, 3, {(2, 1): 1})


def test_expand_in_round_trips():
    for n in range(1, 6):
        for alpha in compositions(n):
            f = young_qs_mexpr(alpha)
            table = expand_in(f, DUAL_IMMACULATE)
            back = MExpr(n)
            for beta, c in table.coeffs.items():
                back = back + c * dual_immaculate_mexpr(beta)
            assert back == f


def test_coefficient_maps():
    assert dimm_to_yqs((2, 2)) == BasisExpansion(
        YOUNG_QS, 4, {(2, 2): 1, (1, 3): 1})
    assert dimm_to_yqs((2, 1)) == BasisExpansion(
        YOUNG_QS, 3, {(2, 1): 1, (1, 2): 1})
    assert dimm_to_yqs((2, 2, 2)) == BasisExpansion(
        YOUNG_QS, 6,
        {(2, 2, 2): 1, (2, 1, 3): 1, (1, 3, 2): 1, (1, 2, 3): 2, (1, 1, 4): 1})
    assert yns_to_imm((2, 1)) == BasisExpansion(IMMACULATE, 3, {(2, 1): 1})
    assert yns_to_imm((1, 2, 3)) == BasisExpansion(
        IMMACULATE, 6,
        {(3, 2, 1): 1, (3, 1, 2): 1, (2, 3, 1): 1, (2, 2, 2): 2,
         (2, 1, 3): 1, (1, 3, 2): 1, (1, 2, 3): 1})


def test_coefficient_maps_match_linear_algebra():
    for n in range(1, 6):
        for alpha in compositions(n):
            assert dimm_to_yqs(alpha) == expand_in(
                dual_immaculate_mexpr(alpha), YOUNG_QS)


def test_symmetry_characterization():
    assert is_symmetric(dual_immaculate_mexpr((3,)))
    assert is_symmetric(dual_immaculate_mexpr((2, 1)))
    assert is_symmetric(dual_immaculate_mexpr((3, 1, 1)))
    assert not is_symmetric(dual_immaculate_mexpr((1, 2)))
    assert not is_symmetric(dual_immaculate_mexpr((2, 1, 2)))
    assert dual_immaculate_mexpr((2, 1, 1)) == schur_m_expansion((2, 1, 1))


def test_principal_specialization():
    f = young_qs_mexpr((2, 1))
    g = monomial((1,))
    for m in range(5):
        assert principal_specialization(f * g, m) == \
            principal_specialization(f, m) * principal_specialization(g, m)
    assert principal_specialization(monomial((2, 1)), 2) == 1
    assert principal_specialization(monomial((2, 1)), 3) == 3


def test_conjecture_report_structure():
    trivial = check_conjectures(1)
    assert trivial["bounded"]["holds"]
    assert trivial["alternating"]["checked"] == ["1"]
    report = check_conjectures(4)
    assert report["bounded"]["holds"]
    assert report["sum_rule"]["holds"]
    assert report["alternating"]["holds"]
    assert report["expansions"]["2,1,1"]
    for lam in partitions(4):
        assert (to_string(lam) in report["alternating"]["checked"]) == (
            len(set(lam)) == len(lam))


def test_conjecture_pinned_case():
    report = check_conjectures(3)
    assert report["expansions"]["2,1"] == {"2,1": 1, "1,2": -1}
