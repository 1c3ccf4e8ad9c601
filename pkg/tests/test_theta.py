import pytest

from hilbfix.catalog import ABELIAN, iter_all, kummer_action, list_actions, lookup
from hilbfix.dynkin import DynkinType, build_root_lattice
from hilbfix.qseries import coefficient
from hilbfix.theta import (
    ThetaFactorSpec,
    identity_projection,
    p_formula,
    support_gcd,
    theta_factor,
    theta_series,
)
from hilbfix.torsion import FiniteAbelianGroup, GroupRingElement, augmentation

A1 = build_root_lattice(DynkinType("A", 1))
A2 = build_root_lattice(DynkinType("A", 2))


def test_factor_examples():
    assert theta_factor(ThetaFactorSpec(A1, 2), 10).coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)
    assert theta_factor(ThetaFactorSpec(A2, 3), 5).coeffs == (1, 1, 2, 0, 2, 1)
    Z2 = FiniteAbelianGroup((2,))
    f = theta_factor(ThetaFactorSpec(A1, 2, (1,), Z2), 3)
    g = GroupRingElement.basis(Z2, (1,))
    assert f.coeffs == (GroupRingElement.scalar(Z2, 1), g, GroupRingElement(Z2), g)


def test_spec_validation():
    with pytest.raises(ValueError):
        ThetaFactorSpec(A2, 4)
    with pytest.raises(ValueError):
        ThetaFactorSpec(A1, 2, (1,), None)


def test_k3_examples():
    assert theta_series(lookup("C_3"), 3).coeffs == (1, 6, 27, 80)
    assert theta_series(lookup("C_2x2"), 8).coeffs == (1, 0, 12, 0, 66, 0, 232, 0, 627)
    assert theta_series(lookup("C_2"), 3).coeffs == (1, 8, 28, 64)


def test_kummer_c2():
    series = theta_series(kummer_action("C_2"), 6)
    assert identity_projection(series).coeffs == (1, 1, 0, 36, 140, 378, 1024)
    # one site with m=1 (16 ways) or three distinct sites with m=-1 (C(16,3) ways)
    assert augmentation(coefficient(series, 3)) == 16 + 560


def test_decorated_flag():
    with pytest.raises(ValueError):
        theta_series(lookup("C_2"), 3, decorated=True)
    plain = theta_series(kummer_action("C_2"), 4, decorated=False)
    assert plain.coeffs[:2] == (1, 16)


@pytest.mark.parametrize("action", [a for a in iter_all() if a.surface != ABELIAN or a.kummer], ids=lambda a: a.key)
def test_constant_term_and_support(action):
    series = theta_series(action, 30, decorated=False)
    assert series[0] == 1
    p = p_formula(action)
    assert all(c == 0 for e, c in enumerate(series.coeffs) if e % p)


@pytest.mark.parametrize("action", list_actions(admissible=True), ids=lambda a: a.name)
def test_support_gcd_matches_formula(action):
    # every point has a vector of colength 1, so the gcd is reached
    assert support_gcd(theta_series(action, action.order)) == p_formula(action)


@pytest.mark.parametrize("name", ["C_2", "C_3", "C_4", "C_6"])
def test_augmentation_naturality(name):
    action = kummer_action(name)
    decorated = theta_series(action, 20)
    plain = theta_series(action, 20, decorated=False)
    assert decorated.map(augmentation).coeffs == plain.coeffs


def test_p_formula_examples():
    assert p_formula(lookup("D_8")) == 2
    assert p_formula(lookup("C_2x2")) == 2
    assert p_formula(lookup("C_2")) == 1
