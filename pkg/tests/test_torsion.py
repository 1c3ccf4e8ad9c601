import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbfix.torsion import (
    FiniteAbelianGroup,
    GroupMismatchError,
    GroupRingElement,
    augmentation,
    gr_mul,
    identity_coefficient,
)

Z2 = FiniteAbelianGroup((2,))
Z3sq = FiniteAbelianGroup((3, 3))
Z2x4 = FiniteAbelianGroup((2, 4))


def test_group_basics():
    assert Z2x4.order == 8
    assert list(Z2x4.elements())[:3] == [(0, 0), (0, 1), (0, 2)]
    assert Z2x4.add((1, 3), (1, 2)) == (0, 1)
    assert Z2x4.scale((1, 3), 3) == (1, 1)
    assert Z2x4.element((3, -1)) == (1, 3)
    assert not Z2x4.contains((2, 0))
    assert FiniteAbelianGroup(()).order == 1


def test_examples():
    g = GroupRingElement.basis(Z2, (1,))
    one = GroupRingElement.scalar(Z2, 1)
    assert g * g == one
    assert (one + g) * (one - g) == 0
    a, b = (1, 2), (2, 2)
    assert GroupRingElement.basis(Z3sq, a) * GroupRingElement.basis(Z3sq, b) == GroupRingElement.basis(
        Z3sq, (0, 1)
    )
    x = 3 * one + 5 * g
    assert identity_coefficient(x) == 3
    assert identity_coefficient(GroupRingElement(Z2)) == 0
    assert augmentation(x) == 8


def test_canonical_form():
    x = GroupRingElement(Z2, {(0,): 2, (1,): 0})
    assert x.coeffs == {(0,): 2}
    assert x == 2 and hash(x) == hash(GroupRingElement.scalar(Z2, 2))
    assert not GroupRingElement(Z2, {(1,): 0})
    assert str(GroupRingElement(Z2, {(0,): 1, (1,): 2})) == "1 + 2*[1]"


def test_group_mismatch():
    with pytest.raises(GroupMismatchError):
        GroupRingElement.scalar(Z2, 1) + GroupRingElement.scalar(Z3sq, 1)


elements = st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 3)), st.integers(-5, 5), max_size=6)


def naive_mul(a, b):
    out = {}
    for g in Z2x4.elements():
        for h in Z2x4.elements():
            k = Z2x4.add(g, h)
            out[k] = out.get(k, 0) + a.coeffs.get(g, 0) * b.coeffs.get(h, 0)
    return GroupRingElement(Z2x4, out)


@settings(max_examples=80)
@given(elements, elements, elements)
def test_ring_laws(x, y, z):
    a, b, c = (GroupRingElement(Z2x4, d) for d in (x, y, z))
    assert gr_mul(a, b) == naive_mul(a, b)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert augmentation(a * b) == augmentation(a) * augmentation(b)
    assert a - a == 0
