import ast
import inspect
from math import comb

import pytest

import hilbfix.oracle as oracle
from hilbfix.catalog import kummer_action, list_actions, lookup
from hilbfix.oracle import (
    DirectCounter,
    colored_partition_check,
    cyclic_norm,
    direct_count,
    direct_tuples,
    local_rigid_counts,
    multipartition_count,
    partition_profile,
    partitions,
    rigid_vectors,
)
from hilbfix.qseries import coefficient
from hilbfix.theta import theta_series


def test_independent_of_series_code():
    tree = ast.parse(inspect.getsource(oracle))
    imported = {node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)}
    assert not imported & {"hilbfix.qseries", "hilbfix.theta", "hilbfix.fixloc"}
    names = {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}
    assert "enumerate_vectors" not in names and "series_mul" not in names


def test_direct_count_examples():
    assert direct_count(lookup("C_2"), 2, 0) == 28
    assert direct_count(lookup("C_3"), 3, 0) == 80
    # q^3 for C_2: one site at m=1, or three sites at m=-1
    assert direct_count(lookup("C_2"), 3, 0) == 8 + comb(8, 3) == 64
    assert sum(1 for _ in direct_tuples(lookup("C_2"), 3)) == 64
    assert direct_count(lookup("C_2"), 1, 1) == 0


def test_direct_count_kummer():
    tally = direct_count(kummer_action("C_2"), 3, 0)
    assert tally.coeffs.get((0, 0, 0, 0)) == 36
    assert sum(tally.coeffs.values()) == 16 + comb(16, 3)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [sum(1 for _ in partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_profile_examples():
    p = partition_profile((1,), 2)
    assert p.residues == (1, 0) and p.m_vector == (-1,) and p.size == 2 * p.m_hat0 + sum(p.m_vector)
    p = partition_profile((2, 1), 2)
    assert p.residues == (1, 2) and p.m_vector == (1,) and 3 == 2 * 1 + 1
    assert partition_profile((2,), 2).m_vector == (0,)
    with pytest.raises(ValueError):
        partition_profile((1,), 1)


@pytest.mark.parametrize("a", range(2, 7))
def test_profile_identities(a):
    for size in range(10):
        for lam in partitions(size):
            p = partition_profile(lam, a)
            assert sum(p.residues) == size
            assert size == a * p.m_hat0 + sum(p.m_vector)


def test_rigid_count_examples():
    assert local_rigid_counts(2, 6) == [1, 1, 0, 1, 0, 0, 1]
    assert local_rigid_counts(4, 3)[3] == 3
    assert local_rigid_counts(3, 2)[2] == 2
    with pytest.raises(ValueError):
        local_rigid_counts(1, 3)


def test_colored_examples():
    fibres = {}
    for lam in partitions(2):
        fibres.setdefault(partition_profile(lam, 2).m_vector, []).append(lam)
    assert len(fibres[(0,)]) == 2 and multipartition_count(2, 1) == 2
    assert [lam for lam in partitions(3) if partition_profile(lam, 2).m_vector == (1,)] == [(2, 1)]
    assert multipartition_count(2, 0) == 1


@pytest.mark.parametrize("a", range(2, 7))
def test_local_model_properties(a):
    for size in range(13):
        for m, lams in rigid_vectors(a, size).items():
            assert len(lams) == 1, (size, m)
    for size in range(21):
        for lam in partitions(size):
            p = partition_profile(lam, a)
            assert p.m_hat0 >= cyclic_norm(p.m_vector)
    assert colored_partition_check(a, 12).passed


def test_multipartitions():
    # 3-tuples of partitions: 1, 3, 9, 22, 51
    assert [multipartition_count(3, w) for w in range(5)] == [1, 3, 9, 22, 51]


@pytest.mark.parametrize("action", list_actions(admissible=True), ids=lambda a: a.name)
def test_counter_matches_series(action):
    series = theta_series(action, 40)
    counter = DirectCounter(action, 40)
    assert [counter.at(e) for e in range(41)] == list(series.coeffs)
    with pytest.raises(ValueError):
        counter.at(41)
    assert counter.at(-1) == 0


@pytest.mark.parametrize("name", ["C_2", "C_3", "C_4", "C_6"])
def test_kummer_counter_matches_series(name):
    action = kummer_action(name)
    series = theta_series(action, 20)
    counter = DirectCounter(action, 20)
    assert all(counter.at(e) == coefficient(series, e) for e in range(21))
