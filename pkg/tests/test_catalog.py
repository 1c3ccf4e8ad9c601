import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbfix.catalog import (
    ABELIAN,
    K3,
    NotKummerEnabledError,
    SingularityConfig,
    UnknownActionError,
    catalog_text,
    euler_defect,
    iter_all,
    kummer_action,
    list_actions,
    lookup,
    parse_config,
)
from hilbfix.dynkin import DynkinType, build_root_lattice

A = lambda r: DynkinType("A", r)  # noqa: E731


def test_parse_examples():
    assert parse_config("8A_1").points == ((A(1), 8),)
    assert dict(parse_config("2A_3+9A_1").points) == {A(3): 2, A(1): 9}
    c = parse_config("2A_2 + A_5 + D_4 + E_6")
    assert dict(c.points) == {A(2): 2, A(5): 1, DynkinType("D", 4): 1, DynkinType("E", 6): 1}


def test_canonical_order():
    assert str(parse_config("2A_2+A_5+D_4+E_6")) == "E_6+A_5+D_4+2A_2"
    assert str(parse_config("A_1+A_1+A_2")) == "A_2+2A_1"


@pytest.mark.parametrize("bad", ["", "8B_1", "0A_1", "A_1+", "2A_0", "E_9"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_config(bad)


def test_row_counts():
    assert len(list_actions(K3)) == 81
    assert [a.label for a in list_actions(K3)] == list(range(1, 82))
    admissible = list_actions(K3, admissible=True)
    assert [a.label for a in admissible] == [1, 2, 3, 4, 5, 7, 10, 16, 17, 18, 34, 55]
    abelian = list_actions(ABELIAN)
    assert [a.name for a in abelian if a.kummer] == ["C_2", "C_3", "C_4", "C_6"]
    assert sorted(a.name for a in abelian if not a.kummer) == ["D", "Q_8", "Q_8", "T_24"]


def test_lookup_examples():
    c2 = lookup("C_2")
    assert c2.order == 2 and c2.config == parse_config("8A_1")
    a5 = lookup(55)
    assert a5.name == "A_5" and a5.order == 60 and a5.config == parse_config("2A_4+3A_2+4A_1")
    assert lookup("55") == a5 and lookup("A_5") == a5
    assert lookup("C_2x2") == lookup(3) == lookup("C_2^2")
    c6 = lookup("C_6", ABELIAN)
    assert c6.config == parse_config("A_5+4A_2+5A_1")
    assert all(g == c6.torsion.identity for g in c6.decorations)
    assert lookup("D_8").order == 8


def test_lookup_errors():
    with pytest.raises(UnknownActionError):
        lookup("Z_9")
    with pytest.raises(UnknownActionError):
        lookup(82)
    with pytest.raises(UnknownActionError):
        lookup("Q_8", ABELIAN)  # two rows share the name
    with pytest.raises(NotKummerEnabledError):
        kummer_action(5)
    with pytest.raises(ValueError):
        list_actions("enriques")


@pytest.mark.parametrize("action", list(iter_all()), ids=lambda a: a.key)
def test_row_invariants(action):
    assert euler_defect(action) == 0
    for t in action.config.expanded():
        assert action.order % build_root_lattice(t).group_order == 0
    config = action.config
    assert parse_config(str(config)) == config
    if action.surface == K3:
        assert config.total_rank <= 19


def test_kummer_decorations():
    for name, n in [("C_2", 16), ("C_3", 9), ("C_4", 10), ("C_6", 10)]:
        a = kummer_action(name)
        assert len(a.decorations) == a.config.num_points == n
        assert all(a.torsion.contains(g) for g in a.decorations)
    c4 = kummer_action("C_4")
    assert c4.config == parse_config("4A_3+6A_1")


def test_s4_variant_recorded():
    s4 = lookup(34)
    assert s4.config == parse_config("2A_3+3A_2+5A_1")
    assert s4.flag("table1") == "2A_3+3A_2+2A_1"


def test_catalog_text_format():
    rows = [l for l in catalog_text().splitlines() if l.strip() and not l.startswith("#")]
    assert len(rows) == 89
    assert all(len(r.split("|")) == 6 for r in rows)


configs = st.lists(
    st.tuples(st.sampled_from(["A", "D", "E"]), st.integers(1, 8), st.integers(1, 9)), min_size=1, max_size=5
).filter(lambda xs: all((f != "D" or r >= 4) and (f != "E" or r in (6, 7, 8)) for f, r, _ in xs))


@given(configs)
def test_printer_round_trip(terms):
    text = "+".join(f"{m}{f}_{r}" for f, r, m in terms)
    c = parse_config(text)
    assert parse_config(str(c)) == c
    assert isinstance(c, SingularityConfig)
    assert c.total_rank == sum(r * m for _, r, m in terms)
