import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import trial_factor
from primegraph import groupdata as gd
from primegraph.groupdata import (
    DataError,
    DegreeSet,
    Named,
    Product,
    Psl2,
    Psl3Partial,
    SuzukiPartial,
    UnknownGroupError,
    load_named_groups,
    named_degrees,
    parse_named_groups,
    parse_spec,
    product_degrees,
    psl2_degrees,
    psl2_even_maximal_indices,
    psl3_vertices,
    suzuki_vertices,
)

REQUIRED_IDS = ["2.A6", "23^(1+2):11", "A5", "PSL2(8)", "PSL3(3)", "J1", "M11", "M23", "A8", "PSL3(4)", "PSU3(4)"]


def pi(n):
    return set(trial_factor(n))


def test_degree_set_invariants():
    assert DegreeSet.of([5, 1, 3, 3]).degrees == (1, 3, 5)
    for bad in [(2, 3), (1, 3, 2), (1, 1, 2), (0, 1), (1, -2)]:
        with pytest.raises(ValueError):
            DegreeSet(bad)
    with pytest.raises(TypeError):
        DegreeSet((1, 2.0))
    assert DegreeSet((1, 6, 35)).rho() == [2, 3, 5, 7]
    assert str(DegreeSet((1, 4))) == "{1,4}"


@pytest.mark.parametrize("q, expected", [
    (4, (1, 3, 4, 5)),
    (5, (1, 3, 4, 5)),
    (29, (1, 15, 28, 29, 30)),
    (9, (1, 5, 8, 9, 10)),
    (7, (1, 3, 6, 7, 8)),
    (64, (1, 63, 64, 65)),
])
def test_psl2_degrees(q, expected):
    assert psl2_degrees(q).degrees == expected


def test_psl2_q9_matches_a6_table():
    # A6 = PSL2(9); Atlas degrees 1, 5, 5, 8, 8, 9, 10
    assert set(psl2_degrees(9)) == {1, 5, 8, 9, 10}


@pytest.mark.parametrize("q", [2, 3, 6, 12, 100, 1])
def test_psl2_rejects(q):
    with pytest.raises(ValueError):
        psl2_degrees(q)


def test_psl2_normalizes_five():
    assert Psl2(5) == Psl2(4)
    assert str(Psl2(5)) == "PSL2(4)"


@given(st.integers(min_value=4, max_value=5000))
def test_psl2_degree_shape(q):
    if len(pi(q)) != 1:
        return
    d = psl2_degrees(q)
    q = 4 if q == 5 else q
    assert {q - 1, q, q + 1} <= set(d)
    assert len(d) == (4 if q % 2 == 0 else 5)


def test_named_required_ids_present():
    table = gd.default_table()
    for gid in REQUIRED_IDS:
        assert gid in table


def test_named_quoted_entries():
    assert named_degrees("2.A6").degrees == (1, 4, 5, 8, 9, 10)
    assert named_degrees("23^(1+2):11").degrees == (1, 11, 23)
    quoted = {"2.A6": "{1,4,5,8,9,10}", "23^(1+2):11": "{1,11,23}"}
    for entry in gd.default_table():
        if entry.source == "paper-quoted":
            assert str(entry.degree_set) == quoted[entry.id]


def test_named_psl3_3_is_external_entry():
    entry = gd.default_table().get("PSL3(3)")
    assert entry.source == "external-table"
    assert set().union(*(pi(d) for d in entry.degree_set)) == {2, 3, 13}


def _order_and_multiset(notes):
    fields = dict(part.strip().split("=", 1) for part in notes.split(";") if "=" in part)
    mult = []
    for tok in fields["mult"].split():
        deg, _, count = tok.partition("^")
        mult.append((int(deg), int(count or 1)))
    return int(fields["|G|"]), mult


def test_bundled_degrees_square_up_to_group_order():
    for entry in gd.default_table():
        order, mult = _order_and_multiset(entry.notes)
        assert sum(c * d * d for d, c in mult) == order, entry.id
        assert sorted({d for d, _ in mult}) == list(entry.degree_set.degrees), entry.id
        # character degrees divide the group order
        assert all(order % d == 0 for d in entry.degree_set), entry.id


def test_named_unknown_lists_ids():
    with pytest.raises(UnknownGroupError) as err:
        named_degrees("Monster")
    assert "A5" in str(err.value) and "J1" in str(err.value)
    assert "Monster" in str(err.value)


def test_loader_validates_and_fails_fast():
    table = parse_named_groups("# c\nX;1,2,3;external-table\nY;1,4;paper-quoted;solvable;n\n")
    assert table.ids() == ["X", "Y"] and table.get("Y").solvable
    for bad in ["X;2,3;external-table", "X;1,3,2;external-table", "X;1,a;external-table",
                "X;1,2;made-up", "X;1,2", "X;1,2;external-table;weird",
                "X;1,2;external-table\nX;1,3;external-table", ";1,2;external-table"]:
        with pytest.raises(DataError):
            parse_named_groups(bad)


def test_data_env_override(tmp_path, monkeypatch):
    path = tmp_path / "groups.txt"
    path.write_text("Z;1,7;external-table\n", encoding="utf-8")
    monkeypatch.setenv(gd.DATA_ENV_VAR, str(path))
    assert gd.default_table().ids() == ["Z"]
    assert named_degrees("Z").degrees == (1, 7)
    assert load_named_groups(path).ids() == ["Z"]
    monkeypatch.delenv(gd.DATA_ENV_VAR)
    assert "A5" in gd.default_table()


@pytest.mark.parametrize("a, b, expected", [
    ((1,), (1, 11, 23), (1, 11, 23)),
    ((1, 3, 4, 5), (1, 11, 23), (1, 3, 4, 5, 11, 23, 33, 44, 55, 69, 92, 115)),
    ((1, 2), (1, 2), (1, 2, 4)),
])
def test_product_degrees(a, b, expected):
    assert product_degrees(DegreeSet(a), DegreeSet(b)).degrees == expected


degree_sets = st.sets(st.integers(min_value=2, max_value=500), max_size=6).map(lambda s: DegreeSet.of(s | {1}))


@given(degree_sets, degree_sets, degree_sets)
def test_product_laws(a, b, c):
    assert product_degrees(a, b) == product_degrees(b, a)
    assert product_degrees(product_degrees(a, b), c) == product_degrees(a, product_degrees(b, c))
    assert product_degrees(a, DegreeSet((1,))) == a


def test_suzuki_vertices():
    d = suzuki_vertices(8)
    assert d.vertices == (2, 5, 7, 13) and d.complete_on == (5, 7, 13) and d.partial
    d = suzuki_vertices(32)
    assert set(d.vertices) == {2} | pi(31) | pi(1025) == {2, 5, 31, 41}
    assert d.complete_on == (5, 31, 41)
    for e in range(3, 14, 2):
        assert 2 in suzuki_vertices(2**e).vertices


@pytest.mark.parametrize("q2", [2, 4, 16, 64, 27, 12])
def test_suzuki_rejects(q2):
    with pytest.raises(ValueError):
        suzuki_vertices(q2)


@pytest.mark.parametrize("eps, q, verts, clique", [
    (1, 3, (2, 3, 13), (2, 13)),
    (-1, 3, (2, 3, 7), (2, 7)),
    (1, 5, (2, 3, 5, 31), (2, 3, 31)),
])
def test_psl3_vertices(eps, q, verts, clique):
    d = psl3_vertices(eps, q)
    assert d.vertices == verts and d.complete_on == clique
    p = min(pi(q))
    assert set(d.vertices) == {p} | pi((q * q - 1) * (q * q + eps * q + 1))


@pytest.mark.parametrize("eps, q", [(1, 2), (1, 4), (-1, 4), (1, 6), (0, 3)])
def test_psl3_rejects(eps, q):
    with pytest.raises(ValueError):
        psl3_vertices(eps, q)


def test_maximal_indices():
    vals = [x.value for x in psl2_even_maximal_indices(2)]
    assert vals == [10, 6, 5, 10]
    vals = [x.value for x in psl2_even_maximal_indices(6)]
    assert vals[:3] == [2080, 2016, 65]
    q = 64
    assert vals[3:] == [q * (q * q - 1) // (2**3 * (2**6 - 1)), q * (q * q - 1) // (2**2 * (2**4 - 1))]
    for f in range(2, 20):
        idx = psl2_even_maximal_indices(f)
        assert idx[2].value == 2**f + 1 and idx[2].value % 2 == 1
        for x in idx:
            assert x.factors == trial_factor(x.value)
    with pytest.raises(ValueError):
        psl2_even_maximal_indices(1)


def test_parse_spec():
    assert parse_spec("PSL2:64") == Psl2(64)
    assert parse_spec("23^(1+2):11") == Named("23^(1+2):11")
    assert parse_spec("product:A5,23^(1+2):11") == Product(Named("A5"), Named("23^(1+2):11"))
    assert parse_spec("product:A5,PSL2:7,J1") == Product(Product(Named("A5"), Psl2(7)), Named("J1"))
    assert parse_spec("Sz:8") == SuzukiPartial(8)
    assert parse_spec("PSU3:5") == Psl3Partial(-1, 5)
    for bad in ["product:A5", "PSL2:x", "Nope"]:
        with pytest.raises((ValueError, LookupError)):
            parse_spec(bad)


def test_degrees_rejects_partial_descriptors():
    assert gd.is_partial(Product(Named("A5"), SuzukiPartial(8)))
    with pytest.raises(ValueError):
        gd.degrees(SuzukiPartial(8))
    assert gd.degrees(Product(Psl2(4), Named("23^(1+2):11"))) == product_degrees(
        psl2_degrees(4), named_degrees("23^(1+2):11"))
