import pytest

from deg8covers.families import (
    FAMILY_SPECS,
    FamilyError,
    build_family,
    contract_step,
    expected_row,
    theorem_table,
)
from deg8covers.verify import IMAGE_DEGREE, L_TABLES
from deg8covers.group import characters

# frozen at n = 2: (K2, pg, chi, q, bpf, image degree, fixed part, nodes)
FROZEN_N2 = {
    1: (24, 5, 6, 0, True, 3, "0"),
    2: (16, 4, 5, 0, True, 2, "0"),
    3: (16, 4, 4, 1, True, 2, "0"),
    4: (22, 4, 5, 0, False, 2, "1/2 f*(E)"),
    5: (32, 5, 6, 0, False, 3, "1/2 f*(Gamma)"),
    6: (24, 4, 5, 0, False, 2, None),
    7: (24, 4, 4, 1, False, 2, None),
    8: (30, 4, 5, 0, False, 2, None),
    9: (32, 4, 4, 1, False, 2, None),
}


@pytest.mark.parametrize("fam", range(1, 10))
def test_frozen_rows(fam):
    r = build_family(fam, 2)
    K2, pg, chi, q, bpf, img, fixed = FROZEN_N2[fam]
    assert (r.K2, r.pg, r.chi, r.q, r.bpf, r.image_degree) == (K2, pg, chi, q, bpf, img)
    if fixed is not None:
        assert r.fixed_part == fixed
    assert r.consistent, r.failed_checks


@pytest.mark.parametrize("n", [2, 3, 7, 50, 1000, 10**6])
def test_closed_forms(n):
    for r in theorem_table(n):
        assert r.row() == expected_row(r.family_id, n)
        assert r.consistent


@pytest.mark.parametrize("fam", sorted(L_TABLES))
@pytest.mark.parametrize("n", [2, 5, 11])
def test_building_data_tables(fam, n):
    r = build_family(fam, n)
    N = r.internal_n
    for chi, (a, u, v, c) in zip(characters(3), L_TABLES[fam]):
        assert r.cover[chi] == r.surface.divisor(a, u * N + v, c)


@pytest.mark.parametrize("fam", sorted(IMAGE_DEGREE))
def test_image_degrees(fam):
    for n in (2, 9, 40):
        assert build_family(fam, n).image_degree == IMAGE_DEGREE[fam](n)


def test_family9_contraction():
    r = build_family(9, 4)
    assert r.internal_n == 5
    [(curve, count)] = r.contractions
    Y = r.surface
    assert curve == Y.fiber - Y.exceptional(1)
    assert count == 2
    assert r.invariants.two_K_pullclass == Y.divisor(2, 10, -2)
    assert r.minimality.ok
    assert any("contracted" in a for a in r.assumptions)


def test_contract_step_rejects_non_minus_one_curve():
    r = build_family(4, 3)
    with pytest.raises(FamilyError):
        contract_step(r, r.surface.fiber, 2)
    with pytest.raises(FamilyError):
        contract_step(r, r.surface.exceptional(1), 2)


def test_contract_step_rejects_inconsistent_count():
    r = build_family(9, 3)
    Y = r.surface
    with pytest.raises(FamilyError):
        contract_step(r, Y.fiber - Y.exceptional(1), 1)


def test_contract_zero_is_identity():
    r = build_family(1, 3)
    assert contract_step(r, r.surface.fiber, 0) is r


@pytest.mark.parametrize("bad", [(0, 3), (10, 3), (1, 1), (1, 10**6 + 1)])
def test_build_family_rejects(bad):
    with pytest.raises(FamilyError):
        build_family(*bad)


def test_specs_cover_both_bases():
    assert {s.base for s in FAMILY_SPECS.values()} == {"c1", "c2"}


def test_to_dict_schema():
    d = build_family(4, 3).to_dict()
    assert list(d) == [
        "family", "n", "K2", "pg", "chi", "q", "map_degree",
        "image_degree", "bpf", "fixed_part", "nodes", "assumptions",
    ]
    assert d["map_degree"] == 8 and d["nodes"] == 30


def test_nodes_for_every_family():
    for r in theorem_table(3):
        assert isinstance(r.node_count, int) and r.node_count > 0
