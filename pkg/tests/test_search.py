import pytest

from deg8covers.families import FAMILY_SPECS, build_family
from deg8covers.search import enumerate_point_types, evaluate_point, point_feasible, scan_all, scan_configs


def test_binary_point_count():
    assert len(enumerate_point_types(0, 1)) == 15


def test_family_points_are_enumerated():
    pts = set(enumerate_point_types(-1, 2, allow_exceptional=True))
    for spec in FAMILY_SPECS.values():
        if spec.point is not None:
            assert spec.point in pts


def test_exceptional_flag_required():
    assert all(min(k) >= 0 for k in enumerate_point_types(-1, 1))


def test_bad_bounds():
    with pytest.raises(ValueError):
        enumerate_point_types(2, 1)
    with pytest.raises(ValueError):
        enumerate_point_types(-2, 1, allow_exceptional=True)


def test_empty_point_set_gives_base_rows():
    [c1] = scan_configs("c1", 3, [])
    [c5] = scan_configs("c2", 3, [])
    assert (c1.K2, c1.pg, c1.q) == (build_family(1, 3).K2, 7, 0)
    assert (c5.K2, c5.pg, c5.q) == (build_family(5, 3).K2, 7, 0)


def test_search_recovers_families():
    n = 4
    for fam, spec in FAMILY_SPECS.items():
        if spec.point is None or spec.contract:
            continue
        c = evaluate_point(spec.base, n, spec.point)
        r = build_family(fam, n)
        assert c.ok and (c.K2, c.pg, c.q) == (r.K2, r.pg, r.q)


def test_family9_point_flagged_not_minimal():
    c = evaluate_point("c2", 4, FAMILY_SPECS[9].point)
    assert c.status == "not minimal" and c.nef_witness == "Gamma-E1"


def test_scan_sorted_and_rejects_bad_points():
    cands = scan_all(3, enumerate_point_types(0, 1))
    for base in ("c1", "c2"):
        rows = [c for c in cands if c.base == base]
        keys = [c.sort_key() for c in rows]
        assert keys == sorted(keys)
    with pytest.raises(ValueError):
        scan_configs("c1", 3, [(1, 0, 0, 0, 0, 0, 0)])
    with pytest.raises(ValueError):
        scan_configs("c3", 3, [])


def test_two_exceptional_entries_rejected():
    pts = [k for k in enumerate_point_types(-1, 1, allow_exceptional=True) if k.count(-1) == 2]
    assert pts
    assert all(not evaluate_point("c1", 3, k).ok for k in pts)


def test_point_feasible(F1):
    assert point_feasible(F1.divisor(2, 2), 2) is None
    assert point_feasible(F1.divisor(2, 2), 4) is not None
    assert point_feasible(F1.zero(), 1) is not None
    assert point_feasible(F1.divisor(0, 6), 1) is None
    assert point_feasible(F1.divisor(0, 6), 2) is not None
