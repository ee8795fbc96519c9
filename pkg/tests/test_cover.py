import itertools

import pytest
from hypothesis import given, strategies as st

from deg8covers.cover import (
    BranchData,
    CoverError,
    NoCoverError,
    NotEffectiveError,
    PointParityError,
    impose_point,
    invariants,
    minimality_check,
    solve_building_data,
    validate_point_type,
)
from deg8covers.families import construction1, construction2
from deg8covers.group import character, characters
from deg8covers.verify import parity_oracle

N = 3


def test_validate_examples():
    assert validate_point_type((0, 1, 1, 0, 0, 1, 1))
    assert validate_point_type((0, 0, 0, 0, 0, 2, 2))
    assert validate_point_type((0, 0, 1, 0, -1, 1, 2))
    assert not validate_point_type((1, 0, 0, 0, 0, 0, 0))
    assert not validate_point_type((0, 0, 0, 0, 0, 0, -2))


def test_fifteen_binary_points():
    valid = [k for k in itertools.product((0, 1), repeat=7) if validate_point_type(k)]
    # 2^(7 - rank) vectors in the kernel, rank 3, minus the zero vector
    assert len(valid) - 1 == 15


@given(st.tuples(*[st.integers(-1, 4)] * 7))
def test_validate_vs_oracle(k):
    assert validate_point_type(k) == parity_oracle(k)


@given(st.tuples(*[st.integers(0, 3)] * 7), st.tuples(*[st.integers(0, 3)] * 7))
def test_validity_is_linear_mod_2(a, b):
    s = tuple(x + y for x, y in zip(a, b))
    if validate_point_type(a) and validate_point_type(b):
        assert validate_point_type(s)


def test_construction1_data(F1):
    B = construction1(N, F1)
    assert [str(d) for d in B.D] == ["0", "6Gamma", "2Delta0 + 2Gamma", "0", "0", "2Delta0 + 2Gamma", "2Delta0 + 2Gamma"]
    cov = solve_building_data(B)
    assert [str(cov[c]) for c in characters(3)] == [
        "2Delta0 + 2Gamma",
        "3Delta0 + 6Gamma",
        "2Delta0 + 2Gamma",
        "Delta0 + 4Gamma",
        "2Delta0 + 2Gamma",
        "Delta0 + 4Gamma",
        "Delta0 + 4Gamma",
    ]
    assert cov["0,0,0"].is_zero()
    assert cov[(0, 1, 0)] == cov[character(0, 1, 0)]


def test_construction1_invariants(F1):
    inv = invariants(solve_building_data(construction1(N, F1)))
    assert (inv.K2, inv.pg, inv.chi, inv.q) == (40, 7, 8, 0)
    assert inv.two_K_pullclass == F1.divisor(2, 6)
    assert {str(c): h for c, h in inv.contributions.items() if h} == {"chi_010": 7}


def test_construction2_invariants(F1):
    inv = invariants(solve_building_data(construction2(N, F1)))
    assert (inv.K2, inv.pg, inv.chi, inv.q) == (48, 7, 8, 0)


def test_impose_point(F1):
    Y, B = impose_point(F1, construction1(N, F1), (0, 0, 1, 0, -1, 1, 2), tag="P")
    assert Y.num_blowups == 1
    assert [str(d) for d in B.D] == [
        "0",
        "6Gamma",
        "2Delta0 + 2Gamma - E",
        "0",
        "E",
        "2Delta0 + 2Gamma - E",
        "2Delta0 + 2Gamma - 2E",
    ]
    assert B.imposed_points == ((0, 0, 1, 0, -1, 1, 2),)


def test_impose_rejects_bad_parity(F1):
    with pytest.raises(PointParityError):
        impose_point(F1, construction1(N, F1), (1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(PointParityError):
        impose_point(F1, construction1(N, F1), (0, 0, 0))


def test_impose_rejects_non_effective(F1):
    # D1 is zero and cannot acquire a point of multiplicity 2
    with pytest.raises(NotEffectiveError):
        impose_point(F1, construction1(N, F1), (2, 0, 0, 0, 0, 0, 2))


def test_no_cover_reports_character(F1):
    B = construction1(N, F1)
    odd = BranchData(B.D[:1] + (F1.divisor(0, 7),) + B.D[2:])
    with pytest.raises(NoCoverError) as info:
        solve_building_data(odd)
    assert info.value.character == character(0, 1, 0)


def test_trivial_building_data(F1):
    zero = BranchData((F1.zero(),) * 7)
    with pytest.raises(CoverError):
        solve_building_data(zero)
    cov = solve_building_data(zero, require_nontrivial=False)
    assert not minimality_check(cov)


def test_residuals_zero(F1):
    for base in (construction1, construction2):
        cov = solve_building_data(base(N, F1))
        assert all(r.is_zero() for r in cov.residuals().values())


def test_building_data_is_additive(F1):
    # L is linear in the branch data: solving B + B' gives L + L'
    A = solve_building_data(construction1(2, F1))
    B = solve_building_data(construction1(5, F1))
    C = solve_building_data(BranchData(tuple(x + y for x, y in zip(construction1(2, F1).D, construction1(5, F1).D))))
    for chi in characters(3):
        assert C[chi] == A[chi] + B[chi]


def test_minimality(F1):
    assert minimality_check(solve_building_data(construction1(N, F1)))
