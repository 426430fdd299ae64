import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from concave_rank.concave import (
    ENUMERATION_BOUND,
    RankTable,
    SCComposition,
    enumerate_scc,
    rank_series,
    rank_table_oracle,
    rank_table_prop1,
    triangular,
    v_concave,
    vd_andrews,
    vd_fast,
    vd_product,
    vdm_genfunc,
    vdm_prop1,
    vdm_region,
    vdm_telescoped,
)
from concave_rank.number_theory import partition_count

DATA = Path(__file__).parent / "data"


def compositions_with_one_zero(n):
    """All nonnegative sequences summing to n with at most one zero part."""
    for cuts in range(n):
        for split in itertools.combinations(range(1, n), cuts):
            bounds = (0,) + split + (n,)
            parts = tuple(b - a for a, b in zip(bounds, bounds[1:]))
            if n:
                yield parts
            for i in range(len(parts) + 1):
                yield parts[:i] + (0,) + parts[i:]
    if n == 0:
        yield (0,)


def concave_rank_of(seq, strict):
    """Rank s - 2k + 1 if seq is (strongly) concave, else None. k is 1-based."""
    s = len(seq)
    for k in range(1, s + 1):
        c = seq[k - 1]
        left, right = seq[: k - 1], seq[k:]
        if left and left[-1] <= c or right and right[0] <= c:
            continue
        if strict:
            ok = all(a > b for a, b in zip(left, left[1:])) and all(
                a < b for a, b in zip(right, right[1:])
            )
        else:
            ok = all(a >= b for a, b in zip(left, left[1:])) and all(
                a <= b for a, b in zip(right, right[1:])
            )
        if ok:
            return s - 2 * k + 1
    return None


def raw_rank_counts(n, strict=True):
    counts = {}
    for seq in set(compositions_with_one_zero(n)):
        r = concave_rank_of(seq, strict)
        if r is not None:
            counts[r] = counts.get(r, 0) + 1
    return counts


def test_raw_checker_sanity():
    assert concave_rank_of((3, 1, 2), True) == 0
    assert concave_rank_of((0, 1), True) == 1
    assert concave_rank_of((2, 2, 0), True) is None
    assert concave_rank_of((2, 2, 0), False) == -2
    assert concave_rank_of((1, 2, 3), True) == 2


@pytest.mark.parametrize("n", range(0, 13))
def test_enumeration_matches_raw_sequences(n):
    comps = enumerate_scc(n)
    assert len({c.parts for c in comps}) == len(comps)
    got = {}
    for c in comps:
        assert c.weight == n
        got[c.rank] = got.get(c.rank, 0) + 1
    assert got == raw_rank_counts(n)


def test_enumerate_small_cases():
    (only,) = enumerate_scc(0)
    assert only == SCComposition((), 0, ()) and only.rank == 0
    one = {(c.parts, c.rank) for c in enumerate_scc(1)}
    assert one == {((1,), 0), ((0, 1), 1), ((1, 0), -1)}
    two = enumerate_scc(2)
    assert {c.parts for c in two} == {(2,), (1, 0, 1), (0, 2), (2, 0)}
    assert sorted(c.rank for c in two) == [-1, 0, 0, 1]


def test_enumerate_bound():
    with pytest.raises(ValueError):
        enumerate_scc(ENUMERATION_BOUND + 1)


def test_composition_invariants():
    c = SCComposition((9, 4), 1, (2, 5, 7))
    assert c.weight == 28 and c.rank == 1
    assert c.parts == (9, 4, 1, 2, 5, 7)
    for bad in [((3, 4), 1, ()), ((), 2, (2,)), ((), 1, (3, 3)), ((), -1, ())]:
        with pytest.raises(ValueError):
            SCComposition(*bad)


def test_rank_table_oracle_small():
    t = rank_table_oracle(2)
    assert t[0, 2] == 2 and t[1, 2] == 1 and t[-1, 2] == 1
    assert t[0, 0] == 1 and t[1, 1] == 1
    assert t[5, 2] == 0


def test_rank_table_rejects_asymmetry():
    with pytest.raises(ValueError):
        RankTable.from_signed_counts(1, {(1, 1): 1, (0, 1): 1})


def test_rank_table_golden_files():
    golden_csv = (DATA / "rank_table_20.csv").read_text()
    golden_json = (DATA / "rank_table_20.json").read_text()
    for table in (rank_table_oracle(20), vdm_genfunc(20), rank_table_prop1(20)):
        assert table.to_csv() == golden_csv
        assert table.to_json() + "\n" == golden_json
    assert RankTable.from_csv(golden_csv) == RankTable.from_json(golden_json) == vdm_genfunc(20)
    vd = json.loads((DATA / "vd_20.json").read_text())
    assert vd_andrews(20).coeffs == vd


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 3), (2, 4)])
def test_vd_small_coefficients(n, expected):
    assert vd_andrews(5)[n] == expected
    assert vd_product(5)[n] == expected
    assert vd_fast(n) == expected


def test_vd_four_way_to_40():
    oracle = [len(enumerate_scc(n)) for n in range(41)]
    assert vd_andrews(40).coeffs == oracle
    assert vd_product(40).coeffs == oracle
    assert [vd_fast(n) for n in range(41)] == oracle


def test_vd_andrews_product_fast_to_200():
    a = vd_andrews(200)
    assert vd_product(200) == a
    assert vd_fast(200) == a[200]
    assert vd_fast(-1) == 0


def test_v_concave_against_raw_enumeration():
    v = v_concave(10)
    assert v[0] == 1 and v[1] == 3
    for n in range(11):
        assert v[n] == sum(raw_rank_counts(n, strict=False).values()), n


def test_rank_series_x_support():
    rank_series(60).check_support()


def test_vdm_genfunc_examples():
    t = vdm_genfunc(10)
    assert t[0, 2] == 2 and t[1, 1] == 1
    assert t[3, 5] == 0 and triangular(3) == 6


def test_three_way_rank_agreement_to_30():
    oracle = rank_table_oracle(30)
    gen = vdm_genfunc(30)
    assert oracle == gen
    for n in range(31):
        for m in range(-n - 2, n + 3):
            N = n - triangular(m)
            expected = oracle[m, n]
            assert vdm_prop1(m, N) == expected, (m, n)
            assert vdm_telescoped(abs(m), N) == expected, (m, n)


def test_symmetry_column_sums_support():
    gen = vdm_genfunc(30)
    for n in range(31):
        col = gen.column(n)
        assert all(col[m] == col.get(-m) for m in col)
        assert sum(col.values()) == vd_fast(n) == gen.total(n)
        for m in range(-n - 3, n + 4):
            assert (gen[m, n] == 0) == (n < triangular(m)), (m, n)


@pytest.mark.parametrize("ell,N,expected", [(0, 2, 2), (1, 1, 1), (-1, 1, 1)])
def test_vdm_prop1_examples(ell, N, expected):
    assert vdm_prop1(ell, N) == expected


def test_vdm_prop1_equals_p_when_ell_large():
    for ell in range(0, 15):
        for N in range(0, 2 * ell + 4):
            assert vdm_prop1(ell, N) == partition_count(N)
    assert vdm_prop1(3, -2) == 0


@given(st.integers(0, 60), st.integers(-5, 400))
def test_telescoped_equals_prop1(ell, N):
    assert vdm_telescoped(ell, N) == vdm_prop1(ell, N)


@pytest.mark.parametrize("ell,N,expected", [(0, 2, 2), (1, 1, 1), (0, 0, 1)])
def test_vdm_telescoped_examples(ell, N, expected):
    assert vdm_telescoped(ell, N) == expected


def test_vdm_telescoped_rejects_negative_ell():
    with pytest.raises(ValueError):
        vdm_telescoped(-1, 3)


@pytest.mark.parametrize("m,n,expected", [(2, 3, 1), (0, 3, 3), (5, 10, 0)])
def test_vdm_region_examples(m, n, expected):
    assert vdm_region(m, n) == expected


def test_vdm_region_matches_oracle():
    oracle = rank_table_oracle(30)
    for m in range(-8, 9):
        a = abs(m)
        for n in range(0, min(a * (a + 5) // 2 + 4, 31)):
            assert vdm_region(m, n) == oracle[m, n], (m, n)


def test_vdm_region_precondition():
    with pytest.raises(ValueError):
        vdm_region(0, 4)
    with pytest.raises(ValueError):
        vdm_region(1, -1)


def test_prop1_and_genfunc_agree_to_200():
    assert rank_table_prop1(200) == vdm_genfunc(200)
