"""One test per acceptance criterion; a summary line per criterion is printed
at the end of the pytest run."""

import random
import time

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from rmspectra import tables
from rmspectra.apset import APSet, Segment
from rmspectra.codes import bch_code, extended_bch_code, rm_code, rm_dimension
from rmspectra.enumeration import (
    macwilliams_transform,
    naive_distribution,
    rm_first_order_distribution,
    weight_distribution,
    weight_spectrum,
)
from rmspectra.gf2 import BitMatrix, LinearCode
from rmspectra.spectra import (
    BaselineTable,
    baseline_table,
    closed_form_m_minus_3,
    closed_form_m_minus_4,
    conjecture_check,
    derive_spectrum,
    kt_admissible,
    kt_witness,
    kt_witness_parameters,
    mceliece_exponent,
    sandwich,
    sumset_step,
    upper_bound,
)
from rmspectra.verify import run_checks

S = APSet.from_values


@pytest.mark.criterion(1, "RM(2,6) exhaustive spectrum, dim 22, < 10 s")
def test_criterion_1():
    code = rm_code(2, 6)
    assert code.dimension == 22
    t0 = time.perf_counter()
    spec = weight_spectrum(code)
    assert time.perf_counter() - t0 < 10
    assert spec == S([0, 16, 24, 28, 32, 36, 40, 48, 64])


@pytest.mark.criterion(2, "RM(2,7) exhaustive spectrum, dim 29, < 2 min")
def test_criterion_2():
    code = rm_code(2, 7)
    assert code.dimension == 29
    t0 = time.perf_counter()
    spec = weight_spectrum(code, threads=4)
    assert time.perf_counter() - t0 < 120
    assert spec == S([0, 32, 48, 56, 64, 72, 80, 96, 128])


@pytest.mark.criterion(3, "RM(3,8) ∩ ext-BCH(255,19): dim 26 and the 25-pair table, < 2 min")
def test_criterion_3():
    t0 = time.perf_counter()
    code = rm_code(3, 8).intersect(extended_bch_code(255, 19))
    assert code.dimension == 26
    dist = weight_distribution(code, split_bits=4, threads=4)
    assert time.perf_counter() - t0 < 120
    expected = "[ " + ", ".join(f"<{w}, {a}>" for w, a in tables.BCH_255_19_TABLE) + " ]"
    assert dist.to_magma() == expected
    assert dist[128] == 13287280


@pytest.mark.criterion(4, "sumset_step reproduces the three listed S+S sets")
def test_criterion_4():
    assert sumset_step(S(tables.RM_2_6)) == S(tables.SUMSET_RM_2_6)
    assert sumset_step(S(tables.RM_2_7)) == S(tables.SUMSET_RM_2_7)
    got = sumset_step(S(tables.RM_3_8))
    assert got == S(tables.SUMSET_RM_3_8)
    assert (len(sumset_step(S(tables.RM_2_6))), len(sumset_step(S(tables.RM_2_7)))) == (25, 25)
    # the listed RM(3,8) sumset has 105 elements
    assert len(got) == len(tables.SUMSET_RM_3_8) == 105


@pytest.mark.criterion(5, "sandwich(3,7) proven; excluded {4,8,12,20} and reflections")
def test_criterion_5():
    res = sandwich(3, 7, [baseline_table("rm_2_6")])
    assert res.proven
    assert res.spectrum == S(tables.SUMSET_RM_2_6)
    excluded = APSet.interval(0, 128, 4) - upper_bound(3, 7)
    assert excluded == S([4, 8, 12, 20, 108, 116, 120, 124])


def _chain(offset: int, first: int, baseline: str) -> list[APSet]:
    table = baseline_table(baseline)
    out = []
    for m in range(first + 1, 21):
        res = sandwich(m - offset, m, [table])
        assert res.proven, (m, res.gap)
        out.append(res.spectrum)
        table = BaselineTable(f"rm_{m - offset}_{m}", m - offset, m, res.spectrum, "chained")
    return out


@pytest.mark.criterion(6, "RM(m-3,m) chained from RM(3,6) equals the closed form, 6..20, < 5 s")
def test_criterion_6():
    t0 = time.perf_counter()
    chain = _chain(3, 6, "rm_3_6")
    assert time.perf_counter() - t0 < 5
    assert baseline_table("rm_3_6").spectrum == closed_form_m_minus_3(6)
    for m, spec in zip(range(7, 21), chain):
        assert spec == closed_form_m_minus_3(m), m


@pytest.mark.criterion(7, "RM(m-4,m) chained from RM(4,8) equals the closed form, 8..20")
def test_criterion_7():
    chain = _chain(4, 8, "rm_4_8")
    assert baseline_table("rm_4_8").spectrum == closed_form_m_minus_4(8)
    for m, spec in zip(range(9, 21), chain):
        assert spec == closed_form_m_minus_4(m), m


@pytest.mark.criterion(8, "RM(4,9) proven = {60, 452} ∪ S+S of RM(3,8)")
def test_criterion_8():
    res = derive_spectrum(4, 9)
    assert res.proven
    assert res.spectrum == S(tables.SUMSET_RM_3_8) | S([60, 452])
    assert 452 not in S(tables.SUMSET_RM_3_8)


@pytest.mark.criterion(9, "RM(5,10) partial; lower set holds all three listed parts; gap disjoint")
def test_criterion_9():
    res = derive_spectrum(5, 10)
    assert res.status == "partial"
    assert S([62, 962]) <= res.lower
    assert APSet.interval(448, 576, 2) <= res.lower
    assert S(tables.RM_5_10_SUMSET_PART) <= res.lower
    assert res.gap.isdisjoint(res.lower)


@pytest.mark.criterion(10, "MacWilliams of RM(1,m) gives all evens but 2, 2^m-2; m=4 matches RM(2,4)")
def test_criterion_10():
    for m in range(4, 11):
        n = 1 << m
        dist = macwilliams_transform(rm_first_order_distribution(m), m + 1)
        assert dist.spectrum() == APSet.interval(0, n, 2) - S([2, n - 2])
    assert macwilliams_transform(rm_first_order_distribution(4), 5) == weight_distribution(rm_code(2, 4))


def _apset_oracle():
    seg = st.tuples(st.integers(0, 100), st.integers(1, 7), st.integers(1, 10)).map(lambda t: Segment(*t))
    sets = st.lists(seg, max_size=4).map(APSet.from_segments)

    @settings(max_examples=1000, deadline=None, database=None)
    @given(sets, sets)
    def check(a, b):
        sa, sb = set(a), set(b)
        assert set(a | b) == sa | sb
        assert set(a & b) == sa & sb
        assert set(a - b) == sa - sb
        assert set(a + b) == {x + y for x in sa for y in sb}
        if sa:
            n = max(sa)
            assert set(a.reflect(n)) == {n - x for x in sa}

    check()


def _gray_oracle():
    codes = [rm_code(r, m) for m in range(8) for r in range(m + 1) if rm_dimension(r, m) <= 14]
    codes += [bch_code(15, 5), bch_code(31, 11), extended_bch_code(15, 5)]
    rng = np.random.default_rng(11)
    codes += [
        LinearCode.span(BitMatrix.from_array(rng.integers(0, 2, (k, n), dtype=np.uint8)))
        for k, n in [(6, 20), (10, 70), (14, 150)]
    ]
    for code in codes:
        assert code.dimension <= 14
        assert weight_distribution(code) == naive_distribution(code)


def _audit():
    for m in range(1, 17):
        for r in range(1, m + 1):
            if rm_dimension(r, m) > 26:
                continue
            spec = weight_spectrum(rm_code(r, m), threads=4)
            e = mceliece_exponent(r, m)
            assert all(w % (1 << e) == 0 for w in spec)
            assert any(w % (1 << (e + 1)) == 1 << e for w in spec)
            assert spec.reflect(1 << m) == spec
            d = 1 << (m - r)
            allowed = {(1 << (m - r + 1)) - (1 << i) for i in range(m - r + 1)}
            assert set(spec.restrict(d, 2 * d - 1)) <= allowed


def _witnesses():
    for m in range(3, 17):
        for r in range(2, m):
            allowed = kt_admissible(r, m)
            got = {kt_witness(r, m, fam, l).weight() for fam, l in kt_witness_parameters(r, m)}
            assert S(got) == allowed


@pytest.mark.criterion(11, "property suite: APSet oracle, Gray vs naive, divisibility audits, witnesses")
def test_criterion_11():
    _apset_oracle()
    _gray_oracle()
    _audit()
    _witnesses()


@pytest.mark.criterion(12, "conjecture conforms for c=1..4, m <= 20; inconclusive for c=5, m=10")
def test_criterion_12():
    for c in (1, 2, 3, 4):
        for m in range(2 * c, 21):
            assert conjecture_check(c, m).status == "conforms", (c, m)
    assert conjecture_check(5, 10).status == "inconclusive"


@pytest.mark.criterion(13, "stretch: RM(5,10) ∩ ext-BCH(1023,157) contains every even weight in [448,576]")
def test_criterion_13():
    code = rm_code(5, 10).intersect(extended_bch_code(1023, 157))
    if code.dimension > 28:
        pytest.skip(f"intersection dimension {code.dimension} > 28")
    spec = weight_spectrum(code, threads=4)
    assert APSet.interval(448, 576, 2) <= spec


def test_verify_suite_passes_with_heavy_checks():
    report = run_checks(heavy=True, threads=4)
    assert report.ok, report.to_text()
    assert all(r.outcome == "PASS" for r in report.results), report.to_text()
