import pytest

from rmspectra import tables
from rmspectra.apset import APSet
from rmspectra.codes import BooleanFunction, rm_code, rm_dimension
from rmspectra.enumeration import weight_spectrum
from rmspectra.spectra import (
    BaselineTable,
    UnsupportedCodeError,
    baseline_for,
    baseline_table,
    closed_form_m_minus_3,
    closed_form_m_minus_4,
    conjecture_check,
    derive_spectrum,
    kt_admissible,
    kt_witness,
    kt_witness_parameters,
    lower_bound,
    mceliece_exponent,
    sandwich,
    upper_bound,
    witness_search,
)

# every RM(r, m) small enough to enumerate, restricted to m <= 16 so the
# codeword length stays at most 2^16 bits
AUDIT_CODES = [
    (r, m) for m in range(1, 17) for r in range(1, m + 1) if rm_dimension(r, m) <= 26
]


@pytest.fixture(scope="module")
def exhaustive():
    return {rm: weight_spectrum(rm_code(*rm), threads=4) for rm in AUDIT_CODES}


@pytest.mark.parametrize("r, m", AUDIT_CODES)
def test_divisibility_and_kasami_tokura_audit(exhaustive, r, m):
    spec = exhaustive[(r, m)]
    n = 1 << m
    e = mceliece_exponent(r, m)
    assert all(w % (1 << e) == 0 for w in spec)
    assert any(w % (1 << (e + 1)) == 1 << e for w in spec)
    assert spec.reflect(n) == spec
    d = 1 << (m - r)
    for w in spec.restrict(d, 2 * d - 1):
        assert any(w == (1 << (m - r + 1)) - (1 << i) for i in range(m - r + 1))
    if 2 <= r <= m - 1:
        assert spec.restrict(d, 2 * d - 1) == kt_admissible(r, m).restrict(d, 2 * d - 1)
        assert spec <= upper_bound(r, m)


@pytest.mark.parametrize("r, m", AUDIT_CODES)
def test_derivation_agrees_with_enumeration(exhaustive, r, m):
    res = derive_spectrum(r, m)
    assert res.proven
    assert res.spectrum == exhaustive[(r, m)]


@pytest.mark.parametrize("m", range(3, 17))
def test_witnesses_realise_admissible_weights(m):
    for r in range(2, m):
        allowed = kt_admissible(r, m)
        weights = set()
        for family, l in kt_witness_parameters(r, m):
            f = kt_witness(r, m, family, l)
            assert f.degree == r
            w = f.weight()
            assert w in allowed
            assert w == (1 << (m - r + 1)) - (1 << (m - r + 1 - l))
            weights.add(w)
        assert APSet.from_values(weights) == allowed


@pytest.mark.parametrize(
    "r, m, expected",
    [
        (3, 7, [16, 24, 28]),
        (4, 9, [32, 48, 56, 60]),
        (3, 8, [32, 48, 56]),
        (5, 10, [32, 48, 56, 60, 62]),
    ],
)
def test_kasami_tokura_sets(r, m, expected):
    assert kt_admissible(r, m) == APSet.from_values(expected)


@pytest.mark.parametrize("m", range(6, 21))
def test_kasami_tokura_for_m_minus_3(m):
    assert kt_admissible(m - 3, m) == APSet.from_values([8, 12, 14])


def test_witness_parameter_validation():
    with pytest.raises(ValueError):
        kt_witness(3, 7, "B", 2)
    with pytest.raises(ValueError):
        kt_witness(3, 7, "A", 4)
    with pytest.raises(ValueError):
        kt_witness(3, 7, "C", 1)


def test_upper_bound_rm37():
    ub = upper_bound(3, 7)
    excluded = APSet.interval(0, 128, 4) - ub
    assert excluded == APSet.from_values([4, 8, 12, 20, 108, 116, 120, 124])


def test_baselines_are_consistent():
    for name in ("rm_2_6", "rm_2_7", "rm_3_6", "rm_4_8", "rm_3_8"):
        table = baseline_table(name)
        assert baseline_for(table.r, table.m) is table
    assert len(baseline_table("rm_3_6").spectrum) == 25
    assert len(baseline_table("rm_3_8").spectrum) == 41
    with pytest.raises(KeyError):
        baseline_table("rm_9_9")


def test_baseline_validation():
    with pytest.raises(ValueError):
        BaselineTable("bad", 2, 6, APSet.from_values([0, 16, 64]), "test")
    with pytest.raises(ValueError):
        BaselineTable("bad", 2, 6, APSet.from_values([0, 4, 60, 64]), "test")


@pytest.mark.parametrize("m", range(6, 21))
def test_closed_form_m_minus_3_chain(m):
    res = derive_spectrum(m - 3, m)
    assert res.proven and res.spectrum == closed_form_m_minus_3(m)


@pytest.mark.parametrize("m", range(8, 21))
def test_closed_form_m_minus_4_chain(m):
    res = derive_spectrum(m - 4, m)
    assert res.proven and res.spectrum == closed_form_m_minus_4(m)


def test_closed_forms_need_large_m():
    with pytest.raises(ValueError):
        closed_form_m_minus_3(5)
    with pytest.raises(ValueError):
        closed_form_m_minus_4(7)


def test_sandwich_rm37_provenance():
    res = sandwich(3, 7, [baseline_table("rm_2_6")])
    assert res.proven
    assert res.bound.source_of(0) == "trivial"
    assert res.bound.source_of(44) == "sumset"
    assert res.bound.source_of(999) is None
    js = res.to_json()
    assert js["status"] == "proven" and js["gap"]["cardinality"] == 0


def test_lower_bound_source_priority():
    # a cited table never claims a weight that a computation already proves
    lower, prov = lower_bound(3, 8, [baseline_table("rm_2_7"), baseline_table("rm_3_8")])
    by_source = {p.source: p.weights for p in prov}
    assert "sumset" in by_source
    assert by_source["baseline"].isdisjoint(by_source["sumset"])
    assert lower == baseline_table("rm_3_8").spectrum


def test_sandwich_rejects_impossible_lower_set():
    with pytest.raises(ValueError):
        sandwich(3, 7, extra=APSet.from_values([4]))


def test_rm38_is_proven_without_the_cited_table():
    res = derive_spectrum(3, 8)
    assert res.proven
    assert res.spectrum == APSet.from_values(tables.RM_3_8)
    assert "baseline" not in {p.source for p in res.bound.provenance}
    assert any("RM(2,7)" in note for note in res.notes)


def test_rm49():
    res = derive_spectrum(4, 9)
    assert res.proven
    assert res.spectrum == APSet.from_values(tables.SUMSET_RM_3_8) | APSet.from_values([60, 452])


def test_rm510_is_partial():
    res = derive_spectrum(5, 10)
    assert not res.proven
    assert {62, 962} <= set(res.lower)
    assert APSet.interval(448, 576, 2) <= res.lower
    assert APSet.from_values(tables.RM_5_10_SUMSET_PART) <= res.lower
    assert res.gap.isdisjoint(res.lower)
    assert 66 in res.gap
    with pytest.raises(ValueError):
        res.spectrum


def test_unsupported_codes_name_the_missing_base():
    with pytest.raises(UnsupportedCodeError, match=r"RM\(2,8\)"):
        derive_spectrum(4, 10)


def test_trivial_orders():
    assert derive_spectrum(0, 5).spectrum == APSet.from_values([0, 32])
    assert derive_spectrum(1, 5).spectrum == APSet.from_values([0, 16, 32])
    assert derive_spectrum(5, 5).spectrum == APSet.interval(0, 32)
    assert derive_spectrum(13, 14).spectrum == APSet.interval(0, 1 << 14, 2)
    n = 1 << 15
    assert derive_spectrum(13, 15).spectrum == APSet.interval(0, n, 2) - APSet.from_values([2, n - 2])


@pytest.mark.parametrize("target", [76, 84, 100, 164])
def test_witness_search_finds_rm38_weights(target):
    f = witness_search(3, 8, target)
    assert f is not None
    assert f.degree <= 3 and f.weight() == target


def test_witness_search_is_deterministic():
    a = witness_search(3, 8, 92, seed=5)
    b = witness_search(3, 8, 92, seed=5)
    assert a == b


def test_witness_search_cannot_find_excluded_weight():
    assert witness_search(2, 6, 20, budget=2000) is None


def test_witness_search_constants():
    assert witness_search(2, 4, 0) == BooleanFunction(4)
    assert witness_search(2, 4, 16).weight() == 16


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_conjecture_conforms(c):
    for m in range(2 * c, 21):
        rep = conjecture_check(c, m)
        assert rep.status == "conforms", (m, rep.reasons)


def test_conjecture_parts_c3():
    rep = conjecture_check(3, 10)
    assert rep.low_part == APSet.from_values([8, 12, 14])
    assert rep.mid_part == APSet.interval(16, 22, 2)
    assert rep.central_part == APSet.interval(24, 1000, 2)


def test_conjecture_open_case():
    rep = conjecture_check(5, 10)
    assert rep.status == "inconclusive"
    assert rep.gap


def test_conjecture_precondition():
    conjecture_check(4, 9)
    with pytest.raises(ValueError):
        conjecture_check(4, 7)


def test_conjecture_with_wrong_b_set():
    rep = conjecture_check(3, 10, APSet.from_values([16]))
    assert rep.status == "nonconforming"
