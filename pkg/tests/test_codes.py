import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmspectra.codes import (
    DEFAULT_PRIMITIVE,
    BooleanFunction,
    ExtField,
    bch_code,
    bch_spec,
    cyclotomic_cosets,
    extended_bch_code,
    extended_bch_rm_aligned,
    minimal_polynomial,
    poly_divmod,
    poly_mul,
    rm_code,
    rm_dimension,
)
from rmspectra.gf2 import BitVector


def brute_eval(f: BooleanFunction) -> list[int]:
    out = []
    for p in range(1 << f.m):
        x = [(p >> j) & 1 for j in range(f.m)]
        v = 0
        for mono in f.monomials:
            v ^= all(x[j] for j in range(f.m) if mono >> j & 1)
        out.append(int(v))
    return out


functions = st.integers(1, 6).flatmap(
    lambda m: st.sets(st.integers(0, (1 << m) - 1), max_size=8).map(
        lambda monos: BooleanFunction(m, frozenset(monos))
    )
)


@settings(max_examples=200, deadline=None)
@given(functions)
def test_evaluation_matches_pointwise_definition(f):
    assert f.truth_table().tolist() == brute_eval(f)
    assert f.evaluate() == BitVector.from_bits(brute_eval(f))
    assert BooleanFunction.parse(str(f), f.m) == f


@settings(max_examples=100, deadline=None)
@given(functions, functions)
def test_ring_operations(f, g):
    if f.m != g.m:
        return
    a, b = np.array(brute_eval(f)), np.array(brute_eval(g))
    assert (f + g).truth_table().tolist() == (a ^ b).tolist()
    assert (f * g).truth_table().tolist() == (a & b).tolist()


def test_point_ordering():
    # point i is the integer i; bit j of i is x_{j+1}
    assert BooleanFunction.parse("x1", 3).truth_table().tolist() == [0, 1, 0, 1, 0, 1, 0, 1]
    assert BooleanFunction.parse("x3", 3).truth_table().tolist() == [0, 0, 0, 0, 1, 1, 1, 1]
    assert BooleanFunction.parse("1 + x1*x2", 2).weight() == 3
    assert str(BooleanFunction.parse("x2*x1 + x1*x2")) == "0"


@pytest.mark.parametrize("m", range(0, 9))
def test_rm_dimensions(m):
    for r in range(m + 1):
        code = rm_code(r, m)
        assert code.n == 1 << m
        assert code.dimension == rm_dimension(r, m) == sum(math.comb(m, i) for i in range(r + 1))


@pytest.mark.parametrize("m", range(1, 11))
def test_rm_duality(m):
    for r in range(m):
        dual = rm_code(r, m).dual()
        other = rm_code(m - r - 1, m)
        assert dual.dimension == other.dimension
        assert other.is_subcode_of(dual)


def test_rm_nesting():
    for r in range(5):
        assert rm_code(r, 5).is_subcode_of(rm_code(r + 1, 5))


@pytest.mark.parametrize(
    "n, expected",
    [
        (7, [[0], [1, 2, 4], [3, 6, 5]]),
        (15, [[0], [1, 2, 4, 8], [3, 6, 12, 9], [5, 10], [7, 14, 13, 11]]),
    ],
)
def test_cyclotomic_cosets(n, expected):
    assert cyclotomic_cosets(n) == expected


def test_cosets_need_odd_length():
    with pytest.raises(ValueError):
        cyclotomic_cosets(8)


def test_minimal_polynomials_gf16():
    f = ExtField(4)
    assert minimal_polynomial(f, 1) == 0b10011
    assert minimal_polynomial(f, 3) == 0b11111
    assert minimal_polynomial(f, 5) == 0b111
    assert minimal_polynomial(f, 7) == 0b11001
    for e in range(15):
        assert f.poly_eval(minimal_polynomial(f, e), f.alpha_pow(e)) == 0


@pytest.mark.parametrize("t", sorted(DEFAULT_PRIMITIVE))
def test_default_polynomials_are_primitive(t):
    f = ExtField(t)
    assert len({f.alpha_pow(i) for i in range(f.order)}) == f.order


def test_non_primitive_polynomial_is_rejected():
    with pytest.raises(ValueError):
        ExtField(4, 0b11111)


@pytest.mark.parametrize("a, b", [(0b1011, 0b111), (0b110101, 0b1101), (1, 0b101)])
def test_polynomial_division(a, b):
    prod = poly_mul(a, b)
    q, r = poly_divmod(prod ^ 1, b)
    assert poly_mul(q, b) ^ r == prod ^ 1
    assert r.bit_length() < b.bit_length()


def test_bch_15_5():
    code = bch_code(15, 5)
    assert code.dimension == 7
    assert min(w.weight() for w in itertools.islice(code.codewords(), 1, None)) == 5


@pytest.mark.parametrize("n, d", [(15, 5), (31, 7), (63, 9), (255, 19)])
def test_bch_codewords_vanish_at_designed_roots(n, d):
    spec = bch_spec(n, d)
    f = spec.gf
    rng = np.random.default_rng(n)
    code = bch_code(n, d)
    for _ in range(5):
        msg = int(rng.integers(1, 1 << min(code.dimension, 60)))
        word = code.encode(msg).to_int()
        for j in range(1, d):
            assert f.poly_eval(word, f.alpha_pow(j)) == 0


def test_extended_bch_is_even():
    code = extended_bch_code(31, 7)
    assert code.n == 32
    assert all(g.weight() % 2 == 0 for g in code.generators)


@pytest.mark.parametrize("r, t", [(1, 4), (2, 5), (3, 6), (3, 8)])
def test_aligned_extension_contains_rm(r, t):
    n = (1 << t) - 1
    aligned = extended_bch_rm_aligned(n, (1 << (t - r)) - 1)
    assert rm_code(r, t).is_subcode_of(aligned)


def test_unaligned_extension_meets_rm38_in_dimension_26():
    assert rm_code(3, 8).intersect(extended_bch_code(255, 19)).dimension == 26
