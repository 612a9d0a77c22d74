from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.compression import first_sets
from src.errors import BinomialOverflowError, PreconditionError
from src.inc_action import inc_image_family
from src.numeric import (
    ChainViolation,
    FVector,
    FVectorChain,
    KKViolation,
    chain_feasible,
    inc_num,
    kk_feasible,
    shadow_num,
)
from src.sets import MAX_BINOMIAL, shadow


@pytest.mark.parametrize("m, d, expected", [(0, 3, 0), (2, 3, 5), (7, 3, 9), (1, 2, 2), (4, 1, 1)])
def test_shadow_num(m, d, expected):
    assert shadow_num(m, d) == expected


@pytest.mark.parametrize("m, d, expected", [(0, 3, 0), (2, 2, 5), (7, 3, 16), (1, 3, 4), (5, 1, 6)])
def test_inc_num(m, d, expected):
    assert inc_num(m, d) == expected


@pytest.mark.parametrize("d", [2, 3, 4])
def test_numeric_matches_segments(d):
    for m in range(0, 400):
        segment = first_sets(d, m)
        assert shadow_num(m, d) == len(shadow(segment))
        assert inc_num(m, d) == len(inc_image_family(segment))


@pytest.mark.slow
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_numeric_matches_segments_exhaustive(d):
    for m in range(0, 2001):
        segment = first_sets(d, m)
        if d > 1:
            assert shadow_num(m, d) == len(shadow(segment))
        assert inc_num(m, d) == len(inc_image_family(segment))


@given(st.integers(1, 6), st.integers(0, 5000))
def test_inc_num_is_monotone(d, m):
    assert inc_num(m + 1, d) > inc_num(m, d)
    assert inc_num(m, d) >= m


def test_overflow():
    with pytest.raises(BinomialOverflowError):
        inc_num(MAX_BINOMIAL, 1)


class TestFVector:
    def test_rejects_negative(self):
        with pytest.raises(PreconditionError):
            FVector.of(1, -1)

    def test_count_and_top(self):
        f = FVector.of(3, 3, 0)
        assert f.count(1) == 3 and f.count(2) == 3 and f.count(3) == 0 and f.count(7) == 0
        assert f.top == 2
        assert str(f) == "(3,3)"

    def test_trailing_zeros_are_dropped(self):
        assert FVector.of(2, 0) == FVector.of(2)
        assert FVector.of(0, 0) == FVector()
        assert hash(FVector.of(3, 1, 0, 0)) == hash(FVector.of(3, 1))
        assert len(FVector.of(3, 1, 0)) == 2

    def test_kk_examples(self):
        assert kk_feasible(FVector.of(3, 3, 1))
        assert kk_feasible(FVector.of(0, 0, 0))
        assert kk_feasible(FVector())
        result = kk_feasible(FVector.of(1, 1))
        assert not result
        assert result.violation == KKViolation(d=2, shadow=2, available=1)


class TestChains:
    def test_full_simplex_chain(self):
        chain = FVectorChain(tuple(FVector(tuple(comb(n, d) for d in range(1, n + 1))) for n in range(1, 6)))
        assert chain_feasible(chain)

    def test_growth_violation(self):
        result = chain_feasible(FVectorChain((FVector.of(2), FVector.of(2))))
        assert not result
        assert result.violation == ChainViolation(n=1, d=1, kind="growth", required=3, actual=2)

    def test_single_vector(self):
        assert chain_feasible(FVectorChain((FVector.of(3, 3, 1),)))

    def test_kk_reported_before_growth_at_same_grade(self):
        result = chain_feasible(FVectorChain((FVector.of(2, 1), FVector.of(3, 0))))
        assert result.violation == ChainViolation(n=1, d=2, kind="growth", required=3, actual=0)
        # f_1 = (1, 1) 在 d=2 上同时违反两条
        result = chain_feasible(FVectorChain((FVector.of(1, 1), FVector.of(2, 0))))
        assert result.violation.kind == "kruskal_katona" and result.violation.d == 2

    def test_empty_chain_rejected(self):
        with pytest.raises(PreconditionError):
            FVectorChain(())

    def test_one_based_index(self):
        chain = FVectorChain(((1,), (2,)))
        assert chain[1] == FVector.of(1)
        assert chain[2] == FVector.of(2)
