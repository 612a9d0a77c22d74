import pytest
from hypothesis import given, settings

from src.compression import borel_ideal, initial_segment, is_compressed, is_shifted
from src.errors import PreconditionError
from src.inc_action import apply_pi, comb_shift, inc_image_family, inc_image_set, inc_iterate, inc_orbit
from src.sets import DSet, Family, shift_by
from tests.strategies import dsets, fam, families


def u(*elements):
    return DSet.of(*elements)


def brute_inc(family: Family) -> Family:
    """π_i 逐个作用，i 取 1..max+1 以外的都是恒等"""
    top = max((v.last for v in family.members), default=0)
    return Family.of(family.d, [apply_pi(i, v) for v in family.members for i in range(1, top + 2)])


@pytest.mark.parametrize(
    "i, expected",
    [(2, (1, 3, 5)), (5, (1, 2, 4)), (1, (2, 3, 5)), (3, (1, 2, 5))],
)
def test_apply_pi(i, expected):
    assert apply_pi(i, u(1, 2, 4)).elements == expected


def test_apply_pi_rejects_zero():
    with pytest.raises(PreconditionError):
        apply_pi(0, u(1, 2))


def test_inc_image_set_examples():
    assert inc_image_set(u(1, 2, 4)) == fam(3, (1, 2, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5))
    assert inc_image_set(u(1, 3, 5)) == fam(3, (1, 3, 5), (1, 3, 6), (1, 4, 6), (2, 4, 6))
    assert inc_image_set(u(3)) == fam(1, (3,), (4,))


def test_inc_image_family_worked_example():
    family = fam(3, (1, 2, 4), (1, 3, 5))
    extra = fam(3, (1, 2, 5), (2, 3, 5), (1, 3, 6), (1, 4, 6), (2, 4, 6))
    assert inc_image_family(family) == family.union(extra)
    assert len(inc_image_family(family)) == 7


def test_inc_image_family_small_cases():
    assert inc_image_family(Family(3)) == Family(3)
    assert inc_image_family(fam(3, (1, 2, 3))) == fam(3, (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


@given(dsets(3))
def test_inc_image_set_has_d_plus_one_members(v):
    assert len(inc_image_set(v)) == 4
    assert v in inc_image_set(v)


@given(families(3))
@settings(max_examples=50)
def test_inc_image_matches_pi_route(family):
    assert inc_image_family(family) == brute_inc(family)


@given(families(3, max_elem=7), families(3, max_elem=7))
@settings(max_examples=60)
def test_inc_is_monotone_and_preserves_unions(first, second):
    both = first.union(second)
    assert inc_image_family(first).issubset(inc_image_family(both))
    assert inc_image_family(both) == inc_image_family(first).union(inc_image_family(second))


@given(dsets(3, max_elem=8))
@settings(max_examples=50)
def test_segment_and_borel_lemmas(v):
    assert inc_image_family(initial_segment(v)) == initial_segment(shift_by(v, 1))
    assert inc_image_family(borel_ideal(v)) == borel_ideal(shift_by(v, 1))


@given(dsets(3, max_elem=7))
@settings(max_examples=30)
def test_inc_preserves_structure(v):
    assert is_compressed(inc_image_family(initial_segment(v)))
    assert is_shifted(inc_image_family(borel_ideal(v)))


def test_comb_shift_examples():
    assert comb_shift(2, fam(2, (2, 3))) == fam(2, (1, 3))
    assert comb_shift(2, fam(2, (2, 3), (1, 3))) == fam(2, (2, 3), (1, 3))
    assert comb_shift(4, fam(3, (1, 2, 3))) == fam(3, (1, 2, 3))


def test_comb_shift_rejects_small_i():
    with pytest.raises(PreconditionError):
        comb_shift(1, fam(2, (1, 2)))


@given(families(2, max_elem=6))
@settings(max_examples=50)
def test_comb_shift_preserves_size(family):
    for i in range(2, 8):
        assert len(comb_shift(i, family)) == len(family)


def test_inc_iterate():
    assert inc_iterate(fam(2, (1, 2)), 0) == fam(2, (1, 2))
    assert inc_iterate(fam(2, (1, 2)), 1) == fam(2, (1, 2), (1, 3), (2, 3))
    assert inc_iterate(Family(2), 5) == Family(2)
    with pytest.raises(PreconditionError):
        inc_iterate(fam(2, (1, 2)), -1)


def test_inc_iterate_of_minimum_is_segment():
    # Inc^t({(1,..,d)}) = C((t+1,...,t+d))
    assert inc_iterate(fam(2, (1, 2)), 3) == initial_segment(u(4, 5))


def test_inc_orbit():
    assert inc_orbit(u(1, 3), 1, 2) == fam(2, (2, 4), (1, 4))
    assert inc_orbit(u(1, 3), 4, 6) == fam(2, (1, 3))
    with pytest.raises(PreconditionError):
        inc_orbit(u(1, 3), 3, 2)
