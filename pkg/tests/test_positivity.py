import pytest
from hypothesis import given
from hypothesis import strategies as st

from ellsurf import (
    NumClass,
    SurfaceModel,
    class_all_bpf,
    is_ample,
    is_ample_and_all_bpf,
    positivity_report,
    special_bpf_members,
)

coords = st.integers(min_value=-1000, max_value=1000)
surfaces = st.sampled_from([SurfaceModel(e) for e in (-1, 0, 1, 2)])


@pytest.mark.parametrize(
    "c, e, expected",
    [
        ((1, 0), -1, True),
        ((2, 1), 0, True),
        ((3, -2), -1, False),   # a + 2b = -1
        ((3, -1), -1, True),    # a + 2b = 1
        ((0, 9), -1, False),
        ((1, 1), 1, False),     # b - ae = 0
        ((1, 2), 1, True),
        ((2, 4), 2, False),
        ((2, 5), 2, True),
    ],
)
def test_is_ample(c, e, expected):
    assert is_ample(NumClass(*c), SurfaceModel(e)) is expected


@pytest.mark.parametrize(
    "c, e, expected",
    [
        ((0, 2), -1, True),
        ((2, 0), -1, True),
        ((1, 1), -1, True),
        ((2, -1), -1, False),   # a + 2b = 0
        ((3, -1), -1, False),   # a + b = 2 but a + 2b = 1
        ((4, -2), -1, False),
        ((0, 1), -1, False),
        ((0, 2), 0, True),
        ((1, 3), 1, True),
        ((1, 2), 1, False),
        ((-1, 8), 0, False),
    ],
)
def test_class_all_bpf(c, e, expected):
    assert class_all_bpf(NumClass(*c), SurfaceModel(e)) is expected


@pytest.mark.parametrize(
    "c, e, expected",
    [
        ((1, 1), -1, True),
        ((0, 2), -1, False),    # all bpf but not ample
        ((1, 3), 1, True),
        ((1, 2), 1, False),
    ],
)
def test_is_ample_and_all_bpf(c, e, expected):
    assert is_ample_and_all_bpf(NumClass(*c), SurfaceModel(e)) is expected


@given(surfaces, coords, coords)
def test_conjunction(s, a, b):
    c = NumClass(a, b)
    assert is_ample_and_all_bpf(c, s) == (is_ample(c, s) and class_all_bpf(c, s))


@given(surfaces, coords, coords)
def test_bpf_with_positive_a_is_ample(s, a, b):
    c = NumClass(a, b)
    if class_all_bpf(c, s) and a >= 1:
        assert is_ample(c, s)


@given(surfaces, coords, coords, coords, coords)
def test_sum_closure_of_ample_bpf(s, a1, b1, a2, b2):
    c1, c2 = NumClass(a1, b1), NumClass(a2, b2)
    if is_ample_and_all_bpf(c1, s) and is_ample_and_all_bpf(c2, s):
        assert class_all_bpf(c1 + c2, s)


@given(surfaces, coords, coords, coords, coords)
def test_sum_of_amples_is_ample_and_bpf(s, a1, b1, a2, b2):
    c1, c2 = NumClass(a1, b1), NumClass(a2, b2)
    if is_ample(c1, s) and is_ample(c2, s):
        assert is_ample_and_all_bpf(c1 + c2, s)


def test_special_members_on_negative_invariant():
    s = SurfaceModel(-1)
    members = special_bpf_members(NumClass(4, -2), s)
    assert len(members) == 1
    assert members[0].multiple == 2
    assert special_bpf_members(NumClass(2, -1), s) == []   # odd multiple
    assert special_bpf_members(NumClass(6, -3), s) == []
    assert len(special_bpf_members(NumClass(8, -4), s)) == 1
    assert special_bpf_members(NumClass(1, 1), s) == []    # inside the region
    assert special_bpf_members(NumClass(0, 0), s) == []


def test_special_members_on_nonnegative_invariant():
    members = special_bpf_members(NumClass(2, 2), SurfaceModel(1))
    assert len(members) == 1 and members[0].multiple == 2
    assert special_bpf_members(NumClass(2, 3), SurfaceModel(1)) == []
    product = special_bpf_members(NumClass(3, 0), SurfaceModel(0))
    assert len(product) == 1 and "product" in product[0].note
    assert special_bpf_members(NumClass(3, 1), SurfaceModel(0)) == []


@given(surfaces, coords, coords)
def test_special_members_sit_outside_the_bpf_region(s, a, b):
    c = NumClass(a, b)
    if special_bpf_members(c, s):
        assert not class_all_bpf(c, s)


def test_invariants_exhaustive_small_window():
    for e in (-1, 0, 1, 2):
        s = SurfaceModel(e)
        for a in range(-60, 61):
            for b in range(-60, 61):
                c = NumClass(a, b)
                assert is_ample_and_all_bpf(c, s) == (is_ample(c, s) and class_all_bpf(c, s))
                if class_all_bpf(c, s) and a >= 1:
                    assert is_ample(c, s)


def test_positivity_report_consistency():
    s = SurfaceModel(-1)
    report = positivity_report(NumClass(1, 1), s)
    assert report.ample and report.all_members_bpf and report.ample_and_all_bpf
    report = positivity_report(NumClass(4, -2), s)
    assert not report.ample and len(report.special_bpf_members) == 1
