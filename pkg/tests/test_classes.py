from collections import Counter

import pytest
from hypothesis import given, strategies as st

from trafficmerge import ResourceLimitError, class_of, class_size, partition, simulate

from reference import CLASS_EIGHT_VECTORS_6, CLASS_FOUR_REPRESENTATIVES_6, CLASS_SIZE_HISTOGRAM_6


def test_size_eight_example():
    cls = class_of("010100")
    assert cls.size == 8
    assert cls.right_lane_vector == (1, 3, 5, 6)


def test_all_red_class():
    cls = class_of("000000")
    assert {str(m) for m in cls.members} == {"000000", "100000"}


@pytest.mark.parametrize("bits, size", [("001100", 4), ("010101", 8), ("010010", 4), ("0", 2), ("1", 2)])
def test_class_size(bits, size):
    assert class_size(bits) == size
    assert class_of(bits).size == size


def test_length_six_partition():
    parts = partition(6)
    assert len(parts) == 20
    assert Counter(c.size for c in parts) == CLASS_SIZE_HISTOGRAM_6
    assert {str(c.representative) for c in parts if c.size == 4} == CLASS_FOUR_REPRESENTATIVES_6
    assert {c.right_lane_vector for c in parts if c.size == 8} == CLASS_EIGHT_VECTORS_6


def test_length_one_partition():
    parts = partition(1)
    assert len(parts) == 1 and parts[0].size == 2


def test_length_ten_partition():
    parts = partition(10)
    assert sum(c.size for c in parts) == 1024
    assert all(c.size & (c.size - 1) == 0 for c in parts)


def test_partition_cap():
    with pytest.raises(ResourceLimitError):
        partition(21)


@given(st.text(alphabet="01", min_size=1, max_size=14))
def test_members_share_right_lane(text):
    cls = class_of(text)
    assert cls.size == 2 ** len(simulate(text).touch_positions)
    assert cls.size % 2 == 0
    assert all(simulate(m).right_lane == cls.right_lane_vector for m in cls.members)


def test_to_dict():
    d = class_of("001100").to_dict()
    assert d["size"] == 4 and d["touch_vector"] == [1, 5]
