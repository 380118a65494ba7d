import pytest
from hypothesis import given, strategies as st

from trafficmerge import ArrivalSequence, Step, ValidationError, merging_path, parity_vector, simulate, touch_positions

bit_strings = st.text(alphabet="01", max_size=40)


def test_fig_one_sequence():
    res = simulate("00111001")
    assert res.right_lane == (1, 2, 5, 6, 7)
    assert res.r == 5
    assert res.bounce_positions == (5,)
    assert res.endpoint == (3, 5)


def test_empty_sequence():
    res = simulate("")
    assert res.right_lane == res.left_lane == res.bounce_positions == res.touch_positions == ()
    assert res.endpoint == (0, 0)
    assert len(res.parity) == 0


def test_colour_blind_pair():
    assert simulate("11110").right_lane == (1, 3, 5)
    assert simulate("01110").right_lane == (1, 3, 5)


def test_hand_replay():
    # 1: tie, bounce right; 2: left; 3: tie, red right; 4: left; 5: tie, red right; 6: red right
    res = simulate("110100")
    assert res.right_lane == (1, 3, 5, 6)
    assert res.left_lane == (2, 4)
    assert res.touch_positions == (1, 3, 5)
    assert res.bounce_positions == (1,)


@pytest.mark.parametrize(
    "bits, parity",
    [("01110111", "00011110"), ("1001110011", "0111111111"), ("0000000", "0000000")],
)
def test_parity_vector(bits, parity):
    assert str(parity_vector(bits)) == parity


def test_merging_path_fig_one():
    assert str(merging_path("00111001")) == "U,U,R,R,U*,U,U,R"


def test_single_red_path():
    assert merging_path("0").steps == (Step.UP,)


def test_two_bounce_path_sources():
    path = merging_path("010011101111")
    points = path.points()
    sources = [points[i] for i, step in enumerate(path.steps) if step is Step.UP_BOUNCE]
    assert sources == [(3, 3), (5, 5)]
    assert simulate("010011101111").bounce_positions == (7, 11)


@pytest.mark.parametrize("bits, touches", [("111100", (1, 3, 5)), ("001100", (1, 5)), ("0000", (1,))])
def test_touches(bits, touches):
    assert touch_positions(bits) == touches


@pytest.mark.parametrize("text", ["0120", "abc", "1 0"])
def test_malformed_input(text):
    with pytest.raises(ValidationError):
        simulate(text)


def test_int_round_trip():
    seq = ArrivalSequence.parse("1101")
    assert seq.to_int() == 0b1011
    assert ArrivalSequence.from_int(seq.to_int(), 4) == seq
    with pytest.raises(ValidationError):
        ArrivalSequence.from_int(16, 4)


def test_to_dict_shape():
    d = simulate("00111001").to_dict()
    assert set(d) == {"right_lane", "left_lane", "bounce_positions", "touch_positions", "parity", "endpoint"}
    assert d["parity"] == "00000111"


@given(bit_strings)
def test_lanes_partition_cars(text):
    res = simulate(text)
    assert sorted(res.right_lane + res.left_lane) == list(range(1, len(text) + 1))
    n, m = res.endpoint
    assert m >= n and n + m == len(text)


@given(bit_strings)
def test_path_stays_weakly_above_diagonal(text):
    points = merging_path(text).points()
    assert all(y >= x for x, y in points)
    assert points[-1] == simulate(text).endpoint


@given(bit_strings)
def test_bounces_are_green_touches(text):
    res = simulate(text)
    assert set(res.bounce_positions) <= set(res.touch_positions)
    assert all(text[i - 1] == "1" for i in res.bounce_positions)
    # the rightmost car in the right lane wins every tie, so car 1 always touches
    if text:
        assert res.touch_positions[0] == 1


@given(bit_strings)
def test_parity_toggles_after_bounces(text):
    res = simulate(text)
    p = res.parity.bits
    for i in range(1, len(p)):
        assert (p[i] != p[i - 1]) == (i in res.bounce_positions)
