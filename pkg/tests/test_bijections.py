import pytest
from hypothesis import given, strategies as st

from trafficmerge import CoinSequence, DomainError, ValidationError, max_heads_tails, phi, phi_inverse, psi, psi_inverse, simulate, step_map, step_map_inverse
from trafficmerge.bijections import parity_from_coins

from reference import COIN_ROWS

bit_strings = st.text(alphabet="01", max_size=30)


@pytest.mark.parametrize("b", sorted(COIN_ROWS))
def test_coin_rows(b):
    r, parity, coins, top = COIN_ROWS[b]
    res = simulate(b)
    assert res.r == r
    assert str(res.parity) == parity
    assert str(phi(b)) == coins
    assert max_heads_tails(coins) == top
    assert str(phi_inverse(coins)) == b


@pytest.mark.parametrize("coins, top", [("HHTT", 2), ("", 0), ("TTTT", 4)])
def test_max_heads_tails(coins, top):
    assert max_heads_tails(coins) == top


def test_phi_inverse_examples():
    assert str(phi_inverse("HTHT")) == "0101"
    assert str(phi_inverse("THHT")) == "1111"
    assert str(phi_inverse("HHHH")) == "0000"


def test_bad_coin_string():
    with pytest.raises(ValidationError):
        CoinSequence("HXT")


@given(bit_strings)
def test_phi_round_trip(text):
    coins = phi(text)
    assert str(phi_inverse(coins)) == text
    assert max_heads_tails(coins) == simulate(text).r


@given(st.text(alphabet="HT", max_size=30))
def test_parity_recovered_from_coins(flips):
    b = phi_inverse(flips)
    assert parity_from_coins(flips) == simulate(b).parity.bits


def test_psi_fig_one():
    # bounce at car 5; the suffix 001 becomes 110
    assert str(psi("00111001", 1)) == "00111110"


def test_psi_empty_suffix():
    # the only bounce is the last car, so there is nothing to complement
    assert str(psi("1", 1)) == "1"


def test_psi_needs_enough_bounces():
    with pytest.raises(DomainError):
        psi("00111001", 2)
    with pytest.raises(DomainError):
        psi("00111001", 0)


@given(bit_strings, st.integers(1, 4))
def test_psi_involution_and_endpoint(text, s):
    res = simulate(text)
    if res.bounces < s:
        return
    image = psi(text, s)
    assert str(psi_inverse(image, s)) == text
    # the image keeps at least s bounces, and the cut point is unchanged
    assert simulate(image).bounce_positions[:s] == res.bounce_positions[:s]


def test_step_map_example():
    b = step_map("01101110")
    assert str(b) == "01101000"
    assert simulate(b).endpoint == (2, 6)
    assert str(step_map_inverse("01101000")) == "01101110"


def test_step_map_domain():
    with pytest.raises(DomainError):
        step_map("0000")  # no bounces beyond the red cars
    with pytest.raises(DomainError):
        step_map_inverse("1111")


@given(st.text(alphabet="01", min_size=2, max_size=24))
def test_step_map_round_trip(text):
    res = simulate(text)
    n, m = res.endpoint
    k = text.count("0")
    if not (m > k + 1 and m > n > 0):
        return
    image = step_map(text)
    assert image.zeros == k + 2
    assert simulate(image).endpoint == (n - 1, m + 1)
    assert str(step_map_inverse(image)) == text
