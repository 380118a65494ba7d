import pytest

from trafficmerge import DomainError, Edge, longest_trail, longest_trail_length, rho, rho_image, rho_inverse, simulate, trail_to_snake
from trafficmerge.expectation import right_lane_sum_k
from trafficmerge.trails import DominoSnake, Trail, excluded_matching, odd_degree_vertices, single_red_sequences

from reference import TRAIL_LENGTHS


def test_lengths():
    assert [longest_trail_length(n) for n in range(1, 15)] == TRAIL_LENGTHS


@pytest.mark.parametrize("length, expected", [(4, 9), (6, 19), (14, 99)])
def test_length_examples(length, expected):
    assert longest_trail_length(length) == expected


def test_lengths_match_single_red_lane_sums():
    for length in range(1, 30):
        assert longest_trail_length(length) == right_lane_sum_k(length, 1)


@pytest.mark.parametrize("length", range(1, 15))
def test_constructed_trail(length):
    trail = longest_trail(length)
    assert trail.is_valid()
    assert len(trail) == longest_trail_length(length)
    assert not set(trail.edges) & excluded_matching(length)
    assert odd_degree_vertices(trail.edges) == ({length - 1, length} if length % 2 == 0 else set())
    assert trail_to_snake(trail).is_valid(length)


def test_odd_trail_is_closed():
    trail = longest_trail(7)
    assert len(trail) == 28
    assert trail.vertices[0] == trail.vertices[-1]


def test_single_vertex():
    trail = longest_trail(1)
    assert trail.edges == (Edge(1, 1),)
    assert str(trail_to_snake(trail)) == "[1:1]"


def test_four_vertex_snake_format():
    snake = trail_to_snake(longest_trail(4))
    assert len(snake) == 9
    assert str(snake).startswith("[") and str(snake).count("][") == 8
    published = DominoSnake(((4, 1), (1, 1), (1, 3), (3, 2), (2, 2), (2, 4), (4, 4), (4, 3), (3, 3)))
    assert published.is_valid(4)
    assert {Edge.of(*p) for p in published.pieces} == set(longest_trail(4).edges)


def test_invalid_snake():
    assert not DominoSnake(((1, 2), (3, 3))).is_valid()
    assert not DominoSnake(((1, 2), (2, 1))).is_valid()
    assert not Trail((1, 2, 1)).is_valid()


@pytest.mark.parametrize(
    "bits, edges",
    [
        ("011111", {(1, 1), (1, 3), (1, 5)}),
        ("101111", {(2, 6), (2, 2), (2, 4)}),
        ("1111110", {(2, 7), (4, 7), (6, 7), (7, 7)}),
        ("0111", {(1, 1), (1, 3)}),
        ("1110", {(1, 4), (3, 4), (4, 4)}),
        ("1101", {(2, 3), (3, 3)}),
    ],
)
def test_rho_images(bits, edges):
    assert rho_image(bits) == {Edge.of(*e) for e in edges}


def test_rho_inverse_examples():
    assert rho_inverse((2, 6), 6) == (1, 2)
    for p in range(1, 8):
        assert rho_inverse((p, p), 7) == (p, p)
    with pytest.raises(DomainError):
        rho_inverse((1, 2), 6)


def test_rho_domain():
    with pytest.raises(DomainError):
        rho(0, 1, 4)
    with pytest.raises(DomainError):
        rho_image("0101")


@pytest.mark.parametrize("length", range(1, 15))
def test_images_partition_trail(length):
    seen = []
    for seq in single_red_sequences(length):
        image = rho_image(seq)
        assert len(image) == simulate(seq).r
        p = seq.bits.index(0) + 1
        for edge in image:
            assert rho_inverse(edge, length)[1] == p
        seen.extend(image)
    assert len(seen) == len(set(seen))
    assert set(seen) == set(longest_trail(length).edges)
