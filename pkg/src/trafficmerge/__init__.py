"""Two-lane traffic merging: simulation, exact counts and expectations, bijections.

Cars arrive one at a time.  Red cars (0) always take the right lane; green
cars (1) take the left lane when it is strictly shorter and otherwise go
right.  The package simulates that rule, counts the resulting lattice paths,
computes expected lane lengths as exact fractions and checks everything
against brute-force enumeration.
"""

from .bijections import CoinSequence, max_heads_tails, phi, phi_inverse, psi, psi_inverse, step_map, step_map_inverse
from .classes import ColorBlindClass, class_of, class_size, partition
from .core import ArrivalSequence, MergeResult, MergingPath, ParityVector, Step, merging_path, parity_vector, simulate, touch_positions
from .counting import (
    BounceBounds,
    binomial,
    bounce_bounds,
    m_count_closed,
    m_count_k_closed,
    m_count_k_recursive,
    m_count_recursive,
    t_count,
)
from .errors import DomainError, MergeError, ResourceLimitError, ValidationError
from .expectation import (
    expected_length,
    expected_length_k,
    expected_length_k_complement,
    limit_ratio,
    ratio_trace,
    right_lane_sum,
    right_lane_sum_k,
)
from .trails import DominoSnake, Edge, Trail, longest_trail, longest_trail_length, rho, rho_image, rho_inverse, trail_to_snake

__version__ = "0.1.0"

__all__ = [
    "ArrivalSequence",
    "BounceBounds",
    "CoinSequence",
    "ColorBlindClass",
    "DomainError",
    "DominoSnake",
    "Edge",
    "MergeError",
    "MergeResult",
    "MergingPath",
    "ParityVector",
    "ResourceLimitError",
    "Step",
    "Trail",
    "ValidationError",
    "binomial",
    "bounce_bounds",
    "class_of",
    "class_size",
    "expected_length",
    "expected_length_k",
    "expected_length_k_complement",
    "limit_ratio",
    "longest_trail",
    "longest_trail_length",
    "m_count_closed",
    "m_count_k_closed",
    "m_count_k_recursive",
    "m_count_recursive",
    "max_heads_tails",
    "merging_path",
    "parity_vector",
    "partition",
    "phi",
    "phi_inverse",
    "psi",
    "psi_inverse",
    "ratio_trace",
    "right_lane_sum",
    "right_lane_sum_k",
    "rho",
    "rho_image",
    "rho_inverse",
    "simulate",
    "step_map",
    "step_map_inverse",
    "t_count",
    "touch_positions",
    "trail_to_snake",
]
