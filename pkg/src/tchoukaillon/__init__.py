"""Exact toolkit for the Tchoukaillon solitaire sowing game.

Board construction and play for the linear game, enumeration by board
length, the first-played-bin sieve, partial-board reconstruction through
congruence solving, and the generalization to sowing games on directed
graphs.
"""

from .checked import UINT128_MAX
from .core import (
    Board,
    EMPTY_BOARD,
    board_from_stones,
    is_winning,
    leftmost_empty,
    minimal_period,
    play,
    play_sequence,
    unplay,
)
from .crt import (
    Congruence,
    IncreasingRemainderBoard,
    Infeasible,
    PartialConstraint,
    RemainderBoard,
    allowable_check,
    board_from_increasing,
    board_from_shifted,
    complete_constraints,
    consistency_conditions,
    crt_solve,
    increasing_remainder_board,
    prime_reconstruct,
    reconstruct,
    reconstruct_minimal,
    remainder_board,
    shifted_prefix,
)
from .graph import (
    GameEdge,
    GameGraph,
    GraphBoard,
    IllegalMoveError,
    Move,
    SowingGraph,
    cycle_attained_counts,
    enumerate_winning_boards,
    game_graph_to_dot,
    game_graph_to_json,
    has_finite_game_graph,
    make_cycle,
    make_path,
    make_star,
    sow_move,
    unplay_move,
)
from .length import check_bounds, enumerate_boards, min_stones, min_stones_sequence
from .sieve import first_played_bin, sieve_stage, sieve_step

__version__ = "0.1.0"

__all__ = [
    "Board",
    "Congruence",
    "EMPTY_BOARD",
    "GameEdge",
    "GameGraph",
    "GraphBoard",
    "IllegalMoveError",
    "IncreasingRemainderBoard",
    "Infeasible",
    "Move",
    "PartialConstraint",
    "RemainderBoard",
    "SowingGraph",
    "UINT128_MAX",
    "allowable_check",
    "board_from_increasing",
    "board_from_shifted",
    "board_from_stones",
    "check_bounds",
    "complete_constraints",
    "consistency_conditions",
    "crt_solve",
    "cycle_attained_counts",
    "enumerate_boards",
    "enumerate_winning_boards",
    "first_played_bin",
    "game_graph_to_dot",
    "game_graph_to_json",
    "has_finite_game_graph",
    "increasing_remainder_board",
    "is_winning",
    "leftmost_empty",
    "make_cycle",
    "make_path",
    "make_star",
    "min_stones",
    "min_stones_sequence",
    "minimal_period",
    "play",
    "play_sequence",
    "prime_reconstruct",
    "reconstruct",
    "reconstruct_minimal",
    "remainder_board",
    "shifted_prefix",
    "sieve_stage",
    "sieve_step",
    "sow_move",
    "unplay",
    "unplay_move",
]
