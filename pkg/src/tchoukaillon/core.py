"""The linear Tchoukaillon game.

A board is a finite vector of bin stone-counts with bin 1 next to the
Ruma (the store).  For every total n there is exactly one board that can
be cleared by legal sowing; this module builds that board directly,
plays and unplays it, and exposes the periodicity of the bin columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .checked import UINT128_MAX, ensure_stone_count

PLAY_SEQUENCE_CAP = 10_000_000


@dataclass(frozen=True)
class Board:
    """Immutable stone counts per bin, stored with no trailing zeros.

    ``bins[0]`` is bin 1 (adjacent to the Ruma).  Trailing zero bins are
    trimmed on construction, so equality and hashing see one canonical
    representation per board.
    """

    bins: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        bins = tuple(self.bins)
        for count in bins:
            if not isinstance(count, int) or count < 0:
                raise ValueError(f"bin counts must be non-negative integers, got {count!r}")
        while bins and bins[-1] == 0:
            bins = bins[:-1]
        object.__setattr__(self, "bins", bins)

    @property
    def stones(self) -> int:
        """Total number of stones on the board."""
        return sum(self.bins)

    @property
    def length(self) -> int:
        """Index of the last nonempty bin; 0 for the empty board."""
        return len(self.bins)

    def bin(self, i: int) -> int:
        """Stones in 1-based bin *i*; bins beyond the stored length are empty."""
        if i < 1:
            raise ValueError("bins are numbered from 1")
        return self.bins[i - 1] if i <= len(self.bins) else 0

    def to_json(self) -> list[int]:
        """Serialized form: plain list of bin counts, 1-based order, no trailing zeros."""
        return list(self.bins)

    @classmethod
    def from_json(cls, data: object) -> "Board":
        if not isinstance(data, list):
            raise ValueError("board JSON must be an array of bin counts")
        return cls(tuple(data))


EMPTY_BOARD = Board()


def board_from_stones(n: int) -> Board:
    """The unique winning board with *n* stones, built without unplaying.

    Bin i receives ``(n - sum of earlier bins) mod (i + 1)``, which keeps
    every prefix sum congruent to n modulo i + 1.
    """
    remaining = ensure_stone_count(n)
    bins = []
    i = 1
    while remaining > 0:
        count = remaining % (i + 1)
        bins.append(count)
        remaining -= count
        i += 1
    return Board(tuple(bins))


def leftmost_empty(board: Board) -> int:
    """Index of the first empty bin, counting bins past the stored length as empty."""
    for i, count in enumerate(board.bins, start=1):
        if count == 0:
            return i
    return board.length + 1


def is_winning(board: Board) -> bool:
    """True iff the board can be cleared by legal sowing.

    Characterization: every bin satisfies ``bins[i] <= i`` and every
    upper partial sum ``bins[i] + ... + bins[length]`` is divisible by i.
    """
    suffix = 0
    for i in range(board.length, 0, -1):
        count = board.bins[i - 1]
        if count > i:
            return False
        suffix += count
        if suffix % i:
            return False
    return True


def unplay(board: Board) -> Board:
    """The winning board with one more stone.

    Takes a stone from the Ruma and one from each bin before the leftmost
    empty bin p, dropping all p collected stones into bin p.
    """
    if not is_winning(board):
        raise ValueError("unplay is defined only for winning boards")
    p = leftmost_empty(board)
    bins = list(board.bins) + [0] * (p - board.length)
    for j in range(p - 1):
        bins[j] -= 1
    bins[p - 1] = p
    return Board(tuple(bins))


def play(board: Board) -> tuple[Board, int]:
    """Sow the harvestable bin closest to the Ruma; returns (board, bin played).

    Exactly one stone reaches the Ruma.  Only nonempty winning boards have
    a legal move.
    """
    if board.length == 0:
        raise ValueError("cannot play the empty board")
    if not is_winning(board):
        raise ValueError("play is defined only for winning boards")
    target = next(i for i in range(1, board.length + 1) if board.bins[i - 1] == i)
    bins = list(board.bins)
    bins[target - 1] = 0
    for j in range(target - 1):
        bins[j] += 1
    return Board(tuple(bins)), target


def _first_empty_bin_of(n: int) -> int:
    # Leftmost empty bin of the winning board with n stones, without
    # materializing the board.
    remaining = n
    i = 1
    while True:
        count = remaining % (i + 1)
        if count == 0:
            return i
        remaining -= count
        i += 1


def play_sequence(n: int, cap: int = PLAY_SEQUENCE_CAP) -> list[int]:
    """The bins played, in order, to clear the winning board with *n* stones.

    Move k clears one stone, so the sequence has length n.  Refuses n
    above *cap* to bound memory.
    """
    ensure_stone_count(n)
    if n > cap:
        raise ValueError(f"play_sequence refuses n={n} above the cap of {cap} moves")
    return [_first_empty_bin_of(k) for k in range(n - 1, -1, -1)]


@lru_cache(maxsize=1)
def _max_period_index() -> int:
    i, value = 1, 2
    while True:
        nxt = math.lcm(value, i + 2)
        if nxt > UINT128_MAX:
            return i
        i, value = i + 1, nxt


def minimal_period(i: int) -> int:
    """Exact period of the first *i* bin columns as a function of n: lcm(2..i+1)."""
    if i < 1:
        raise ValueError("minimal_period requires i >= 1")
    value = 1
    for m in range(2, i + 2):
        value = math.lcm(value, m)
        if value > UINT128_MAX:
            raise OverflowError(
                f"minimal_period({i}) exceeds 128 bits; the largest supported index is "
                f"{_max_period_index()}"
            )
    return value
