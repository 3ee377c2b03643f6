"""Remainder boards, non-coprime congruence solving, and board reconstruction.

This module speaks the shifted bin convention used for remainder
arithmetic: bins are indexed from 2, so ``m[i]`` here corresponds to
bin i-1 of :mod:`tchoukaillon.core`.  The conversion happens exactly once,
at the calls into ``core``.

A winning board's prefix sums are residues of its stone count, which
turns partial-board reconstruction into congruence solving: complete the
missing bins so that every prime-power window condition holds, take
partial sums, and solve the resulting simultaneous congruences.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .checked import check_uint128
from .core import Board, board_from_stones

COMPLETION_CAP = 1_000_000

CONSTRAINT_INDEXING = "paper-section-4"


class Infeasible(Exception):
    """No integer satisfies the request; ``witness`` explains why."""

    def __init__(self, message: str, witness: object = None) -> None:
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Congruence:
    """``n = residue (mod modulus)`` with the residue normalized to [0, modulus)."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not in [0, {self.modulus})")

    def __str__(self) -> str:
        return f"n = {self.residue} (mod {self.modulus})"


@dataclass(frozen=True)
class RemainderBoard:
    """Residues of a stone count modulo 2, 3, ..., k."""

    residues: tuple[int, ...]
    n: int | None = None

    def __post_init__(self) -> None:
        residues = tuple(self.residues)
        for offset, value in enumerate(residues):
            modulus = offset + 2
            if not 0 <= value < modulus:
                raise ValueError(f"residue {value} out of range for modulus {modulus}")
            if self.n is not None and self.n % modulus != value:
                raise ValueError(f"residue {value} does not match {self.n} mod {modulus}")
        object.__setattr__(self, "residues", residues)

    @property
    def max_modulus(self) -> int:
        return len(self.residues) + 1

    def residue(self, modulus: int) -> int:
        if not 2 <= modulus <= self.max_modulus:
            raise ValueError(f"modulus {modulus} outside stored range 2..{self.max_modulus}")
        return self.residues[modulus - 2]


@dataclass(frozen=True)
class IncreasingRemainderBoard:
    """The minimal weakly increasing lift of a remainder board.

    Entry i (for i = 2..k) is congruent to n modulo i and is the smallest
    such value weakly above entry i-1.  Successive differences recover
    the bins of the winning board.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        previous = 0
        for offset, value in enumerate(values):
            modulus = offset + 2
            if not 0 <= value - previous < modulus:
                raise ValueError(
                    f"entry {value} at modulus {modulus} must lie within "
                    f"[{previous}, {previous + modulus})"
                )
            previous = value
        object.__setattr__(self, "values", values)

    @property
    def max_modulus(self) -> int:
        return len(self.values) + 1

    def value(self, modulus: int) -> int:
        if not 2 <= modulus <= self.max_modulus:
            raise ValueError(f"modulus {modulus} outside stored range 2..{self.max_modulus}")
        return self.values[modulus - 2]


@dataclass(frozen=True)
class PartialConstraint:
    """Required stone counts for a subset of bins, in the shifted convention.

    Keys are bin indices >= 2; values must satisfy 0 <= m[i] < i.  Accepts
    a mapping or an iterable of (index, count) pairs and stores a sorted
    tuple.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        raw = self.entries
        pairs = sorted(raw.items()) if isinstance(raw, Mapping) else sorted(tuple(p) for p in raw)
        seen = set()
        for index, count in pairs:
            if index < 2:
                raise ValueError(f"constraint indices start at 2, got {index}")
            if index in seen:
                raise ValueError(f"duplicate constraint for index {index}")
            if not 0 <= count < index:
                raise ValueError(f"count {count} out of range [0, {index}) at index {index}")
            seen.add(index)
        object.__setattr__(self, "entries", tuple(pairs))

    @property
    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def to_json(self) -> dict[str, object]:
        doc: dict[str, object] = {"indexing": CONSTRAINT_INDEXING}
        for index, count in self.entries:
            doc[str(index)] = count
        return doc

    @classmethod
    def from_json(cls, data: object) -> "PartialConstraint":
        if not isinstance(data, dict):
            raise ValueError("constraint JSON must be an object")
        doc = dict(data)
        indexing = doc.pop("indexing", None)
        if indexing != CONSTRAINT_INDEXING:
            raise ValueError(f'constraint JSON must carry "indexing": "{CONSTRAINT_INDEXING}"')
        try:
            pairs = [(int(key), int(value)) for key, value in doc.items()]
        except (TypeError, ValueError) as exc:
            raise ValueError(f"malformed constraint entry: {exc}") from None
        return cls(pairs)


def remainder_board(n: int, k: int) -> RemainderBoard:
    """Residues of n modulo 2..k."""
    if k < 2:
        raise ValueError("remainder boards start at modulus 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    return RemainderBoard(tuple(n % i for i in range(2, k + 1)), n=n)


def increasing_remainder_board(n: int, k: int) -> IncreasingRemainderBoard:
    """Minimal weakly increasing sequence matching n modulo 2..k."""
    if k < 2:
        raise ValueError("remainder boards start at modulus 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    values = []
    previous = 0
    for i in range(2, k + 1):
        previous += (n - previous) % i
        values.append(previous)
    return IncreasingRemainderBoard(tuple(values))


def board_from_increasing(lift: IncreasingRemainderBoard) -> Board:
    """Recover bins as successive differences of an increasing remainder board."""
    diffs = []
    previous = 0
    for value in lift.values:
        diffs.append(value - previous)
        previous = value
    return Board(tuple(diffs))


def shifted_prefix(board: Board, k: int) -> tuple[int, ...]:
    """Bins 1..k-1 of a core board, re-indexed to the shifted convention m_2..m_k."""
    if k < 2:
        raise ValueError("prefixes start at index 2")
    return tuple(board.bin(i - 1) for i in range(2, k + 1))


def board_from_shifted(values: Iterable[int]) -> Board:
    """Interpret (m_2, ..., m_k) as core bins 1..k-1."""
    return Board(tuple(values))


def _violating_pair(system: list[Congruence]) -> tuple[Congruence, Congruence]:
    for p in range(len(system)):
        for q in range(p + 1, len(system)):
            g = math.gcd(system[p].modulus, system[q].modulus)
            if (system[p].residue - system[q].residue) % g:
                return system[p], system[q]
    raise AssertionError("merge failed but all pairs are compatible")


def crt_solve(system: Iterable[Congruence]) -> tuple[int, int]:
    """Solve simultaneous congruences with arbitrary (non-coprime) moduli.

    Returns (minimal non-negative solution, lcm of the moduli).  Raises
    Infeasible with a violating pair of congruences when residues clash
    modulo a common divisor, and OverflowError when the lcm leaves the
    128-bit range.
    """
    system = list(system)
    if not system:
        raise ValueError("empty congruence system")
    residue, modulus = system[0].residue, system[0].modulus
    for congruence in system[1:]:
        g = math.gcd(modulus, congruence.modulus)
        if (congruence.residue - residue) % g:
            pair = _violating_pair(system)
            raise Infeasible(
                f"congruences disagree: {pair[0]} vs {pair[1]} "
                f"(mod gcd {math.gcd(pair[0].modulus, pair[1].modulus)})",
                witness=pair,
            )
        lcm = modulus // g * congruence.modulus
        check_uint128(lcm, "congruence system period")
        step = congruence.modulus // g
        t = 0
        if step > 1:
            t = ((congruence.residue - residue) // g * pow(modulus // g, -1, step)) % step
        residue = (residue + modulus * t) % lcm
        modulus = lcm
    return residue, modulus


def _is_prime_power(d: int) -> bool:
    if d < 2:
        return False
    p = 2
    while p * p <= d:
        if d % p == 0:
            while d % p == 0:
                d //= p
            return d == 1
        p += 1
    return True  # d itself is prime


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def prime_power_divisors(i: int) -> list[int]:
    """Nontrivial proper divisors of i that are prime powers, ascending."""
    return [d for d in range(2, i) if i % d == 0 and _is_prime_power(d)]


def consistency_conditions(k: int) -> list[tuple[int, int]]:
    """All window conditions (i, d) active on prefixes m_2..m_k.

    Condition (i, d) requires m_i + m_{i-1} + ... + m_{i-d+1} to be
    divisible by d, for each nontrivial proper prime-power divisor d of i.
    """
    if k < 2:
        raise ValueError("prefixes start at index 2")
    return [(i, d) for i in range(2, k + 1) for d in prime_power_divisors(i)]


def allowable_check(values: Iterable[int]) -> tuple[bool, list[tuple[int, int]]]:
    """Check every window condition on a full prefix m_2..m_k.

    Returns (all hold, list of violated (i, d) pairs).
    """
    values = tuple(values)
    k = len(values) + 1
    for offset, count in enumerate(values):
        index = offset + 2
        if not 0 <= count < index:
            raise ValueError(f"count {count} out of range [0, {index}) at index {index}")
    violations = []
    if k >= 2:
        for i, d in consistency_conditions(k):
            if sum(values[i - d - 1 : i - 1]) % d:
                violations.append((i, d))
    return not violations, violations


def _window_conditions_hold(values: list[int], i: int) -> bool:
    # values holds m_2..m_i; check all conditions whose window ends at i.
    for d in prime_power_divisors(i):
        if sum(values[i - d - 1 : i - 1]) % d:
            return False
    return True


def complete_constraints(pc: PartialConstraint) -> Iterator[tuple[int, ...]]:
    """All allowable full prefixes m_2..m_K extending the constraint.

    Backtracks over indices in increasing order, pruning with each window
    condition as soon as its last entry is assigned; smaller counts are
    explored first, so the order is deterministic.  Yields nothing when
    the constraint is infeasible.
    """
    if not pc.entries:
        yield ()
        return
    fixed = pc.as_dict()
    top = pc.max_index
    values: list[int] = []

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i > top:
            yield tuple(values)
            return
        choices = (fixed[i],) if i in fixed else range(i)
        for count in choices:
            values.append(count)
            if _window_conditions_hold(values, i):
                yield from extend(i + 1)
            values.pop()

    yield from extend(2)


def _solve_completion(completion: tuple[int, ...]) -> tuple[int, int]:
    # Steps 2 and 3: partial sums become congruences; solve for n.
    # Returns (minimal solution, period).
    system = []
    total = 0
    for offset, count in enumerate(completion):
        modulus = offset + 2
        total += count
        system.append(Congruence(total % modulus, modulus))
    return crt_solve(system)


def _realize(completion: tuple[int, ...]) -> tuple[int, Board]:
    if not completion:
        return 0, Board()
    n, _ = _solve_completion(completion)
    return n, board_from_stones(n)


def reconstruct(pc: PartialConstraint) -> tuple[int, Board]:
    """A winning board agreeing with the constraint, from the first completion.

    The result is minimal for that completion's congruence system, not
    necessarily over all completions; see :func:`reconstruct_minimal`.
    """
    for completion in complete_constraints(pc):
        return _realize(completion)
    raise Infeasible(f"no allowable completion extends {pc.as_dict()}", witness=pc)


def reconstruct_minimal(pc: PartialConstraint, cap: int = COMPLETION_CAP) -> tuple[int, Board]:
    """The smallest stone count whose winning board agrees with the constraint
    and is long enough to contain every constrained bin.

    A constraint of 0 at the top index means that bin is empty on the
    board, not that the board stops short of it; this only matters when
    the highest constrained count is 0, since any nonzero constraint
    forces the board out that far anyway.

    Minimizes the congruence solution over every allowable completion; by
    the lcm periodicity of agreement, per-completion minimal solutions
    suffice.  The one class member too short to contain the top bin is
    the board equal to the completion itself, recognizable by its stone
    total.  Raises if more than *cap* completions exist.
    """
    if not pc.entries:
        return 0, Board()
    best_n: int | None = None
    count = 0
    for completion in complete_constraints(pc):
        count += 1
        if count > cap:
            raise RuntimeError(f"completion cap {cap} exceeded for {pc.as_dict()}")
        n, period = _solve_completion(completion)
        if completion[-1] == 0 and n == sum(completion):
            n += period
        if best_n is None or n < best_n:
            best_n = n
    if best_n is None:
        raise Infeasible(f"no allowable completion extends {pc.as_dict()}", witness=pc)
    return best_n, board_from_stones(best_n)


def prime_reconstruct(pc: PartialConstraint) -> tuple[int, Board]:
    """Reconstruction for constraints whose indices are all prime.

    Such constraints never conflict: prime indices carry no window
    conditions, so the composite gaps can be filled greedily, taking at
    each composite index the smallest count satisfying its window
    congruences.  Falls back to full backtracking if the greedy fill ever
    hits a dead end.
    """
    for index, _ in pc.entries:
        if not _is_prime(index):
            raise ValueError(f"prime_reconstruct requires prime indices, got {index}")
    if not pc.entries:
        return 0, Board()
    fixed = pc.as_dict()
    values: list[int] = []
    for i in range(2, pc.max_index + 1):
        if i in fixed:
            count = fixed[i]
        elif _is_prime(i):
            count = 0
        else:
            count = _greedy_fill(values, i)
            if count is None:
                return reconstruct(pc)
        values.append(count)
    return _realize(tuple(values))


def _greedy_fill(values: list[int], i: int) -> int | None:
    # Smallest m_i in [0, i) meeting every window condition ending at i;
    # values holds m_2..m_{i-1}, so the assigned part of the (i, d) window
    # is the slice m_{i-d+1}..m_{i-1}.
    system = []
    for d in prime_power_divisors(i):
        rest = sum(values[i - d - 1 : i - 2])
        system.append(Congruence((-rest) % d, d))
    if not system:
        return 0
    try:
        solution, _ = crt_solve(system)
    except Infeasible:
        return None
    return solution if solution < i else None
