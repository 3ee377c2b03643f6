"""Sowing games on directed graphs.

A sowing graph is a directed graph with a nonempty set of Ruma vertices
(stores).  A sow picks up all stones on a vertex and drops one per step
along a directed walk that ends on a Ruma after exactly that many steps;
walks may wrap cycles, revisiting vertices.  Unplaying inverts a sow and
is how the winning boards are generated from the empty board.

Ruma labels count captured stones.  They are bookkeeping: board identity
in the game graph is the tuple of non-Ruma labels, and the store never
runs dry when unplaying.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .checked import check_uint128

DEFAULT_BOARD_CAP = 10_000


class IllegalMoveError(ValueError):
    """The requested sow or unplay violates the movement rules."""


@dataclass(frozen=True)
class SowingGraph:
    """Directed graph with a distinguished nonempty Ruma vertex set.

    Vertices are 0..vertex_count-1.  Parallel edges are disallowed;
    self-loops are fine.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    ruma: frozenset[int]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("a sowing graph needs at least one vertex")
        edge_list = [tuple(e) for e in self.edges]
        edges = frozenset(edge_list)
        if len(edges) < len(edge_list):
            raise ValueError("parallel edges are not allowed")
        for a, b in edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a}, {b}) references a missing vertex")
        ruma = frozenset(self.ruma)
        if not ruma:
            raise ValueError("the Ruma set must be nonempty")
        for r in ruma:
            if not 0 <= r < self.vertex_count:
                raise ValueError(f"Ruma vertex {r} does not exist")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "ruma", ruma)

    @cached_property
    def successors(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for a, b in self.edges:
            out[a].append(b)
        return {v: tuple(sorted(ws)) for v, ws in out.items()}

    @cached_property
    def bins(self) -> tuple[int, ...]:
        """Non-Ruma vertices in id order; the displayed board coordinates."""
        return tuple(v for v in range(self.vertex_count) if v not in self.ruma)

    def zero_board(self) -> "GraphBoard":
        return GraphBoard((0,) * self.vertex_count)

    def board_with_bins(self, bin_labels: tuple[int, ...]) -> "GraphBoard":
        """Board with the given non-Ruma labels (id order) and empty stores."""
        if len(bin_labels) != len(self.bins):
            raise ValueError(f"expected {len(self.bins)} bin labels, got {len(bin_labels)}")
        labels = [0] * self.vertex_count
        for v, count in zip(self.bins, bin_labels):
            labels[v] = count
        return GraphBoard(tuple(labels))

    def bin_labels(self, board: "GraphBoard") -> tuple[int, ...]:
        """Non-Ruma labels in id order; the game-graph identity of a board."""
        return tuple(board.labels[v] for v in self.bins)

    def stones(self, board: "GraphBoard") -> int:
        """Stones still on the board, excluding captures."""
        return sum(self.bin_labels(board))

    def to_json(self) -> dict[str, object]:
        return {
            "vertices": self.vertex_count,
            "edges": [list(e) for e in sorted(self.edges)],
            "ruma": sorted(self.ruma),
        }

    @classmethod
    def from_json(cls, data: object) -> "SowingGraph":
        if not isinstance(data, dict):
            raise ValueError("sowing graph JSON must be an object")
        try:
            vertices = int(data["vertices"])
            edges = frozenset((int(a), int(b)) for a, b in data["edges"])
            ruma = frozenset(int(r) for r in data["ruma"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed sowing graph JSON: {exc}") from None
        if isinstance(data["edges"], list) and len(data["edges"]) != len(edges):
            raise ValueError("parallel edges are not allowed")
        return cls(vertices, edges, ruma)


@dataclass(frozen=True)
class GraphBoard:
    """One non-negative label per vertex; Ruma labels are captured stones."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        for count in labels:
            if not isinstance(count, int) or count < 0:
                raise ValueError(f"labels must be non-negative integers, got {count!r}")
        object.__setattr__(self, "labels", labels)


@dataclass(frozen=True, order=True)
class Move:
    """An unplay/sow descriptor: the emptied-or-filled vertex, its Ruma, the walk."""

    vertex: int
    ruma: int
    path: tuple[int, ...]


@dataclass(frozen=True)
class GameEdge:
    """A sow move between discovered boards, indices into GameGraph.boards."""

    source: int
    target: int
    moves: tuple[Move, ...]


@dataclass(frozen=True)
class GameGraph:
    """Winning boards (discovery order) and the sow moves connecting them."""

    boards: tuple[GraphBoard, ...]
    edges: tuple[GameEdge, ...]
    truncated: bool = False


def _check_walk(graph: SowingGraph, path: tuple[int, ...]) -> None:
    if len(path) < 2:
        raise IllegalMoveError("a sowing walk needs at least one edge")
    for a, b in zip(path, path[1:]):
        if (a, b) not in graph.edges:
            raise IllegalMoveError(f"({a}, {b}) is not an edge of the graph")


def sow_move(graph: SowingGraph, board: GraphBoard, v: int, path: tuple[int, ...]) -> GraphBoard:
    """Sow all stones from v along a walk ending on a Ruma.

    The walk's edge-length must equal the label of v; every vertex stepped
    on (Rumas included, revisits counted) gains one stone.
    """
    path = tuple(path)
    if v in graph.ruma:
        raise IllegalMoveError("cannot sow from a Ruma vertex")
    if not path or path[0] != v:
        raise IllegalMoveError("the walk must start at the sown vertex")
    if path[-1] not in graph.ruma:
        raise IllegalMoveError("the walk must end on a Ruma vertex")
    _check_walk(graph, path)
    stones = board.labels[v]
    if stones == 0:
        raise IllegalMoveError(f"vertex {v} has no stones to sow")
    if len(path) - 1 != stones:
        raise IllegalMoveError(f"walk length {len(path) - 1} does not match the {stones} stones on vertex {v}")
    labels = list(board.labels)
    labels[v] = 0
    for w in path[1:]:
        labels[w] += 1
    return GraphBoard(tuple(labels))


def unplay_move(
    graph: SowingGraph, board: GraphBoard, v: int, r: int, path: tuple[int, ...]
) -> GraphBoard:
    """Invert a sow: refill v with the walk's edge-length, picking stones back up.

    Each non-Ruma vertex stepped on loses one stone per visit (v itself
    included on cycle wraps, so its label must be exactly consumed);
    stones taken from a Ruma come out of its captures, which never block
    the move.
    """
    path = tuple(path)
    if v in graph.ruma:
        raise IllegalMoveError("cannot unplay into a Ruma vertex")
    if r not in graph.ruma:
        raise IllegalMoveError(f"vertex {r} is not a Ruma")
    if not path or path[0] != v or path[-1] != r:
        raise IllegalMoveError("the walk must run from the refilled vertex to the Ruma")
    _check_walk(graph, path)
    labels = list(board.labels)
    for w in path[1:]:
        if w in graph.ruma:
            labels[w] = max(labels[w] - 1, 0)
        else:
            if labels[w] == 0:
                raise IllegalMoveError(f"vertex {w} has no stone to pick up")
            labels[w] -= 1
    if labels[v] != 0:
        raise IllegalMoveError(f"the walk must consume the label of vertex {v} exactly")
    labels[v] = len(path) - 1
    return GraphBoard(tuple(labels))


def _strongly_connected_components(graph: SowingGraph) -> list[list[int]]:
    # Iterative Tarjan; components come out in a deterministic order.
    n = graph.vertex_count
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, edge_pos = work.pop()
            if edge_pos == 0:
                index_of[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            succ = graph.successors[v]
            while edge_pos < len(succ):
                w = succ[edge_pos]
                edge_pos += 1
                if index_of[w] == -1:
                    work.append((v, edge_pos))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            if low[v] == index_of[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def has_finite_game_graph(graph: SowingGraph) -> tuple[bool, tuple[int, int] | None]:
    """Decide whether the graph has finitely many winning boards.

    Infinite exactly when some strongly connected component holds both a
    Ruma and a non-Ruma vertex (two co-reachable vertices always share a
    directed cycle).  The witness is such a pair, or None when finite.
    """
    for component in _strongly_connected_components(graph):
        rumas = [v for v in component if v in graph.ruma]
        others = [v for v in component if v not in graph.ruma]
        if rumas and others:
            return False, (rumas[0], others[0])
    return True, None


def _legal_unplays(graph: SowingGraph, board: GraphBoard, max_length: int) -> list[Move]:
    # Every (v, r, walk) whose unplay is legal on this board, walk
    # edge-length capped at max_length.  Depth-first over walk extensions
    # with per-vertex stone budgets; results sorted for reproducibility.
    moves: list[Move] = []
    for v in graph.bins:
        remaining = list(board.labels)
        path = [v]
        # stack of successor iterators, one per walk vertex
        pending = [iter(graph.successors[v])]
        while pending:
            step = next(pending[-1], None)
            if step is None:
                pending.pop()
                last = path.pop()
                if path and last not in graph.ruma:
                    remaining[last] += 1
                continue
            if step not in graph.ruma:
                if remaining[step] == 0:
                    continue
                remaining[step] -= 1
            path.append(step)
            if step in graph.ruma and remaining[v] == 0:
                moves.append(Move(v, step, tuple(path)))
            if len(path) - 1 < max_length:
                pending.append(iter(graph.successors[step]))
            else:
                last = path.pop()
                if last not in graph.ruma:
                    remaining[last] += 1
    moves.sort()
    return moves


def _walk_cap(graph: SowingGraph, board: GraphBoard, finite: bool, cap: int) -> int:
    if finite:
        # Any walk longer than this would wrap a stone-free cycle, which a
        # criterion-finite graph does not offer along unplay walks.
        return (graph.stones(board) + 1) * (graph.vertex_count + 1)
    return cap * graph.vertex_count


def enumerate_winning_boards(graph: SowingGraph, cap: int = DEFAULT_BOARD_CAP) -> GameGraph:
    """Breadth-first closure of unplaying from the empty board.

    The finite case returns the complete game graph; hitting the cap
    there is reported as an error, since the finiteness criterion said it
    could not happen.  The infinite case returns a truncated prefix: at
    most *cap* boards, with per-unmove walk lengths capped at
    cap * vertex_count.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    finite, _ = has_finite_game_graph(graph)
    zero = graph.zero_board()
    boards = [zero]
    index = {graph.bin_labels(zero): 0}
    edge_moves: dict[tuple[int, int], list[Move]] = {}
    queue = deque([0])
    while queue:
        yi = queue.popleft()
        source = boards[yi]
        limit = _walk_cap(graph, source, finite, cap)
        for move in _legal_unplays(graph, source, limit):
            grown = unplay_move(graph, source, move.vertex, move.ruma, move.path)
            key = graph.bin_labels(grown)
            if key not in index:
                if len(boards) >= cap:
                    if finite:
                        raise RuntimeError(
                            f"board cap {cap} exceeded although the finiteness criterion "
                            "reports a finite game graph"
                        )
                    continue
                index[key] = len(boards)
                boards.append(grown)
                queue.append(index[key])
            edge_moves.setdefault((index[key], yi), []).append(move)
    edges = tuple(
        GameEdge(source, target, tuple(moves))
        for (source, target), moves in sorted(edge_moves.items())
    )
    return GameGraph(tuple(boards), edges, truncated=not finite)


def make_path(length: int) -> SowingGraph:
    """Directed path of *length* bins feeding a single Ruma sink: the linear game."""
    if length < 1:
        raise ValueError("length must be >= 1")
    edges = {(1, 0)} | {(i, i - 1) for i in range(2, length + 1)}
    return SowingGraph(length + 1, frozenset(edges), frozenset({0}))


def make_cycle(length: int) -> SowingGraph:
    """Directed cycle on *length* vertices, one of which is the Ruma."""
    if length < 1:
        raise ValueError("length must be >= 1")
    edges = {(i, i - 1) for i in range(1, length)} | {(0, length - 1)}
    return SowingGraph(length, frozenset(edges), frozenset({0}))


def make_star(spokes: int, length: int) -> SowingGraph:
    """Star of *spokes* directed paths of *length* bins, Ruma at the center."""
    if spokes < 1 or length < 1:
        raise ValueError("spokes and length must be >= 1")
    edges = set()
    for s in range(spokes):
        base = s * length
        edges.add((base + 1, 0))
        for d in range(2, length + 1):
            edges.add((base + d, base + d - 1))
    return SowingGraph(spokes * length + 1, frozenset(edges), frozenset({0}))


def cycle_attained_counts(length: int, board_limit: int) -> list[int]:
    """Stone totals along the cycle game's unique unplay path.

    Each step unplays from the Ruma into the closest minimally labeled
    vertex, wrapping the cycle once per stone already on it.  Not every
    integer appears among the totals.
    """
    if length < 2:
        raise ValueError("cycle_attained_counts requires length >= 2")
    if board_limit < 1:
        raise ValueError("board_limit must be >= 1")
    graph = make_cycle(length)
    board = graph.zero_board()
    totals = [0]
    while len(totals) < board_limit:
        board = _cycle_unplay(graph, board, length)
        totals.append(check_uint128(graph.stones(board), "cycle stone total"))
    return totals


def _cycle_unplay(graph: SowingGraph, board: GraphBoard, length: int) -> GraphBoard:
    # Vertex id equals walk distance to the Ruma, so min((label, id)) is
    # the closest minimally labeled vertex.
    label, v = min((board.labels[v], v) for v in graph.bins)
    steps = v + label * length
    path = [v]
    current = v
    for _ in range(steps):
        current = current - 1 if current >= 1 else length - 1
        path.append(current)
    return unplay_move(graph, board, v, 0, tuple(path))


def game_graph_to_json(graph: SowingGraph, game: GameGraph) -> dict[str, object]:
    """JSON adjacency form of an enumerated game graph."""
    return {
        "truncated": game.truncated,
        "boards": [list(graph.bin_labels(b)) for b in game.boards],
        "edges": [
            {
                "from": edge.source,
                "to": edge.target,
                "moves": [
                    {"vertex": m.vertex, "ruma": m.ruma, "path": list(m.path)}
                    for m in edge.moves
                ],
            }
            for edge in game.edges
        ],
    }


def game_graph_to_dot(graph: SowingGraph, game: GameGraph) -> str:
    """DOT rendering with board bin-labels as node names."""

    def name(board: GraphBoard) -> str:
        return "[" + ",".join(str(c) for c in graph.bin_labels(board)) + "]"

    lines = ["digraph sowing_game {"]
    for board in game.boards:
        lines.append(f'  "{name(board)}";')
    for edge in game.edges:
        label = ",".join(f"v{m.vertex}" for m in edge.moves)
        lines.append(
            f'  "{name(game.boards[edge.source])}" -> '
            f'"{name(game.boards[edge.target])}" [label="{label}"];'
        )
    lines.append("}")
    return "\n".join(lines)
