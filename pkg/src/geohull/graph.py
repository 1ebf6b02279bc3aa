"""Immutable undirected graphs with unweighted shortest-path metrics."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .errors import Disconnected, InvalidEdge, ParseError


class Graph:
    """Undirected simple graph on vertices ``0 .. vertex_count-1``.

    Instances are immutable after construction.  Derived data (adjacency
    bitmasks, the distance matrix, the per-pair betweenness table) is
    computed lazily, cached on the instance, and identical no matter which
    thread asks first, so graphs are safe to share without locking.

    Edges are normalized to ``(min, max)`` pairs and stored sorted, which
    makes structural equality and the text format byte-stable.
    """

    __slots__ = ("vertex_count", "edges", "vertex_names",
                 "_adj", "_adj_mask", "_dist", "_between", "_connected")

    def __init__(self, vertex_count: int,
                 edge_list: Iterable[tuple[int, int]],
                 vertex_names: Mapping[int, str] | None = None):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized: set[tuple[int, int]] = set()
        for u, v in edge_list:
            if u == v:
                raise InvalidEdge(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidEdge(
                    f"edge ({u},{v}) out of range for {vertex_count} vertices")
            normalized.add((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges = tuple(sorted(normalized))
        self.vertex_names = dict(vertex_names) if vertex_names else {}

        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        masks = [0] * vertex_count
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(frozenset(s) for s in adj)
        self._adj_mask = tuple(masks)
        self._dist: tuple[tuple[int, ...], ...] | None = None
        self._between: list[list[int]] | None = None
        self._connected: bool | None = None

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        """Bitmask with one bit per vertex."""
        return (1 << self.vertex_count) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def adjacency_mask(self, v: int) -> int:
        return self._adj_mask[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def name(self, v: int) -> str:
        return self.vertex_names.get(v, str(v))

    @property
    def is_connected(self) -> bool:
        if self._connected is None:
            if self.vertex_count == 0:
                # No vertex to start from; metric operations reject this.
                self._connected = False
            else:
                seen = 1
                queue = deque([0])
                count = 1
                while queue:
                    u = queue.popleft()
                    for w in self._adj[u]:
                        bit = 1 << w
                        if not seen & bit:
                            seen |= bit
                            count += 1
                            queue.append(w)
                self._connected = count == self.vertex_count
        return self._connected

    # -- metrics ----------------------------------------------------------

    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs BFS hop counts; raises Disconnected when undefined."""
        if self._dist is None:
            if not self.is_connected:
                raise Disconnected(
                    f"graph with {self.vertex_count} vertices is not connected")
            rows = []
            for source in range(self.vertex_count):
                dist = [-1] * self.vertex_count
                dist[source] = 0
                queue = deque([source])
                while queue:
                    u = queue.popleft()
                    du = dist[u] + 1
                    for w in self._adj[u]:
                        if dist[w] < 0:
                            dist[w] = du
                            queue.append(w)
                rows.append(tuple(dist))
            self._dist = tuple(rows)
        return self._dist

    def between_table(self) -> list[list[int]]:
        """Table of bitmasks: entry [u][v] holds every w on a shortest u-v path.

        Includes u and v themselves.  Low-level accessor shared by the
        convexity operations and the hull-number search; callers must not
        mutate the returned lists.
        """
        if self._between is None:
            d = self.distances()
            n = self.vertex_count
            table: list[list[int]] = [[0] * n for _ in range(n)]
            for u in range(n):
                du = d[u]
                for v in range(u, n):
                    dv = d[v]
                    duv = du[v]
                    mask = 0
                    for w in range(n):
                        if du[w] + dv[w] == duv:
                            mask |= 1 << w
                    table[u][v] = mask
                    table[v][u] = mask
            self._between = table
        return self._between

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count, self.edges) == (other.vertex_count, other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {len(self.edges)} edges)"


# -- vertex-set helpers ---------------------------------------------------

def vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    """Fold a vertex collection into a bitmask, validating the indices."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} out of range for {g.vertex_count} vertices")
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _is_clique_mask(g: Graph, mask: int) -> bool:
    adj = g._adj_mask
    for u in mask_members(mask):
        if mask & ~(adj[u] | (1 << u)):
            return False
    return True


# -- spec operations ------------------------------------------------------

def build_graph(vertex_count: int,
                edge_list: Iterable[tuple[int, int]],
                vertex_names: Mapping[int, str] | None = None) -> Graph:
    """Construct a graph with deduplicated, normalized edges."""
    return Graph(vertex_count, edge_list, vertex_names)


class DistanceMatrix:
    """Pairwise hop counts of a connected graph."""

    __slots__ = ("_rows",)

    def __init__(self, rows: tuple[tuple[int, ...], ...]):
        self._rows = rows

    @property
    def vertex_count(self) -> int:
        return len(self._rows)

    def dist(self, u: int, v: int) -> int:
        return self._rows[u][v]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self._rows[u]

    def eccentricity(self, v: int) -> int:
        return max(self._rows[v])

    def diameter(self) -> int:
        return max(max(row) for row in self._rows)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Exact BFS hop counts for all vertex pairs of a connected graph."""
    return DistanceMatrix(g.distances())


def eccentricity(g: Graph, v: int) -> int:
    """Largest distance from v to any vertex."""
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    return max(g.distances()[v])


def diameter(g: Graph) -> int:
    """Largest distance between any two vertices."""
    return max(max(row) for row in g.distances())


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every two members are adjacent (vacuously true when < 2)."""
    return _is_clique_mask(g, vertex_mask(g, vertices))


# -- text format ----------------------------------------------------------
#
#   # optional comments
#   <vertex_count> <edge_count>
#   <u> <v>          (one line per edge, 0-based)

def format_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the graph text format; inverse of format_graph up to normalization."""
    rows = [line.strip() for line in text.splitlines()]
    rows = [line for line in rows if line and not line.startswith("#")]
    if not rows:
        raise ParseError("empty graph file")
    header = rows[0].split()
    if len(header) != 2:
        raise ParseError(f"bad header line: {rows[0]!r}")
    try:
        vertex_count, edge_count = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"bad header line: {rows[0]!r}") from exc
    if len(rows) - 1 != edge_count:
        raise ParseError(
            f"expected {edge_count} edge lines, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"bad edge line: {line!r}") from exc
    try:
        return Graph(vertex_count, edges)
    except InvalidEdge as exc:
        raise ParseError(str(exc)) from exc
