"""Simple undirected graphs with exact invariants and text exports.

Wraps a dense bool adjacency matrix and routes the heavy questions (clique
number, distances, domination, Hamiltonicity) through the kernels module.
Found cycles and witnesses are always re-verified against the adjacency
matrix before being returned; a verification failure is an InternalCheckError
rather than a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .groups import InternalCheckError


class CliqueBudgetError(RuntimeError):
    """The clique search hit its node budget before finishing."""


@dataclass(frozen=True)
class Distance:
    """A graph distance that may be infinite (disconnected pair)."""

    kind: str
    value: int | None = None

    @classmethod
    def finite(cls, value: int) -> "Distance":
        return cls("finite", int(value))

    @classmethod
    def infinite(cls) -> "Distance":
        return cls("infinite", None)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def to_dict(self) -> dict:
        if self.is_finite:
            return {"kind": "finite", "value": self.value}
        return {"kind": "infinite"}

    def __str__(self) -> str:
        return str(self.value) if self.is_finite else "inf"


class CliqueOutcome(NamedTuple):
    size: int
    witness: tuple[int, ...]
    completed: bool
    target_hit: bool
    nodes: int


class DominationOutcome(NamedTuple):
    value: int | None  # None means every set of size <= cap fails
    witness: tuple[int, ...]
    cap: int


class HamiltonOutcome(NamedTuple):
    status: str  # "found", "none", or "timeout"
    cycle: tuple[int, ...]


class SimpleGraph:
    """Undirected graph on vertices 0..m-1, no loops, dense representation."""

    __slots__ = ("adj", "labels", "_degrees")

    def __init__(self, adj: np.ndarray, labels: tuple[str, ...] | None = None):
        adj = np.asarray(adj, bool).copy()
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        adj.setflags(write=False)
        self.adj = adj
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != adj.shape[0]:
                raise ValueError("need one label per vertex")
        self.labels = labels
        self._degrees: np.ndarray | None = None

    @property
    def order(self) -> int:
        return int(self.adj.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            deg = self.adj.sum(axis=1)
            deg.setflags(write=False)
            self._degrees = deg
        return self._degrees

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(int(u) for u in np.nonzero(self.adj[v])[0])

    def edges(self) -> list[tuple[int, int]]:
        iu = np.argwhere(np.triu(self.adj))
        return [(int(u), int(v)) for u, v in iu]

    def complement(self) -> "SimpleGraph":
        comp = ~self.adj
        np.fill_diagonal(comp, False)
        return SimpleGraph(comp, self.labels)

    def induced(self, vertices) -> "SimpleGraph":
        ids = list(vertices)
        sub = self.adj[np.ix_(ids, ids)]
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in ids)
        return SimpleGraph(sub, labels)


def distance_matrix(graph: SimpleGraph) -> np.ndarray:
    """All-pairs BFS distances; -1 marks unreachable pairs."""
    return kernels.all_pairs_dist(graph.adj)


def connected_components(graph: SimpleGraph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by least vertex."""
    m = graph.order
    dist = distance_matrix(graph)
    seen = np.zeros(m, bool)
    out = []
    for v in range(m):
        if seen[v]:
            continue
        comp = np.nonzero(dist[v] >= 0)[0]
        seen[comp] = True
        out.append(tuple(int(u) for u in comp))
    return out


def diameter(graph: SimpleGraph) -> Distance:
    """Largest distance between any two vertices; infinite if disconnected."""
    if graph.order == 0:
        raise ValueError("diameter of the empty graph is undefined")
    dist = distance_matrix(graph)
    if (dist < 0).any():
        return Distance.infinite()
    return Distance.finite(int(dist.max()))


def max_clique(
    graph: SimpleGraph, budget: int | None = None, stop_at: int = 0
) -> CliqueOutcome:
    """Branch-and-bound maximum clique; see kernels.max_clique for semantics."""
    size, witness, nodes, completed, target = kernels.max_clique(
        graph.adj, budget=budget, stop_at=stop_at
    )
    if witness and not _is_clique(graph.adj, witness):
        raise InternalCheckError("clique witness fails adjacency re-check")
    return CliqueOutcome(size, witness, completed, target, nodes)


def clique_number(graph: SimpleGraph, budget: int | None = None) -> int:
    out = max_clique(graph, budget=budget)
    if not out.completed:
        raise CliqueBudgetError(
            f"clique search stopped after {out.nodes} nodes with best {out.size}"
        )
    return out.size


def _is_clique(adj: np.ndarray, vertices: tuple[int, ...]) -> bool:
    ids = list(vertices)
    if len(set(ids)) != len(ids):
        return False
    block = adj[np.ix_(ids, ids)]
    return bool((block | np.eye(len(ids), dtype=bool)).all())


def domination_number(graph: SimpleGraph, cap: int = 3) -> DominationOutcome:
    """Exact domination number if it is <= cap, else value None."""
    value, witness = kernels.domination_bounded(graph.adj, cap)
    if value is not None and witness:
        closed = graph.adj.copy()
        np.fill_diagonal(closed, True)
        if not closed[list(witness)].any(axis=0).all():
            raise InternalCheckError("dominating-set witness fails re-check")
    return DominationOutcome(value, witness, cap)


def _verify_cycle(adj: np.ndarray, cycle: tuple[int, ...]) -> bool:
    m = adj.shape[0]
    if len(cycle) != m or len(set(cycle)) != m:
        return False
    return all(adj[cycle[i], cycle[(i + 1) % m]] for i in range(m))


def _dirac_cycle(adj: np.ndarray) -> list[int]:
    """Constructive Hamiltonian cycle under the half-order degree bound.

    Grows a path, extending either end while possible; a stuck path is closed
    into a cycle through a crossing pair of chords (which the degree bound
    guarantees), and a cycle shorter than the graph is reopened through an
    edge leaving it. Each round lengthens the path, so this terminates.
    """
    m = adj.shape[0]
    path = [0]
    on_path = np.zeros(m, bool)
    on_path[0] = True
    while True:
        extended = True
        while extended:
            extended = False
            tail_free = adj[path[-1]] & ~on_path
            if tail_free.any():
                v = int(np.argmax(tail_free))
                path.append(v)
                on_path[v] = True
                extended = True
                continue
            head_free = adj[path[0]] & ~on_path
            if head_free.any():
                v = int(np.argmax(head_free))
                path.insert(0, v)
                on_path[v] = True
                extended = True
        k = len(path)
        if adj[path[0], path[-1]]:
            cycle = path
        else:
            # both endpoints' neighbors lie on the path; degree(v1)+degree(vk)
            # >= m >= k forces positions i with v1 ~ path[i+1] and path[i] ~ vk
            arr = np.array(path)
            cross = adj[path[0], arr[1:]] & adj[path[-1], arr[:-1]]
            hits = np.nonzero(cross)[0]
            if hits.size == 0:
                raise InternalCheckError("no crossing chord under degree bound")
            i = int(hits[0])
            cycle = path[: i + 1] + path[i + 1 :][::-1]
        if k == m:
            return cycle
        # splice in a vertex adjacent to the cycle and grow again
        outside = np.nonzero(adj[cycle].any(axis=0) & ~on_path)[0]
        if outside.size == 0:
            raise InternalCheckError("short cycle with no exit in a connected graph")
        u = int(outside[0])
        t = int(np.argmax(adj[cycle, u]))
        path = [u] + cycle[t:] + cycle[:t]
        on_path[u] = True


def hamiltonian_cycle(
    graph: SimpleGraph, budget: int | None = None
) -> HamiltonOutcome:
    """Search for a Hamiltonian cycle.

    Cheap exclusions first (too small, a vertex of degree < 2, disconnected).
    When every degree is at least half the order, the classical sufficient
    condition applies and the cycle is built constructively; otherwise an
    exhaustive backtracking search decides, subject to the node budget.
    """
    m = graph.order
    if m < 3:
        return HamiltonOutcome("none", ())
    deg = graph.degrees
    if int(deg.min()) < 2:
        return HamiltonOutcome("none", ())
    if len(connected_components(graph)) > 1:
        return HamiltonOutcome("none", ())
    if 2 * int(deg.min()) >= m:
        cycle = tuple(_dirac_cycle(graph.adj))
        if not _verify_cycle(graph.adj, cycle):
            raise InternalCheckError("constructed Hamiltonian cycle fails re-check")
        return HamiltonOutcome("found", cycle)
    status, cycle, _ = kernels.ham_backtrack(graph.adj, budget=budget)
    if status == "found":
        if not _verify_cycle(graph.adj, cycle):
            raise InternalCheckError("searched Hamiltonian cycle fails re-check")
        return HamiltonOutcome("found", cycle)
    return HamiltonOutcome(status, ())


# ---------------------------------------------------------------------------
# exports


def _quote_dot(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: SimpleGraph, name: str = "G") -> str:
    """Graphviz text, vertices and edges in ascending order."""
    lines = [f"graph {_quote_dot(name)} {{"]
    for v in range(graph.order):
        if graph.labels is not None:
            lines.append(f"  {v} [label={_quote_dot(graph.labels[v])}];")
        else:
            lines.append(f"  {v};")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def encode_graph6(graph: SimpleGraph) -> str:
    """The standard printable encoding of an undirected graph.

    Order first (one byte up to 62 vertices, a tilde plus three bytes after
    that), then the upper triangle read column by column, packed into 6-bit
    groups, each offset by 63 into the printable range.
    """
    m = graph.order
    if m > 258047:
        raise ValueError("graph too large for this encoding")
    if m <= 62:
        head = chr(m + 63)
    else:
        head = "~" + "".join(
            chr(((m >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, m):
        for i in range(j):
            bits.append(1 if graph.adj[i, j] else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for t in range(0, len(bits), 6):
        val = 0
        for b in bits[t : t + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def decode_graph6(text: str) -> SimpleGraph:
    text = text.strip()
    if not text:
        raise ValueError("empty graph text")
    if text[0] == "~":
        if len(text) < 4:
            raise ValueError("truncated order field")
        m = 0
        for ch in text[1:4]:
            m = (m << 6) | (ord(ch) - 63)
        body = text[4:]
    else:
        m = ord(text[0]) - 63
        body = text[1:]
    if m < 0:
        raise ValueError("bad order field")
    need = (m * (m - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"expected {need} data characters, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError("data character out of range")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    adj = np.zeros((m, m), bool)
    t = 0
    for j in range(1, m):
        for i in range(j):
            if bits[t]:
                adj[i, j] = adj[j, i] = True
            t += 1
    return SimpleGraph(adj)
