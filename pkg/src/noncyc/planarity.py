"""Planarity decisions whose certificates are re-verified before use.

The decision itself comes from networkx's linear-time test, which hands back
either a combinatorial embedding or a forbidden subgraph. Neither is trusted
as-is: embeddings must reproduce the exact edge set and satisfy the Euler
face count on every component, and forbidden subgraphs must flatten, once the
degree-2 chain vertices are suppressed, to one of the two graphs that cannot
be drawn. Dense graphs short-circuit through the edge-count bound, with a
five-clique hunt supplying the witness cheaply when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from . import kernels
from .graphs import SimpleGraph, connected_components
from .groups import InternalCheckError


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    kind: str  # "embedding", "clique5", or "subdivision"
    certificate: dict

    def to_dict(self) -> dict:
        return {
            "planar": self.planar,
            "kind": self.kind,
            "certificate": self.certificate,
        }


def _verify_embedding(graph: SimpleGraph, rotation: dict[int, list[int]]) -> None:
    m = graph.order
    directed = set()
    for v, nbrs in rotation.items():
        if len(set(nbrs)) != len(nbrs):
            raise InternalCheckError(f"rotation at {v} repeats a neighbor")
        for u in nbrs:
            directed.add((v, u))
    expected = {
        (int(u), int(v)) for u, v in np.argwhere(graph.adj)
    }
    if directed != expected:
        raise InternalCheckError("embedding edge set differs from the graph")
    position = {
        v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()
    }
    face_of: dict[tuple[int, int], int] = {}
    faces = 0
    for start in sorted(directed):
        if start in face_of:
            continue
        edge = start
        while edge not in face_of:
            face_of[edge] = faces
            u, v = edge
            nbrs = rotation[v]
            w = nbrs[(position[v][u] + 1) % len(nbrs)]
            edge = (v, w)
        faces += 1
    comp_of = np.zeros(m, np.int64)
    comps = connected_components(graph)
    for ci, comp in enumerate(comps):
        comp_of[list(comp)] = ci
    v_count = np.zeros(len(comps), np.int64)
    e_count = np.zeros(len(comps), np.int64)
    f_count = np.zeros(len(comps), np.int64)
    for ci, comp in enumerate(comps):
        v_count[ci] = len(comp)
    for (u, v), f in face_of.items():
        e_count[comp_of[u]] += 1
    seen_faces = set()
    for (u, v), f in face_of.items():
        if f not in seen_faces:
            seen_faces.add(f)
            f_count[comp_of[u]] += 1
    for ci in range(len(comps)):
        if v_count[ci] == 1:
            continue
        euler = v_count[ci] - e_count[ci] // 2 + f_count[ci]
        if euler != 2:
            raise InternalCheckError(
                f"embedding violates the face count on component {ci}"
            )


def _verify_obstruction(graph: SimpleGraph, edges: list[tuple[int, int]]) -> str:
    """Check a claimed forbidden subgraph; returns "K5" or "K33"."""
    deg: dict[int, int] = {}
    nbrs: dict[int, list[int]] = {}
    seen_pairs = set()
    for u, v in edges:
        if u == v or not graph.has_edge(u, v):
            raise InternalCheckError("obstruction edge not in the graph")
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            raise InternalCheckError("obstruction repeats an edge")
        seen_pairs.add(key)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    degset = set(deg.values())
    if not degset <= {2, 3, 4}:
        raise InternalCheckError("obstruction has a vertex of bad degree")
    branch = sorted(v for v, d in deg.items() if d != 2)
    if all(deg[v] == 4 for v in branch) and len(branch) == 5:
        flavor = "K5"
    elif all(deg[v] == 3 for v in branch) and len(branch) == 6:
        flavor = "K33"
    else:
        raise InternalCheckError("obstruction branch vertices fit neither shape")
    chains = set()
    walked = 0
    for b in branch:
        for first in nbrs[b]:
            prev, cur = b, first
            steps = 1
            while deg[cur] == 2:
                a, c = nbrs[cur]
                prev, cur = cur, (c if a == prev else a)
                steps += 1
            if cur == b:
                raise InternalCheckError("obstruction chain loops back")
            chains.add((min(b, cur), max(b, cur)))
            walked += steps
    if walked != 2 * len(edges):
        raise InternalCheckError("obstruction has edges on no branch chain")
    if flavor == "K5":
        want = {
            (branch[i], branch[j]) for i in range(5) for j in range(i + 1, 5)
        }
        if chains != want:
            raise InternalCheckError("flattened obstruction is not complete on 5")
    else:
        if len(chains) != 9:
            raise InternalCheckError("flattened obstruction has wrong chain count")
        # a complete bipartite flattening is exactly 2-colorable with parts 3/3
        color = {branch[0]: 0}
        queue = [branch[0]]
        flat_nbrs: dict[int, list[int]] = {v: [] for v in branch}
        for a, b in chains:
            flat_nbrs[a].append(b)
            flat_nbrs[b].append(a)
        while queue:
            v = queue.pop()
            for u in flat_nbrs[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    raise InternalCheckError("flattened obstruction is not bipartite")
        side = sorted(v for v in branch if color.get(v) == 0)
        other = sorted(v for v in branch if color.get(v) == 1)
        if len(side) != 3 or len(other) != 3:
            raise InternalCheckError("flattened obstruction parts are not 3 and 3")
        want = {(min(a, b), max(a, b)) for a in side for b in other}
        if chains != want:
            raise InternalCheckError("flattened obstruction misses a cross pair")
    return flavor


def _to_networkx(graph: SimpleGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.order))
    g.add_edges_from((int(u), int(v)) for u, v in np.argwhere(np.triu(graph.adj)))
    return g


def is_planar(graph: SimpleGraph) -> PlanarityResult:
    m = graph.order
    e = graph.edge_count
    dense = m >= 3 and e > 3 * m - 6
    if dense:
        # already decided; a five-clique is the cheapest witness if one shows up
        size, witness, _, _, hit = kernels.max_clique(
            graph.adj, budget=200_000, stop_at=5
        )
        if hit and size >= 5:
            five = witness[:5]
            block = graph.adj[np.ix_(five, five)]
            if not (block | np.eye(5, dtype=bool)).all():
                raise InternalCheckError("five-clique witness fails re-check")
            return PlanarityResult(
                False, "clique5", {"vertices": [int(v) for v in five]}
            )
    planar, aux = nx.check_planarity(_to_networkx(graph), counterexample=True)
    if planar:
        if dense:
            raise InternalCheckError(
                "edge count rules out planarity but a drawing was claimed"
            )
        rotation = {
            int(v): [int(u) for u in nbrs] for v, nbrs in aux.get_data().items()
        }
        _verify_embedding(graph, rotation)
        cert = {"rotation": [[v, rotation[v]] for v in sorted(rotation)]}
        return PlanarityResult(True, "embedding", cert)
    edges = sorted((min(int(u), int(v)), max(int(u), int(v))) for u, v in aux.edges())
    flavor = _verify_obstruction(graph, edges)
    return PlanarityResult(
        False, "subdivision", {"flattened": flavor, "edges": [list(p) for p in edges]}
    )
