"""One group, its cyclicizer, and the graphs built on top, assembled once.

The non-cyclic graph lives on the elements outside the cyclicizer, joining
pairs that generate a non-cyclic subgroup. Its complement on the same
vertices is the cyclic graph. The non-commuting graph (vertices outside the
center, edges between non-commuting pairs) is also exposed since the clique
bounds compare against it.

The clique number is computed two independent ways: a branch-and-bound
search, and the count of maximal cyclic subgroups, which equals the clique
number because generators of distinct maximal cyclic subgroups are pairwise
adjacent and any clique can be retracted onto such generators. Small graphs
run both and must agree; large graphs use the count, with the search run
opportunistically on a small budget as a cross-check.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .construct import GroupSpec, build_group
from .cyclicizer import cyclicizer_data
from .graphs import SimpleGraph, max_clique
from .groups import ElementSet, FiniteGroup, InternalCheckError

SEARCH_VERTEX_LIMIT = 200
CROSSCHECK_BUDGET = 200_000


class CliqueInfo(NamedTuple):
    omega: int
    witness: tuple[int, ...]  # vertex ids of the non-cyclic graph
    method: str  # "search" or "structure"
    maximal_count: int


class GroupGraphBundle:
    __slots__ = (
        "group",
        "cyc_data",
        "noncyclic",
        "vertex_elements",
        "element_to_vertex",
        "_cyclic_graph",
        "_noncommuting",
        "_clique",
    )

    def __init__(self, group: FiniteGroup):
        self.group = group
        data = cyclicizer_data(group)
        self.cyc_data = data
        verts = np.nonzero(~data.cyc.mask)[0]
        adj = ~data.pair_cyclic[np.ix_(verts, verts)]
        np.fill_diagonal(adj, False)
        labels = tuple(group.names[v] for v in verts)
        self.noncyclic = SimpleGraph(adj, labels)
        self.vertex_elements = verts
        back = np.full(group.order, -1, np.int64)
        back[verts] = np.arange(verts.size)
        back.setflags(write=False)
        self.element_to_vertex = back
        # degree identity: d(x) = |G| - |Cyc_G(x)| for every vertex x
        expect = group.order - data.pair_cyclic[verts].sum(axis=1)
        if not np.array_equal(self.noncyclic.degrees, expect):
            raise InternalCheckError("vertex degrees disagree with cyclicizer sizes")
        self._cyclic_graph: SimpleGraph | None = None
        self._noncommuting: tuple[SimpleGraph, np.ndarray] | None = None
        self._clique: CliqueInfo | None = None

    @property
    def cyclic_graph(self) -> SimpleGraph:
        if self._cyclic_graph is None:
            self._cyclic_graph = self.noncyclic.complement()
        return self._cyclic_graph

    def noncommuting_graph(self) -> tuple[SimpleGraph, np.ndarray]:
        """Graph on the non-central elements, edges between non-commuting pairs."""
        if self._noncommuting is None:
            g = self.group
            central = g.center().mask
            verts = np.nonzero(~central)[0]
            sub = g.table[np.ix_(verts, verts)]
            adj = sub != sub.T
            labels = tuple(g.names[v] for v in verts)
            self._noncommuting = (SimpleGraph(adj, labels), verts)
        return self._noncommuting

    def maximal_cyclic_witness(self) -> tuple[int, tuple[int, ...]]:
        """Count of maximal cyclic subgroups and their least generators.

        The generators land outside the cyclicizer and are pairwise adjacent
        in the non-cyclic graph (two of them in a common cyclic subgroup
        would force their maximal subgroups to coincide); both facts are
        re-checked here.
        """
        g = self.group
        maximal = g.maximal_cyclic_subgroups()
        gens = []
        for sub in maximal:
            cand = g.cyclic_generators(sub)
            if not cand:
                raise InternalCheckError("maximal cyclic subgroup with no generator")
            gens.append(cand[0])
        vids = []
        for x in gens:
            v = int(self.element_to_vertex[x])
            if v < 0:
                raise InternalCheckError(
                    "maximal cyclic generator sits inside the cyclicizer"
                )
            vids.append(v)
        block = self.noncyclic.adj[np.ix_(vids, vids)]
        if not (block | np.eye(len(vids), dtype=bool)).all():
            raise InternalCheckError(
                "maximal cyclic generators are not pairwise adjacent"
            )
        return len(maximal), tuple(sorted(vids))

    def clique_data(self, budget: int | None = None) -> CliqueInfo:
        """Clique number of the non-cyclic graph, search and count reconciled."""
        if self._clique is not None:
            return self._clique
        count, struct_witness = self.maximal_cyclic_witness()
        m = self.noncyclic.order
        if m <= SEARCH_VERTEX_LIMIT:
            out = max_clique(self.noncyclic, budget=budget)
            if not out.completed:
                from .graphs import CliqueBudgetError

                raise CliqueBudgetError(
                    f"clique search exhausted its budget at best {out.size}"
                )
            if out.size != count:
                raise InternalCheckError(
                    f"clique search found {out.size} but there are {count} "
                    "maximal cyclic subgroups"
                )
            info = CliqueInfo(out.size, out.witness, "search", count)
        else:
            out = max_clique(self.noncyclic, budget=CROSSCHECK_BUDGET)
            if out.completed and out.size != count:
                raise InternalCheckError(
                    f"clique search found {out.size} but there are {count} "
                    "maximal cyclic subgroups"
                )
            info = CliqueInfo(count, struct_witness, "structure", count)
        self._clique = info
        return info


def build_bundle(
    source: FiniteGroup | GroupSpec | str, paranoid: bool = False
) -> GroupGraphBundle:
    """Build the graphs for a group, spec, or spec string.

    Raises CyclicGroupError for cyclic groups, whose non-cyclic graph has no
    vertices, and GroupBuildError for specs that cannot be built.
    """
    if isinstance(source, FiniteGroup):
        group = source
    else:
        group = build_group(source, paranoid=paranoid)
    return GroupGraphBundle(group)
