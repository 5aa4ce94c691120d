"""The cyclicizer: which pairs of elements sit together in a cyclic subgroup.

Two elements are pair-cyclic when some single element generates both, which
is the same as <x, y> being cyclic. The full pair-cyclic relation is the
union, over the distinct cyclic subgroups <z>, of (members of <z>) squared;
that bulk construction is far cheaper than closing every pair. The elements
pair-cyclic with everything form the cyclicizer Cyc(G), a cyclic normal
subgroup, and the quotient G/Cyc(G) of a non-cyclic group is again
non-cyclic. Both facts are re-checked here on every construction.
"""

from __future__ import annotations

import numpy as np

from .groups import ElementSet, FiniteGroup, InternalCheckError


class CyclicGroupError(ValueError):
    """The construction only makes sense for non-cyclic groups."""


class CyclicizerData:
    """Pair-cyclic matrix, cyclicizer subgroup, and the quotient by it."""

    __slots__ = ("group", "pair_cyclic", "cyc", "quotient", "projection")

    def __init__(
        self,
        group: FiniteGroup,
        pair_cyclic: np.ndarray,
        cyc: ElementSet,
        quotient: FiniteGroup,
        projection: np.ndarray,
    ):
        self.group = group
        self.pair_cyclic = pair_cyclic
        self.cyc = cyc
        self.quotient = quotient
        self.projection = projection

    def cyc_of(self, x: int) -> ElementSet:
        """Cyc_G(x): the elements pair-cyclic with x. Always contains <x>."""
        return ElementSet(self.pair_cyclic[x])


def cyclicizer_data(group: FiniteGroup) -> CyclicizerData:
    if group.is_cyclic:
        raise CyclicGroupError(
            "cyclic groups have an empty non-cyclic graph; nothing to build"
        )
    n = group.order
    member = group.cyclic_member
    pair = np.zeros((n, n), bool)
    for row in np.unique(member, axis=0):
        ids = np.nonzero(row)[0]
        pair[np.ix_(ids, ids)] = True
    pair.setflags(write=False)
    cyc = ElementSet(pair.all(axis=0))
    if not group.is_normal(cyc):
        raise InternalCheckError("cyclicizer is not a normal subgroup")
    k = cyc.size
    if int(group.orders[cyc.mask].max()) != k:
        raise InternalCheckError("cyclicizer is not cyclic")
    quotient, projection = group.quotient(cyc)
    if quotient.is_cyclic:
        raise InternalCheckError(
            "quotient by the cyclicizer of a non-cyclic group came out cyclic"
        )
    return CyclicizerData(group, pair, cyc, quotient, projection)
