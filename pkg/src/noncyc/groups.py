"""Finite groups as Cayley tables, plus the structure theory the checks need.

A group is an n x n int32 multiplication table over element ids 0..n-1 with
the identity pinned at id 0. Everything downstream (orders, cyclic-subgroup
membership, centralizers, conjugacy classes, quotients) is derived from the
table alone; nothing trusts how the group was constructed.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels


class InternalCheckError(RuntimeError):
    """A redundant self-check failed; the library caught itself being wrong."""


class CapExceededError(RuntimeError):
    """A bounded enumeration was asked to go past its configured cap."""


class ElementSet:
    """Immutable set of element ids inside a group of known order."""

    __slots__ = ("_mask", "_hash")

    def __init__(self, mask: np.ndarray):
        mask = np.asarray(mask, bool).copy()
        mask.setflags(write=False)
        self._mask = mask
        self._hash: int | None = None

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def universe(self) -> int:
        return int(self._mask.shape[0])

    @property
    def size(self) -> int:
        return int(self._mask.sum())

    def members(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.nonzero(self._mask)[0])

    def __contains__(self, x: int) -> bool:
        return bool(self._mask[x])

    def __len__(self) -> int:
        return self.size

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self._mask & other._mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self._mask | other._mask)

    def issubset(self, other: "ElementSet") -> bool:
        return not bool((self._mask & ~other._mask).any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return np.array_equal(self._mask, other._mask)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.universe, np.packbits(self._mask).tobytes())
            )
        return self._hash

    def __repr__(self) -> str:
        return f"ElementSet({list(self.members())} of {self.universe})"


class FiniteGroup:
    """A finite group given by its Cayley table; identity is element 0.

    The constructor checks the cheap axioms unconditionally (Latin rows and
    columns, identity at 0, inverses exist). Associativity is O(n^3), so it
    runs only when check_associativity=True; builders that derive the table
    from an action skip it, imported tables never do.
    """

    __slots__ = (
        "table",
        "names",
        "spec",
        "_inverses",
        "_orders",
        "_member",
        "_paircyc",
        "_maxcyc",
        "_classes",
    )

    def __init__(
        self,
        table: np.ndarray,
        names: tuple[str, ...] | None = None,
        spec=None,
        check_associativity: bool = False,
    ):
        table = np.ascontiguousarray(table, np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("Cayley table must be square")
        n = table.shape[0]
        if n == 0:
            raise ValueError("group must be non-empty")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries must be element ids in range")
        expect = np.arange(n, dtype=np.int32)
        if not np.array_equal(np.sort(table, axis=1), np.tile(expect, (n, 1))):
            raise ValueError("table rows are not permutations")
        if not np.array_equal(np.sort(table, axis=0), np.tile(expect, (n, 1)).T):
            raise ValueError("table columns are not permutations")
        if not np.array_equal(table[0], expect) or not np.array_equal(
            table[:, 0], expect
        ):
            raise ValueError("element 0 is not a two-sided identity")
        if check_associativity:
            bad = kernels.associativity_violation(table)
            if bad is not None:
                i, j, k = bad
                raise ValueError(
                    f"associativity fails at ({i}*{j})*{k} != {i}*({j}*{k})"
                )
        table.setflags(write=False)
        if names is None:
            names = ("e",) + tuple(f"x{i}" for i in range(1, n))
        if len(names) != n:
            raise ValueError("need one name per element")
        self.table = table
        self.names = tuple(names)
        self.spec = spec
        self._inverses: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._member: np.ndarray | None = None
        self._paircyc: dict[tuple[int, int], bool] = {}
        self._maxcyc: list[ElementSet] | None = None
        self._classes: list[tuple[int, ...]] | None = None

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @property
    def inverses(self) -> np.ndarray:
        if self._inverses is None:
            inv = np.argmax(self.table == 0, axis=1).astype(np.int32)
            inv.setflags(write=False)
            self._inverses = inv
        return self._inverses

    def inverse(self, x: int) -> int:
        return int(self.inverses[x])

    def _order_scan(self) -> None:
        # one power chain per element, advanced in lockstep; membership rows
        # of the cyclic subgroups fall out of the same sweep
        n = self.order
        idx = np.arange(n)
        cur = idx.copy()
        orders = np.ones(n, np.int64)
        member = np.zeros((n, n), bool)
        member[:, 0] = True
        member[idx, cur] = True
        while True:
            active = np.nonzero(cur != 0)[0]
            if active.size == 0:
                break
            cur[active] = self.table[cur[active], active]
            orders[active] += 1
            member[active, cur[active]] = True
        orders.setflags(write=False)
        member.setflags(write=False)
        self._orders = orders
        self._member = member

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            self._order_scan()
        return self._orders

    @property
    def cyclic_member(self) -> np.ndarray:
        """Bool matrix: cyclic_member[x, y] holds iff y lies in <x>."""
        if self._member is None:
            self._order_scan()
        return self._member

    def element_order(self, x: int) -> int:
        return int(self.orders[x])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse(x), -k
        acc = 0
        base = x
        while k:
            if k & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            k >>= 1
        return acc

    @property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in np.unique(self.orders)))

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @property
    def is_cyclic(self) -> bool:
        return int(self.orders.max()) == self.order

    def subgroup_closure(self, seeds) -> ElementSet:
        """Smallest subgroup containing the seed elements."""
        n = self.order
        mask = np.zeros(n, bool)
        mask[0] = True
        for s in seeds:
            mask[s] = True
        while True:
            elems = np.nonzero(mask)[0]
            prods = self.table[np.ix_(elems, elems)]
            new = np.zeros(n, bool)
            new[prods.ravel()] = True
            if not (new & ~mask).any():
                return ElementSet(mask)
            mask |= new

    def pair_generates_cyclic(self, x: int, y: int) -> bool:
        """Whether <x, y> is cyclic: its largest element order equals its size."""
        key = (x, y) if x <= y else (y, x)
        hit = self._paircyc.get(key)
        if hit is None:
            closure = self.subgroup_closure(key)
            hit = int(self.orders[closure.mask].max()) == closure.size
            self._paircyc[key] = hit
        return hit

    def center(self) -> ElementSet:
        return ElementSet((self.table == self.table.T).all(axis=1))

    def centralizer(self, x: int) -> ElementSet:
        return ElementSet(self.table[:, x] == self.table[x, :])

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes as sorted id tuples, ordered by least member (identity first)."""
        if self._classes is None:
            n = self.order
            inv = self.inverses
            idx = np.arange(n)
            assigned = np.zeros(n, bool)
            classes = []
            for x in range(n):
                if assigned[x]:
                    continue
                conj = self.table[self.table[inv, x], idx]
                vals = np.unique(conj)
                assigned[vals] = True
                classes.append(tuple(int(v) for v in vals))
            self._classes = classes
        return self._classes

    def is_subgroup(self, subset: ElementSet) -> bool:
        if subset.universe != self.order or 0 not in subset:
            return False
        elems = np.nonzero(subset.mask)[0]
        return bool(subset.mask[self.table[np.ix_(elems, elems)]].all())

    def is_normal(self, subset: ElementSet) -> bool:
        if not self.is_subgroup(subset):
            return False
        elems = np.nonzero(subset.mask)[0]
        inv = self.inverses
        idx = np.arange(self.order)[:, None]
        conj = self.table[self.table[inv][:, elems], idx]
        return bool(subset.mask[conj].all())

    def normal_subgroups(self, class_cap: int = 20) -> list[ElementSet]:
        """All normal subgroups, as unions of conjugacy classes.

        Enumerates subsets of the non-identity classes, keeping those whose
        total size divides the group order and whose union is product-closed.
        Raises CapExceededError when there are more classes than class_cap,
        since the subset scan is exponential in the class count.
        """
        classes = self.conjugacy_classes()
        nonid = [c for c in classes if c != (0,)]
        c = len(nonid)
        if c > class_cap:
            raise CapExceededError(
                f"{c} non-identity conjugacy classes exceeds cap {class_cap}"
            )
        n = self.order
        sizes = np.array([len(cl) for cl in nonid], np.int64)
        totals = np.zeros(1 << c, np.int64)
        for b in range(c):
            half = 1 << b
            totals[half : 2 * half] = totals[:half] + sizes[b]
        found = []
        for bits in np.nonzero(n % (totals + 1) == 0)[0]:
            mask = np.zeros(n, bool)
            mask[0] = True
            b = int(bits)
            t = 0
            while b:
                if b & 1:
                    mask[list(nonid[t])] = True
                b >>= 1
                t += 1
            elems = np.nonzero(mask)[0]
            if mask[self.table[np.ix_(elems, elems)]].all():
                found.append(ElementSet(mask))
        found.sort(key=lambda s: (s.size, s.members()))
        return found

    def quotient(self, normal: ElementSet) -> tuple["FiniteGroup", np.ndarray]:
        """Quotient by a normal subgroup; returns (G/N, coset projection map).

        The projection maps each element id to its coset id; the coset of N
        itself is the quotient's identity 0.
        """
        if not self.is_normal(normal):
            raise ValueError("quotient requires a normal subgroup")
        n = self.order
        elems = np.nonzero(normal.mask)[0]
        cos_of = np.full(n, -1, np.int32)
        reps = []
        for x in range(n):
            if cos_of[x] >= 0:
                continue
            cos_of[self.table[x, elems]] = len(reps)
            reps.append(x)
        reps_arr = np.array(reps, np.int32)
        qtable = cos_of[self.table[np.ix_(reps_arr, reps_arr)]]
        qnames = tuple(f"[{self.names[r]}]" for r in reps)
        cos_of.setflags(write=False)
        return FiniteGroup(qtable, qnames), cos_of

    def maximal_cyclic_subgroups(self) -> list[ElementSet]:
        """The cyclic subgroups not contained in any larger cyclic subgroup."""
        if self._maxcyc is None:
            member = self.cyclic_member
            rows = np.unique(member, axis=0)
            packed = [kernels.pack_rows(rows[i : i + 1])[0] for i in range(len(rows))]
            sizes = rows.sum(axis=1)
            by_size = sorted(range(len(rows)), key=lambda i: (-int(sizes[i])))
            keep: list[int] = []
            kept_words: list[np.ndarray] = []
            for i in by_size:
                cand = packed[i]
                dominated = False
                for w in kept_words:
                    if np.array_equal(cand & w, cand):
                        dominated = True
                        break
                if not dominated:
                    keep.append(i)
                    kept_words.append(cand)
            result = [ElementSet(rows[i]) for i in keep]
            result.sort(key=lambda s: s.members())
            self._maxcyc = result
        return self._maxcyc

    def cyclic_generators(self, subgroup: ElementSet) -> tuple[int, ...]:
        """Generators of a cyclic subgroup: its members of full order."""
        ids = np.nonzero(subgroup.mask)[0]
        k = subgroup.size
        return tuple(int(x) for x in ids if self.orders[x] == k)

    def nu_p(self, p: int) -> int:
        """Number of subgroups of order p: elements of order p over p - 1."""
        count = int((self.orders == p).sum())
        if count % (p - 1):
            raise InternalCheckError(
                f"{count} elements of order {p} not divisible by {p - 1}"
            )
        return count // (p - 1)


def identify_small_quotient(group: FiniteGroup) -> str:
    """Coarse isomorphism tag used by the clique characterizations.

    Only the shapes those checks care about get names: the Klein four-group,
    the abelian group of order 8 and exponent 4, the elementary abelian group
    of order 9, and the symmetric group on three letters. Each signature is
    isomorphism-complete at its order, so no general isomorphism test is
    needed. Everything else is "other".
    """
    n = group.order
    if n == 4 and group.exponent == 2:
        return "Z2xZ2"
    if n == 8 and group.is_abelian and group.exponent == 4:
        return "Z2xZ4"
    if n == 9 and group.exponent == 3:
        return "Z3xZ3"
    if n == 6 and not group.is_abelian:
        return "S3"
    return "other"
