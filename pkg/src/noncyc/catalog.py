"""Deterministic roster of constructible groups for sweeps and tests.

The catalog covers every family the builder knows at small orders: all
cyclic groups (kept for error-path coverage even though their graphs are
empty), every abelian group as a product of prime-power cyclics, the
dihedral and dicyclic series, the small symmetric and alternating groups,
and a handful of named semidirect and direct products that the checks
single out. The large simple-group entries only join when asked for, since
they dwarf everything else in build time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .construct import GroupSpec, predicted_order

BIG_NAMES = ("SL2(5)", "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)")


class CatalogEntry(NamedTuple):
    name: str
    spec: GroupSpec
    order: int


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    max_order: int
    include_big: bool

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.entries)

    def get(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(f"no catalog entry named {name!r}")


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _partitions(k: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    top = k if cap is None else min(k, cap)
    for first in range(top, 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def _abelian_entries(max_order: int) -> list[CatalogEntry]:
    out = []
    for n in range(4, max_order + 1):
        fact = _factorize(n)
        for combo in itertools.product(*(tuple(_partitions(e)) for _, e in fact)):
            if all(len(part) == 1 for part in combo):
                continue  # that one is the cyclic group of order n
            pieces = []
            for (p, _), part in zip(fact, combo):
                pieces.extend(p**x for x in part)
            pieces.sort()
            name = "x".join(f"Z{c}" for c in pieces)
            if len(fact) == 1 and all(x == 1 for x in combo[0]):
                spec = GroupSpec("ElementaryAbelian", (fact[0][0], len(combo[0])))
            else:
                spec = GroupSpec(
                    "DirectProduct",
                    tuple(GroupSpec("Cyclic", (c,)) for c in pieces),
                )
            out.append(CatalogEntry(name, spec, n))
    return out


def _named_entries() -> list[CatalogEntry]:
    c2 = GroupSpec("Cyclic", (2,))
    c3 = GroupSpec("Cyclic", (3,))
    c6 = GroupSpec("Cyclic", (6,))
    s3 = GroupSpec("Symmetric", (3,))
    f42 = GroupSpec("SemidirectCyclic", (7, 6, 3))
    return [
        CatalogEntry("M27", GroupSpec("SemidirectCyclic", (9, 3, 4)), 27),
        CatalogEntry("F42", f42, 42),
        CatalogEntry("Z3xS3", GroupSpec("DirectProduct", (c3, s3)), 18),
        CatalogEntry("C6xS3", GroupSpec("DirectProduct", (c6, s3)), 36),
        CatalogEntry("C2xF42", GroupSpec("DirectProduct", (c2, f42)), 84),
    ]


def default_catalog(max_order: int, include_big: bool = False) -> Catalog:
    """Catalog of every buildable family up to max_order.

    Cyclic groups are listed first, then everything else ordered by
    (order, name). With include_big the SL2(5) and PSL2(q) entries are
    appended regardless of max_order.
    """
    if max_order < 4:
        raise ValueError("max_order must be at least 4")
    entries: list[CatalogEntry] = [
        CatalogEntry(f"Z{n}", GroupSpec("Cyclic", (n,)), n)
        for n in range(2, max_order + 1)
    ]
    rest: list[CatalogEntry] = []
    rest.extend(_abelian_entries(max_order))
    for m in range(3, max_order // 2 + 1):
        rest.append(CatalogEntry(f"D{2 * m}", GroupSpec("Dihedral", (m,)), 2 * m))
    for m in range(2, max_order // 4 + 1):
        name = "Q8" if m == 2 else f"Dic{m}"
        rest.append(CatalogEntry(name, GroupSpec("Dicyclic", (m,)), 4 * m))
    for k in (3, 4, 5):
        order = 1
        for i in range(2, k + 1):
            order *= i
        if order <= max_order:
            rest.append(CatalogEntry(f"S{k}", GroupSpec("Symmetric", (k,)), order))
    for k, order in ((4, 12), (5, 60)):
        if order <= max_order:
            rest.append(CatalogEntry(f"A{k}", GroupSpec("Alternating", (k,)), order))
    rest.extend(e for e in _named_entries() if e.order <= max_order)
    rest.sort(key=lambda e: (e.order, e.name))
    entries.extend(rest)
    if include_big:
        entries.append(CatalogEntry("SL2(5)", GroupSpec("SL2", (5,)), 120))
        for q in (4, 5, 7, 8, 9):
            spec = GroupSpec("PSL2", (q,))
            entries.append(CatalogEntry(f"PSL2({q})", spec, predicted_order(spec)))
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise AssertionError("catalog names collide")
    return Catalog(tuple(entries), max_order, include_big)
