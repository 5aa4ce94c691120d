"""Builders for the group catalog: specs, families, and Cayley-table IO.

A GroupSpec is a small parse tree like DirectProduct(Cyclic(2),Cyclic(4)) or
PSL2(7). build_group turns one into a FiniteGroup, enforcing the element cap
and validating the table. Tables computed here come from explicit formulas or
from closures of generator sets, so the expensive associativity audit is
reserved for imported tables and for paranoid mode.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup

ELEMENT_CAP = 5040

_FAMILIES = (
    "Cyclic",
    "ElementaryAbelian",
    "DirectProduct",
    "Dihedral",
    "Dicyclic",
    "SemidirectCyclic",
    "Symmetric",
    "Alternating",
    "SL2",
    "PSL2",
    "FromCayleyFile",
    "FromPermGenerators",
)

_FIELD_SIZES = (2, 3, 4, 5, 7, 8, 9)


class GroupBuildError(ValueError):
    """A spec cannot be parsed, validated, or built."""


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    args: tuple

    def __str__(self) -> str:
        return format_spec(self)


def format_spec(spec: GroupSpec) -> str:
    parts = []
    for a in spec.args:
        if isinstance(a, GroupSpec):
            parts.append(format_spec(a))
        elif isinstance(a, str):
            parts.append(json.dumps(a))
        else:
            parts.append(str(a))
    return f"{spec.kind}({','.join(parts)})"


def parse_spec(text: str) -> GroupSpec:
    """Parse a spec string like "DirectProduct(Cyclic(2),Dihedral(3))"."""
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_node() -> GroupSpec:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        name = text[start:pos]
        if not name:
            raise GroupBuildError(f"expected a family name at position {start}")
        if name not in _FAMILIES:
            raise GroupBuildError(f"unknown group family {name!r}")
        skip_ws()
        if pos >= len(text) or text[pos] != "(":
            raise GroupBuildError(f"expected '(' after {name}")
        pos += 1
        args: list = []
        while True:
            skip_ws()
            if pos >= len(text):
                raise GroupBuildError("unterminated spec")
            ch = text[pos]
            if ch == ")":
                pos += 1
                break
            if ch in "\"'":
                quote = ch
                pos += 1
                start = pos
                while pos < len(text) and text[pos] != quote:
                    pos += 1
                if pos >= len(text):
                    raise GroupBuildError("unterminated string argument")
                args.append(text[start:pos])
                pos += 1
            elif ch.isdigit() or ch == "-":
                start = pos
                pos += 1
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                args.append(int(text[start:pos]))
            else:
                args.append(parse_node())
            skip_ws()
            if pos < len(text) and text[pos] == ",":
                pos += 1
        if not args:
            raise GroupBuildError(f"{name} needs at least one argument")
        return GroupSpec(name, tuple(args))

    node = parse_node()
    skip_ws()
    if pos != len(text):
        raise GroupBuildError(f"trailing input after spec: {text[pos:]!r}")
    return node


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# small finite fields

# extension fields as p, degree, and the digits of x^degree reduced
_GF_MODULUS = {4: (2, 2, (1, 1)), 8: (2, 3, (1, 1, 0)), 9: (3, 2, (2, 0))}


class _GF:
    """Arithmetic tables for GF(q), elements encoded as ints 0..q-1.

    Prime fields are plain modular arithmetic. For q in {4, 8, 9} an element
    is the base-p digit string of a polynomial, least significant digit
    first, reduced by a fixed irreducible.
    """

    def __init__(self, q: int):
        if q not in _FIELD_SIZES:
            raise GroupBuildError(f"field size {q} not supported")
        self.q = q
        if _is_prime(q):
            r = np.arange(q)
            self.addt = (r[:, None] + r[None, :]) % q
            self.mult = (r[:, None] * r[None, :]) % q
        else:
            p, e, red = _GF_MODULUS[q]

            def digits(i):
                out = []
                for _ in range(e):
                    out.append(i % p)
                    i //= p
                return out

            def undigits(ds):
                val = 0
                for d in reversed(ds):
                    val = val * p + d
                return val

            def polymul(u, v):
                raw = [0] * (2 * e - 1)
                for i, ui in enumerate(u):
                    for j, vj in enumerate(v):
                        raw[i + j] = (raw[i + j] + ui * vj) % p
                for k in range(2 * e - 2, e - 1, -1):
                    c = raw[k]
                    if c:
                        raw[k] = 0
                        for t, rt in enumerate(red):
                            raw[k - e + t] = (raw[k - e + t] + c * rt) % p
                return raw[:e]

            self.addt = np.zeros((q, q), np.int64)
            self.mult = np.zeros((q, q), np.int64)
            for a in range(q):
                da = digits(a)
                for b in range(q):
                    db = digits(b)
                    self.addt[a, b] = undigits(
                        [(x + y) % p for x, y in zip(da, db)]
                    )
                    self.mult[a, b] = undigits(polymul(da, db))
        inv = np.zeros(q, np.int64)
        for a in range(1, q):
            hits = np.nonzero(self.mult[a] == 1)[0]
            if hits.size != 1:
                raise GroupBuildError(f"GF({q}) tables are not a field")
            inv[a] = hits[0]
        self.invt = inv

    def add(self, a: int, b: int) -> int:
        return int(self.addt[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return int(self.invt[a])


# ---------------------------------------------------------------------------
# table builders


def _cyclic_table(n: int) -> np.ndarray:
    r = np.arange(n, dtype=np.int32)
    return (r[:, None] + r[None, :]) % n


def _cyclic_names(n: int) -> tuple[str, ...]:
    return tuple(
        "e" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(n)
    )


def _dihedral(m: int) -> tuple[np.ndarray, tuple[str, ...]]:
    # ids 0..m-1 are rotations r^i, ids m..2m-1 are reflections r^i s
    i = np.arange(2 * m)[:, None]
    j = np.arange(2 * m)[None, :]
    ri, si = i % m, i >= m
    rj, sj = j % m, j >= m
    rot = np.where(si, ri - rj, ri + rj) % m
    tab = (rot + m * (si ^ sj)).astype(np.int32)
    names = ["e", "r"][: min(2, m)] + [f"r^{t}" for t in range(2, m)]
    names += ["s", "r*s"][: min(2, m)] + [f"r^{t}*s" for t in range(2, m)]
    return tab, tuple(names)


def _dicyclic(m: int) -> tuple[np.ndarray, tuple[str, ...]]:
    # ids 0..2m-1 are a^i, ids 2m..4m-1 are a^i b; b^2 = a^m, b a b^-1 = a^-1
    n2 = 2 * m
    i = np.arange(4 * m)[:, None]
    j = np.arange(4 * m)[None, :]
    ri, si = i % n2, i >= n2
    rj, sj = j % n2, j >= n2
    rot = (np.where(si, ri - rj, ri + rj) + m * (si & sj)) % n2
    tab = (rot + n2 * (si ^ sj)).astype(np.int32)
    names = ["e", "a"][: min(2, n2)] + [f"a^{t}" for t in range(2, n2)]
    names += ["b", "a*b"][: min(2, n2)] + [f"a^{t}*b" for t in range(2, n2)]
    return tab, tuple(names)


def _semidirect_cyclic(n: int, m: int, r: int) -> tuple[np.ndarray, tuple[str, ...]]:
    # <x, y | x^n = y^m = 1, y^-1 x y = x^r>, element x^a y^b at id a*m + b
    if math.gcd(r % n, n) != 1:
        raise GroupBuildError(f"twist {r} is not a unit mod {n}")
    if pow(r, m, n) != 1:
        raise GroupBuildError(f"twist {r} has order not dividing {m} mod {n}")
    rprime = pow(r, -1, n)
    powtab = np.array([pow(rprime, b, n) for b in range(m)], np.int64)
    i = np.arange(n * m)[:, None]
    j = np.arange(n * m)[None, :]
    a1, b1 = i // m, i % m
    a2, b2 = j // m, j % m
    # y^b1 x^a2 = x^(a2 * r'^b1) y^b1, so the x-exponents compose as below
    out_a = (a1 + a2 * powtab[b1]) % n
    out_b = (b1 + b2) % m
    tab = (out_a * m + out_b).astype(np.int32)

    def nm(a, b):
        xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
        ys = "" if b == 0 else ("y" if b == 1 else f"y^{b}")
        if xs and ys:
            return f"{xs}*{ys}"
        return xs or ys or "e"

    names = tuple(nm(a, b) for a in range(n) for b in range(m))
    return tab, names


def _perm_mul(p: tuple, q: tuple) -> tuple:
    # apply q first, then p
    return tuple(p[t] for t in q)


def _perm_closure(degree: int, generators: list[tuple], cap: int) -> list[tuple]:
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    head = 0
    while head < len(elems):
        cur = elems[head]
        head += 1
        for g in generators:
            nxt = _perm_mul(cur, g)
            if nxt not in index:
                if len(elems) >= cap:
                    raise GroupBuildError(
                        f"permutation closure exceeds the {cap}-element cap"
                    )
                index[nxt] = len(elems)
                elems.append(nxt)
    return elems


def _perm_table(perms: list[tuple]) -> np.ndarray:
    n = len(perms)
    k = len(perms[0])
    P = np.array(perms, np.int64)
    radix = (np.int64(k + 1)) ** np.arange(k, dtype=np.int64)
    codes = P @ radix
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    tab = np.zeros((n, n), np.int32)
    for i in range(n):
        comp = P[i][P]
        ccodes = comp @ radix
        posn = np.searchsorted(sorted_codes, ccodes)
        tab[i] = order[posn]
    return tab


def _cycle_name(perm: tuple, labels: list[str]) -> str:
    k = len(perm)
    seen = [False] * k
    parts = []
    for s in range(k):
        if seen[s] or perm[s] == s:
            seen[s] = True
            continue
        cyc = [s]
        seen[s] = True
        t = perm[s]
        while t != s:
            cyc.append(t)
            seen[t] = True
            t = perm[t]
        parts.append("(" + " ".join(labels[c] for c in cyc) + ")")
    return "".join(parts) if parts else "()"


def _symmetric(k: int, even_only: bool, cap: int):
    if even_only:
        gens = [
            tuple(_three_cycle(k, 0, 1, i)) for i in range(2, k)
        ]
    else:
        swap = list(range(k))
        swap[0], swap[1] = 1, 0
        cyc = tuple(list(range(1, k)) + [0])
        gens = [tuple(swap), cyc]
    perms = _perm_closure(k, gens, cap)
    labels = [str(t) for t in range(k)]
    names = tuple(_cycle_name(p, labels) for p in perms)
    return _perm_table(perms), names


def _three_cycle(k: int, a: int, b: int, c: int) -> list[int]:
    img = list(range(k))
    img[a], img[b], img[c] = b, c, a
    return img


def _sl2(q: int, cap: int):
    gf = _GF(q)
    gens = []
    for t in range(1, q):
        gens.append((1, t, 0, 1))
        gens.append((1, 0, t, 1))

    def matmul(m1, m2):
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        return (
            gf.add(gf.mul(a1, a2), gf.mul(b1, c2)),
            gf.add(gf.mul(a1, b2), gf.mul(b1, d2)),
            gf.add(gf.mul(c1, a2), gf.mul(d1, c2)),
            gf.add(gf.mul(c1, b2), gf.mul(d1, d2)),
        )

    ident = (1, 0, 0, 1)
    index = {ident: 0}
    elems = [ident]
    head = 0
    while head < len(elems):
        cur = elems[head]
        head += 1
        for g in gens:
            nxt = matmul(cur, g)
            if nxt not in index:
                if len(elems) >= cap:
                    raise GroupBuildError(
                        f"matrix closure exceeds the {cap}-element cap"
                    )
                index[nxt] = len(elems)
                elems.append(nxt)
    n = len(elems)
    if n != q**3 - q:
        raise GroupBuildError(
            f"SL2({q}) closure found {n} elements, expected {q**3 - q}"
        )
    E = np.array(elems, np.int64)
    a1, b1 = E[:, 0][:, None], E[:, 1][:, None]
    c1, d1 = E[:, 2][:, None], E[:, 3][:, None]
    a2, b2 = E[:, 0][None, :], E[:, 1][None, :]
    c2, d2 = E[:, 2][None, :], E[:, 3][None, :]
    addt, mult = gf.addt, gf.mult
    pa = addt[mult[a1, a2], mult[b1, c2]]
    pb = addt[mult[a1, b2], mult[b1, d2]]
    pc = addt[mult[c1, a2], mult[d1, c2]]
    pd = addt[mult[c1, b2], mult[d1, d2]]
    code = ((pa * q + pb) * q + pc) * q + pd
    code_to_idx = np.full(q**4, -1, np.int32)
    ecodes = ((E[:, 0] * q + E[:, 1]) * q + E[:, 2]) * q + E[:, 3]
    code_to_idx[ecodes] = np.arange(n, dtype=np.int32)
    tab = code_to_idx[code]
    names = tuple(f"[[{a},{b}],[{c},{d}]]" for a, b, c, d in elems)
    return tab, names


def _psl2(q: int, cap: int):
    # fractional-linear action on the projective line; point q stands for inf
    gf = _GF(q)

    def mobius(mat) -> tuple:
        a, b, c, d = mat
        img = []
        for z in range(q):
            den = gf.add(gf.mul(c, z), d)
            if den == 0:
                img.append(q)
            else:
                img.append(gf.mul(gf.add(gf.mul(a, z), b), gf.inv(den)))
        img.append(q if c == 0 else gf.mul(a, gf.inv(c)))
        return tuple(img)

    gens = []
    for t in range(1, q):
        gens.append(mobius((1, t, 0, 1)))
        gens.append(mobius((1, 0, t, 1)))
    perms = _perm_closure(q + 1, gens, cap)
    n = len(perms)
    expected = (q**3 - q) // math.gcd(2, q - 1)
    if n != expected:
        raise GroupBuildError(
            f"PSL2({q}) closure found {n} elements, expected {expected}"
        )
    labels = [str(t) for t in range(q)] + ["inf"]
    names = tuple(_cycle_name(p, labels) for p in perms)
    return _perm_table(perms), names


# ---------------------------------------------------------------------------
# file formats


def load_cayley_file(path: str) -> tuple[np.ndarray, tuple[str, ...] | None]:
    """Read {"order", "table", optional "names"}; relabel identity to id 0."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise GroupBuildError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GroupBuildError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "table" not in doc:
        raise GroupBuildError(f"{path} lacks a \"table\" field")
    table = np.asarray(doc["table"], dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise GroupBuildError(f"{path}: table must be square")
    n = table.shape[0]
    if "order" in doc and int(doc["order"]) != n:
        raise GroupBuildError(f"{path}: order field disagrees with table size")
    if table.min() < 0 or table.max() >= n:
        raise GroupBuildError(f"{path}: table entries out of range")
    names = None
    if "names" in doc:
        names = tuple(str(s) for s in doc["names"])
        if len(names) != n:
            raise GroupBuildError(f"{path}: need one name per element")
    ident = -1
    expect = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], expect) and np.array_equal(table[:, e], expect):
            ident = e
            break
    if ident < 0:
        raise GroupBuildError(f"{path}: no two-sided identity element")
    if ident != 0:
        sigma = np.arange(n)
        sigma[0], sigma[ident] = ident, 0
        relab = np.zeros_like(table)
        relab[sigma[:, None], sigma[None, :]] = sigma[table]
        table = relab
        if names is not None:
            swapped = list(names)
            swapped[0], swapped[ident] = swapped[ident], swapped[0]
            names = tuple(swapped)
    return table.astype(np.int32), names


def save_cayley_file(group: FiniteGroup, path: str) -> None:
    doc = {
        "order": group.order,
        "names": list(group.names),
        "table": group.table.tolist(),
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, separators=(",", ":"), sort_keys=True)
        fh.write("\n")


def load_perm_generators(path: str) -> tuple[int, list[tuple]]:
    """Read {"degree", "generators": [[images], ...]} with 0-based images."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise GroupBuildError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GroupBuildError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "degree" not in doc or "generators" not in doc:
        raise GroupBuildError(f"{path} needs \"degree\" and \"generators\"")
    degree = int(doc["degree"])
    if degree < 1:
        raise GroupBuildError(f"{path}: degree must be positive")
    gens = []
    for g in doc["generators"]:
        img = tuple(int(x) for x in g)
        if sorted(img) != list(range(degree)):
            raise GroupBuildError(f"{path}: generator {g} is not a permutation")
        gens.append(img)
    if not gens:
        raise GroupBuildError(f"{path}: at least one generator required")
    return degree, gens


# ---------------------------------------------------------------------------
# the public entry point

_CACHE: dict = {}


def predicted_order(spec: GroupSpec) -> int | None:
    """Group order implied by the spec, or None for file-backed kinds."""
    kind, args = spec.kind, spec.args
    if kind == "Cyclic":
        return int(args[0])
    if kind == "ElementaryAbelian":
        return int(args[0]) ** int(args[1])
    if kind == "DirectProduct":
        total = 1
        for sub in args:
            part = predicted_order(sub)
            if part is None:
                return None
            total *= part
        return total
    if kind == "Dihedral":
        return 2 * int(args[0])
    if kind == "Dicyclic":
        return 4 * int(args[0])
    if kind == "SemidirectCyclic":
        return int(args[0]) * int(args[1])
    if kind == "Symmetric":
        return math.factorial(int(args[0]))
    if kind == "Alternating":
        return math.factorial(int(args[0])) // 2
    if kind == "SL2":
        q = int(args[0])
        return q**3 - q
    if kind == "PSL2":
        q = int(args[0])
        return (q**3 - q) // math.gcd(2, q - 1)
    return None


def _check_arity(spec: GroupSpec, n_args: int, want_int: bool = True) -> None:
    if len(spec.args) != n_args:
        raise GroupBuildError(f"{spec.kind} takes {n_args} argument(s)")
    if want_int and not all(isinstance(a, int) for a in spec.args):
        raise GroupBuildError(f"{spec.kind} takes integer argument(s)")


def build_group(
    spec: GroupSpec | str,
    paranoid: bool = False,
    element_cap: int = ELEMENT_CAP,
) -> FiniteGroup:
    """Build the group a spec describes.

    Built tables are cached per spec (skipped in paranoid mode and for
    file-backed kinds). paranoid runs the full O(n^3) associativity audit on
    every table, not just imported ones.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    from_file = spec.kind in ("FromCayleyFile", "FromPermGenerators")
    key = (spec, element_cap)
    if not paranoid and not from_file:
        hit = _CACHE.get(key)
        if hit is not None:
            return hit
    predicted = predicted_order(spec)
    if predicted is not None and predicted > element_cap:
        raise GroupBuildError(
            f"{format_spec(spec)} has order {predicted}, over the cap {element_cap}"
        )
    kind, args = spec.kind, spec.args
    check = paranoid
    if kind == "Cyclic":
        _check_arity(spec, 1)
        n = args[0]
        if n < 1:
            raise GroupBuildError("Cyclic needs order >= 1")
        table, names = _cyclic_table(n), _cyclic_names(n)
    elif kind == "ElementaryAbelian":
        _check_arity(spec, 2)
        p, k = args
        if not _is_prime(p):
            raise GroupBuildError(f"ElementaryAbelian base {p} is not prime")
        if k < 1:
            raise GroupBuildError("ElementaryAbelian needs exponent >= 1")
        inner = GroupSpec("DirectProduct", tuple(GroupSpec("Cyclic", (p,)) for _ in range(k)))
        if k == 1:
            inner = GroupSpec("Cyclic", (p,))
        built = build_group(inner, paranoid=paranoid, element_cap=element_cap)
        group = FiniteGroup(built.table, built.names, spec=spec)
        if not paranoid:
            _CACHE[key] = group
        return group
    elif kind == "DirectProduct":
        if len(args) < 2 or not all(isinstance(a, GroupSpec) for a in args):
            raise GroupBuildError("DirectProduct takes two or more sub-specs")
        factors = [
            build_group(a, paranoid=paranoid, element_cap=element_cap) for a in args
        ]
        total = 1
        for f in factors:
            total *= f.order
        if total > element_cap:
            raise GroupBuildError(
                f"{format_spec(spec)} has order {total}, over the cap {element_cap}"
            )
        # mixed-radix ids, first factor most significant
        code_i = np.zeros((total, total), np.int32)
        digit_sets = []
        rem_i = np.arange(total)[:, None]
        rem_j = np.arange(total)[None, :]
        weight = total
        for f in factors:
            weight //= f.order
            di = rem_i // weight
            dj = rem_j // weight
            rem_i = rem_i % weight
            rem_j = rem_j % weight
            code_i = code_i * f.order + f.table[di, dj]
            digit_sets.append((f, weight))
        names = []
        for idx in range(total):
            parts = []
            rem = idx
            for f, weight in digit_sets:
                d, rem = divmod(rem, weight)
                parts.append(f.names[d])
            names.append("(" + ",".join(parts) + ")")
        table, names = code_i, tuple(names)
    elif kind == "Dihedral":
        _check_arity(spec, 1)
        if args[0] < 2:
            raise GroupBuildError("Dihedral needs rotation order >= 2")
        table, names = _dihedral(args[0])
    elif kind == "Dicyclic":
        _check_arity(spec, 1)
        if args[0] < 2:
            raise GroupBuildError("Dicyclic needs parameter >= 2")
        table, names = _dicyclic(args[0])
    elif kind == "SemidirectCyclic":
        _check_arity(spec, 3)
        n, m, r = args
        if n < 1 or m < 1:
            raise GroupBuildError("SemidirectCyclic needs positive orders")
        table, names = _semidirect_cyclic(n, m, r)
    elif kind == "Symmetric":
        _check_arity(spec, 1)
        if args[0] < 2:
            raise GroupBuildError("Symmetric needs degree >= 2")
        table, names = _symmetric(args[0], even_only=False, cap=element_cap)
    elif kind == "Alternating":
        _check_arity(spec, 1)
        if args[0] < 3:
            raise GroupBuildError("Alternating needs degree >= 3")
        table, names = _symmetric(args[0], even_only=True, cap=element_cap)
    elif kind == "SL2":
        _check_arity(spec, 1)
        table, names = _sl2(args[0], cap=element_cap)
    elif kind == "PSL2":
        _check_arity(spec, 1)
        table, names = _psl2(args[0], cap=element_cap)
    elif kind == "FromCayleyFile":
        _check_arity(spec, 1, want_int=False)
        if not isinstance(args[0], str):
            raise GroupBuildError("FromCayleyFile takes a path string")
        table, names = load_cayley_file(args[0])
        if table.shape[0] > element_cap:
            raise GroupBuildError(
                f"imported table has order {table.shape[0]}, over the cap {element_cap}"
            )
        check = True
    elif kind == "FromPermGenerators":
        _check_arity(spec, 1, want_int=False)
        if not isinstance(args[0], str):
            raise GroupBuildError("FromPermGenerators takes a path string")
        degree, gens = load_perm_generators(args[0])
        perms = _perm_closure(degree, gens, element_cap)
        labels = [str(t) for t in range(degree)]
        table = _perm_table(perms)
        names = tuple(_cycle_name(p, labels) for p in perms)
    else:
        raise GroupBuildError(f"unknown group family {kind!r}")
    try:
        group = FiniteGroup(table, names, spec=spec, check_associativity=check)
    except ValueError as exc:
        raise GroupBuildError(f"{format_spec(spec)}: {exc}") from exc
    if not paranoid and not from_file:
        _CACHE[key] = group
    return group
