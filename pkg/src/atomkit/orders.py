"""The covering relations on inverse atoms, Hasse diagrams, rank functions and poset probes."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .core import SetPermutation, SignedPermutation
from .errors import RankMismatch
from .hecke import SignedInvolution, as_involution
from .structure import Matching, nested_data, shape, zero_B

Window = tuple[int, ...]


class CoverKind(str, Enum):
    A = "A"
    B = "B"
    BPLUS = "B+"
    STRONG_B = "SB"
    BLACK_B = "BB"


ORDERS: dict[str, tuple[CoverKind, ...]] = {
    "ltA": (CoverKind.A,),
    "ltB": (CoverKind.A, CoverKind.B),
    "llB": (CoverKind.A, CoverKind.STRONG_B),
    "lllB": (CoverKind.A, CoverKind.STRONG_B, CoverKind.BLACK_B),
}

EDGE_STYLE = {"A": "solid", "B": "dashed", "SB": "dashed", "BB": "dotted"}


# direct pattern tests

def _differ(v: Window, w: Window) -> list[int]:
    return [k for k in range(len(v)) if v[k] != w[k]]


def _cover_a(v: Window, w: Window) -> bool:
    d = _differ(v, w)
    if not d or d[-1] - d[0] > 2:
        return False
    for k in range(max(0, d[-1] - 2), min(d[0], len(v) - 3) + 1):
        c, a, b = v[k : k + 3]
        if a < b < c and w[k : k + 3] == (b, c, a):
            return True
    return False


def _cover_bplus(v: Window, w: Window, max_i: int | None = None) -> bool:
    n = len(v)
    top = n - 1 if max_i is None else min(max_i, n - 1)
    for i in range(1, top + 1):
        prefix = v[: i + 1]
        if not (all(x < y for x, y in zip(prefix, prefix[1:])) and prefix[-1] < 0):
            break
        if w[: i - 1] == v[: i - 1] and w[i - 1] == -v[i] and w[i] == v[i - 1] and w[i + 1 :] == v[i + 1 :]:
            return True
    return False


def _cover_strong(v: Window, w: Window) -> bool:
    d = _differ(v, w)
    if len(d) != 2 or d[1] != d[0] + 1:
        return False
    p = d[0]
    nb, na = v[p], v[p + 1]
    if not nb < na < 0:
        return False
    b = -nb
    if any(abs(x) < b for x in v[:p]):
        return False
    return w[p] == -na and w[p + 1] == nb


def _cover_black(v: Window, w: Window) -> bool:
    d = _differ(v, w)
    if len(d) != 3 or d[2] != d[1] + 1:
        return False
    p, q = d[0], d[1]
    nc, a, nb = v[p], v[q], v[q + 1]
    c, b = -nc, -nb
    if not 0 < a < b < c:
        return False
    if (w[p], w[q], w[q + 1]) != (-a, b, -c):
        return False
    return max(abs(x) for x in w[:q]) == a


def covers(v: SignedPermutation, w: SignedPermutation, kind: CoverKind | str) -> bool:
    """Whether ``v`` is covered by ``w`` in the elementary relation ``kind``."""
    if v.rank != w.rank:
        raise RankMismatch(f"ranks {v.rank} and {w.rank} differ")
    kind = CoverKind(kind)
    a, b = v.window, w.window
    if kind is CoverKind.A:
        return _cover_a(a, b)
    if kind is CoverKind.B:
        return _cover_bplus(a, b, max_i=2)
    if kind is CoverKind.BPLUS:
        return _cover_bplus(a, b)
    if kind is CoverKind.STRONG_B:
        return _cover_strong(a, b)
    return _cover_black(a, b)


# move generators

def _up_a(w: Window) -> Iterator[Window]:
    for k in range(len(w) - 2):
        c, a, b = w[k : k + 3]
        if a < b < c:
            yield w[:k] + (b, c, a) + w[k + 3 :]


def _down_a(w: Window) -> Iterator[Window]:
    for k in range(len(w) - 2):
        b, c, a = w[k : k + 3]
        if a < b < c:
            yield w[:k] + (c, a, b) + w[k + 3 :]


def _up_bplus(w: Window, max_i: int) -> Iterator[Window]:
    for i in range(1, min(max_i, len(w) - 1) + 1):
        if not (w[i - 1] < w[i] < 0):
            break
        yield w[: i - 1] + (-w[i], w[i - 1]) + w[i + 1 :]


def _down_bplus(w: Window, max_i: int) -> Iterator[Window]:
    for i in range(1, min(max_i, len(w) - 1) + 1):
        prefix = w[: i - 1] + (w[i], -w[i - 1])
        if all(x < y for x, y in zip(prefix, prefix[1:])) and prefix[-1] < 0:
            yield prefix + w[i + 1 :]


def _up_strong(w: Window) -> Iterator[Window]:
    smallest = None
    for p in range(len(w) - 1):
        x = abs(w[p])
        smallest = x if smallest is None else min(smallest, x)
        if w[p] < w[p + 1] < 0 and -w[p] == smallest:
            yield w[:p] + (-w[p + 1], w[p]) + w[p + 2 :]


def _down_strong(w: Window) -> Iterator[Window]:
    smallest = None
    for p in range(len(w) - 1):
        a, nb = w[p], w[p + 1]
        if 0 < a < -nb and (smallest is None or smallest > -nb):
            yield w[:p] + (nb, -a) + w[p + 2 :]
        smallest = abs(a) if smallest is None else min(smallest, abs(a))


def _black_moves(w: Window, up: bool) -> Iterator[Window]:
    n = len(w)
    for q in range(1, n - 1):
        before = w[:q]
        p = max(range(q), key=lambda k: abs(before[k]))
        rest = [abs(before[k]) for k in range(q) if k != p]
        if up:
            nc, a, nb = w[p], w[q], w[q + 1]
            if 0 < a < -nb < -nc and all(x < a for x in rest):
                out = list(w)
                out[p], out[q], out[q + 1] = -a, -nb, nc
                yield tuple(out)
        else:
            na, b, nc = w[p], w[q], w[q + 1]
            if 0 < -na < b < -nc and all(x < -na for x in rest):
                out = list(w)
                out[p], out[q], out[q + 1] = nc, -na, -b
                yield tuple(out)


def up_moves(w: Window, kind: CoverKind) -> Iterator[Window]:
    if kind is CoverKind.A:
        return _up_a(w)
    if kind is CoverKind.B:
        return _up_bplus(w, 2)
    if kind is CoverKind.BPLUS:
        return _up_bplus(w, len(w))
    if kind is CoverKind.STRONG_B:
        return _up_strong(w)
    return _black_moves(w, up=True)


def down_moves(w: Window, kind: CoverKind) -> Iterator[Window]:
    if kind is CoverKind.A:
        return _down_a(w)
    if kind is CoverKind.B:
        return _down_bplus(w, 2)
    if kind is CoverKind.BPLUS:
        return _down_bplus(w, len(w))
    if kind is CoverKind.STRONG_B:
        return _down_strong(w)
    return _black_moves(w, up=False)


def bfs_closure(seeds: Iterable[Window], neighbours: Callable[[Window], Iterable[Window]]) -> set[Window]:
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for v in neighbours(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _both_ways(kinds: Iterable[CoverKind]) -> Callable[[Window], Iterator[Window]]:
    kinds = tuple(kinds)

    def step(w: Window) -> Iterator[Window]:
        for k in kinds:
            yield from up_moves(w, k)
            yield from down_moves(w, k)

    return step


def atoms_fast(z: SignedInvolution) -> list[SignedPermutation]:
    """Inverse atoms of z: the closure of 0_B(z) under the A and B moves."""
    z = as_involution(z)
    found = bfs_closure([zero_B(z).window], _both_ways((CoverKind.A, CoverKind.B)))
    return [SignedPermutation._trusted(w) for w in sorted(found)]


# Hasse diagrams

@dataclass(frozen=True)
class HasseDiagram:
    elements: tuple[SignedPermutation, ...]
    covers: frozenset[tuple[int, int, str]]
    order: str

    def index(self, w: SignedPermutation) -> int:
        return self.elements.index(w)

    def edges(self) -> list[tuple[SignedPermutation, SignedPermutation, str]]:
        return [(self.elements[i], self.elements[j], k) for i, j, k in sorted(self.covers)]

    def minimal(self) -> list[SignedPermutation]:
        has_lower = {j for _, j, _ in self.covers}
        return [w for k, w in enumerate(self.elements) if k not in has_lower]

    def maximal(self) -> list[SignedPermutation]:
        has_upper = {i for i, _, _ in self.covers}
        return [w for k, w in enumerate(self.elements) if k not in has_upper]

    def to_json(self) -> str:
        return json.dumps(
            {
                "elements": [str(w) for w in self.elements],
                "covers": [[i, j, k] for i, j, k in sorted(self.covers)],
                "order": self.order,
            }
        )

    def to_dot(self) -> str:
        lines = [f"digraph {self.order} {{", "  rankdir=BT;"]
        for k, w in enumerate(self.elements):
            lines.append(f'  n{k} [label="{w}"];')
        for i, j, kind in sorted(self.covers):
            lines.append(f'  n{i} -> n{j} [kind={kind}, style={EDGE_STYLE[kind]}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _edge_label(v: Window, w: Window, kind: CoverKind) -> str:
    if kind is CoverKind.STRONG_B and _cover_bplus(v, w, max_i=2):
        return "B"
    return kind.value


def hasse_of(elements: Iterable[SignedPermutation], order: str) -> HasseDiagram:
    kinds = ORDERS[order]
    elems = tuple(sorted(elements))
    pos = {w.window: k for k, w in enumerate(elems)}
    edges = set()
    for i, w in enumerate(elems):
        for kind in kinds:
            for u in up_moves(w.window, kind):
                j = pos.get(u)
                if j is not None:
                    edges.add((i, j, _edge_label(w.window, u, kind)))
    return HasseDiagram(elems, frozenset(edges), order)


def hasse(z: SignedInvolution, order: str = "ltB") -> HasseDiagram:
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}; expected one of {sorted(ORDERS)}")
    return hasse_of(atoms_fast(z), order)


def extremes(z: SignedInvolution, order: str) -> tuple[list[SignedPermutation], list[SignedPermutation]]:
    d = hasse(z, order)
    return d.minimal(), d.maximal()


# rank functions

def _inversions(seq: list[int]) -> int:
    return sum(1 for x, y in combinations(seq, 2) if x > y)


def offset_a(w: SignedPermutation) -> int:
    ndes = nested_data(w).ndes
    return sum(1 for b1, a1 in ndes for b2, a2 in ndes if a1 < a2 < b2 < b1)


def offset_b(w: SignedPermutation) -> int:
    ndes = nested_data(w).ndes
    return sum(1 for b1, a1 in ndes for b2, a2 in ndes if a1 <= a2 < -b1 < 0 < b1 <= b2)


def rank_A(w: SignedPermutation) -> int:
    ndes = nested_data(w).ndes
    left = {b for b, _ in ndes}
    inv_r = _inversions([x for x in w.window if x not in left])
    inv_l = _inversions([x for x in w.window if x in left])
    return inv_r - inv_l + offset_a(w)


def rank_B(w: SignedPermutation) -> int:
    return rank_A(w) + offset_b(w)


# components under <_A

@dataclass(frozen=True)
class Component:
    elements: tuple[SignedPermutation, ...]
    shape: Matching
    witness: SetPermutation


def components_A(z: SignedInvolution) -> list[Component]:
    """Split the inverse atoms of z into classes under the A moves."""
    remaining = {w.window for w in atoms_fast(z)}
    step = _both_ways((CoverKind.A,))
    out = []
    while remaining:
        seed = min(remaining)
        cls = bfs_closure([seed], step)
        remaining -= cls
        elems = tuple(SignedPermutation._trusted(w) for w in sorted(cls))
        first = elems[0]
        pairs = [(a, b) for b, a in nested_data(first).ndes]
        witness = SetPermutation.from_cycles(first.window, pairs)
        out.append(Component(elems, shape(first), witness))
    return out


# probes

@dataclass(frozen=True)
class ProbeReport:
    order: str
    size: int
    components: int
    graded: bool
    bounded: bool
    lattice: bool
    lower_semilattice: bool
    chains_consistent: bool | None = None

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


MAX_PROBE_SIZE = 5000


def _topological(n: int, covers: Iterable[tuple[int, int, str]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    ups: list[list[int]] = [[] for _ in range(n)]
    downs: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for i, j, _ in covers:
        ups[i].append(j)
        downs[j].append(i)
        indeg[j] += 1
    order = [k for k in range(n) if indeg[k] == 0]
    for k in order:
        for j in ups[k]:
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    if len(order) != n:
        raise ValueError("cover relation has a cycle")
    return order, ups, downs


def _closures(d: HasseDiagram) -> tuple[list[int], list[int]]:
    n = len(d.elements)
    order, ups, downs = _topological(n, d.covers)
    down = [0] * n
    for k in order:
        m = 1 << k
        for i in downs[k]:
            m |= down[i]
        down[k] = m
    up = [0] * n
    for k in reversed(order):
        m = 1 << k
        for j in ups[k]:
            m |= up[j]
        up[k] = m
    return down, up


def _all_meets(sets: list[int]) -> bool:
    lookup = set(sets)
    for x, y in combinations(sets, 2):
        common = x & y
        if common not in lookup:
            return False
    return True


def _chains_consistent(d: HasseDiagram) -> bool:
    """Every two comparable elements are joined only by saturated chains of one length."""
    n = len(d.elements)
    order, ups, _ = _topological(n, d.covers)
    where = {k: t for t, k in enumerate(order)}
    for s in range(n):
        lo = {s: 0}
        hi = {s: 0}
        for k in order[where[s] :]:
            if k not in lo:
                continue
            for j in ups[k]:
                lo[j] = min(lo.get(j, lo[k] + 1), lo[k] + 1)
                hi[j] = max(hi.get(j, hi[k] + 1), hi[k] + 1)
        if any(lo[k] != hi[k] for k in lo):
            return False
    return True


def _count_components(d: HasseDiagram) -> int:
    n = len(d.elements)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, _ in d.covers:
        parent[find(i)] = find(j)
    return len({find(k) for k in range(n)})


def probe_diagram(d: HasseDiagram, paranoid: bool = False) -> ProbeReport:
    n = len(d.elements)
    if n > MAX_PROBE_SIZE:
        raise ValueError(f"poset of size {n} exceeds the probe limit {MAX_PROBE_SIZE}")
    rank = rank_A if d.order == "ltA" else rank_B
    ranks = [rank(w) for w in d.elements]
    graded = all(ranks[j] == ranks[i] + 1 for i, j, _ in d.covers)
    down, up = _closures(d)
    bounded = len(d.minimal()) == 1 and len(d.maximal()) == 1
    lower = n > 0 and _all_meets(down)
    lattice = lower and _all_meets(up)
    return ProbeReport(
        order=d.order,
        size=n,
        components=_count_components(d),
        graded=graded,
        bounded=bounded,
        lattice=lattice,
        lower_semilattice=lower,
        chains_consistent=_chains_consistent(d) if paranoid else None,
    )


def poset_probe(z: SignedInvolution, order: str, paranoid: bool = False) -> ProbeReport:
    """Gradedness, boundedness and (semi)lattice tests for the atoms of z under ``order``."""
    return probe_diagram(hasse(z, order), paranoid)


def component_probes(z: SignedInvolution, paranoid: bool = False) -> list[ProbeReport]:
    """One probe per class of the A moves, each ordered by <_A."""
    return [probe_diagram(hasse_of(c.elements, "ltA"), paranoid) for c in components_A(z)]
