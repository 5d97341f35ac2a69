"""Nested descent graphs, matchings and the extremal inverse atoms."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import config
from .core import SetPermutation, SignedPermutation, Word, _length, dedupe_first, has_consecutive_pattern
from .errors import BoundExceeded, NotAnInverseAtom, NotAnInvolution
from .hecke import SignedInvolution, as_involution, involution_length

Label = tuple[int, int]


def _fmt_word(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


@dataclass(frozen=True)
class NestedDescentGraph:
    source: Word
    vertices: frozenset[Word]
    edges: frozenset[tuple[Word, Word, Label]]

    @property
    def sinks(self) -> list[Word]:
        has_child = {e[0] for e in self.edges}
        return sorted(v for v in self.vertices if v not in has_child)

    @property
    def sink(self) -> Word | None:
        s = self.sinks
        return s[0] if len(s) == 1 else None

    def to_dot(self) -> str:
        lines = ["digraph nested {"]
        for v in sorted(self.vertices, key=lambda v: (-len(v), v)):
            lines.append(f'  "{_fmt_word(v)}";')
        for src, dst, (b, a) in sorted(self.edges):
            lines.append(f'  "{_fmt_word(src)}" -> "{_fmt_word(dst)}" [label="{b},{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        verts = sorted(self.vertices, key=lambda v: (-len(v), v))
        return json.dumps(
            {
                "source": list(self.source),
                "vertices": [list(v) for v in verts],
                "edges": [[list(s), list(d), list(lab)] for s, d, lab in sorted(self.edges)],
            }
        )


def children(w: Sequence[int]) -> list[tuple[Word, Label]]:
    """Subwords obtained by deleting one adjacent descent, with the removed pair."""
    w = tuple(w)
    return [(w[:k] + w[k + 2 :], (w[k], w[k + 1])) for k in range(len(w) - 1) if w[k] > w[k + 1]]


@lru_cache(maxsize=4096)
def _graph(w: Word) -> NestedDescentGraph:
    vertices = {w}
    edges = set()
    stack = [w]
    while stack:
        u = stack.pop()
        for v, lab in children(u):
            edges.add((u, v, lab))
            if v not in vertices:
                vertices.add(v)
                stack.append(v)
    return NestedDescentGraph(w, frozenset(vertices), frozenset(edges))


def nested_descent_graph(w: Sequence[int] | SignedPermutation) -> NestedDescentGraph:
    word = tuple(w.window if isinstance(w, SignedPermutation) else w)
    if len(set(word)) != len(word):
        raise ValueError(f"word {word} has repeated letters")
    if len(word) > config.nested_bound():
        raise BoundExceeded(f"word of length {len(word)} exceeds the nested graph bound {config.nested_bound()}")
    return _graph(word)


@dataclass(frozen=True)
class NestedData:
    ndes: frozenset[Label]
    nfix: frozenset[int]
    nneg: frozenset[int]
    sink: Word
    involution: tuple[int, ...]

    def ndes_b(self) -> frozenset[Label]:
        return frozenset((b, a) for b, a in self.ndes if not 0 < b < -a)

    def nneg_b(self) -> frozenset[int]:
        extra = {x for b, a in self.ndes if 0 < b < -a for x in (b, -a)}
        return self.nneg | extra


def _assemble(word: Word, ndes: frozenset[Label], nfix: frozenset[int], nneg: frozenset[int]) -> tuple[int, ...]:
    m: dict[int, int] = {}

    def assign(x: int, y: int) -> None:
        for p, q in ((x, y), (y, x), (-x, -y), (-y, -x)):
            if m.setdefault(p, q) != q:
                raise NotAnInverseAtom(f"{_fmt_word(word)}: inconsistent nested data at {p}")

    for f in nfix:
        assign(f, f)
    for e in nneg:
        assign(e, -e)
    for b, a in ndes:
        if 0 < b < -a:
            assign(b, -b)
            assign(a, -a)
        else:
            assign(a, b)
    n = len(word)
    if set(m) != set(range(-n, 0)) | set(range(1, n + 1)):
        raise NotAnInverseAtom(f"{_fmt_word(word)}: nested data does not cover every letter")
    return tuple(m[i] for i in range(1, n + 1))


@lru_cache(maxsize=65536)
def _nested(word: Word) -> NestedData:
    g = nested_descent_graph(word)
    sinks = g.sinks
    if len(sinks) != 1:
        raise NotAnInverseAtom(f"{_fmt_word(word)}: nested descent graph has {len(sinks)} sinks")
    for v in g.vertices:
        if has_consecutive_pattern(v, "321") or has_consecutive_pattern(v, "negneg"):
            raise NotAnInverseAtom(f"{_fmt_word(word)}: descendant {_fmt_word(v)} has a forbidden pattern")
    out: dict[Word, list[tuple[Word, Label]]] = {}
    for src, dst, lab in g.edges:
        out.setdefault(src, []).append((dst, lab))
    label_sets: dict[Word, set[frozenset[Label]]] = {}
    for v in sorted(g.vertices, key=len):
        if v not in out:
            label_sets[v] = {frozenset()}
            continue
        acc: set[frozenset[Label]] = set()
        for child, lab in out[v]:
            acc.update(s | {lab} for s in label_sets[child])
        label_sets[v] = acc
    found = label_sets[word]
    if len(found) != 1:
        raise NotAnInverseAtom(f"{_fmt_word(word)}: edge labels depend on the path to the sink")
    sink = sinks[0]
    ndes = next(iter(found))
    nfix = frozenset(x for x in sink if x > 0)
    nneg = frozenset(-x for x in sink if x < 0)
    z = _assemble(word, ndes, nfix, nneg)
    # the graph tests alone accept some non-atoms (e.g. -2,1,-3); an inverse
    # atom of z must also have the atom length of z
    zi = SignedInvolution(SignedPermutation._trusted(z))
    if _length(word) != involution_length(zi):
        raise NotAnInverseAtom(f"{_fmt_word(word)}: length differs from the atom length of {zi}")
    return NestedData(ndes, nfix, nneg, sink, z)


def nested_data(w: SignedPermutation | Sequence[int]) -> NestedData:
    """Nested descents, nested fixed points and nested negated points of an inverse atom.

    Raises NotAnInverseAtom when w is not the inverse of an atom.
    """
    word = tuple(w.window if isinstance(w, SignedPermutation) else w)
    return _nested(word)


def is_inverse_atom(w: SignedPermutation | Sequence[int]) -> bool:
    try:
        nested_data(w)
    except NotAnInverseAtom:
        return False
    return True


def nested_data_B(w: SignedPermutation | Sequence[int]) -> tuple[frozenset[Label], frozenset[int]]:
    """Drop the nested descents ``(a, -b)`` with ``0 < a < b`` and add a, b to the negated points."""
    d = nested_data(w)
    return d.ndes_b(), d.nneg_b()


def recover_involution(w: SignedPermutation | Sequence[int]) -> SignedInvolution:
    """The involution z with w an inverse atom of z, read off from nested data."""
    return SignedInvolution(SignedPermutation._trusted(nested_data(w).involution))


@dataclass(frozen=True)
class Matching:
    vertex_set: frozenset[int]
    blocks: frozenset[frozenset[int]]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], vertex_set: Iterable[int] | None = None) -> "Matching":
        bl = frozenset(frozenset(b) for b in blocks)
        verts = frozenset(vertex_set) if vertex_set is not None else frozenset(x for b in bl for x in b)
        return cls(verts, bl)

    def sorted_blocks(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(b)) for b in self.blocks)  # type: ignore[misc]

    def is_symmetric(self) -> bool:
        return all(frozenset(-x for x in b) in self.blocks for b in self.blocks)

    def is_perfect(self) -> bool:
        covered = [x for b in self.blocks for x in b]
        return len(covered) == len(set(covered)) and set(covered) == set(self.vertex_set)

    def is_noncrossing(self) -> bool:
        bl = self.sorted_blocks()
        for i, k in bl:
            for j, l in bl:
                if i < j < k < l:
                    return False
        return True

    def trivial_blocks(self) -> list[tuple[int, int]]:
        return [b for b in self.sorted_blocks() if b[0] + b[1] == 0]

    def negated_points(self) -> frozenset[int]:
        return frozenset(b for a, b in self.trivial_blocks())

    def positive_pairs(self) -> list[tuple[int, int]]:
        """The blocks ``{a, b}`` with ``0 < a < b``."""
        return [b for b in self.sorted_blocks() if b[0] > 0]

    def __str__(self) -> str:
        return " ".join("{" + ",".join(str(x) for x in b) + "}" for b in self.sorted_blocks())


def shape(w: SignedPermutation) -> Matching:
    """Matching on the negated points of z built from the nested descents ``(a, -b)``, ``0 < a < b``."""
    d = nested_data(w)
    blocks: list[tuple[int, int]] = []
    for b, a in d.ndes:
        if 0 < b < -a:
            blocks.append((b, -a))
            blocks.append((-b, a))
    blocks.extend((-e, e) for e in d.nneg)
    verts = {x for blk in blocks for x in blk}
    return Matching.from_blocks(blocks, verts)


def _sort_pairs_word(pairs: Iterable[tuple[int, int]], by_second: bool) -> Word:
    key = (lambda p: p[1]) if by_second else (lambda p: p[0])
    letters: list[int] = []
    for a, b in sorted(pairs, key=key):
        letters += [b, a]
    return dedupe_first(letters)


def zero_one_A(z: SetPermutation) -> tuple[SetPermutation, SetPermutation]:
    """The least and greatest inverse atoms of an involution of S_X."""
    if not z.is_involution():
        raise NotAnInvolution(f"{z} is not an involution")
    cyc = [(a, b) for a, b in zip(z.domain, z.images) if a <= b]
    zero = _sort_pairs_word(cyc, by_second=False)
    one = _sort_pairs_word(cyc, by_second=True)
    return SetPermutation(z.domain, zero), SetPermutation(z.domain, one)


def _negated_vertices(z: SignedInvolution) -> list[int]:
    return sorted(list(z.neg) + [-i for i in z.neg])


def ncsp(z: SignedInvolution, max_trivial: int | None = None) -> list[Matching]:
    """Noncrossing symmetric perfect matchings on the negated points of z and their negatives."""
    z = as_involution(z)
    verts = _negated_vertices(z)
    size = len(verts)
    results: list[Matching] = []

    def crosses(p: int, q: int, blocks: list[tuple[int, int]]) -> bool:
        return any(p < r < q < s or r < p < s < q for r, s in blocks)

    def extend(partner: list[int | None], blocks: list[tuple[int, int]]) -> None:
        try:
            p = partner.index(None)
        except ValueError:
            results.append(Matching.from_blocks(({verts[i], verts[j]} for i, j in blocks), verts))
            return
        for q in range(p + 1, size):
            if partner[q] is not None or (q - p) % 2 == 0:
                continue
            mp, mq = size - 1 - q, size - 1 - p
            new = [(p, q)] if (mp, mq) == (p, q) else [(p, q), (mp, mq)]
            if len(new) == 2 and (partner[mp] is not None or partner[mq] is not None or mp in (p, q) or mq in (p, q)):
                continue
            if any(crosses(a, b, blocks) for a, b in new):
                continue
            if len(new) == 2 and crosses(*new[0], new[1:]):
                continue
            for a, b in new:
                partner[a], partner[b] = b, a
            extend(partner, blocks + new)
            for a, b in new:
                partner[a] = partner[b] = None

    extend([None] * size, [])
    if max_trivial is not None:
        results = [m for m in results if len(m.trivial_blocks()) <= max_trivial]
    return sorted(results, key=lambda m: m.sorted_blocks())


def m_min(z: SignedInvolution) -> Matching:
    z = as_involution(z)
    return Matching.from_blocks(((-i, i) for i in z.neg), _negated_vertices(z))


def m_max(z: SignedInvolution) -> Matching:
    """Pair consecutive negated vertices: ``{a1, a2}, {a3, a4}, ...``."""
    z = as_involution(z)
    v = _negated_vertices(z)
    return Matching.from_blocks((v[k : k + 2] for k in range(0, len(v), 2)), v)


def _check_matching(z: SignedInvolution, m: Matching) -> None:
    verts = set(_negated_vertices(z))
    if set(m.vertex_set) != verts or not (m.is_perfect() and m.is_symmetric() and m.is_noncrossing()):
        raise ValueError(f"matching {m} is not a noncrossing symmetric perfect matching for {z}")


def _cycles_with_matching(z: SignedInvolution, m: Matching) -> list[tuple[int, int]]:
    out = list(z.pair)
    out += [(-b, a) for a, b in m.positive_pairs()]
    out += [(-a, -a) for a in m.negated_points()]
    out += [(a, a) for a in z.fix]
    return out


def zero_B(z: SignedInvolution, matching: Matching | None = None) -> SignedPermutation:
    """The <_A-minimal inverse atom attached to a matching (default: all blocks trivial)."""
    z = as_involution(z)
    m = m_min(z) if matching is None else matching
    _check_matching(z, m)
    return SignedPermutation(_sort_pairs_word(_cycles_with_matching(z, m), by_second=False))


def one_B(z: SignedInvolution, matching: Matching | None = None) -> SignedPermutation:
    """The <_A-maximal inverse atom attached to a matching (default: consecutive pairing)."""
    z = as_involution(z)
    m = m_max(z) if matching is None else matching
    _check_matching(z, m)
    return SignedPermutation(_sort_pairs_word(_cycles_with_matching(z, m), by_second=True))
