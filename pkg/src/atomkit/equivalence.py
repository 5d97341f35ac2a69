"""Hecke atom equivalence relations on words."""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .core import SignedPermutation, signed_permutations
from .orders import bfs_closure

Window = tuple[int, ...]

RULESETS = ("approxA", "approxB")


def _triple_moves(w: Window) -> Iterator[Window]:
    # cba, cab and bca are all equivalent
    for k in range(len(w) - 2):
        x, y, t = w[k : k + 3]
        c = max(x, y, t)
        a = min(x, y, t)
        b = x + y + t - a - c
        forms = ((c, b, a), (c, a, b), (b, c, a))
        if (x, y, t) in forms:
            for f in forms:
                if f != (x, y, t):
                    yield w[:k] + f + w[k + 3 :]


def _initial_moves(w: Window) -> Iterator[Window]:
    # for 0 < a < b < c:  -a -b ~ -b -a ~ a -b  and  -c -a -b ~ -c -b -a ~ -c a -b
    if len(w) >= 2:
        x, y = w[0], w[1]
        a, b = sorted((abs(x), abs(y)))
        forms = ((-a, -b), (-b, -a), (a, -b))
        if (x, y) in forms:
            for f in forms:
                if f != (x, y):
                    yield f + w[2:]
    if len(w) >= 3:
        x, y, t = w[:3]
        c = -x
        a, b = sorted((abs(y), abs(t)))
        if x < 0 and b < c:
            forms = ((-c, -a, -b), (-c, -b, -a), (-c, a, -b))
            if (x, y, t) in forms:
                for f in forms:
                    if f != (x, y, t):
                        yield f + w[3:]


def approx_moves(w: Window, ruleset: str = "approxB") -> Iterator[Window]:
    if ruleset not in RULESETS:
        raise ValueError(f"unknown ruleset {ruleset!r}")
    yield from _triple_moves(w)
    if ruleset == "approxB":
        yield from _initial_moves(w)


def equivalence_class(w: SignedPermutation, ruleset: str = "approxB") -> list[SignedPermutation]:
    found = bfs_closure([w.window], lambda u: approx_moves(u, ruleset))
    return [SignedPermutation._trusted(u) for u in sorted(found)]


def partition(n: int, ruleset: str = "approxB") -> list[list[SignedPermutation]]:
    """Classes of W_n (or of S_n, for approxA) under the ruleset, sorted."""
    if ruleset == "approxA":
        pool = [SignedPermutation._trusted(p) for p in permutations(range(1, n + 1))]
    else:
        pool = list(signed_permutations(n))
    remaining = {w.window for w in pool}
    classes = []
    for w in sorted(pool):
        if w.window not in remaining:
            continue
        cls = equivalence_class(w, ruleset)
        remaining -= {u.window for u in cls}
        classes.append(cls)
    return classes


def extended_initial_move(w: SignedPermutation) -> list[SignedPermutation]:
    """Words related to w by swapping the last two letters of an increasing negative prefix.

    For ``v_1 < ... < v_{i+1} < 0`` the words
    ``v_1 ... v_{i+1} ...``, ``v_1 ... v_{i+1} v_i ...`` and ``v_1 ... -v_{i+1} v_i ...``
    are equivalent.  Words whose first letter is positive give an empty list.
    """
    x = w.window
    n = len(x)
    if n == 0 or x[0] > 0:
        return []
    out: set[Window] = set()
    for i in range(1, n):
        head = x[: i - 1]
        if any(s >= t for s, t in zip(head, head[1:])) or (head and head[-1] > 0):
            break
        p, q = x[i - 1], x[i]
        for v_i, v_next in ((p, q), (q, p), (q, -p)):
            if not (v_i < v_next < 0):
                continue
            if head and head[-1] >= v_i:
                continue
            for f in ((v_i, v_next), (v_next, v_i), (-v_next, v_i)):
                out.add(head + f + x[i + 1 :])
    out.discard(x)
    return [SignedPermutation._trusted(u) for u in sorted(out)]
