"""Demazure products, signed involutions and brute-force atom oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from . import config
from .core import (
    SignedPermutation,
    _inv,
    _length,
    _mul,
    _reduced_word,
    absolute_length,
    coxeter_length,
    is_right_descent,
    parse_signed,
    signed_permutations,
    times_generator,
)
from .errors import BoundExceeded, NotAnInvolution, RankMismatch


@dataclass(frozen=True, order=True)
class SignedInvolution:
    """A signed permutation equal to its own inverse, with its cycle data.

    ``pair`` holds the pairs ``(a, b)`` with ``|a| < z(a) = b``; ``neg`` the
    points sent to their negatives and ``fix`` the positive fixed points.
    """

    perm: SignedPermutation
    neg: frozenset[int] = field(init=False, compare=False, repr=False)
    fix: frozenset[int] = field(init=False, compare=False, repr=False)
    pair: frozenset[tuple[int, int]] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        p = self.perm
        if not isinstance(p, SignedPermutation):
            p = SignedPermutation(tuple(p))
            object.__setattr__(self, "perm", p)
        if not p.is_involution():
            raise NotAnInvolution(f"{p} is not an involution")
        n = p.rank
        object.__setattr__(self, "neg", frozenset(i for i in range(1, n + 1) if p(i) == -i))
        object.__setattr__(self, "fix", frozenset(i for i in range(1, n + 1) if p(i) == i))
        pairs = set()
        for a in list(range(-n, 0)) + list(range(1, n + 1)):
            b = p(a)
            if abs(a) < b:
                pairs.add((a, b))
        object.__setattr__(self, "pair", frozenset(pairs))

    @classmethod
    def parse(cls, text: str) -> "SignedInvolution":
        return cls(parse_signed(text))

    @property
    def window(self) -> tuple[int, ...]:
        return self.perm.window

    @property
    def rank(self) -> int:
        return self.perm.rank

    def __call__(self, i: int) -> int:
        return self.perm(i)

    def __str__(self) -> str:
        return str(self.perm)

    def cycles_b(self) -> list[tuple[int, int]]:
        """Pairs, then ``(-a, -a)`` for negated points and ``(a, a)`` for fixed points, sorted."""
        out = list(self.pair)
        out += [(-a, -a) for a in self.neg]
        out += [(a, a) for a in self.fix]
        return sorted(out)


def as_involution(z: SignedInvolution | SignedPermutation | Sequence[int] | str) -> SignedInvolution:
    if isinstance(z, SignedInvolution):
        return z
    if isinstance(z, str):
        return SignedInvolution.parse(z)
    return SignedInvolution(z if isinstance(z, SignedPermutation) else SignedPermutation(tuple(z)))


def _demazure(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    for i in _reduced_word(v):
        if not is_right_descent(u, i):
            u = times_generator(u, i)
    return u


def demazure(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """Demazure product: fold a reduced word of v into u, skipping letters that would shorten it."""
    if u.rank != v.rank:
        raise RankMismatch(f"ranks {u.rank} and {v.rank} differ")
    return SignedPermutation._trusted(_demazure(u.window, v.window))


def _hecke(w: tuple[int, ...]) -> tuple[int, ...]:
    return _demazure(_inv(w), w)


def hecke_image(w: SignedPermutation) -> SignedInvolution:
    """The involution ``w^{-1} o w``."""
    return SignedInvolution(SignedPermutation._trusted(_hecke(w.window)))


def demazure_conjugate(i: int, z: SignedInvolution) -> SignedInvolution:
    """``t_i o z o t_i`` by the three-case rule."""
    zw = z.window
    if not 0 <= i < len(zw):
        raise RankMismatch(f"generator index {i} outside 0..{len(zw) - 1}")
    if is_right_descent(zw, i):
        return z
    zs = times_generator(zw, i)
    s = times_generator(tuple(range(1, len(zw) + 1)), i)
    sz = _mul(s, zw)
    if zs == sz:
        return SignedInvolution(SignedPermutation._trusted(zs))
    return SignedInvolution(SignedPermutation._trusted(_mul(sz, s)))


def involution_length(z: SignedInvolution) -> int:
    """Common length of the atoms of z: the mean of its length and absolute length."""
    return (coxeter_length(z.perm) + absolute_length(z.perm)) // 2


def _check_bound(n: int, bound: int | None) -> None:
    limit = config.brute_bound() if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"rank {n} exceeds the brute-force bound {limit}")


@lru_cache(maxsize=None)
def _hecke_table(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    return tuple((w.window, _hecke(w.window), _length(w.window)) for w in signed_permutations(n))


def atoms_brute(z: SignedInvolution, bound: int | None = None) -> list[SignedPermutation]:
    """Atoms of z found by scanning all of W_n."""
    z = as_involution(z)
    _check_bound(z.rank, bound)
    target = involution_length(z)
    return [
        SignedPermutation._trusted(w)
        for w, h, length in _hecke_table(z.rank)
        if length == target and h == z.window
    ]


def hecke_atoms_brute(z: SignedInvolution, bound: int | None = None) -> list[SignedPermutation]:
    """Every w in W_n with ``w^{-1} o w = z``."""
    z = as_involution(z)
    _check_bound(z.rank, bound)
    return [SignedPermutation._trusted(w) for w, h, _ in _hecke_table(z.rank) if h == z.window]


def symmetry_check_w0(n: int, bound: int | None = None) -> bool:
    """Whether the Hecke atoms of the longest element are closed under inversion."""
    found = hecke_atoms_brute(SignedInvolution(SignedPermutation.longest(n)), bound)
    return set(found) == {w.inverse() for w in found}


# type A, through the inclusion of S_n as the positive windows

def is_type_a(w: SignedPermutation) -> bool:
    return all(x > 0 for x in w.window)


def atoms_brute_a(z: Sequence[int], bound: int = 8) -> list[tuple[int, ...]]:
    """Atoms of an involution of S_m (one-line form), by scanning S_m."""
    z = tuple(z)
    if len(z) > bound:
        raise BoundExceeded(f"rank {len(z)} exceeds the type A bound {bound}")
    if _mul(z, z) != tuple(range(1, len(z) + 1)):
        raise NotAnInvolution(f"{z} is not an involution")
    target = involution_length(SignedInvolution(SignedPermutation._trusted(z)))
    return [w for w in permutations(range(1, len(z) + 1)) if _length(w) == target and _hecke(w) == z]


def hecke_atoms_brute_a(z: Sequence[int], bound: int = 8) -> list[tuple[int, ...]]:
    z = tuple(z)
    if len(z) > bound:
        raise BoundExceeded(f"rank {len(z)} exceeds the type A bound {bound}")
    return [w for w in permutations(range(1, len(z) + 1)) if _hecke(w) == z]
