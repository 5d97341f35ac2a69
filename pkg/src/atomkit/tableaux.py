"""Reduced words, tableau counts and the enumerative identities they satisfy."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

from . import config
from .core import SignedPermutation, _descents, _length, coxeter_length, from_word, times_generator
from .errors import BoundExceeded
from .hecke import SignedInvolution, as_involution, atoms_brute
from .orders import atoms_fast


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    strict: bool = False

    def __post_init__(self) -> None:
        p = tuple(x for x in self.parts if x != 0)
        object.__setattr__(self, "parts", p)
        if any(x < 0 for x in p):
            raise ValueError(f"negative part in {p}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"parts {p} are not weakly decreasing")
        if self.strict and any(a == b for a, b in zip(p, p[1:])):
            raise ValueError(f"parts {p} are not strictly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)


def staircase(n: int) -> Partition:
    return Partition(tuple(range(n, 0, -1)))


def hook_f(shape: Partition | Sequence[int]) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = shape.parts if isinstance(shape, Partition) else Partition(tuple(shape)).parts
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks


def shifted_hooks(mu: Sequence[int]) -> list[int]:
    out = []
    rows = len(mu)
    for i in range(rows):
        for j in range(i, i + mu[i]):
            right = i + mu[i] - j
            below = sum(1 for k in range(i + 1, rows) if k <= j < k + mu[k])
            extra = mu[j + 1] if j + 1 < rows else 0
            out.append(right + below + extra)
    return out


def shifted_g(shape: Partition | Sequence[int]) -> int:
    """Number of standard shifted tableaux of a strict shape, by the shifted hook formula."""
    mu = shape.parts if isinstance(shape, Partition) else Partition(tuple(shape), strict=True).parts
    if isinstance(shape, Partition) and not shape.strict:
        Partition(mu, strict=True)
    return factorial(sum(mu)) // prod(shifted_hooks(mu))


# reduced words

def reduced_words(w: SignedPermutation, bound: int | None = None) -> list[tuple[int, ...]]:
    """Every reduced word of w, sorted."""
    limit = config.words_bound() if bound is None else bound
    length = coxeter_length(w)
    if length > limit:
        raise BoundExceeded(f"length {length} exceeds the reduced word bound {limit}")
    memo: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    def words(x: tuple[int, ...]) -> list[tuple[int, ...]]:
        if x in memo:
            return memo[x]
        des = _descents(x)
        if not des:
            res = [()]
        else:
            res = [u + (i,) for i in des for u in words(times_generator(x, i))]
        memo[x] = res
        return res

    return sorted(words(w.window))


@lru_cache(maxsize=None)
def _count(x: tuple[int, ...]) -> int:
    des = _descents(x)
    if not des:
        return 1
    return sum(_count(times_generator(x, i)) for i in des)


def count_reduced_words(w: SignedPermutation) -> int:
    return _count(w.window)


def rhat(z: SignedInvolution) -> int:
    """Total number of reduced words of the atoms of z."""
    z = as_involution(z)
    return sum(count_reduced_words(w.inverse()) for w in atoms_fast(z))


def rhat_words(z: SignedInvolution) -> list[tuple[int, ...]]:
    z = as_involution(z)
    out: list[tuple[int, ...]] = []
    for w in atoms_fast(z):
        out += reduced_words(w.inverse())
    return sorted(out)


def is_fully_commutative(w: SignedPermutation) -> bool:
    """Whether every reduced word of w is reachable from one by swapping commuting letters."""
    start = reduced_words(w)[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for k in range(len(u) - 1):
            if abs(u[k] - u[k + 1]) > 1:
                v = u[:k] + (u[k + 1], u[k]) + u[k + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return len(seen) == count_reduced_words(w)


# word relations generating the reduced words of all atoms of an involution

def _braid_moves(u: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    n = len(u)
    for k in range(n - 1):
        a, b = u[k], u[k + 1]
        if abs(a - b) > 1:
            yield u[:k] + (b, a) + u[k + 2 :]
    for k in range(n - 2):
        a, b, c = u[k : k + 3]
        if a == c and abs(a - b) == 1 and min(a, b) > 0:
            yield u[:k] + (b, a, b) + u[k + 3 :]
    for k in range(n - 3):
        seg = u[k : k + 4]
        if seg in ((0, 1, 0, 1), (1, 0, 1, 0)):
            yield u[:k] + (seg[1], seg[0], seg[1], seg[0]) + u[k + 4 :]


_INITIAL = [((0, 1, 0), (1, 0, 1)), ((0, 1, 2, 0, 1, 0), (0, 1, 2, 1, 0, 1))]


def _initial_moves(u: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    if len(u) >= 2 and min(u[0], u[1]) > 0 and abs(u[0] - u[1]) == 1:
        yield (u[1], u[0]) + u[2:]
    for left, right in _INITIAL:
        for x, y in ((left, right), (right, left)):
            if u[: len(x)] == x:
                yield y + u[len(x) :]


def relation_closure(word: Sequence[int]) -> set[tuple[int, ...]]:
    """Closure of a word under braid relations and the relations allowed only at the start."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in list(_braid_moves(u)) + list(_initial_moves(u)):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


# named elements

def longest_a(n: int) -> SignedPermutation:
    """Longest element of S_n, as a positive window."""
    return SignedPermutation._trusted(tuple(range(n, 0, -1)))


def longest_b(n: int) -> SignedPermutation:
    return SignedPermutation.longest(n)


def gamma(n: int) -> SignedInvolution:
    """The involution ``i -> -(n + 1 - i)``."""
    return SignedInvolution(SignedPermutation._trusted(tuple(-(n + 1 - i) for i in range(1, n + 1))))


def gamma_shape(n: int) -> Partition:
    p, q = (n + 1) // 2, (n + 2) // 2
    return Partition((p,) * q)


def gamma_strict_shape(n: int) -> Partition:
    return Partition(tuple(range(n, 0, -2)), strict=True)


def gamma_product(n: int) -> int:
    """Closed product for the reduced words of the atom of gamma_n."""
    p, q = (n + 1) // 2, (n + 2) // 2
    num = prod(factorial(i) for i in range(p)) * factorial(p * q)
    den = prod(factorial(q + i) for i in range(p))
    return num // den


# identity checks

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n: int
    lhs: int | Fraction
    rhs: int | Fraction
    asserted: bool
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def line(self) -> str:
        status = ("PASS" if self.passed else "FAIL") if self.asserted else "REPORT"
        text = f"{status} {self.name} n={self.n}: {self.lhs} vs {self.rhs}"
        return text + (f" ({self.note})" if self.note else "")


def stanley_odd_power_product(n: int) -> Fraction:
    """The product ``binom(n+1, 2)! / prod (2i-1)^i`` with exponents i.

    Kept as a contrast to the hook formula, which needs exponents n+1-i.
    """
    return Fraction(factorial(comb(n + 1, 2)), prod((2 * i - 1) ** i for i in range(1, n + 1)))


def hmp_formula(n: int, shift: int = 0) -> int:
    """Binomial product for the Hecke words of the longest element of S_{n+1}.

    ``shift=0`` uses ``p = floor(n/2)``, ``q = ceil(n/2)``;
    ``shift=2`` uses ``floor((n+2)/2)`` and ``ceil((n+2)/2)``, which agrees
    with enumeration.
    """
    m = n + shift
    p, q = m // 2, (m + 1) // 2
    return comb(comb(p, 2) + comb(q, 2), comb(p, 2)) * hook_f(staircase(p - 1)) * hook_f(staircase(q - 1))


def _rhat_enumerated(z: SignedInvolution) -> int:
    return sum(len(reduced_words(w)) for w in atoms_brute(z))


def verify_identities(n: int) -> list[IdentityCheck]:
    """Evaluate each identity at n with both sides computed independently."""
    checks = []
    w0a = longest_a(n + 1)
    checks.append(IdentityCheck("stanley", n, len(reduced_words(w0a)), hook_f(staircase(n)), True))
    checks.append(
        IdentityCheck(
            "stanley-odd-power-product", n, hook_f(staircase(n)), stanley_odd_power_product(n), False,
            "exponents i; exponents n+1-i give the hook formula",
        )
    )
    if n >= 2:
        lhs = _rhat_enumerated(SignedInvolution(longest_b(n)))
        checks.append(IdentityCheck("type-b-longest", n, lhs, len(reduced_words(w0a)), True))
    atoms_a = atoms_brute(SignedInvolution(w0a))
    hecke_words = sum(len(reduced_words(w)) for w in atoms_a)
    checks.append(
        IdentityCheck(
            "hmp-binomial-product", n, hecke_words, hmp_formula(n), False,
            "indices p=floor(n/2), q=ceil(n/2); shifted indices match",
        )
    )
    checks.append(IdentityCheck("hmp-shifted-index", n, hecke_words, hmp_formula(n, shift=2), True))
    g = gamma(n)
    enumerated = _rhat_enumerated(g)
    checks.append(IdentityCheck("gamma-f", n, enumerated, hook_f(gamma_shape(n)), True))
    checks.append(IdentityCheck("gamma-g", n, enumerated, shifted_g(gamma_strict_shape(n)), True))
    checks.append(IdentityCheck("gamma-product", n, enumerated, gamma_product(n), True))
    return checks


def word_product(word: Sequence[int], n: int) -> SignedPermutation:
    return from_word(word, n)


def is_reduced(word: Sequence[int], n: int) -> bool:
    return _length(from_word(word, n).window) == len(word)
