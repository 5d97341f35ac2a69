"""Signed permutations, words and the basic statistics on them.

A signed permutation of rank n is stored as its window ``(w(1), ..., w(n))``;
the values at negative arguments follow from ``w(-i) = -w(i)``.  Generators
are numbered ``0, 1, ..., n-1``: right multiplication by generator 0 negates
the first window entry and generator ``i > 0`` swaps entries ``i`` and ``i+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, RankMismatch

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(self.window)
        object.__setattr__(self, "window", w)
        n = len(w)
        if sorted(abs(x) for x in w) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation window: {w}")

    @classmethod
    def _trusted(cls, window: tuple[int, ...]) -> "SignedPermutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def generator(cls, i: int, n: int) -> "SignedPermutation":
        if not 0 <= i < n:
            raise RankMismatch(f"generator index {i} outside 0..{n - 1}")
        return cls._trusted(times_generator(tuple(range(1, n + 1)), i))

    @classmethod
    def longest(cls, n: int) -> "SignedPermutation":
        return cls._trusted(tuple(-i for i in range(1, n + 1)))

    @property
    def rank(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.window[i - 1]
        if i < 0:
            return -self.window[-i - 1]
        raise ValueError("0 is not in the domain")

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __iter__(self) -> Iterator[int]:
        return iter(self.window)

    def __str__(self) -> str:
        return format_signed(self)

    def inverse(self) -> "SignedPermutation":
        return inverse(self)

    def is_involution(self) -> bool:
        return _mul(self.window, self.window) == tuple(range(1, len(self.window) + 1))


@dataclass(frozen=True, order=True)
class SetPermutation:
    """A permutation of a finite set of nonzero integers, in one-line form.

    ``images[k]`` is the image of ``domain[k]``; the domain is sorted.
    """

    domain: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(self.domain)
        im = tuple(self.images)
        object.__setattr__(self, "domain", d)
        object.__setattr__(self, "images", im)
        if list(d) != sorted(set(d)):
            raise ValueError(f"domain must be sorted and repetition free: {d}")
        if sorted(im) != list(d):
            raise ValueError(f"images {im} are not a rearrangement of {d}")

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "SetPermutation":
        return cls(tuple(sorted(word)), tuple(word))

    @classmethod
    def from_cycles(cls, domain: Iterable[int], cycles: Iterable[Sequence[int]]) -> "SetPermutation":
        dom = tuple(sorted(domain))
        m = {x: x for x in dom}
        for cyc in cycles:
            for k, x in enumerate(cyc):
                m[x] = cyc[(k + 1) % len(cyc)]
        return cls(dom, tuple(m[x] for x in dom))

    def __call__(self, x: int) -> int:
        return self.images[self.domain.index(x)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.images))

    def is_involution(self) -> bool:
        m = self.as_dict()
        return all(m[m[x]] == x for x in self.domain)

    def cycles(self) -> list[tuple[int, ...]]:
        m = self.as_dict()
        seen: set[int] = set()
        out = []
        for x in self.domain:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = m[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = m[y]
            out.append(tuple(cyc))
        return out

    def standardize(self) -> tuple[int, ...]:
        """One-line form in S_m after relabelling the domain as 1..m."""
        pos = {x: k + 1 for k, x in enumerate(self.domain)}
        return tuple(pos[y] for y in self.images)

    def as_signed(self) -> SignedPermutation:
        """Read the one-line form as a window; needs the domain to meet each ``{i, -i}`` once."""
        return SignedPermutation(self.images)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.images)


# tuple level helpers, used in the hot loops of the other modules

def _mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def _inv(w: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, x in enumerate(w, 1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def times_generator(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Window of ``w t_i``."""
    if i == 0:
        return (-w[0],) + w[1:]
    return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]


def is_right_descent(w: tuple[int, ...], i: int) -> bool:
    if i == 0:
        return w[0] < 0
    return w[i - 1] > w[i]


def _descents(w: tuple[int, ...]) -> list[int]:
    out = [0] if w and w[0] < 0 else []
    out.extend(i for i in range(1, len(w)) if w[i - 1] > w[i])
    return out


def _length(w: tuple[int, ...]) -> int:
    vals = [-x for x in reversed(w)] + list(w)
    inv = sum(1 for a, b in combinations(vals, 2) if a > b)
    return (inv + sum(1 for x in w if x < 0)) // 2


def _reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    word = []
    while True:
        des = _descents(w)
        if not des:
            break
        i = des[0]
        word.append(i)
        w = times_generator(w, i)
    return tuple(reversed(word))


# public operations

def parse_signed(text: str, rank: int | None = None) -> SignedPermutation:
    """Parse a comma separated window such as ``"-1,2,-3"``.

    >>> parse_signed("2,-1").window
    (2, -1)
    """
    stripped = text.strip()
    letters: list[int] = []
    if stripped:
        for pos, part in enumerate(stripped.split(","), 1):
            try:
                letters.append(int(part.strip()))
            except ValueError:
                raise ParseError(f"position {pos}: {part.strip()!r} is not an integer") from None
    n = len(letters)
    if rank is not None and rank != n:
        raise RankMismatch(f"expected {rank} letters, got {n}")
    seen: set[int] = set()
    for pos, x in enumerate(letters, 1):
        if x == 0 or abs(x) > n:
            raise ParseError(f"position {pos}: {x} is outside [-{n}, {n}] minus 0")
        if abs(x) in seen:
            raise ParseError(f"position {pos}: repeated absolute value {abs(x)}")
        seen.add(abs(x))
    return SignedPermutation._trusted(tuple(letters))


def format_signed(w: SignedPermutation | Sequence[int]) -> str:
    window = w.window if isinstance(w, SignedPermutation) else w
    return ",".join(str(x) for x in window)


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """The product ``i -> u(v(i))``."""
    if u.rank != v.rank:
        raise RankMismatch(f"ranks {u.rank} and {v.rank} differ")
    return SignedPermutation._trusted(_mul(u.window, v.window))


def inverse(w: SignedPermutation) -> SignedPermutation:
    return SignedPermutation._trusted(_inv(w.window))


def coxeter_length(w: SignedPermutation) -> int:
    """Half of (inversions of w on [-n, n] plus number of negative entries)."""
    return _length(w.window)


def neg_count(w: SignedPermutation) -> int:
    return sum(1 for x in w.window if x < 0)


def signed_cycles(w: SignedPermutation) -> list[tuple[int, ...]]:
    """Cycles of w acting on [-n, n] minus 0."""
    seen: set[int] = set()
    out = []
    n = w.rank
    for start in list(range(-n, 0)) + list(range(1, n + 1)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = w(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = w(x)
        out.append(tuple(cyc))
    return out


def absolute_length(w: SignedPermutation) -> int:
    """Minimal number of reflections whose product is w."""
    cycles = signed_cycles(w)
    stable = sum(1 for c in cycles if -c[0] in c)
    return w.rank - (len(cycles) - stable) // 2


def right_descents(w: SignedPermutation) -> frozenset[int]:
    return frozenset(_descents(w.window))


def left_descents(w: SignedPermutation) -> frozenset[int]:
    return frozenset(_descents(_inv(w.window)))


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """Reduced word found by repeatedly removing the smallest right descent."""
    return _reduced_word(w.window)


def from_word(word: Iterable[int], n: int) -> SignedPermutation:
    w = tuple(range(1, n + 1))
    for i in word:
        if not 0 <= i < n:
            raise RankMismatch(f"generator index {i} outside 0..{n - 1}")
        w = times_generator(w, i)
    return SignedPermutation._trusted(w)


def signed_permutations(n: int) -> Iterator[SignedPermutation]:
    """All of W_n in lexicographic window order."""
    windows = [
        tuple(s * x for s, x in zip(signs, perm))
        for perm in permutations(range(1, n + 1))
        for signs in product((-1, 1), repeat=n)
    ]
    for w in sorted(windows):
        yield SignedPermutation._trusted(w)


def from_type_a(perm: Sequence[int]) -> SignedPermutation:
    """Image of a permutation of 1..n under the inclusion S_n -> W_n."""
    return SignedPermutation(tuple(perm))


def sort_left(w: Sequence[int]) -> Word:
    """Drop the right letter of every adjacent descent."""
    return tuple(x for k, x in enumerate(w) if k == 0 or w[k - 1] < x)


def sort_right(w: Sequence[int]) -> Word:
    """Drop the left letter of every adjacent descent."""
    last = len(w) - 1
    return tuple(x for k, x in enumerate(w) if k == last or x < w[k + 1])


def dedupe_first(w: Iterable[int]) -> Word:
    """Keep only the first occurrence of each letter."""
    seen: set[int] = set()
    out = []
    for x in w:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


def has_consecutive_pattern(w: Sequence[int], kind: str) -> bool:
    """``kind`` is ``"321"`` (three decreasing letters) or ``"negneg"`` (two decreasing negative letters)."""
    if kind == "321":
        return any(w[k] > w[k + 1] > w[k + 2] for k in range(len(w) - 2))
    if kind == "negneg":
        return any(0 > w[k] > w[k + 1] for k in range(len(w) - 1))
    raise ValueError(f"unknown pattern kind {kind!r}")


def psi(x: int, n: int) -> int:
    """Order preserving relabelling of [-n, n] minus 0 as 1..2n."""
    return x + n + 1 if x < 0 else x + n


def psi_inverse(j: int, n: int) -> int:
    return j - n - 1 if j <= n else j - n


def psi_embed(w: SignedPermutation) -> SetPermutation:
    """Conjugate w by the relabelling ``psi``, giving a permutation of 1..2n."""
    n = w.rank
    images = tuple(psi(w(psi_inverse(j, n)), n) for j in range(1, 2 * n + 1))
    return SetPermutation(tuple(range(1, 2 * n + 1)), images)


def reflections(n: int) -> list[SignedPermutation]:
    """All n^2 reflections of W_n, sorted by window."""
    out = []
    ident = list(range(1, n + 1))
    for i in range(1, n + 1):
        w = ident[:]
        w[i - 1] = -i
        out.append(tuple(w))
    for i, j in combinations(range(1, n + 1), 2):
        w = ident[:]
        w[i - 1], w[j - 1] = -j, -i
        out.append(tuple(w))
        w = ident[:]
        w[i - 1], w[j - 1] = j, i
        out.append(tuple(w))
    return [SignedPermutation._trusted(w) for w in sorted(out)]
