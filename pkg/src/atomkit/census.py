"""Atomic involutions: classification, radius, bijections and closed-form counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterator, Sequence

from .core import SetPermutation, SignedPermutation, absolute_length
from .errors import AtomkitError
from .hecke import SignedInvolution, as_involution

Step = str  # "U", "D" or "F"
UP, DOWN, FLAT = "U", "D", "F"


# enumeration of involutions

def _involution_windows(n: int, signed: bool) -> Iterator[tuple[int, ...]]:
    w = [0] * n

    def rec() -> Iterator[tuple[int, ...]]:
        try:
            i = w.index(0)
        except ValueError:
            yield tuple(w)
            return
        v = i + 1
        for s in ((1, -1) if signed else (1,)):
            w[i] = s * v
            yield from rec()
        for j in range(i + 1, n):
            if w[j]:
                continue
            for s in ((1, -1) if signed else (1,)):
                w[i], w[j] = s * (j + 1), s * v
                yield from rec()
            w[j] = 0
        w[i] = 0

    yield from rec()


def involutions(n: int) -> list[SignedInvolution]:
    """All involutions of W_n, sorted by window."""
    return [SignedInvolution(SignedPermutation._trusted(w)) for w in sorted(_involution_windows(n, True))]


def involutions_a(n: int) -> list[tuple[int, ...]]:
    """All involutions of S_n in one-line form, sorted."""
    return sorted(_involution_windows(n, False))


# atomicity

def _two_cycles(z: SignedInvolution) -> list[tuple[int, int]]:
    n = z.rank
    pts = list(range(-n, 0)) + list(range(1, n + 1))
    return sorted({(min(x, z(x)), max(x, z(x))) for x in pts})


def is_atomic(z: SignedInvolution) -> bool:
    """Whether z has exactly one atom."""
    z = as_involution(z)
    if len(z.neg) > 1:
        return False
    cyc = _two_cycles(z)
    outer = [(a, d) for a, d in cyc if a < d and a != -d]
    for a, d in outer:
        for b, c in cyc:
            if a < b <= c < d:
                return False
    return True


def is_atomic_a(perm: Sequence[int]) -> bool:
    """Type A criterion: no cycles ``{a, d}``, ``{b, c}`` with ``a < b <= c < d``."""
    cyc = sorted({(min(i, x), max(i, x)) for i, x in enumerate(perm, 1)})
    return not any(a < b <= c < d for a, d in cyc for b, c in cyc)


def radius(z: SignedInvolution) -> int:
    """The largest r with ``z(r) < -r``, or 0."""
    z = as_involution(z)
    if not is_atomic(z):
        raise AtomkitError(f"{z} is not atomic")
    found = [r for r in range(1, z.rank + 1) if z(r) < -r]
    return max(found, default=0)


def eta(eps: Sequence[int], n: int) -> SignedInvolution:
    """The involution with ``z(r+1) = -r`` and ``z(r+1+i) = a_i``, where ``a`` sorts the ``i * eps_i``."""
    if n < 2:
        raise ValueError("eta needs n >= 2")
    r = n // 2
    if len(eps) != r - 1 or any(e not in (1, -1) for e in eps):
        raise ValueError(f"expected {r - 1} signs, got {tuple(eps)}")
    a = sorted(i * e for i, e in enumerate(eps, 1))
    m: dict[int, int] = {}

    def put(x: int, y: int) -> None:
        for p, q in ((x, y), (y, x), (-x, -y), (-y, -x)):
            m[p] = q

    put(r + 1, -r)
    for i, ai in enumerate(a, 1):
        put(r + 1 + i, ai)
    if n % 2:
        put(n, n)
    return SignedInvolution(SignedPermutation(tuple(m[i] for i in range(1, n + 1))))


def y_set(n: int) -> list[SignedInvolution]:
    """Atomic involutions with no negated points and ``z(r) < -r`` for ``r = n // 2``."""
    if n < 2:
        return [SignedInvolution(SignedPermutation.identity(n))]
    r = n // 2
    return [z for z in involutions(n) if not z.neg and z(r) < -r and is_atomic(z)]


# the bijections

def _standardizer(points: Sequence[int]) -> dict[int, int]:
    pts = sorted(points)
    half = len(pts) // 2
    return {x: (k - half if k < half else k - half + 1) for k, x in enumerate(pts)}


def pi0(x: SignedInvolution) -> tuple[SignedInvolution, SetPermutation]:
    """Split an atomic involution without negated points into its core and a type A remainder."""
    x = as_involution(x)
    if x.neg:
        raise AtomkitError(f"{x} has negated points")
    r = radius(x)
    n = x.rank
    inner = [i for i in range(1, r + 1)] + [-i for i in range(1, r + 1)]
    image = {x(i) for i in inner}
    std = _standardizer(set(inner) | image)
    y_window = tuple(std[x(e)] for e in sorted(std, key=std.get) if std[e] > 0)
    y = SignedInvolution(SignedPermutation(y_window))
    js = sorted(v for v in image if v > 0)
    zmap = {i: x(i) for i in range(1, n + 1)}
    for k, j in enumerate(js, 1):
        zmap[k] = j
        zmap[j] = k
    z = SetPermutation(tuple(range(1, n + 1)), tuple(zmap[i] for i in range(1, n + 1)))
    return y, z


def pi0_inverse(y: SignedInvolution, z: SetPermutation) -> SignedInvolution:
    y = as_involution(y)
    if y.rank % 2:
        raise ValueError("the core must have even rank")
    r = y.rank // 2
    n = len(z.domain)
    zm = z.as_dict()
    e = set(range(1, r + 1)) | {-i for i in range(1, r + 1)}
    e |= {zm[i] for i in range(1, r + 1)} | {-zm[i] for i in range(1, r + 1)}
    pts = sorted(e)
    half = len(pts) // 2
    theta = {(k - half if k < half else k - half + 1): p for k, p in enumerate(pts)}
    xm = {theta[k]: theta[y(k)] for k in theta}
    for i in range(1, n + 1):
        if i not in xm:
            xm[i] = zm[i]
    return SignedInvolution(SignedPermutation(tuple(xm[i] for i in range(1, n + 1))))


def pi1(x: SignedInvolution) -> tuple[SignedInvolution, int]:
    """Delete the unique negated point m of an atomic involution and standardize."""
    x = as_involution(x)
    if len(x.neg) != 1:
        raise AtomkitError(f"{x} does not have exactly one negated point")
    if not is_atomic(x):
        raise AtomkitError(f"{x} is not atomic")
    (m,) = x.neg

    def up(k: int) -> int:
        return k if abs(k) < m else k + (1 if k > 0 else -1)

    def down(k: int) -> int:
        return k if abs(k) < m else k - (1 if k > 0 else -1)

    window = tuple(down(x(up(k))) for k in range(1, x.rank))
    return SignedInvolution(SignedPermutation(window)), m


def pi1_inverse(y: SignedInvolution, m: int) -> SignedInvolution:
    y = as_involution(y)
    n = y.rank + 1
    if not 1 <= m <= n:
        raise ValueError(f"m = {m} outside 1..{n}")

    def up(k: int) -> int:
        return k if abs(k) < m else k + (1 if k > 0 else -1)

    xm = {up(k): up(y(k)) for k in range(1, n)}
    xm[m] = -m
    return SignedInvolution(SignedPermutation(tuple(xm[i] for i in range(1, n + 1))))


# dispersed Dyck paths

def is_dyck(path: Sequence[Step]) -> bool:
    h = 0
    for s in path:
        h += {UP: 1, DOWN: -1, FLAT: 0}[s]
        if h < 0 or (s == FLAT and h != 0):
            return False
    return h % 2 == 0


def dyck_paths(n: int, k: int | None = None) -> list[tuple[Step, ...]]:
    out = [p for p in product((UP, DOWN, FLAT), repeat=n) if is_dyck(p)]
    if k is not None:
        out = [p for p in out if p.count(FLAT) == n - 2 * k]
    return sorted(out)


def path_of(z: SignedInvolution) -> tuple[Step, ...]:
    z = as_involution(z)
    n = z.rank
    steps = []
    for i in range(1, n + 1):
        j = -n + i - 1
        steps.append(FLAT if z(j) == j else UP if j < z(j) else DOWN)
    return tuple(steps)


def involution_of(path: Sequence[Step]) -> SignedInvolution:
    n = len(path)
    ends = sorted(
        [-n + i - 1 for i, s in enumerate(path, 1) if s == UP]
        + [n - i + 1 for i, s in enumerate(path, 1) if s == DOWN]
    )
    m = {i: i for i in range(1, n + 1)}
    last = len(ends) - 1
    for i, a in enumerate(ends):
        b = -ends[last - i]
        if a > 0:
            m[a] = b
        else:
            m[-a] = -b
    return SignedInvolution(SignedPermutation(tuple(m[i] for i in range(1, n + 1))))


def dyck_bijection(n: int, k: int) -> list[tuple[tuple[Step, ...], SignedInvolution]]:
    if not 0 <= k <= n // 2:
        raise ValueError(f"k = {k} outside 0..{n // 2}")
    return [(p, involution_of(p)) for p in dyck_paths(n, k)]


# closed forms

def _ceil_pow2(r: int) -> int:
    return 1 if r == 0 else 2 ** (r - 1)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def count_x0_radius(n: int, r: int) -> int:
    return _ceil_pow2(r) * comb(n - r, _ceil_half(n))


def count_x1_radius(n: int, r: int) -> int:
    """Atomic involutions of W_n with one negated point and radius r."""
    if n == 0:
        return 0
    m = n - 1
    return (_ceil_half(m) + 1) * _ceil_pow2(r) * comb(m - r + 1, _ceil_half(m) + 1)


def count_z(n: int, r: int) -> int:
    return comb(n - r, _ceil_half(n))


def count_x0_abs(n: int, k: int) -> int:
    return comb(n, k)


def count_dyck(n: int, k: int) -> int:
    return comb(n, k)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form gave the non-integer {x}")
    return int(x)


def a0(n: int) -> int:
    if n % 2:
        return 2 ** (n - 1)
    return _as_int(Fraction(2) ** (n - 1) + Fraction(comb(n, n // 2), 2))


def a1(n: int) -> int:
    if n % 2:
        return _as_int((n + 1) * Fraction(2) ** (n - 2))
    return _as_int(Fraction((n + 2) * (2**n - comb(n, n // 2)), 4))


def a_total(n: int) -> int:
    if n % 2:
        return _as_int((n + 3) * Fraction(2) ** (n - 2))
    return _as_int((n + 4) * Fraction(2) ** (n - 2) - Fraction(n, 4) * comb(n, n // 2))


# census table

@dataclass(frozen=True)
class CensusRow:
    n: int
    cls: str
    r: int | None
    k: int | None
    formula: int
    enumerated: int | None = None

    @property
    def neg_class(self) -> int | None:
        return {"X0": 0, "X0k": 0, "a0": 0, "X1": 1, "a1": 1}.get(self.cls)

    @property
    def match(self) -> bool | None:
        return None if self.enumerated is None else self.enumerated == self.formula

    def tsv(self) -> str:
        def cell(v: object) -> str:
            if v is None:
                return "-"
            if isinstance(v, bool):
                return str(v).lower()
            return str(v)

        return "\t".join(cell(v) for v in (self.n, self.cls, self.r, self.k, self.enumerated, self.formula, self.match))


TSV_HEADER = "n\tclass\tr\tk\tenumerated\tformula\tmatch"

ENUMERATION_BOUND = 8


def census(n: int, check: bool = True) -> list[CensusRow]:
    """All closed-form counts for rank n, with enumerated values when ``check`` and n is small."""
    enum = check and n <= ENUMERATION_BOUND
    x0_r: dict[int, int] = {}
    x1_r: dict[int, int] = {}
    x0_k: dict[int, int] = {}
    z_r: dict[int, int] = {}
    d_k: dict[int, int] = {}
    if enum:
        for z in involutions(n):
            if not is_atomic(z):
                continue
            r = radius(z)
            if not z.neg:
                x0_r[r] = x0_r.get(r, 0) + 1
                k = absolute_length(z.perm)
                x0_k[k] = x0_k.get(k, 0) + 1
            else:
                x1_r[r] = x1_r.get(r, 0) + 1
        for perm in involutions_a(n):
            if not is_atomic_a(perm):
                continue
            top = max((r for r in range(n + 1) if all(i < perm[i - 1] for i in range(1, r + 1))), default=0)
            for r in range(top + 1):
                z_r[r] = z_r.get(r, 0) + 1
        for p in dyck_paths(n):
            k = (n - p.count(FLAT)) // 2
            d_k[k] = d_k.get(k, 0) + 1

    def got(table: dict[int, int], key: int) -> int | None:
        return table.get(key, 0) if enum else None

    rows = []
    for r in range(n // 2 + 1):
        rows.append(CensusRow(n, "X0", r, None, count_x0_radius(n, r), got(x0_r, r)))
    if n >= 1:
        for r in range((n - 1) // 2 + 1):
            rows.append(CensusRow(n, "X1", r, None, count_x1_radius(n, r), got(x1_r, r)))
    for k in range(n // 2 + 1):
        rows.append(CensusRow(n, "X0k", None, k, count_x0_abs(n, k), got(x0_k, k)))
    for r in range(n // 2 + 1):
        rows.append(CensusRow(n, "Z", r, None, count_z(n, r), got(z_r, r)))
    for k in range(n // 2 + 1):
        rows.append(CensusRow(n, "D", None, k, count_dyck(n, k), got(d_k, k)))
    e0 = sum(x0_r.values()) if enum else None
    e1 = sum(x1_r.values()) if enum else None
    rows.append(CensusRow(n, "a0", None, None, a0(n), e0))
    rows.append(CensusRow(n, "a1", None, None, a1(n), e1))
    rows.append(CensusRow(n, "a", None, None, a_total(n), None if not enum else e0 + e1))  # type: ignore[operator]
    return rows
