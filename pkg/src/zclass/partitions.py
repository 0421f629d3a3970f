"""Integer partitions and the restricted counting functions built on them.

Partitions are stored in exponent form, ``1^3 5 9`` being ``((1, 3), (5, 1), (9, 1))``.
Every count is an exact Python integer.
"""

from __future__ import annotations

import enum
import functools
import math
import threading
from collections import Counter
from itertools import groupby
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "PartitionPredicate",
    "Family",
    "UNRESTRICTED",
    "P_TILDE",
    "Q",
    "Q_TILDE",
    "EPSILON",
    "DELTA",
    "is_square",
    "enumerate_partitions",
    "iter_part_lists",
    "count_p",
    "count_p_tilde",
    "count_q",
    "count_q_tilde",
    "count_epsilon",
    "count_delta",
    "delta_witnesses",
    "gf_coefficients",
    "conjugate_parts",
    "self_conjugate_partitions",
]


def is_square(k: int) -> bool:
    """Exact perfect-square test (``math.isqrt`` is exact for arbitrary ints)."""
    if k < 0:
        return False
    r = math.isqrt(k)
    return r * r == k


@dataclass(frozen=True)
class Partition:
    """A partition as ascending ``(part, multiplicity)`` pairs."""

    pairs: tuple[tuple[int, int], ...]
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        pairs = tuple(self.pairs)
        prev = 0
        for a, e in pairs:
            if a <= prev:
                raise ValueError(f"parts must be positive and strictly increasing: {pairs}")
            if e < 1:
                raise ValueError(f"multiplicities must be >= 1: {pairs}")
            prev = a
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "weight", sum(a * e for a, e in pairs))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build from a multiset of parts given in any order."""
        counts = Counter(parts)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_ascending(cls, parts: Sequence[int]) -> Partition:
        """Build from an already ascending part list (as produced by the enumerators)."""
        return cls(tuple((a, len(list(g))) for a, g in groupby(parts)))

    @classmethod
    def empty(cls) -> Partition:
        return cls(())

    @property
    def parts(self) -> tuple[int, ...]:
        """Expanded ascending part list."""
        return tuple(a for a, e in self.pairs for _ in range(e))

    @property
    def distinct_parts(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def num_parts(self) -> int:
        return sum(e for _, e in self.pairs)

    def multiplicity(self, part: int) -> int:
        for a, e in self.pairs:
            if a == part:
                return e
        return 0

    def without(self, part: int, count: int = 1) -> Partition:
        """Remove ``count`` copies of ``part``; raises if there are not enough."""
        have = self.multiplicity(part)
        if have < count:
            raise ValueError(f"{self} has only {have} copies of {part}")
        pairs = [(a, e - count if a == part else e) for a, e in self.pairs]
        return Partition(tuple((a, e) for a, e in pairs if e > 0))

    def with_part(self, part: int, count: int = 1) -> Partition:
        counts = dict(self.pairs)
        counts[part] = counts.get(part, 0) + count
        return Partition(tuple(sorted(counts.items())))

    def has_distinct_parts(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def has_odd_parts(self) -> bool:
        return all(a % 2 for a, _ in self.pairs)

    def product(self) -> int:
        return math.prod(a**e for a, e in self.pairs)

    def sort_key(self) -> tuple[int, ...]:
        return self.parts

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def to_text(self, explicit: bool = False) -> str:
        """Render as ``"1^3 5 9"``; ``explicit`` also writes exponents equal to 1."""
        tokens = []
        for a, e in self.pairs:
            tokens.append(f"{a}^{e}" if explicit or e != 1 else str(a))
        return " ".join(tokens)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"1^3 5 9"``. Parts must be strictly increasing; nothing is sorted silently."""
        pairs = []
        for token in text.split():
            base, caret, exp = token.partition("^")
            try:
                part = int(base)
                mult = int(exp) if caret else 1
            except ValueError:
                raise ValueError(f"bad partition token {token!r}") from None
            if not base.isdigit() or (caret and not exp.isdigit()):
                raise ValueError(f"bad partition token {token!r}")
            if part < 1 or mult < 1:
                raise ValueError(f"parts and exponents must be >= 1 in {token!r}")
            if pairs and part <= pairs[-1][0]:
                raise ValueError(f"parts must be strictly increasing: {text!r}")
            pairs.append((part, mult))
        if not pairs:
            raise ValueError("empty partition text")
        return cls(tuple(pairs))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class PartitionPredicate:
    """Side conditions on a partition. ``min_part=0`` means no lower bound."""

    min_part: int = 0
    parts_distinct: bool = False
    parts_odd: bool = False
    parts_square: bool = False
    product_square: bool = False

    def admits_parts(self, parts: Sequence[int]) -> bool:
        """Check an ascending part list."""
        if self.min_part and parts and parts[0] < self.min_part:
            return False
        if self.parts_distinct and any(x == y for x, y in zip(parts, parts[1:])):
            return False
        if self.parts_odd and any(x % 2 == 0 for x in parts):
            return False
        if self.parts_square and not all(is_square(x) for x in parts):
            return False
        if self.product_square and not is_square(math.prod(parts)):
            return False
        return True

    def admits(self, partition: Partition) -> bool:
        return self.admits_parts(partition.parts)


UNRESTRICTED = PartitionPredicate()
P_TILDE = PartitionPredicate(min_part=3)
Q = PartitionPredicate(parts_distinct=True, parts_odd=True)
Q_TILDE = PartitionPredicate(min_part=3, parts_distinct=True, parts_odd=True)
EPSILON = PartitionPredicate(parts_distinct=True, parts_odd=True, parts_square=True)
DELTA = PartitionPredicate(parts_distinct=True, parts_odd=True, product_square=True)


def _accel_asc(m: int) -> Iterator[list[int]]:
    # Kelleher's ascending-composition generator; emits lexicographic order.
    a = [0] * (m + 1)
    k = 1
    y = m - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _restricted_asc(m: int, pred: PartitionPredicate) -> Iterator[list[int]]:
    step = 2 if pred.parts_odd else 1
    start = max(pred.min_part, 1)
    if pred.parts_odd and start % 2 == 0:
        start += 1

    def rec(remaining: int, lo: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        for k in range(lo, remaining + 1, step):
            if pred.parts_square and not is_square(k):
                continue
            nxt = k + step if pred.parts_distinct else k
            for rest in rec(remaining - k, nxt):
                yield [k] + rest

    yield from rec(m, start)


def iter_part_lists(m: int, pred: PartitionPredicate = UNRESTRICTED) -> Iterator[list[int]]:
    """Yield ascending part lists of ``m`` admitted by ``pred``, lexicographically.

    Lighter than :func:`enumerate_partitions` when only the parts are needed.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        if pred.admits_parts([]):
            yield []
        return
    if pred == UNRESTRICTED:
        yield from _accel_asc(m)
        return
    for parts in _restricted_asc(m, pred):
        if not pred.product_square or is_square(math.prod(parts)):
            yield parts


def enumerate_partitions(m: int, pred: PartitionPredicate = UNRESTRICTED) -> list[Partition]:
    """All partitions of ``m`` satisfying ``pred`` in lexicographic order of part lists."""
    return [Partition.from_ascending(parts) for parts in iter_part_lists(m, pred)]


class _PartitionTable:
    # Grows under a lock; readers of already-computed entries never see a partial list.

    def __init__(self) -> None:
        self._values = [1]
        self._lock = threading.Lock()

    def __call__(self, m: int) -> int:
        if m < 0:
            return 0
        values = self._values
        if m < len(values):
            return values[m]
        with self._lock:
            values = list(self._values)
            for k in range(len(values), m + 1):
                total = 0
                j = 1
                while True:
                    g1 = j * (3 * j - 1) // 2
                    if g1 > k:
                        break
                    sign = 1 if j % 2 else -1
                    total += sign * values[k - g1]
                    g2 = j * (3 * j + 1) // 2
                    if g2 <= k:
                        total += sign * values[k - g2]
                    j += 1
                values.append(total)
            self._values = values
        return values[m]


_p = _PartitionTable()


def count_p(m: int) -> int:
    """p(m) by Euler's pentagonal recurrence; 0 for negative m."""
    return _p(m)


def count_p_tilde(m: int) -> int:
    """Partitions of m with every part at least 3."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return count_p(m) - count_p(m - 1) - count_p(m - 2) + count_p(m - 3)


def _distinct_odd_count(m: int, lo: int) -> int:
    # row[s] after processing part k = partitions of s into distinct odd parts >= k
    row = [0] * (m + 1)
    row[0] = 1
    k = m if m % 2 else m - 1
    while k >= lo:
        for s in range(m, k - 1, -1):
            row[s] += row[s - k]
        k -= 2
    return row[m]


def count_q(m: int) -> int:
    """Partitions of m into distinct odd parts; q(0) = 1."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _distinct_odd_count(m, 1)


def count_q_tilde(m: int) -> int:
    """Partitions of m into distinct odd parts, all at least 3.

    Convention: 0 for m < 3, so the empty partition is not counted at m = 0.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m < 3:
        return 0
    return _distinct_odd_count(m, 3)


def count_epsilon(n: int) -> int:
    """Partitions of n into distinct odd squares, from the product of (1 + x^((2i+1)^2))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return gf_coefficients(Family.EPSILON, n)[n]


def _odd_prime_factors(k: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 3
    while d * d <= k:
        while k % d == 0:
            factors[d] = factors.get(d, 0) + 1
            k //= d
        d += 2
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    return factors


@functools.lru_cache(maxsize=None)
def count_delta(n: int) -> int:
    """Partitions of n into distinct odd parts whose product is a perfect square.

    Knapsack over (sum, odd-exponent prime set). Parts are fed in decreasing order of
    their largest prime factor, so once a prime's parts are exhausted any state still
    holding that prime at odd exponent is dead and dropped.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    groups: dict[int, list[tuple[int, frozenset[int]]]] = {}
    for k in range(1, n + 1, 2):
        f = _odd_prime_factors(k)
        kernel = frozenset(p for p, e in f.items() if e % 2)
        groups.setdefault(max(f, default=1), []).append((k, kernel))
    states: dict[tuple[int, frozenset[int]], int] = {(0, frozenset()): 1}
    for prime in sorted(groups, reverse=True):
        for k, kernel in groups[prime]:
            new = dict(states)
            for (s, ker), c in states.items():
                t = s + k
                if t > n:
                    continue
                key = (t, ker ^ kernel)
                new[key] = new.get(key, 0) + c
            states = new
        if prime > 1:
            states = {key: c for key, c in states.items() if prime not in key[1]}
    return states.get((n, frozenset()), 0)


def delta_witnesses(n: int) -> list[Partition]:
    """The partitions counted by :func:`count_delta`, by enumeration."""
    return enumerate_partitions(n, DELTA)


class Family(enum.Enum):
    P = "p"
    P_TILDE = "p_tilde"
    Q = "q"
    Q_TILDE = "q_tilde"
    EPSILON = "epsilon"


def gf_coefficients(family: Family, max_m: int) -> list[int]:
    """Coefficients of x^0..x^max_m of the family's generating product.

    ``P``: prod_{i>=1} 1/(1-x^i); ``P_TILDE``: prod_{i>=3} 1/(1-x^i);
    ``Q``: prod_{i>=0} (1+x^(2i+1)); ``Q_TILDE``: prod_{i>=1} (1+x^(2i+1));
    ``EPSILON``: prod_{i>=0} (1+x^((2i+1)^2)).
    These are raw coefficients: the x^0 term is always 1.
    """
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    c = [0] * (max_m + 1)
    c[0] = 1
    if family in (Family.P, Family.P_TILDE):
        lo = 1 if family is Family.P else 3
        for i in range(lo, max_m + 1):
            for k in range(i, max_m + 1):
                c[k] += c[k - i]
        return c
    if family in (Family.Q, Family.Q_TILDE):
        factors: Iterable[int] = range(1 if family is Family.Q else 3, max_m + 1, 2)
    elif family is Family.EPSILON:
        factors = [j * j for j in range(1, math.isqrt(max_m) + 1, 2)]
    else:
        raise ValueError(f"unknown family {family!r}")
    for i in factors:
        for k in range(max_m, i - 1, -1):
            c[k] += c[k - i]
    return c


def conjugate_parts(parts: Sequence[int]) -> list[int]:
    """Conjugate of a partition given as a part list (any order); result is descending."""
    rows = sorted(parts, reverse=True)
    if not rows:
        return []
    return [sum(1 for r in rows if r > j) for j in range(rows[0])]


def self_conjugate_partitions(n: int) -> Iterator[list[int]]:
    """Self-conjugate partitions of n as descending row lists.

    Built from the Durfee square: a d x d square, a partition alpha with at most d
    parts glued to its right and the transpose of alpha glued below.
    """
    d = 0
    while (d + 1) * (d + 1) <= n:
        d += 1
        rest = n - d * d
        if rest % 2:
            continue
        half = rest // 2
        for asc in iter_part_lists(half):
            if len(asc) > d:
                continue
            alpha = sorted(asc, reverse=True) + [0] * (d - len(asc))
            below = conjugate_parts(asc) if asc else []
            yield [d + a for a in alpha] + below
    if n == 0:
        yield []
