"""Cycle-type combinatorics of S_n and A_n at the partition level.

Permutations act on the points 1..n; ``p * q`` applies ``q`` first.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from zclass.partitions import Partition, is_square

__all__ = [
    "Group",
    "Permutation",
    "CentralizerShape",
    "CenterDescription",
    "canonical_representative",
    "cycle_type",
    "is_even_partition",
    "splits_in_alt",
    "centralizer_shape",
    "center_description",
    "center_exception_in_alt",
    "all_parts_square",
]


class Group(str, enum.Enum):
    SYM = "sn"
    ALT = "an"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"bad cycle {tuple(cyc)} on {n} points")
                seen.add(a)
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, g: Permutation) -> Permutation:
        """``g * self * g^-1``."""
        return g * self * g.inverse()

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles of length > 1, each starting at its least point, sorted by that point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def canonical_representative(lam: Partition) -> Permutation:
    """The block representative: the e_i cycles of length lambda_i sit on consecutive points."""
    if not lam.pairs:
        raise ValueError("partition must be nonempty")
    cycles = []
    start = 1
    for part, mult in lam.pairs:
        for _ in range(mult):
            cycles.append(list(range(start, start + part)))
            start += part
    return Permutation.from_cycles(lam.weight, [c for c in cycles if len(c) > 1])


def cycle_type(g: Permutation) -> Partition:
    lengths = [len(c) for c in g.cycles()]
    fixed = g.degree - sum(lengths)
    return Partition.from_parts(lengths + [1] * fixed)


def is_even_partition(lam: Partition) -> bool:
    return (lam.weight - lam.num_parts) % 2 == 0


def _require_even(lam: Partition) -> None:
    if not is_even_partition(lam):
        raise ValueError(f"{lam} is not an even partition (n - number of parts is odd)")


def splits_in_alt(lam: Partition) -> bool:
    """Whether the S_n class of an even partition breaks into two A_n classes."""
    _require_even(lam)
    return lam.has_distinct_parts() and lam.has_odd_parts()


def all_parts_square(lam: Partition) -> bool:
    return all(is_square(a) for a in lam.distinct_parts)


@dataclass(frozen=True)
class CentralizerShape:
    """The centralizer as a product of wreath factors C_a wr S_b, with its exact order."""

    factors: tuple[tuple[int, int], ...]
    order: int
    group: Group

    def __str__(self) -> str:
        body = " x ".join(f"C{a} wr S{b}" for a, b in self.factors)
        return f"({body}) & A_n" if self.group is Group.ALT else body


def centralizer_shape(lam: Partition, group: Group = Group.SYM) -> CentralizerShape:
    group = Group(group)
    order = math.prod(a**e * math.factorial(e) for a, e in lam.pairs)
    if group is Group.ALT:
        _require_even(lam)
        if not splits_in_alt(lam):
            order //= 2
    return CentralizerShape(lam.pairs, order, group)


@dataclass(frozen=True)
class CenterDescription:
    """Generators of the center of the S_n-centralizer of the canonical representative."""

    generators: tuple[Permutation, ...]
    order: int
    has_transposition_factor: bool


def center_description(lam: Partition) -> CenterDescription:
    rep_blocks = []
    start = 1
    for part, mult in lam.pairs:
        rep_blocks.append((part, mult, start))
        start += part * mult
    n = lam.weight
    gens = []
    order = 1
    transposition = False
    for part, mult, first in rep_blocks:
        if part == 1:
            if mult == 2:
                gens.append(Permutation.from_cycles(n, [(first, first + 1)]))
                order *= 2
                transposition = True
            continue
        cycles = [range(first + j * part, first + (j + 1) * part) for j in range(mult)]
        gens.append(Permutation.from_cycles(n, [list(c) for c in cycles]))
        order *= part
    return CenterDescription(tuple(gens), order, transposition)


def center_exception_in_alt(lam: Partition) -> bool:
    """Whether the center of the A_n-centralizer is strictly larger than Z_lambda & A_n.

    The exceptional shapes are 1^3 nu, 2^2 nu, 1^1 2^2 nu with nu distinct odd parts >= 3
    (possibly empty), and [1^1] nu where nu has odd parts >= 3, exactly one of them doubled.
    """
    _require_even(lam)
    ones = lam.multiplicity(1)
    twos = lam.multiplicity(2)
    rest = [(a, e) for a, e in lam.pairs if a >= 3]
    if any(a % 2 == 0 for a, _ in rest):
        return False
    doubled = sum(1 for _, e in rest if e == 2)
    if any(e > 2 for _, e in rest):
        return False
    if doubled == 0:
        return (ones, twos) in {(3, 0), (0, 2), (1, 2)}
    return doubled == 1 and twos == 0 and ones <= 1
