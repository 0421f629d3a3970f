"""Decision procedures and counting formulas for z-classes and rationality in S_n and A_n."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional

from zclass.partitions import (
    P_TILDE,
    Q,
    Q_TILDE,
    Partition,
    conjugate_parts,
    count_delta,
    count_epsilon,
    count_p,
    count_p_tilde,
    count_q,
    count_q_tilde,
    enumerate_partitions,
    is_square,
    iter_part_lists,
    self_conjugate_partitions,
)
from zclass.symgroup import Group, all_parts_square, is_even_partition, splits_in_alt

__all__ = [
    "Tag",
    "ClassLabel",
    "ZClassification",
    "RationalityReport",
    "UnionFind",
    "cl_alt",
    "zpartner_sym",
    "zpartner_alt",
    "count_zclasses_sym",
    "count_zclasses_sym_closed",
    "classify_zclasses_sym",
    "alt_class_labels",
    "classify_zclasses_alt",
    "count_zclasses_alt",
    "is_rational_conjugacy_class",
    "rationality_report",
    "character_pair_is_rational",
    "count_rational_characters",
]


class Tag(str, enum.Enum):
    WHOLE = "whole"
    SPLIT_POS = "split+"
    SPLIT_NEG = "split-"


@dataclass(frozen=True)
class ClassLabel:
    """One conjugacy class: a cycle type, and which half when the S_n class splits.

    ``SPLIT_POS`` is the A_n class of the canonical representative; ``SPLIT_NEG`` is the
    class of its conjugate by (1,2). This is a fixed convention, not a sign choice with
    any character-theoretic meaning.
    """

    partition: Partition
    tag: Tag = Tag.WHOLE

    def __post_init__(self) -> None:
        if self.tag is not Tag.WHOLE and not (
            is_even_partition(self.partition) and splits_in_alt(self.partition)
        ):
            raise ValueError(f"{self.partition} does not split; tag must be whole")

    def __str__(self) -> str:
        suffix = {Tag.WHOLE: "", Tag.SPLIT_POS: " (+)", Tag.SPLIT_NEG: " (-)"}[self.tag]
        return f"{self.partition}{suffix}"

    def sort_key(self) -> tuple:
        return (self.partition.parts, list(Tag).index(self.tag))


class UnionFind:
    """Disjoint sets with path halving and union by size."""

    def __init__(self, items: Iterable[Hashable] = ()) -> None:
        self.parent: dict = {}
        self.size: dict = {}
        for x in items:
            self.add(x)

    def add(self, x: Hashable) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x: Hashable) -> Hashable:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: Hashable, b: Hashable) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class ZClassification:
    """A partition of the conjugacy classes of S_n or A_n into z-classes.

    z-class ids are dense and numbered in order of first appearance in ``classes``.
    """

    group: Group
    n: int
    classes: tuple[ClassLabel, ...]
    zclass_of: dict[ClassLabel, int] = field(hash=False)
    source: str = "formula"

    @classmethod
    def from_union_find(
        cls, group: Group, n: int, classes: Iterable[ClassLabel], uf: UnionFind, source: str
    ) -> ZClassification:
        classes = tuple(classes)
        ids: dict[Hashable, int] = {}
        zclass_of = {}
        for label in classes:
            root = uf.find(label)
            zclass_of[label] = ids.setdefault(root, len(ids))
        return cls(Group(group), n, classes, zclass_of, source)

    @property
    def z_count(self) -> int:
        return len(set(self.zclass_of.values()))

    def groups(self) -> list[list[ClassLabel]]:
        """The z-classes as label lists, in id order."""
        out: list[list[ClassLabel]] = [[] for _ in range(self.z_count)]
        for label in self.classes:
            out[self.zclass_of[label]].append(label)
        return out

    def merged_groups(self) -> list[list[ClassLabel]]:
        return [g for g in self.groups() if len(g) > 1]

    def as_blocks(self) -> frozenset[frozenset[ClassLabel]]:
        """Order-free form, for comparing two classifications."""
        return frozenset(frozenset(g) for g in self.groups())


def _require(n: int, low: int) -> None:
    if n < low:
        raise ValueError(f"n must be >= {low}, got {n}")


def cl_alt(n: int) -> int:
    """Number of conjugacy classes of A_n, (p(n) + 3 q(n)) / 2."""
    total = count_p(n) + 3 * count_q(n)
    assert total % 2 == 0, f"p({n}) + 3q({n}) is odd"
    return total // 2


# -- symmetric groups --------------------------------------------------------


def zpartner_sym(lam: Partition) -> Optional[Partition]:
    """The other cycle type sharing lam's z-class in S_n, if any: 1^2 nu <-> 2^1 nu."""
    if lam.weight < 3:
        raise ValueError("weight must be >= 3")
    ones, twos = lam.multiplicity(1), lam.multiplicity(2)
    if (ones, twos) == (2, 0):
        nu = lam.without(1, 2)
        return nu.with_part(2) if P_TILDE.admits(nu) else None
    if (ones, twos) == (0, 1):
        nu = lam.without(2)
        return nu.with_part(1, 2) if P_TILDE.admits(nu) else None
    return None


def count_zclasses_sym(n: int) -> int:
    """p(n) - p~(n-2)."""
    _require(n, 3)
    return count_p(n) - count_p_tilde(n - 2)


def count_zclasses_sym_closed(n: int) -> int:
    """The same count written purely in p: p(n) - p(n-2) + p(n-3) + p(n-4) - p(n-5)."""
    _require(n, 3)
    p = count_p
    return p(n) - p(n - 2) + p(n - 3) + p(n - 4) - p(n - 5)


def classify_zclasses_sym(n: int) -> ZClassification:
    _require(n, 3)
    labels = [ClassLabel(lam) for lam in enumerate_partitions(n)]
    uf = UnionFind(labels)
    for label in labels:
        partner = zpartner_sym(label.partition)
        if partner is not None:
            uf.union(label, ClassLabel(partner))
    return ZClassification.from_union_find(Group.SYM, n, labels, uf, "formula")


# -- alternating groups ------------------------------------------------------


def _labels_for(lam: Partition) -> list[ClassLabel]:
    if splits_in_alt(lam):
        return [ClassLabel(lam, Tag.SPLIT_POS), ClassLabel(lam, Tag.SPLIT_NEG)]
    return [ClassLabel(lam)]


def alt_class_labels(n: int) -> list[ClassLabel]:
    """Every conjugacy class of A_n, in partition order with (+) before (-)."""
    _require(n, 4)
    labels = []
    for parts in iter_part_lists(n):
        if (n - len(parts)) % 2 == 0:
            labels.extend(_labels_for(Partition.from_ascending(parts)))
    return labels


def zpartner_alt(lam: Partition) -> Optional[Partition]:
    """The other cycle type sharing lam's z-class in A_n: 1^3 nu <-> 3^1 nu.

    nu has distinct odd parts >= 3; a 3 already in nu has its multiplicity raised.
    """
    _require(lam.weight, 4)
    if lam.multiplicity(1) == 3:
        nu = lam.without(1, 3)
        return nu.with_part(3) if Q_TILDE.admits(nu) and nu.pairs else None
    if lam.multiplicity(1) == 0 and lam.multiplicity(3) in (1, 2):
        nu = lam.without(3)
        return nu.with_part(1, 3) if Q_TILDE.admits(nu) and nu.pairs else None
    return None


def classify_zclasses_alt(n: int) -> ZClassification:
    _require(n, 4)
    labels = alt_class_labels(n)
    uf = UnionFind(labels)
    for label in labels:
        lam = label.partition
        if label.tag is Tag.SPLIT_POS and not all_parts_square(lam):
            uf.union(label, ClassLabel(lam, Tag.SPLIT_NEG))
    for nu in enumerate_partitions(n - 3, Q_TILDE):
        if not nu.pairs:
            continue
        fixed3 = ClassLabel(nu.with_part(1, 3))
        for other in _labels_for(nu.with_part(3)):
            uf.union(fixed3, other)
    return ZClassification.from_union_find(Group.ALT, n, labels, uf, "formula")


def count_zclasses_alt(n: int) -> int:
    """cl(A_n) - (q(n) + q~(n-3)) + eps(n)."""
    _require(n, 4)
    return cl_alt(n) - (count_q(n) + count_q_tilde(n - 3)) + count_epsilon(n)


# -- rationality -------------------------------------------------------------


@dataclass(frozen=True)
class RationalityReport:
    n: int
    per_class: dict[ClassLabel, bool] = field(hash=False)
    rational_conjugacy_class_count: int
    rational_class_count: int
    rational_character_count: int


def is_rational_conjugacy_class(label: ClassLabel) -> bool:
    """Non-split classes are always rational; split ones iff the product of parts is a square."""
    if label.tag is Tag.WHOLE:
        return True
    return is_square(label.partition.product())


def character_pair_is_rational(lam: Partition) -> bool:
    """Whether chi^+/- attached to the distinct-odd-part partition lam are rational valued.

    That happens iff e_lam = 1 and |Z_lam| = prod(parts) is a square; a square product
    already forces e_lam = 1, which is asserted here.
    """
    if not (lam.has_distinct_parts() and lam.has_odd_parts()):
        raise ValueError(f"{lam} must have distinct odd parts")
    e_sign = (-1) ** sum((a - 1) // 2 for a in lam.parts)
    square = is_square(lam.product())
    if square:
        assert e_sign == 1, f"square |Z| with e = -1 for {lam}"
    return square and e_sign == 1


def _fold(rows: list[int]) -> Partition:
    # diagonal hook lengths of a self-conjugate partition
    return Partition.from_parts(2 * (r - i) + 1 for i, r in enumerate(rows, start=1) if r >= i)


def count_rational_characters(n: int) -> int:
    """Rational-valued irreducible characters of A_n, counted on the character side.

    Each pair {mu, mu'} of non-self-conjugate partitions restricts to one rational
    character; each self-conjugate mu gives chi^+ and chi^-, both rational or neither.
    """
    _require(n, 4)
    self_conj = list(self_conjugate_partitions(n))
    for rows in self_conj:
        assert conjugate_parts(rows) == rows
    pairs = (count_p(n) - len(self_conj)) // 2
    return pairs + 2 * sum(character_pair_is_rational(_fold(rows)) for rows in self_conj)


def rationality_report(n: int) -> RationalityReport:
    _require(n, 4)
    per_class = {label: is_rational_conjugacy_class(label) for label in alt_class_labels(n)}
    rcc = cl_alt(n) - 2 * count_q(n) + 2 * count_delta(n)
    rc = cl_alt(n) - count_q(n) + count_delta(n)
    return RationalityReport(n, per_class, rcc, rc, count_rational_characters(n))
