"""Brute-force ground truth over explicit element tables of S_n and A_n (n <= 9).

Nothing here uses the classification theorems. Elements are rows of a numpy array of
0-based images; ``codes`` packs each row into one int64 (base n, most significant digit
first), so lexicographic image order is numeric code order and membership is a
binary search.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Callable, Iterable, Sequence, TypeVar, Union

import numpy as np

from zclass.classifier import ClassLabel, Tag, UnionFind, ZClassification
from zclass.partitions import Partition
from zclass.symgroup import Group, Permutation, canonical_representative

__all__ = [
    "MAX_DEGREE",
    "WORKERS_ENV",
    "OracleCapacityError",
    "GroupTable",
    "ElementSet",
    "build_group",
    "closure",
    "generating_set",
    "conjugacy_classes",
    "class_labels",
    "centralizer",
    "center_of",
    "normalizer_of_cyclic",
    "normalizer_of_subgroup",
    "subgroups_conjugate",
    "zclasses",
    "is_rational_element",
    "rational_element_mask",
    "rational_class_orbits",
    "point_orbit_sizes",
]

MAX_DEGREE = 9
WORKERS_ENV = "ZCLASS_WORKERS"

T = TypeVar("T")
R = TypeVar("R")
PermLike = Union[Permutation, np.ndarray, Sequence[int]]


class OracleCapacityError(RuntimeError):
    """Requested group is beyond the brute-force degree cap."""


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _pmap(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    # executor.map keeps input order, so results do not depend on the worker count
    items = list(items)
    workers = _workers()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _weights(n: int) -> np.ndarray:
    return n ** np.arange(n - 1, -1, -1, dtype=np.int64)


def _encode(arr: np.ndarray) -> np.ndarray:
    arr = np.atleast_2d(arr)
    return arr.astype(np.int64) @ _weights(arr.shape[1])


def _as_array(g: PermLike, n: int | None = None) -> np.ndarray:
    if isinstance(g, Permutation):
        arr = np.asarray(g.images, dtype=np.int64) - 1
    else:
        arr = np.asarray(g, dtype=np.int64)
    if n is not None and arr.shape != (n,):
        raise ValueError(f"expected a permutation of degree {n}")
    return arr


def _to_perm(row: np.ndarray) -> Permutation:
    return Permutation(tuple(int(x) + 1 for x in row))


def _invert_rows(arr: np.ndarray) -> np.ndarray:
    return np.argsort(arr, axis=1).astype(arr.dtype)


def _conjugates(elements: np.ndarray, inverses: np.ndarray, x: np.ndarray) -> np.ndarray:
    """h x h^-1 for every row h."""
    return np.take_along_axis(elements, x[inverses], axis=1)


class ElementSet:
    """A set of permutations of one degree, kept sorted by code."""

    def __init__(self, array: np.ndarray, *, _sorted: bool = False) -> None:
        array = np.atleast_2d(np.asarray(array, dtype=np.int8))
        codes = _encode(array)
        if not _sorted:
            codes, first = np.unique(codes, return_index=True)
            array = array[first]
        self.array = array
        self.codes = codes

    @property
    def degree(self) -> int:
        return self.array.shape[1]

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, g: PermLike) -> bool:
        return bool(self.contains_codes(_encode(_as_array(g, self.degree)))[0])

    def contains_codes(self, codes: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.codes, codes)
        idx = np.minimum(idx, len(self.codes) - 1)
        return self.codes[idx] == codes

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return np.array_equal(self.codes, other.codes)

    def __hash__(self) -> int:
        return hash(self.codes.tobytes())

    def issubset(self, other: ElementSet) -> bool:
        return bool(other.contains_codes(self.codes).all())

    def intersection(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.array[other.contains_codes(self.codes)], _sorted=True)

    @cached_property
    def inverses(self) -> np.ndarray:
        return _invert_rows(self.array)

    def permutations(self) -> list[Permutation]:
        return [_to_perm(row) for row in self.array]

    def __repr__(self) -> str:
        return f"ElementSet(degree={self.degree}, size={len(self)})"


class GroupTable(ElementSet):
    """Every element of S_n or A_n in lexicographic image order."""

    def __init__(self, degree: int, kind: Group, array: np.ndarray) -> None:
        super().__init__(array, _sorted=True)
        self.kind = Group(kind)
        self._degree = degree

    @property
    def degree(self) -> int:
        return self._degree

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        codes = _encode(rows)
        idx = np.searchsorted(self.codes, codes)
        if np.any(idx >= len(self.codes)) or np.any(self.codes[np.minimum(idx, len(self.codes) - 1)] != codes):
            raise ValueError("element not in group")
        return idx

    @cached_property
    def point_cycle_lengths(self) -> np.ndarray:
        """For each element and point, the length of the cycle through that point."""
        n = self.degree
        lengths = np.zeros(self.array.shape, dtype=np.int64)
        start = np.broadcast_to(np.arange(n, dtype=np.int8), self.array.shape)
        cur = start.copy()
        for k in range(1, n + 1):
            cur = np.take_along_axis(self.array, cur.astype(np.int64), axis=1)
            hit = (cur == start) & (lengths == 0)
            lengths[hit] = k
        return lengths

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.lcm.reduce(self.point_cycle_lengths, axis=1)

    @cached_property
    def cycle_type_keys(self) -> np.ndarray:
        """Row k gives (number of cycles of length 1, ..., of length n) for element k."""
        lengths = self.point_cycle_lengths
        n = self.degree
        keys = np.stack([(lengths == L).sum(axis=1) // L for L in range(1, n + 1)], axis=1)
        return keys

    @cached_property
    def _classes(self) -> tuple[list[ElementSet], np.ndarray]:
        class_index = np.full(len(self), -1, dtype=np.int64)
        classes = []
        inverses = self.inverses
        while True:
            todo = np.flatnonzero(class_index < 0)
            if not len(todo):
                break
            x = self.array[todo[0]].astype(np.int64)
            orbit = np.unique(self.index_of(_conjugates(self.array, inverses, x)))
            class_index[orbit] = len(classes)
            classes.append(ElementSet(self.array[orbit], _sorted=True))
        return classes, class_index

    @property
    def class_index(self) -> np.ndarray:
        """Conjugacy class number of every element, aligned with ``array``."""
        return self._classes[1]

    def __repr__(self) -> str:
        return f"GroupTable({self.kind.name}, degree={self.degree}, size={len(self)})"


def _parity(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[1]
    inv = np.zeros(len(arr), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            inv += arr[:, i] > arr[:, j]
    return inv % 2


_GROUP_CACHE: dict[tuple[int, Group], GroupTable] = {}


def build_group(n: int, kind: Group = Group.SYM) -> GroupTable:
    """The full element table of S_n or A_n; tables are cached per (n, kind)."""
    kind = Group(kind)
    if n > MAX_DEGREE:
        raise OracleCapacityError(f"degree {n} exceeds the brute-force cap {MAX_DEGREE}")
    if n < 1:
        raise ValueError("degree must be >= 1")
    key = (n, kind)
    if key not in _GROUP_CACHE:
        if kind is Group.ALT and (n, Group.SYM) in _GROUP_CACHE:
            full = _GROUP_CACHE[(n, Group.SYM)].array
        else:
            full = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
        if kind is Group.ALT:
            full = full[_parity(full) == 0]
        _GROUP_CACHE[key] = GroupTable(n, kind, full)
    return _GROUP_CACHE[key]


def closure(generators: Sequence[PermLike], n: int, limit: ElementSet | None = None) -> ElementSet:
    """The subgroup generated by ``generators``.

    With ``limit`` given, raises ValueError as soon as the closure leaves it.
    """
    gens = [_as_array(g, n) for g in generators]
    known = np.array([_encode(np.arange(n))[0]], dtype=np.int64)
    rows = [np.arange(n, dtype=np.int8)[None, :]]
    frontier = rows[0].astype(np.int64)
    while len(frontier) and gens:
        products = np.concatenate([frontier[:, g] for g in gens])
        codes, first = np.unique(_encode(products), return_index=True)
        fresh = ~np.isin(codes, known, assume_unique=True)
        codes, products = codes[fresh], products[first[fresh]]
        if limit is not None and len(codes) and not limit.contains_codes(codes).all():
            raise ValueError("generated set escapes the given set: not closed")
        known = np.union1d(known, codes)
        rows.append(products.astype(np.int8))
        frontier = products
    return ElementSet(np.concatenate(rows))


def generating_set(H: ElementSet) -> list[np.ndarray]:
    """A greedy generating set of H; raises ValueError if H is not a subgroup."""
    n = H.degree
    identity = np.arange(n)
    if identity not in H:
        raise ValueError("set does not contain the identity: not a subgroup")
    gens: list[np.ndarray] = []
    K = ElementSet(identity[None, :])
    while len(K) < len(H):
        missing = np.flatnonzero(~K.contains_codes(H.codes))
        gens.append(H.array[missing[0]].astype(np.int64))
        K = closure(gens, n, limit=H)
    return gens


def centralizer(G: GroupTable, g: PermLike) -> ElementSet:
    x = _as_array(g, G.degree)
    E = G.array
    mask = np.all(E[:, x] == x[E], axis=1)
    return ElementSet(E[mask], _sorted=True)


def center_of(H: ElementSet) -> ElementSet:
    """Elements of H commuting with all of H; H must be a subgroup."""
    E = H.array
    mask = np.ones(len(H), dtype=bool)
    for s in generating_set(H):
        mask &= np.all(E[:, s] == s[E], axis=1)
    return ElementSet(E[mask], _sorted=True)


def _cyclic(x: np.ndarray) -> ElementSet:
    n = len(x)
    powers = [np.arange(n)]
    cur = x.copy()
    while not np.array_equal(cur, powers[0]):
        powers.append(cur)
        cur = x[cur]
    return ElementSet(np.array(powers))


def normalizer_of_cyclic(G: GroupTable, g: PermLike) -> ElementSet:
    """{h in G : h <g> h^-1 = <g>}."""
    x = _as_array(g, G.degree)
    cyc = _cyclic(x)
    mask = cyc.contains_codes(_encode(_conjugates(G.array, G.inverses, x)))
    return ElementSet(G.array[mask], _sorted=True)


def _conjugates_into(
    elements: np.ndarray, inverses: np.ndarray, gens: Sequence[np.ndarray], K: ElementSet
) -> np.ndarray:
    mask = np.ones(len(elements), dtype=bool)
    for s in gens:
        mask &= K.contains_codes(_encode(_conjugates(elements, inverses, s)))
    return mask


def normalizer_of_subgroup(G: GroupTable, H: ElementSet) -> ElementSet:
    mask = _conjugates_into(G.array, G.inverses, generating_set(H), H)
    return ElementSet(G.array[mask], _sorted=True)


def subgroups_conjugate(G: GroupTable, H: ElementSet, K: ElementSet, method: str = "cosets") -> bool:
    """Whether g H g^-1 = K for some g in G.

    ``method="scan"`` tries every g in G. ``method="cosets"`` tries one g per left coset
    of N_G(H), since g and g*m (m in N_G(H)) give the same conjugate.
    """
    if len(H) != len(K):
        return False
    if H == K:
        return True
    if point_orbit_sizes(H) != point_orbit_sizes(K):
        return False
    gens = generating_set(H)
    if method == "scan":
        return bool(_conjugates_into(G.array, G.inverses, gens, K).any())
    if method != "cosets":
        raise ValueError(f"unknown method {method!r}")
    N = normalizer_of_subgroup(G, H)
    covered = np.zeros(len(G), dtype=bool)
    reps = []
    N_rows = N.array.astype(np.int64)
    while True:
        todo = np.flatnonzero(~covered)
        if not len(todo):
            break
        i = todo[0]
        reps.append(i)
        covered[G.index_of(G.array[i][N_rows])] = True
    reps_arr = G.array[reps]
    return bool(_conjugates_into(reps_arr, G.inverses[reps], gens, K).any())


def point_orbit_sizes(H: ElementSet) -> tuple[int, ...]:
    """Sorted sizes of the orbits of H on the points."""
    sizes = []
    seen: set[int] = set()
    for p in range(H.degree):
        if p in seen:
            continue
        orbit = set(np.unique(H.array[:, p]).tolist())
        seen |= orbit
        sizes.append(len(orbit))
    return tuple(sorted(sizes))


def _classes_by_orbits(G: GroupTable) -> list[ElementSet]:
    return G._classes[0]


def _classes_by_cycle_type(G: GroupTable) -> list[ElementSet]:
    # Group by cycle type; an A_n type splits exactly when no odd permutation
    # centralizes a representative, and then its halves are found by one orbit.
    keys, inverse = np.unique(G.cycle_type_keys, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    classes = []
    for t in range(len(keys)):
        members = np.flatnonzero(inverse == t)
        rep = G.array[members[0]].astype(np.int64)
        if G.kind is Group.ALT:
            S = build_group(G.degree, Group.SYM)
            if len(centralizer(S, rep)) == len(centralizer(G, rep)):
                orbit = np.unique(G.index_of(_conjugates(G.array, G.inverses, rep)))
                rest = np.setdiff1d(members, orbit)
                classes.append(ElementSet(G.array[orbit], _sorted=True))
                classes.append(ElementSet(G.array[rest], _sorted=True))
                continue
        classes.append(ElementSet(G.array[members], _sorted=True))
    classes.sort(key=lambda c: int(c.codes[0]))
    return classes


def conjugacy_classes(G: GroupTable, method: str = "orbits") -> list[ElementSet]:
    """Conjugacy classes ordered by their least element.

    ``"orbits"`` expands each class as a conjugation orbit; ``"cycle_type"`` groups by
    cycle type plus an explicit split test. The two are independent.
    """
    if method == "orbits":
        return _classes_by_orbits(G)
    if method == "cycle_type":
        return _classes_by_cycle_type(G)
    raise ValueError(f"unknown method {method!r}")


def _cycle_type_of_row(row: np.ndarray) -> Partition:
    n = len(row)
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = int(row[x])
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def class_labels(G: GroupTable) -> list[ClassLabel]:
    """Labels for ``conjugacy_classes(G)``, read off the elements themselves.

    A cycle type met by two classes is split; the half holding the canonical
    representative is tagged (+), the other (-).
    """
    classes = conjugacy_classes(G)
    types = [_cycle_type_of_row(c.array[0]) for c in classes]
    counts: dict[Partition, int] = {}
    for t in types:
        counts[t] = counts.get(t, 0) + 1
    labels = []
    for cls, t in zip(classes, types):
        if counts[t] == 1:
            labels.append(ClassLabel(t))
        elif canonical_representative(t) in cls:
            labels.append(ClassLabel(t, Tag.SPLIT_POS))
        else:
            labels.append(ClassLabel(t, Tag.SPLIT_NEG))
    return labels


def zclasses(G: GroupTable, method: str = "cosets") -> ZClassification:
    """z-classes straight from the definition: classes whose centralizers are conjugate."""
    classes = conjugacy_classes(G)
    labels = class_labels(G)
    cents = _pmap(lambda c: centralizer(G, c.array[0]), classes)
    signatures = [(len(c), point_orbit_sizes(c)) for c in cents]
    uf = UnionFind(range(len(classes)))
    for i, j in itertools.combinations(range(len(classes)), 2):
        if signatures[i] != signatures[j] or uf.find(i) == uf.find(j):
            continue
        if subgroups_conjugate(G, cents[i], cents[j], method=method):
            uf.union(i, j)
    by_label = UnionFind(labels)
    for i in range(len(classes)):
        by_label.union(labels[i], labels[uf.find(i)])
    return ZClassification.from_union_find(G.kind, G.degree, _label_order(labels), by_label, "oracle")


def _label_order(labels: list[ClassLabel]) -> list[ClassLabel]:
    return sorted(labels, key=ClassLabel.sort_key)


def is_rational_element(G: GroupTable, g: PermLike) -> bool:
    """g is G-conjugate to g^m for every m coprime to its order."""
    x = _as_array(g, G.degree)
    i = G.index_of(x[None, :])[0]
    cls = conjugacy_classes(G)[G.class_index[i]]
    order = int(G.element_orders[i])
    cur = x.copy()
    for m in range(2, order):
        cur = x[cur]
        if math.gcd(m, order) == 1 and cur not in cls:
            return False
    return True


def rational_element_mask(G: GroupTable) -> np.ndarray:
    """The power-map rationality test applied to every element at once."""
    E = G.array.astype(np.int64)
    orders = G.element_orders
    own = G.class_index
    ok = np.ones(len(G), dtype=bool)
    power = E.copy()
    for m in range(2, int(orders.max())):
        power = np.take_along_axis(E, power, axis=1)
        relevant = (m < orders) & (np.gcd(m, orders) == 1)
        if not relevant.any():
            continue
        idx = G.index_of(power[relevant])
        ok[relevant] &= G.class_index[idx] == own[relevant]
    return ok


def rational_class_orbits(G: GroupTable) -> list[list[ClassLabel]]:
    """Orbits of conjugacy classes under the power maps g -> g^m, gcd(m, o(g)) = 1."""
    classes = conjugacy_classes(G)
    labels = class_labels(G)
    uf = UnionFind(range(len(classes)))
    for k, cls in enumerate(classes):
        x = cls.array[0].astype(np.int64)
        order = int(G.element_orders[G.index_of(x[None, :])[0]])
        cur = x.copy()
        for m in range(2, order):
            cur = x[cur]
            if math.gcd(m, order) == 1:
                uf.union(k, int(G.class_index[G.index_of(cur[None, :])[0]]))
    groups: dict[int, list[ClassLabel]] = {}
    for k in sorted(range(len(classes)), key=lambda k: labels[k].sort_key()):
        groups.setdefault(uf.find(k), []).append(labels[k])
    return list(groups.values())
