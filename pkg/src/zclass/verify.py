"""Oracle-versus-classifier checks, one function per check name, driven by ``zclass verify``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable

from zclass import classifier as cf
from zclass import oracle as orc
from zclass.partitions import Partition, count_delta, count_p, count_q, enumerate_partitions, is_square
from zclass.symgroup import (
    Group,
    canonical_representative,
    center_description,
    center_exception_in_alt,
    centralizer_shape,
    is_even_partition,
    splits_in_alt,
)

log = logging.getLogger(__name__)

CHECKS = ("counts", "split", "zclass", "rational", "center", "brison")

@dataclass(frozen=True)
class CheckResult:
    check: str
    n: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.check} n={self.n}" + (f": {self.detail}" if self.detail else "")

class _Mismatch(Exception):
    pass

def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise _Mismatch(what)

def _even_partitions(n: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(n) if is_even_partition(lam)]

def check_counts(n: int) -> str:
    S = orc.build_group(n, Group.SYM)
    classes = orc.conjugacy_classes(S)
    _expect(len(classes) == count_p(n), f"S_{n} has {len(classes)} classes, p(n) = {count_p(n)}")
    _expect(classes == orc.conjugacy_classes(S, method="cycle_type"), f"S_{n} class methods disagree")
    zs = orc.zclasses(S).z_count
    _expect(
        zs == cf.count_zclasses_sym(n) == cf.count_zclasses_sym_closed(n),
        f"S_{n}: oracle {zs} z-classes, formula {cf.count_zclasses_sym(n)}",
    )
    detail = f"cl(S_n)={len(classes)} z(S_n)={zs}"
    if n < 4:
        return detail
    A = orc.build_group(n, Group.ALT)
    aclasses = orc.conjugacy_classes(A)
    _expect(len(aclasses) == cf.cl_alt(n), f"A_{n} has {len(aclasses)} classes, formula {cf.cl_alt(n)}")
    _expect(aclasses == orc.conjugacy_classes(A, method="cycle_type"), f"A_{n} class methods disagree")
    labels = orc.class_labels(A)
    n_split = sum(1 for label in labels if label.tag is cf.Tag.SPLIT_POS)
    _expect(n_split == count_q(n), f"A_{n}: {n_split} split types, q(n) = {count_q(n)}")
    za = orc.zclasses(A).z_count
    _expect(
        za == cf.count_zclasses_alt(n) == cf.classify_zclasses_alt(n).z_count,
        f"A_{n}: oracle {za} z-classes, formula {cf.count_zclasses_alt(n)}",
    )
    return detail + f" cl(A_n)={len(aclasses)} z(A_n)={za}"

def check_split(n: int) -> str:
    S = orc.build_group(n, Group.SYM)
    A = orc.build_group(n, Group.ALT)
    labels = orc.class_labels(A)
    for lam in _even_partitions(n):
        sigma = canonical_representative(lam)
        cs, ca = orc.centralizer(S, sigma), orc.centralizer(A, sigma)
        _expect(len(cs) == centralizer_shape(lam, Group.SYM).order, f"|Z_S({lam})| = {len(cs)}")
        _expect(len(ca) == centralizer_shape(lam, Group.ALT).order, f"|Z_A({lam})| = {len(ca)}")
        two_classes = sum(1 for label in labels if label.partition == lam) == 2
        _expect(splits_in_alt(lam) == (cs == ca) == two_classes, f"split criterion fails at {lam}")
    return f"{len(_even_partitions(n))} even partitions"

def check_zclass(n: int) -> str:
    S = orc.build_group(n, Group.SYM)
    _expect(
        orc.zclasses(S).as_blocks() == cf.classify_zclasses_sym(n).as_blocks(),
        f"S_{n} z-class partitions differ",
    )
    if n < 4:
        return "S_n only"
    A = orc.build_group(n, Group.ALT)
    oracle_z = orc.zclasses(A)
    formula_z = cf.classify_zclasses_alt(n)
    if oracle_z.as_blocks() != formula_z.as_blocks():
        diff = oracle_z.as_blocks() ^ formula_z.as_blocks()
        first = min((label for block in diff for label in block), key=cf.ClassLabel.sort_key)
        raise _Mismatch(f"A_{n} z-class partitions differ, first at {first}")
    return f"z(A_n)={oracle_z.z_count}"

def check_rational(n: int) -> str:
    A = orc.build_group(n, Group.ALT)
    labels = orc.class_labels(A)
    mask = orc.rational_element_mask(A)
    n_rational = 0
    for k, label in enumerate(labels):
        members = mask[A.class_index == k]
        _expect(members.all() or not members.any(), f"rationality not constant on class {label}")
        expected = cf.is_rational_conjugacy_class(label)
        _expect(bool(members[0]) == expected, f"class {label}: oracle {bool(members[0])}, formula {expected}")
        n_rational += expected
    report = cf.rationality_report(n)
    _expect(n_rational == report.rational_conjugacy_class_count, "rational conjugacy class count differs")
    orbits = orc.rational_class_orbits(A)
    _expect(len(orbits) == report.rational_class_count, f"{len(orbits)} rational classes by power maps")
    _expect(
        report.rational_character_count == report.rational_conjugacy_class_count,
        "character-side count differs",
    )
    return f"rational classes={n_rational} rational-class orbits={len(orbits)}"

def check_center(n: int) -> str:
    S = orc.build_group(n, Group.SYM)
    for lam in enumerate_partitions(n):
        sigma = canonical_representative(lam)
        z_sym = orc.center_of(orc.centralizer(S, sigma))
        desc = center_description(lam)
        _expect(orc.closure(desc.generators, n) == z_sym, f"center generators wrong for {lam}")
        _expect(len(z_sym) == desc.order, f"center order wrong for {lam}")
    if n < 4:
        return "S_n centers only"
    A = orc.build_group(n, Group.ALT)
    exceptions = []
    for lam in _even_partitions(n):
        sigma = canonical_representative(lam)
        z_alt = orc.center_of(orc.centralizer(A, sigma))
        z_lam_alt = orc.center_of(orc.centralizer(S, sigma)).intersection(A)
        _expect(z_lam_alt.issubset(z_alt), f"Z_lambda & A_n not inside the center at {lam}")
        strict = len(z_alt) > len(z_lam_alt)
        _expect(strict == center_exception_in_alt(lam), f"center exception wrong at {lam}")
        if strict:
            exceptions.append(str(lam))
    return "exceptions: " + (", ".join(exceptions) or "none")

def check_brison(n: int) -> str:
    S = orc.build_group(n, Group.SYM)
    A = orc.build_group(n, Group.ALT)
    seen = 0
    for lam in _even_partitions(n):
        if not (lam.has_distinct_parts() and lam.has_odd_parts()):
            continue
        sigma = canonical_representative(lam)
        equal = orc.normalizer_of_cyclic(S, sigma) == orc.normalizer_of_cyclic(A, sigma)
        _expect(equal == is_square(lam.product()), f"normalizer criterion fails at {lam}")
        seen += 1
    return f"{seen} distinct-odd partitions"

_CHECK_FUNCS: dict[str, tuple[int, Callable[[int], str]]] = {
    "counts": (3, check_counts),
    "split": (4, check_split),
    "zclass": (3, check_zclass),
    "rational": (4, check_rational),
    "center": (3, check_center),
    "brison": (4, check_brison),
}

def run_check(name: str, n: int) -> CheckResult:
    low, fn = _CHECK_FUNCS[name]
    if n < low:
        raise ValueError(f"check {name} needs n >= {low}")
    try:
        detail = fn(n)
    except _Mismatch as exc:
        return CheckResult(name, n, False, str(exc))
    return CheckResult(name, n, True, detail)

def run_checks(n_max: int, checks: Iterable[str] = CHECKS) -> list[CheckResult]:
    """Run each named check for every admissible n from 3 up to n_max."""
    if not 3 <= n_max <= orc.MAX_DEGREE:
        raise ValueError(f"n_max must be in 3..{orc.MAX_DEGREE}")
    checks = list(checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    results = []
    for name in checks:
        low, _ = _CHECK_FUNCS[name]
        for n in range(low, n_max + 1):
            result = run_check(name, n)
            log.info(result.line())
            results.append(result)
    return results
