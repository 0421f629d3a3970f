import numpy as np
import pytest

from zclass import classifier as cf
from zclass import oracle as orc
from zclass.partitions import Partition
from zclass.symgroup import Group, Permutation, canonical_representative

P = Partition.parse


def test_group_sizes():
    assert len(orc.build_group(5, Group.SYM)) == 120
    assert len(orc.build_group(5, Group.ALT)) == 60
    with pytest.raises(orc.OracleCapacityError):
        orc.build_group(orc.MAX_DEGREE + 1)


def test_closure_and_generators():
    S4 = orc.build_group(4)
    gens = [Permutation.from_cycles(4, [(1, 2)]), Permutation.from_cycles(4, [(1, 2, 3, 4)])]
    assert orc.closure(gens, 4) == S4
    H = orc.closure([Permutation.from_cycles(4, [(1, 2, 3)])], 4)
    assert len(H) == 3
    assert orc.closure(orc.generating_set(S4), 4) == S4
    with pytest.raises(ValueError):
        orc.closure(gens, 4, limit=orc.build_group(4, Group.ALT))


def test_centralizer_and_center():
    S5 = orc.build_group(5)
    sigma = canonical_representative(P("2 3"))
    C = orc.centralizer(S5, sigma)
    assert len(C) == 6
    assert len(orc.center_of(C)) == 6
    assert sigma in C


def test_class_counts():
    assert len(orc.conjugacy_classes(orc.build_group(6))) == 11
    assert len(orc.conjugacy_classes(orc.build_group(6, Group.ALT))) == 7


def test_subgroup_conjugacy_methods_agree():
    S5 = orc.build_group(5)
    a = orc.closure([Permutation.from_cycles(5, [(1, 2, 3)])], 5)
    b = orc.closure([Permutation.from_cycles(5, [(3, 4, 5)])], 5)
    c = orc.closure([Permutation.from_cycles(5, [(1, 2), (3, 4)])], 5)
    for method in ("scan", "cosets"):
        assert orc.subgroups_conjugate(S5, a, b, method=method)
        assert not orc.subgroups_conjugate(S5, a, c, method=method)


def test_zclass_scan_matches_cosets():
    A6 = orc.build_group(6, Group.ALT)
    assert orc.zclasses(A6, method="scan").as_blocks() == orc.zclasses(A6, method="cosets").as_blocks()


def test_class_labels_match_classifier():
    for n in range(4, 8):
        A = orc.build_group(n, Group.ALT)
        assert sorted(orc.class_labels(A), key=cf.ClassLabel.sort_key) == sorted(
            cf.alt_class_labels(n), key=cf.ClassLabel.sort_key
        )


def test_rational_elements():
    A5 = orc.build_group(5, Group.ALT)
    assert not orc.is_rational_element(A5, canonical_representative(P("5")))
    assert orc.is_rational_element(A5, canonical_representative(P("1^2 3")))
    mask = orc.rational_element_mask(A5)
    assert mask.dtype == np.bool_ and int(mask.sum()) == 60 - 24


def test_worker_count_does_not_change_results(monkeypatch):
    A6 = orc.build_group(6, Group.ALT)
    monkeypatch.setenv(orc.WORKERS_ENV, "1")
    one = orc.zclasses(A6).as_blocks()
    monkeypatch.setenv(orc.WORKERS_ENV, "3")
    assert orc.zclasses(A6).as_blocks() == one


def test_a6_merge_matches_classifier():
    z = orc.zclasses(orc.build_group(6, Group.ALT))
    blocks = [{str(label.partition) for label in g} for g in z.merged_groups()]
    assert {"1^3 3", "3^2"} in blocks
