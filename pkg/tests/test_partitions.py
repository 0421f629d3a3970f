import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zclass.partitions import (
    DELTA,
    EPSILON,
    P_TILDE,
    Q,
    Q_TILDE,
    UNRESTRICTED,
    Family,
    Partition,
    conjugate_parts,
    count_delta,
    count_epsilon,
    count_p,
    count_p_tilde,
    count_q,
    count_q_tilde,
    delta_witnesses,
    enumerate_partitions,
    gf_coefficients,
    is_square,
    iter_part_lists,
    self_conjugate_partitions,
)

_BY_WEIGHT = {n: enumerate_partitions(n) for n in range(1, 31)}
partitions_upto_30 = st.integers(1, 30).flatmap(lambda n: st.sampled_from(_BY_WEIGHT[n]))


def test_parse_and_render():
    lam = Partition.parse("1^3 5 9")
    assert lam.parts == (1, 1, 1, 5, 9)
    assert lam.weight == 17
    assert str(lam) == "1^3 5 9"
    assert lam.to_text(explicit=True) == "1^3 5^1 9^1"
    assert Partition.parse("3^1 11^1 33^1") == Partition.from_parts([33, 3, 11])


@pytest.mark.parametrize("bad", ["", "5 3", "3 3", "1^0 2", "x", "2^", "-1", "1^2^3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Partition.parse(bad)


@given(partitions_upto_30)
@settings(max_examples=300)
def test_text_round_trip(lam):
    assert Partition.parse(lam.to_text()) == lam
    assert Partition.parse(lam.to_text(explicit=True)) == lam


def test_every_partition_round_trips_to_30():
    for n in range(1, 31):
        for lam in enumerate_partitions(n):
            assert Partition.parse(str(lam)) == lam


def test_small_counts():
    assert [count_p(m) for m in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert count_p(100) == 190569292
    assert count_p(-1) == 0
    assert count_q_tilde(0) == 0 and count_q_tilde(2) == 0


def test_enumeration_is_lexicographic_and_complete():
    for m in range(1, 16):
        lists = list(iter_part_lists(m))
        assert lists == sorted(lists)
        assert len(lists) == len(set(map(tuple, lists))) == count_p(m)


@pytest.mark.parametrize(
    "pred,counter",
    [(UNRESTRICTED, count_p), (P_TILDE, count_p_tilde), (Q, count_q), (Q_TILDE, count_q_tilde),
     (EPSILON, count_epsilon), (DELTA, count_delta)],
)
def test_counters_match_enumeration(pred, counter):
    for m in range(1, 41):
        assert len(enumerate_partitions(m, pred)) == counter(m), m


def test_pentagonal_identity_p_tilde_to_200():
    for m in range(3, 201):
        assert count_p_tilde(m) == count_p(m) - count_p(m - 1) - count_p(m - 2) + count_p(m - 3)


@pytest.mark.parametrize(
    "family,counter",
    [(Family.P, count_p), (Family.P_TILDE, count_p_tilde), (Family.Q, count_q),
     (Family.Q_TILDE, count_q_tilde), (Family.EPSILON, count_epsilon)],
)
def test_generating_functions_match_counters_to_200(family, counter):
    coeffs = gf_coefficients(family, 200)
    assert coeffs[0] == 1
    assert coeffs[1:] == [counter(m) for m in range(1, 201)]


def test_epsilon_at_most_delta_to_500():
    assert all(count_epsilon(n) <= count_delta(n) for n in range(1, 501))


def test_delta_strict_examples():
    # 78 = 3 + 75 with 3 * 75 = 15^2
    assert Partition.parse("3 75") in delta_witnesses(78)
    assert count_epsilon(78) < count_delta(78)


@given(st.sampled_from([3, 5, 7, 11]), st.sampled_from([3, 5, 7, 11]))
@settings(max_examples=25, deadline=None)
def test_prime_pair_family_is_strict(p1, p2):
    if p1 == p2:
        return
    for parts in ([p1, p2, p1 * p2], [p1, p1 * p2 * p2]):
        lam = Partition.from_parts(parts)
        assert DELTA.admits(lam) and not EPSILON.admits(lam)
        assert count_epsilon(lam.weight) < count_delta(lam.weight)


def test_delta_witnesses_are_sorted_and_valid():
    for n in range(1, 80):
        ws = delta_witnesses(n)
        assert ws == sorted(ws)
        for w in ws:
            assert w.has_distinct_parts() and w.has_odd_parts() and is_square(w.product())


def test_q_counts_self_conjugate_partitions_to_40():
    for n in range(1, 41):
        rows = list(self_conjugate_partitions(n))
        assert all(conjugate_parts(r) == r and sum(r) == n for r in rows)
        assert len(rows) == count_q(n)


@given(partitions_upto_30)
def test_conjugation_is_an_involution(lam):
    rows = sorted(lam.parts, reverse=True)
    assert conjugate_parts(conjugate_parts(rows)) == rows
