from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterwords.bwt import bwt, clustering_report
from clusterwords.iet_discrete import (
    DiscreteIET,
    all_length_vectors,
    from_clustering_word,
    minimality_criterion_r3,
)
from clusterwords.words import (
    Permutation,
    all_permutations,
    are_conjugate,
    occurring_letters,
    occurs_in,
    parse_word,
    restrict_permutation,
)

W = parse_word
REV3 = Permutation((3, 2, 1))
REV4 = Permutation.reversal(4)


@pytest.fixture
def nine_points():
    return DiscreteIET((4, 2, 3), REV3)


@pytest.fixture
def split_orbits():
    return DiscreteIET((3, 1, 2, 3), REV4)


def brute_offsets(lengths, pi):
    # place the blocks in image order and read off where each block starts
    starts_now, pos = {}, 1
    for i, x in enumerate(lengths, start=1):
        starts_now[i] = pos
        pos += x
    starts_image, pos = {}, 1
    for i in pi:
        starts_image[i] = pos
        pos += lengths[i - 1]
    return tuple(starts_image[i] - starts_now[i] for i in range(1, len(lengths) + 1))


iets = st.integers(1, 5).flatmap(
    lambda r: st.tuples(
        st.lists(st.integers(1, 6), min_size=r, max_size=r),
        st.permutations(list(range(1, r + 1))),
    )
).map(lambda t: DiscreteIET(tuple(t[0]), Permutation(tuple(t[1]))))


# -- construction --------------------------------------------------------------------

def test_offsets_examples(nine_points, split_orbits):
    assert nine_points.offsets == (5, -1, -6)
    assert DiscreteIET((1, 1), Permutation((1, 2))).offsets == (0, 0)
    assert split_orbits.offsets == (6, 2, -1, -6)


def test_point_map_realizes_column_pictures(nine_points, split_orbits):
    # image arrangement: the block index of the point landing on each position
    def arrangement(T):
        out = [0] * T.n
        for k in range(1, T.n + 1):
            out[T.apply(k) - 1] = T.letter(k)
        return tuple(out)

    assert tuple(nine_points.letter(k) for k in range(1, 10)) == W("111122333")
    assert arrangement(nine_points) == W("333221111")
    assert arrangement(split_orbits) == W("444332111")


@pytest.mark.parametrize("lengths, pi", [((0, 2), (2, 1)), ((1, -1), (2, 1)), ((1, 2), (1, 1)), ((1, 2, 3), (2, 1))])
def test_rejects_bad_input(lengths, pi):
    with pytest.raises(ValueError):
        DiscreteIET(lengths, pi)


def test_apply_examples(nine_points, split_orbits):
    assert nine_points.apply(1) == 6
    ident = DiscreteIET((2, 3), Permutation((1, 2)))
    assert [ident.apply(k) for k in range(1, 6)] == [1, 2, 3, 4, 5]
    assert split_orbits.apply(4) == 6
    with pytest.raises(ValueError):
        nine_points.apply(10)
    with pytest.raises(ValueError):
        nine_points.apply(0)


@given(iets)
def test_offsets_match_block_placement(T):
    assert T.offsets == brute_offsets(T.lengths, T.permutation)


@given(iets)
def test_offsets_weighted_sum_vanishes(T):
    assert sum(n * s for n, s in zip(T.lengths, T.offsets)) == 0


@given(iets)
def test_point_map_is_bijection(T):
    assert sorted(T.point_map()) == list(range(1, T.n + 1))


# -- orbits and minimality -------------------------------------------------------------

def test_orbits_examples(nine_points, split_orbits):
    d = nine_points.orbit_decomposition()
    assert len(d.cycles) == 1 and d.words[0] == W("122131313")

    d = split_orbits.orbit_decomposition()
    assert d.cycles == ((1, 7), (2, 8), (3, 9), (4, 6, 5))
    assert d.words == (W("14"), W("14"), W("14"), W("233"))
    assert are_conjugate(d.words[0], W("41")) and are_conjugate(d.words[3], W("323"))

    d = DiscreteIET((1, 1), Permutation((1, 2))).orbit_decomposition()
    assert d.cycles == ((1,), (2,)) and d.words == ((1,), (2,))


@given(iets)
def test_cycles_partition_points(T):
    d = T.orbit_decomposition()
    points = sorted(p for c in d.cycles for p in c)
    assert points == list(range(1, T.n + 1))
    assert all(len(c) == len(w) for c, w in zip(d.cycles, d.words))
    assert all(c[0] == min(c) for c in d.cycles)


def test_is_minimal_examples(nine_points, split_orbits):
    assert nine_points.is_minimal()
    assert not split_orbits.is_minimal()
    for n4 in range(1, 30):
        assert not DiscreteIET((1, 1, 1, n4), REV4).is_minimal()


def test_r3_criterion_examples():
    assert minimality_criterion_r3((4, 2, 3), REV3)
    assert not minimality_criterion_r3((2, 2, 4), REV3)
    assert not minimality_criterion_r3((1, 1, 1), Permutation((2, 1, 3)))
    with pytest.raises(ValueError):
        minimality_criterion_r3((1, 1, 1, 1), REV4)


def test_r3_criterion_matches_cycles_small():
    # the exhaustive n_i <= 20 sweep runs in the acceptance suite
    for lengths in all_length_vectors(3, 18):
        for pi in all_permutations(3):
            assert minimality_criterion_r3(lengths, pi) == DiscreteIET(lengths, pi).is_minimal()


def test_r3_criterion_coprimality_by_hand():
    # gcd(n1+n2, n2+n3) for the reversal
    assert gcd(4 + 2, 2 + 3) == 1 and gcd(2 + 2, 2 + 4) == 2


# -- clustering words ----------------------------------------------------------------

def test_clustering_word_examples(nine_points, split_orbits):
    assert nine_points.clustering_word() == W("122131313")
    assert split_orbits.clustering_word() is None
    w = DiscreteIET((1, 1), Permutation((2, 1))).clustering_word()
    assert w == W("12")
    assert clustering_report(w).is_clustering


def test_from_clustering_word_examples(nine_points):
    assert from_clustering_word(W("122131313")) == nine_points
    assert from_clustering_word(W("12")) == DiscreteIET((1, 1), Permutation((2, 1)))
    T = from_clustering_word(W("13131312222"))
    assert T.lengths == (4, 4, 3) and T.permutation == REV3


@pytest.mark.parametrize("w", ["1122", "1212", "123131312", "13"])
def test_from_clustering_word_rejects(w):
    with pytest.raises(ValueError):
        from_clustering_word(W(w))


@pytest.mark.parametrize("r, total", [(2, 12), (3, 10), (4, 8)])
def test_generation_detection_loop(r, total):
    for lengths in all_length_vectors(r, total):
        for pi in all_permutations(r, include_identity=False):
            T = DiscreteIET(lengths, pi)
            w = T.clustering_word()
            if w is None:
                continue
            rep = clustering_report(w)
            assert rep.is_clustering and rep.permutation == pi
            assert from_clustering_word(w) == T


@pytest.mark.parametrize("r, total", [(2, 10), (3, 9), (4, 8)])
def test_cycle_words_of_non_minimal_maps_cluster_on_their_letters(r, total):
    for lengths in all_length_vectors(r, total):
        for pi in all_permutations(r, include_identity=False):
            T = DiscreteIET(lengths, pi)
            for w in T.orbit_decomposition().words:
                letters = occurring_letters(w)
                if len(letters) < 2:
                    continue
                rep = clustering_report(w)
                assert rep.is_clustering, (lengths, pi, w)
                assert rep.permutation == restrict_permutation(pi, letters)


# -- trajectories ----------------------------------------------------------------------

def test_trajectory_examples(nine_points):
    assert nine_points.trajectory(1, 18) == W("122131313122131313")
    assert nine_points.trajectory(5, 0) == ()
    with pytest.raises(ValueError):
        nine_points.trajectory(0, 3)


@given(iets, st.integers(1, 4))
def test_trajectory_periodicity(T, m):
    for k in range(1, T.n + 1):
        period = T.cycle_length(k)
        base = T.trajectory(k, period)
        assert T.trajectory(k, m * T.n) == (base * (m * T.n // period + 1))[: m * T.n]
        assert occurs_in(base + base, T.trajectory(k, 3 * period)) == 0


def _arrangements(T, labels):
    first = tuple(labels[T.letter(k)] for k in range(1, T.n + 1))
    image = [0] * T.n
    for k in range(1, T.n + 1):
        image[T.apply(k) - 1] = labels[T.letter(k)]
    return first, tuple(image)


def test_relabelled_coding_literal_exchange():
    """Blocks 22|333|1111 put back in reverse order, coded 2, 3, 1.

    This is the exchange with first column 223331111, image 111133322,
    x1 -> x8 and x3 -> x5.  Its coding is a single 9-cycle whose word does
    not cluster although ww occurs in the trajectory.
    """
    T = DiscreteIET((2, 3, 4), REV3)
    labels = {1: 2, 2: 3, 3: 1}
    assert _arrangements(T, labels) == (W("223331111"), W("111133322"))
    assert T.apply(1) == 8 and T.apply(3) == 5
    assert T.is_minimal()
    w = T.trajectory(1, 9, labels=labels)
    assert w == W("213312131")
    assert occurs_in(w + w, T.trajectory(1, 27, labels=labels)) == 0
    assert bwt(w) == W("332211311")
    assert not clustering_report(w).is_clustering


def test_relabelled_coding_stated_word():
    """The exchange producing w = 123131312: blocks of sizes 2, 3, 4 coded 2, 3, 1
    (first column 223331111) and reordered as 1111|22|333.

    A search over every 3-interval exchange on 9 points and every coding finds
    only this one (and a relabelled mirror) with ww in a trajectory.
    """
    T = DiscreteIET((2, 3, 4), Permutation((3, 1, 2)))
    labels = {1: 2, 2: 3, 3: 1}
    first, _ = _arrangements(T, labels)
    assert first == W("223331111")
    assert T.is_minimal()
    w = W("123131312")
    assert occurs_in(w + w, T.trajectory(1, 27, labels=labels)) >= 0
    assert bwt(w) == W("323311112")
    assert not clustering_report(w).is_clustering
    # with the block-order coding the same orbit does cluster
    v = T.trajectory(1, 9)
    assert clustering_report(v).permutation == Permutation((3, 1, 2))


# -- non-minimality witnesses ----------------------------------------------------------

@pytest.mark.parametrize("n4, expected", [(3, "24"), (4, "144")])
def test_witness_examples(n4, expected):
    T = DiscreteIET((1, 1, 1, n4), REV4)
    w = T.nonminimality_witness()
    assert are_conjugate(w, W(expected))
    assert T.offset_sum(w) == 0


def test_witness_absent_for_minimal(nine_points):
    assert nine_points.nonminimality_witness() is None


@given(iets)
def test_witness_iff_non_minimal(T):
    w = T.nonminimality_witness()
    assert (w is None) == T.is_minimal()
    if w is not None:
        assert len(w) < T.n and T.offset_sum(w) == 0


def test_length_vectors():
    assert all_length_vectors(2, 3) == [(1, 1), (1, 2), (2, 1)]
    assert all_length_vectors(3, 4, 4) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
