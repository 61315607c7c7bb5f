"""
Exchanges of blocks of points
=============================

"""

from clusterwords import DiscreteIET, Permutation, format_word

# Nine points cut into blocks of 4, 2 and 3, put back in reverse order.
T = DiscreteIET((4, 2, 3), Permutation((3, 2, 1)))
print(T.offsets)
print(T.point_map())

# One orbit through all nine points, so the map is minimal and the orbit
# reads a clustering word.
print(T.is_minimal(), format_word(T.clustering_word()))

# The block sizes and the order come back from the word alone.
from clusterwords.iet_discrete import from_clustering_word
print(from_clustering_word(T.clustering_word()) == T)


# # When the orbit breaks up

T = DiscreteIET((3, 1, 2, 3), Permutation.reversal(4))
d = T.orbit_decomposition()
for cycle, word in zip(d.cycles, d.words):
    print(cycle, format_word(word))

# Each short cycle still clusters on the letters it uses.
from clusterwords import clustering_report
print([clustering_report(w).is_clustering for w in d.words])


# # Three letters: a gcd test

from clusterwords.iet_discrete import minimality_criterion_r3
for lengths in [(4, 2, 3), (2, 2, 4), (5, 1, 1)]:
    print(lengths, minimality_criterion_r3(lengths, Permutation((3, 2, 1))),
          DiscreteIET(lengths, Permutation((3, 2, 1))).is_minimal())

# The family (1, 1, 1, n) under reversal is never minimal; the shortest cycle
# is a witness whose offsets cancel.
for n4 in range(1, 8):
    T = DiscreteIET((1, 1, 1, n4), Permutation.reversal(4))
    w = T.nonminimality_witness()
    print(n4, format_word(w), T.offset_sum(w))
