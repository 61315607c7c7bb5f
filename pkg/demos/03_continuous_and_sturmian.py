"""
Exchanges of the unit interval, exactly
=======================================

"""

from fractions import Fraction

from clusterwords import ContinuousIET, Permutation, format_word
from clusterwords.exact import format_exact, qsqrt

# Rescaling the nine-point example gives an exchange of [0, 1) with the same
# coding from 0.
T = ContinuousIET((Fraction(4, 9), Fraction(2, 9), Fraction(3, 9)), Permutation((3, 2, 1)))
print([format_exact(t) for t in T.taus])
print(format_word(T.trajectory(0, 18)))

# With rational lengths some cut lands on another cut.
from clusterwords.iet_continuous import keane_check
print(keane_check(T, 20).to_dict())


# # The golden rotation

# Lengths live in Q(sqrt 5) and all comparisons are exact.
from clusterwords.iet_continuous import golden_rotation, sturmian_word, fibonacci_word
G = golden_rotation()
print([format_exact(a) for a in G.alphas])
print(keane_check(G, 200).to_dict())

g = (qsqrt(5) - 1) / 2
s = sturmian_word(g, 40)
print(format_word(s))
print(s == fibonacci_word(40))

# Squares in the coding: every primitive u with uu inside clusters.
from clusterwords import clustering_report
from clusterwords.words import is_primitive
t = G.trajectory(0, 300)
found = set()
for n in range(2, 8):
    for i in range(len(t) - 2 * n + 1):
        u = t[i:i + n]
        if u == t[i + n:i + 2 * n] and is_primitive(u) and len(set(u)) == 2:
            found.add(u)
for u in sorted(found, key=len):
    print(format_word(u), clustering_report(u).permutation)
