"""
The transform on cyclic words, and clustering
=============================================

"""

# Words are tuples of positive integers; parse_word reads them from digits.
from clusterwords import bwt, clustering_report, inverse_bwt, parse_word, format_word

w = parse_word("1322313223")
print(format_word(bwt(w)))

# The image only depends on the conjugacy class, so every rotation gives the
# same last column.
from clusterwords.words import conjugates
print({format_word(bwt(c)) for _, c in conjugates(w)})


# # Going back

# The inverse follows the last-to-first correspondence.  Above, w is a square,
# and the inverse says so.
res = inverse_bwt(bwt(w))
print(res.status.value, format_word(res.antecedent), res.power)

# Not every word is an image.
print(inverse_bwt(parse_word("32221")).status.value)


# # Clustering

# A word clusters when its image is a run of each letter, in some order
# other than the natural one.  That order is the permutation.
for text in ["122131313", "4123231312412", "123131312", "11"]:
    rep = clustering_report(parse_word(text))
    print(text, rep.is_clustering, rep.permutation, rep.perfect)

# Letters that do not occur are ignored: 41 behaves like 21.
rep = clustering_report(parse_word("41"))
print(rep.occurring_letters, rep.permutation_on_letters())
