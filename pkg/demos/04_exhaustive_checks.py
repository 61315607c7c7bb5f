"""
Exhaustive checks on small alphabets
====================================

"""

import logging

from clusterwords.oracle import (
    binary_balance_report,
    clustering_census,
    verify_injectivity,
    verify_nonsurjectivity,
    verify_theorem1,
)
from clusterwords import format_word

logging.basicConfig(level=logging.WARNING)

# Every primitive word on three letters up to length 8: does it cluster
# exactly when ww shows up in the minimal exchange built on its letter counts?
report = verify_theorem1(3, 8)
print(report.to_text())

# The inverse recovers conjugacy classes, and the clustering shapes that come
# from non-minimal exchanges have no primitive antecedent.
print(verify_injectivity(3, 7).ok, verify_nonsurjectivity(3, 8).ok)

# On two letters, clustering is the same as ww being balanced.
print(binary_balance_report(12).ok)


# # A census

for word, pi in clustering_census(3, 7):
    print(format_word(word), pi)
