"""Clustering words: Burrows-Wheeler transform, interval exchanges, exhaustive checks."""

from .bwt import (
    AntecedentStatus,
    ClusterReport,
    InverseResult,
    bwt,
    clustering_image,
    clustering_report,
    inverse_bwt,
    is_clustering,
)
from .exact import Quadratic, format_exact, parse_exact, qsqrt
from .iet_continuous import (
    ContinuousIET,
    KeaneVerdict,
    contains_square,
    fibonacci_word,
    from_discrete,
    golden_rotation,
    keane_check,
    sturmian_word,
)
from .iet_discrete import DiscreteIET, OrbitDecomposition, from_clustering_word, minimality_criterion_r3
from .oracle import (
    VerificationReport,
    clustering_census,
    enumerate_primitive_words,
    verify_injectivity,
    verify_nonsurjectivity,
    verify_theorem1,
)
from .words import (
    OrderedAlphabet,
    Permutation,
    canonical_conjugate,
    conjugates,
    format_word,
    is_primitive,
    normalize,
    parikh,
    parse_word,
    primitive_root,
    restrict_permutation,
    sorted_conjugates,
)

__version__ = "0.1.0"
