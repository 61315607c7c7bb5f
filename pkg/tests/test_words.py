from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterwords.words import (
    OrderedAlphabet,
    Permutation,
    all_permutations,
    canonical_conjugate,
    conjugates,
    format_word,
    is_balanced,
    is_primitive,
    normalize,
    parikh,
    parse_word,
    primitive_root,
    restrict_permutation,
    rotate,
    sorted_conjugates,
)

words = st.lists(st.integers(1, 4), min_size=1, max_size=12).map(tuple)


def W(text):
    return parse_word(text)


def divisor_period_primitive(w):
    # independent check: no proper divisor p of n with w = (w[:p])^(n/p)
    n = len(w)
    return not any(n % p == 0 and w == w[:p] * (n // p) for p in range(1, n))


# -- alphabet and text formats -------------------------------------------------

def test_normalize_examples():
    assert normalize(["b", "a"], OrderedAlphabet(("a", "b"))) == (2, 1)
    assert normalize(["1", "3", "2"], OrderedAlphabet(("1", "2", "3"))) == (1, 3, 2)
    assert normalize(["c", "c", "a"], OrderedAlphabet(("a", "b", "c"))) == (3, 3, 1)


def test_normalize_rejects_unknown_token():
    with pytest.raises(ValueError, match="'z'"):
        normalize(["a", "z"], OrderedAlphabet(("a", "b")))


def test_alphabet_rejects_duplicates():
    with pytest.raises(ValueError):
        OrderedAlphabet(("a", "a"))


@pytest.mark.parametrize("text, word", [
    ("122131313", (1, 2, 2, 1, 3, 1, 3, 1, 3)),
    ("10,2,10,1", (10, 2, 10, 1)),
    ("7", (7,)),
])
def test_parse_and_format_round_trip(text, word):
    assert parse_word(text) == word
    assert format_word(word) == text


@pytest.mark.parametrize("bad", ["", "  ", "12a", "1,,2", "0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_parse_with_alphabet():
    abc = OrderedAlphabet.parse("abc")
    assert parse_word("cab", abc) == (3, 1, 2)
    assert format_word((3, 1, 2), abc) == "cab"
    multi = OrderedAlphabet.parse("x1,x2")
    assert parse_word("x2,x1", multi) == (2, 1)
    assert format_word((2, 1), multi) == "x2,x1"


# -- Parikh vectors, primitivity ------------------------------------------------

def test_parikh_examples():
    assert parikh(W("122131313")) == (4, 2, 3)
    assert parikh(W("1")) == (1,)
    assert parikh(W("1322313223")) == (2, 4, 4)
    assert parikh(W("2"), r=3) == (0, 1, 0)


@pytest.mark.parametrize("text, expected", [("1322313223", False), ("1", True), ("122131313", True)])
def test_is_primitive_examples(text, expected):
    assert is_primitive(W(text)) is expected


@pytest.mark.parametrize("text, root, k", [("1322313223", "13223", 2), ("121", "121", 1), ("111", "1", 3)])
def test_primitive_root_examples(text, root, k):
    assert primitive_root(W(text)) == (W(root), k)


def test_conjugates_examples():
    assert conjugates(W("21")) == [(1, W("21")), (2, W("12"))]
    assert conjugates(W("121")) == [(1, W("121")), (2, W("211")), (3, W("112"))]
    assert conjugates(W("11")) == [(1, W("11")), (2, W("11"))]


def test_sorted_conjugates_examples():
    assert sorted_conjugates(W("121")) == [(3, W("112")), (1, W("121")), (2, W("211"))]
    assert sorted_conjugates(W("21")) == [(2, W("12")), (1, W("21"))]
    first_column = tuple(row[0] for _, row in sorted_conjugates(W("1322313223")))
    assert first_column == W("1122223333")


def test_canonical_conjugate_examples():
    assert canonical_conjugate(W("211")) == W("112")
    # rotations of 122131313 starting with 1: 122131313, 131313122, 131312213, 131221313
    assert canonical_conjugate(W("122131313")) == W("122131313")
    assert canonical_conjugate(W("1")) == W("1")


# -- permutations ----------------------------------------------------------------

def test_permutation_basics():
    pi = Permutation.parse("4,3,1,2")
    assert pi(1) == 4 and pi(3) == 1
    assert pi.inverse().images == (3, 4, 2, 1)
    assert str(pi) == "4,3,1,2"
    assert Permutation.identity(3).is_identity()
    assert Permutation.reversal(3).images == (3, 2, 1)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation.parse("1,x")


def test_irreducibility():
    assert Permutation((3, 2, 1)).is_irreducible()
    assert Permutation((4, 3, 1, 2)).is_irreducible()
    assert not Permutation((1, 3, 2)).is_irreducible()
    assert not Permutation((2, 1, 4, 3)).is_irreducible()


def test_restrict_permutation_examples():
    assert restrict_permutation(Permutation.reversal(4), [1, 4]) == Permutation.reversal(2)
    # pi^-1(2) = 4, pi^-1(3) = 2, so letter 3 (new 2) comes first
    assert restrict_permutation(Permutation((4, 3, 1, 2)), [2, 3]) == Permutation((2, 1))
    with pytest.raises(ValueError):
        restrict_permutation(Permutation.reversal(3), [])


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_restrict_full_set_is_identity_operation(r):
    for pi in all_permutations(r):
        assert restrict_permutation(pi, range(1, r + 1)) == pi


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_restricted_reversal_stays_reversal(r):
    for size in range(1, r + 1):
        for subset in product([0, 1], repeat=r):
            letters = [i + 1 for i, bit in enumerate(subset) if bit]
            if len(letters) == size:
                assert restrict_permutation(Permutation.reversal(r), letters).is_reversal()


# -- properties -------------------------------------------------------------------

@given(words)
def test_parikh_sums_to_length(w):
    assert sum(parikh(w)) == len(w)


@given(words)
def test_primitive_matches_divisor_check_and_sorted_array(w):
    rows = [row for _, row in sorted_conjugates(w)]
    no_adjacent_equal = all(a != b for a, b in zip(rows, rows[1:]))
    assert is_primitive(w) == divisor_period_primitive(w) == no_adjacent_equal


@given(words)
def test_primitive_root_is_idempotent(w):
    u, k = primitive_root(w)
    assert u * k == w
    assert is_primitive(u)
    assert primitive_root(u) == (u, 1)


@given(words)
def test_canonical_conjugate_constant_on_class(w):
    c = canonical_conjugate(w)
    assert all(canonical_conjugate(rotate(w, i)) == c for i in range(len(w)))
    assert c == sorted_conjugates(w)[0][1]


def test_balance_checker():
    assert is_balanced(W("1212"))
    assert is_balanced(W("12122"))
    assert not is_balanced(W("1122"))
    assert not is_balanced(W("112122"))
