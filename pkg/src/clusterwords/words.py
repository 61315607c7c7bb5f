"""Finite words over ordered alphabets, permutations and conjugacy.

Words are plain tuples of 1-based integer letters; ``(1, 2, 2, 1)`` is the
word ``1221``.  External tokens only show up at the I/O boundary, through
:class:`OrderedAlphabet`, :func:`parse_word` and :func:`format_word`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations as _itertools_permutations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

Word = Tuple[int, ...]


@dataclass(frozen=True)
class OrderedAlphabet:
    """Distinct tokens listed in increasing order; token ``symbols[i]`` has rank ``i+1``."""

    symbols: Tuple[str, ...]
    rank: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(str(s) for s in self.symbols)
        if not symbols:
            raise ValueError("an alphabet needs at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in alphabet {symbols!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "rank", {s: i + 1 for i, s in enumerate(symbols)})

    @classmethod
    def parse(cls, text: str) -> "OrderedAlphabet":
        """``"a,b,c"`` or ``"abc"`` (single characters) -> a < b < c."""
        text = text.strip()
        parts = text.split(",") if "," in text else list(text)
        return cls(tuple(p.strip() for p in parts))

    @classmethod
    def integers(cls, r: int) -> "OrderedAlphabet":
        return cls(tuple(str(i) for i in range(1, r + 1)))

    @property
    def r(self) -> int:
        return len(self.symbols)

    def token(self, letter: int) -> str:
        return self.symbols[letter - 1]


def normalize(tokens: Iterable[str], alphabet: OrderedAlphabet) -> Word:
    """Replace every token by its rank in ``alphabet``."""
    letters = []
    for tok in tokens:
        try:
            letters.append(alphabet.rank[tok])
        except KeyError:
            raise ValueError(f"token {tok!r} is not in the alphabet {alphabet.symbols!r}") from None
    return tuple(letters)


def parse_word(text: str, alphabet: OrderedAlphabet | None = None) -> Word:
    """Read a word from its text form.

    Without an alphabet the text is either a bare digit string (``122131313``)
    or comma separated positive integers (``10,2,10,1``).  With an alphabet,
    tokens are comma separated, or single characters when there is no comma.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    parts = [p.strip() for p in text.split(",")] if "," in text else list(text)
    if alphabet is not None:
        return normalize(parts, alphabet)
    letters = []
    for p in parts:
        if not p.isdigit() or int(p) < 1:
            raise ValueError(f"bad letter {p!r} in word {text!r}: letters are positive integers")
        letters.append(int(p))
    return tuple(letters)


def format_word(w: Sequence[int], alphabet: OrderedAlphabet | None = None) -> str:
    if alphabet is not None:
        tokens = [alphabet.token(a) for a in w]
        sep = "" if all(len(t) == 1 for t in alphabet.symbols) else ","
        return sep.join(tokens)
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def alphabet_size(w: Sequence[int]) -> int:
    return max(w) if w else 0


def parikh(w: Sequence[int], r: int | None = None) -> Tuple[int, ...]:
    """Letter counts ``(n_1, ..., n_r)``; ``r`` defaults to the largest letter."""
    if r is None:
        r = alphabet_size(w)
    counts = [0] * r
    for a in w:
        if not 1 <= a <= r:
            raise ValueError(f"letter {a} outside 1..{r}")
        counts[a - 1] += 1
    return tuple(counts)


def occurring_letters(w: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(set(w)))


def has_full_support(w: Sequence[int], r: int | None = None) -> bool:
    """Every letter of ``1..r`` occurs in ``w``."""
    if r is None:
        r = alphabet_size(w)
    return set(w) == set(range(1, r + 1))


def is_primitive(w: Sequence[int]) -> bool:
    """``w`` is not a proper power: it occurs in ``ww`` only at positions 0 and n."""
    w = tuple(w)
    n = len(w)
    ww = w + w
    return all(ww[p:p + n] != w for p in range(1, n))


def primitive_root(w: Sequence[int]) -> Tuple[Word, int]:
    """Return ``(u, k)`` with ``w == u * k``, ``u`` primitive and ``k`` maximal."""
    w = tuple(w)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    return w, 1  # empty word


def rotate(w: Sequence[int], i: int) -> Word:
    """The conjugate starting at 0-based position ``i``."""
    w = tuple(w)
    return w[i:] + w[:i]


def conjugates(w: Sequence[int]) -> List[Tuple[int, Word]]:
    """All rotations, indexed by their 1-based starting position."""
    return [(i + 1, rotate(w, i)) for i in range(len(w))]


def sorted_conjugates(w: Sequence[int]) -> List[Tuple[int, Word]]:
    # ties (non-primitive words only) keep the rotation index order
    return sorted(conjugates(w), key=lambda item: (item[1], item[0]))


def canonical_conjugate(w: Sequence[int]) -> Word:
    """Lexicographically least rotation of ``w``."""
    w = tuple(w)
    if not w:
        return w
    return min(rotate(w, i) for i in range(len(w)))


def are_conjugate(u: Sequence[int], v: Sequence[int]) -> bool:
    return len(u) == len(v) and canonical_conjugate(u) == canonical_conjugate(v)


def occurs_in(pattern: Sequence[int], text: Sequence[int]) -> int:
    """0-based position of the first occurrence of ``pattern`` in ``text``, or -1."""
    pattern, text = tuple(pattern), tuple(text)
    m = len(pattern)
    for i in range(len(text) - m + 1):
        if text[i:i + m] == pattern:
            return i
    return -1


def is_balanced(w: Sequence[int]) -> bool:
    """Binary balance: equal-length factors differ by at most one in each letter count."""
    w = tuple(w)
    n = len(w)
    prefix = {a: [0] for a in set(w)}
    for x in w:
        for a, acc in prefix.items():
            acc.append(acc[-1] + (x == a))
    for length in range(1, n):
        for acc in prefix.values():
            counts = [acc[i + length] - acc[i] for i in range(n - length + 1)]
            if max(counts) - min(counts) > 1:
                return False
    return True


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, ..., r}`` given by its images ``(pi(1), ..., pi(r))``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images!r} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``"3,2,1"`` means pi(1)=3, pi(2)=2, pi(3)=1."""
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}: {exc}") from None

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def reversal(cls, r: int) -> "Permutation":
        return cls(tuple(range(r, 0, -1)))

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.r
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.r + 1))

    def is_reversal(self) -> bool:
        return self.images == tuple(range(self.r, 0, -1))

    def is_irreducible(self) -> bool:
        """No proper initial block ``{1..d}`` is mapped onto itself."""
        top = 0
        for d, x in enumerate(self.images[:-1], start=1):
            top = max(top, x)
            if top == d:
                return False
        return True


def all_permutations(r: int, include_identity: bool = True) -> List[Permutation]:
    perms = [Permutation(p) for p in _itertools_permutations(range(1, r + 1))]
    if not include_identity:
        perms = [p for p in perms if not p.is_identity()]
    return perms


def restrict_permutation(pi: Permutation, occurring: Iterable[int]) -> Permutation:
    """Permutation induced by ``pi`` on the letters ``j_1 < ... < j_d``.

    Letter ``y`` of the reindexed alphabet stands for ``j_y``; the result keeps
    the relative order of the ``pi``-preimages.
    """
    letters = sorted(set(occurring))
    if not letters:
        raise ValueError("restriction to an empty set of letters")
    if letters[0] < 1 or letters[-1] > pi.r:
        raise ValueError(f"letters {letters} outside 1..{pi.r}")
    inv = pi.inverse()
    order = sorted(range(1, len(letters) + 1), key=lambda y: inv(letters[y - 1]))
    return Permutation(tuple(order))


def reindex(w: Sequence[int]) -> Tuple[Word, Tuple[int, ...]]:
    """Map the occurring letters of ``w`` increasingly onto ``1..d``."""
    letters = occurring_letters(w)
    index = {a: i + 1 for i, a in enumerate(letters)}
    return tuple(index[a] for a in w), letters
