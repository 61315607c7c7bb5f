"""Discrete interval exchanges on ``n`` labelled points.

Points are numbered ``1..n`` from left to right.  The first ``n_1`` points
form the block of letter 1, the next ``n_2`` the block of letter 2, and so
on.  The blocks are put back in the order ``pi(1), ..., pi(r)`` by
translation, so every point of block ``i`` moves by the same offset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .bwt import clustering_report
from .words import Permutation, Word, is_primitive, parikh, sorted_conjugates


def offsets_for(lengths: Sequence[int], pi: Permutation) -> Tuple[int, ...]:
    """Per-block translation: total length of the blocks placed before block
    ``i`` in the image, minus the total length of the blocks before it now."""
    inv = pi.inverse()
    out = []
    for i in range(1, pi.r + 1):
        before_image = sum(lengths[j - 1] for j in range(1, pi.r + 1) if inv(j) < inv(i))
        before_now = sum(lengths[: i - 1])
        out.append(before_image - before_now)
    return tuple(out)


@dataclass(frozen=True)
class OrbitDecomposition:
    """Cycles of the point map, each listed from its least point, and their codings."""

    cycles: Tuple[Tuple[int, ...], ...]
    words: Tuple[Word, ...]


@dataclass(frozen=True)
class DiscreteIET:
    lengths: Tuple[int, ...]
    permutation: Permutation
    offsets: Tuple[int, ...] = field(init=False)
    n: int = field(init=False)
    _letters: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        pi = self.permutation
        if not isinstance(pi, Permutation):
            pi = Permutation(tuple(pi))
        if not lengths:
            raise ValueError("at least one interval is needed")
        if any(x < 1 for x in lengths):
            raise ValueError(f"lengths must be positive, got {lengths}")
        if len(lengths) != pi.r:
            raise ValueError(f"{len(lengths)} lengths for a permutation of {pi.r} letters")
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "permutation", pi)
        object.__setattr__(self, "offsets", offsets_for(lengths, pi))
        object.__setattr__(self, "n", sum(lengths))
        letters = tuple(i + 1 for i, x in enumerate(lengths) for _ in range(x))
        object.__setattr__(self, "_letters", letters)
        images = sorted(k + self.offsets[letters[k - 1] - 1] for k in range(1, self.n + 1))
        if images != list(range(1, self.n + 1)):
            raise AssertionError(f"point map of {self} is not a bijection")

    @property
    def r(self) -> int:
        return len(self.lengths)

    def letter(self, k: int) -> int:
        """Index of the block containing point ``k``."""
        self._check_point(k)
        return self._letters[k - 1]

    def apply(self, k: int) -> int:
        self._check_point(k)
        return k + self.offsets[self._letters[k - 1] - 1]

    __call__ = apply

    def _check_point(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise ValueError(f"point {k} outside 1..{self.n}")

    def point_map(self) -> Tuple[int, ...]:
        """Images of the points ``1..n``, as a tuple indexed from 0."""
        return tuple(k + self.offsets[a - 1] for k, a in enumerate(self._letters, start=1))

    def trajectory(self, start: int, length: int, labels: Optional[Mapping[int, int]] = None) -> Word:
        """Coding of ``start, T start, T^2 start, ...`` by block index.

        ``labels`` recodes block ``i`` as ``labels[i]``; it exists to show what
        goes wrong when the coding does not follow the block order.
        """
        self._check_point(start)
        if length < 0:
            raise ValueError("negative trajectory length")
        out = []
        k = start
        for _ in range(length):
            a = self._letters[k - 1]
            out.append(labels[a] if labels is not None else a)
            k += self.offsets[a - 1]
        return tuple(out)

    def orbit_decomposition(self) -> OrbitDecomposition:
        images = self.point_map()
        seen = [False] * (self.n + 1)
        cycles, words = [], []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = images[k - 1]
            cycles.append(tuple(cycle))
            words.append(tuple(self._letters[p - 1] for p in cycle))
        return OrbitDecomposition(tuple(cycles), tuple(words))

    def cycle_length(self, k: int) -> int:
        self._check_point(k)
        images = self.point_map()
        m, j = 1, images[k - 1]
        while j != k:
            j = images[j - 1]
            m += 1
        return m

    def is_minimal(self) -> bool:
        """The only invariant subsets are the empty set and all points."""
        return self.cycle_length(1) == self.n

    def clustering_word(self) -> Optional[Word]:
        """Coding of the orbit of point 1 over one period, when the map is minimal."""
        if not self.is_minimal():
            return None
        w = self.trajectory(1, self.n)
        assert is_primitive(w) and parikh(w, self.r) == self.lengths
        return w

    def nonminimality_witness(self) -> Optional[Word]:
        """Coding of a shortest cycle when there is more than one cycle.

        The offsets along the returned word sum to zero, which is exactly
        the condition for a proper invariant subset.
        """
        decomposition = self.orbit_decomposition()
        if len(decomposition.cycles) == 1:
            return None
        w = min(decomposition.words, key=len)
        assert len(w) < self.n
        assert sum(self.offsets[a - 1] for a in w) == 0
        return w

    def offset_sum(self, w: Sequence[int]) -> int:
        return sum(self.offsets[a - 1] for a in w)

    def describe(self) -> Dict[str, object]:
        return {
            "lengths": list(self.lengths),
            "permutation": list(self.permutation.images),
            "offsets": list(self.offsets),
            "n": self.n,
        }


def minimality_criterion_r3(lengths: Sequence[int], pi: Permutation) -> bool:
    """Closed-form minimality test for three intervals (coprimality of block sums)."""
    if len(lengths) != 3 or pi.r != 3:
        raise ValueError("the closed-form criterion is for three intervals only")
    n1, n2, n3 = lengths
    if min(lengths) < 1:
        raise ValueError(f"lengths must be positive, got {tuple(lengths)}")
    images = pi.images
    if images == (3, 2, 1):
        return gcd(n1 + n2, n2 + n3) == 1
    if images == (2, 3, 1):
        return gcd(n1, n2 + n3) == 1
    if images == (3, 1, 2):
        return gcd(n3, n1 + n2) == 1
    return False


def from_clustering_word(w: Sequence[int]) -> DiscreteIET:
    """The exchange sending the first column of the conjugate array to its last column.

    ``w`` must be primitive, clustering, and use every letter of ``1..max(w)``.
    """
    w = tuple(w)
    if not is_primitive(w):
        raise ValueError(f"{w} is not primitive")
    report = clustering_report(w)
    if not report.is_clustering:
        raise ValueError(f"{w} is not clustering")
    if report.occurring_letters != tuple(range(1, len(report.occurring_letters) + 1)):
        raise ValueError(f"letters of {w} are not exactly 1..{max(w)}")
    T = DiscreteIET(parikh(w), report.permutation)

    # point j is the first letter of row j; the same occurrence ends the row
    # starting one letter later, and T must carry j to that row
    rows = sorted_conjugates(w)
    position = {start: j for j, (start, _) in enumerate(rows, start=1)}
    n = len(w)
    for j, (start, _) in enumerate(rows, start=1):
        if T.apply(j) != position[start % n + 1]:
            raise AssertionError(f"column map of {w} disagrees with {T} at point {j}")
    return T


def all_length_vectors(r: int, total_max: int, total_min: int = None) -> List[Tuple[int, ...]]:
    """Positive integer vectors of size ``r`` with ``total_min <= sum <= total_max``."""
    if total_min is None:
        total_min = r
    out: List[Tuple[int, ...]] = []

    def rec(prefix: List[int], remaining: int) -> None:
        if len(prefix) == r:
            if sum(prefix) >= total_min:
                out.append(tuple(prefix))
            return
        slots = r - len(prefix) - 1
        for x in range(1, remaining - slots + 1):
            prefix.append(x)
            rec(prefix, remaining - x)
            prefix.pop()

    rec([], total_max)
    return out
