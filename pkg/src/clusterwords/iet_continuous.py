"""Interval exchanges on ``[0, 1)`` with exact lengths.

Intervals are half-open, ``[left, right)``, both for the partition and for
the images.  All lengths of one exchange are rational or live in a single
quadratic field ``Q(sqrt(d))``.

Sturmian coding convention
--------------------------
The golden rotation is the two-interval exchange with lengths
``(1 - g, g)``, ``g = (sqrt(5) - 1)/2``, and permutation ``(2, 1)``, i.e.
``x -> x + g mod 1``.  :func:`sturmian_word` codes the orbit of ``g``
(the image of 0) and writes the long interval as letter 1 and the short one
as letter 2.  With this convention the golden coding is exactly the fixed
point ``121121211211212...`` of ``1 -> 12, 2 -> 1``.  The raw
:meth:`ContinuousIET.trajectory` from 0 keeps the block indices and reads
``1`` followed by that fixed point with the two letters exchanged.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact import ExactReal, as_exact, format_exact, qsqrt, radicand
from .iet_discrete import DiscreteIET
from .words import Permutation, Word, occurs_in


@dataclass(frozen=True)
class ContinuousIET:
    alphas: Tuple[ExactReal, ...]
    permutation: Permutation
    taus: Tuple[ExactReal, ...] = field(init=False)
    cuts: Tuple[ExactReal, ...] = field(init=False)

    def __post_init__(self):
        alphas = tuple(as_exact(a) for a in self.alphas)
        pi = self.permutation
        if not isinstance(pi, Permutation):
            pi = Permutation(tuple(pi))
        if len(alphas) != pi.r:
            raise ValueError(f"{len(alphas)} lengths for a permutation of {pi.r} letters")
        fields = {radicand(a) for a in alphas} - {None}
        if len(fields) > 1:
            raise ValueError(f"lengths mix several quadratic fields: sqrt of {sorted(fields)}")
        if any(a <= 0 for a in alphas):
            raise ValueError("interval lengths must be positive")
        if sum(alphas, Fraction(0)) != 1:
            raise ValueError(f"lengths sum to {format_exact(sum(alphas, Fraction(0)))}, not 1")
        inv = pi.inverse()
        r = pi.r
        cuts = []
        acc = Fraction(0)
        for a in alphas:
            cuts.append(acc)
            acc = acc + a
        taus = []
        for i in range(1, r + 1):
            before_image = sum((alphas[j - 1] for j in range(1, r + 1) if inv(j) < inv(i)), Fraction(0))
            taus.append(before_image - cuts[i - 1])
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "permutation", pi)
        object.__setattr__(self, "taus", tuple(taus))
        object.__setattr__(self, "cuts", tuple(cuts))
        self._check_tiling()

    def _check_tiling(self) -> None:
        images = sorted((self.cuts[i] + self.taus[i], self.alphas[i]) for i in range(self.r))
        position = Fraction(0)
        for left, length in images:
            if left != position:
                raise AssertionError("images of the intervals do not tile [0, 1)")
            position = left + length
        if position != 1:
            raise AssertionError("images of the intervals do not tile [0, 1)")

    @property
    def r(self) -> int:
        return len(self.alphas)

    @property
    def interior_cuts(self) -> Tuple[ExactReal, ...]:
        return self.cuts[1:]

    def interval_of(self, x) -> int:
        """1-based index of the interval containing ``x``."""
        x = as_exact(x)
        if not 0 <= x < 1:
            raise ValueError(f"{format_exact(x)} is outside [0, 1)")
        return bisect_right(self.cuts, x)

    def apply(self, x) -> ExactReal:
        x = as_exact(x)
        return x + self.taus[self.interval_of(x) - 1]

    __call__ = apply

    def trajectory(self, x, length: int, labels: Optional[Mapping[int, int]] = None) -> Word:
        x = as_exact(x)
        if length < 0:
            raise ValueError("negative trajectory length")
        if length:
            self.interval_of(x)  # range check; later points stay in [0, 1)
        cuts, taus = self.cuts, self.taus
        out = []
        for _ in range(length):
            i = bisect_right(cuts, x)
            out.append(labels[i] if labels is not None else i)
            x = x + taus[i - 1]
        return tuple(out)

    def orbit(self, x, length: int) -> List[ExactReal]:
        x = as_exact(x)
        points = []
        for _ in range(length):
            points.append(x)
            x = self.apply(x)
        return points

    def describe(self) -> dict:
        return {
            "alphas": [format_exact(a) for a in self.alphas],
            "permutation": list(self.permutation.images),
            "taus": [format_exact(t) for t in self.taus],
            "cuts": [format_exact(c) for c in self.cuts],
        }


def from_discrete(T: DiscreteIET) -> ContinuousIET:
    """Scale the blocks of ``T`` to lengths ``n_i / n``; codings agree from ``(k-1)/n``."""
    return ContinuousIET(tuple(Fraction(x, T.n) for x in T.lengths), T.permutation)


def contains_square(
    T: ContinuousIET,
    w: Sequence[int],
    starts: Optional[Iterable] = None,
    horizon: Optional[int] = None,
) -> Optional[Tuple[ExactReal, int]]:
    """Look for ``ww`` in the trajectories of the given starting points.

    Returns ``(start, offset)`` for the first hit, ``None`` when nothing was
    found within ``horizon`` letters.  ``None`` is not a proof of absence.
    Starting points default to 0 and the interior cuts.
    """
    w = tuple(w)
    if horizon is None:
        horizon = 2 * len(w)
    if horizon < 2 * len(w):
        raise ValueError(f"horizon {horizon} is shorter than ww ({2 * len(w)} letters)")
    if starts is None:
        starts = (Fraction(0),) + T.interior_cuts
    square = w + w
    for x in starts:
        x = as_exact(x)
        pos = occurs_in(square, T.trajectory(x, horizon))
        if pos >= 0:
            return x, pos
    return None


@dataclass(frozen=True)
class KeaneVerdict:
    """Either a certified coincidence ``T^m(cut_i) == cut_j`` or none up to ``depth``.

    ``i`` and ``j`` index the interior cuts from 1 (cut ``i`` is the left end
    of interval ``i + 1``).
    """

    depth: int
    collision: Optional[Tuple[int, int, int]] = None

    @property
    def found(self) -> bool:
        return self.collision is not None

    def to_dict(self) -> dict:
        if self.collision is None:
            return {"verdict": "no-collision", "depth": self.depth}
        i, j, m = self.collision
        return {"verdict": "collision", "depth": self.depth, "i": i, "j": j, "m": m}


def keane_check(T: ContinuousIET, depth: int) -> KeaneVerdict:
    """Search forward orbits of the interior cuts for a hit on another cut.

    A hit rules out the condition that discontinuity orbits are infinite and
    disjoint; no hit only says so up to ``depth`` iterations.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    cuts = T.interior_cuts
    index = {c: j for j, c in enumerate(cuts, start=1)}
    points = list(cuts)
    for m in range(1, depth + 1):
        for i, x in enumerate(points):
            y = T.apply(x)
            points[i] = y
            j = index.get(y)
            if j is not None:
                return KeaneVerdict(depth, (i + 1, j, m))
    return KeaneVerdict(depth, None)


def golden_ratio_conjugate() -> ExactReal:
    """``(sqrt(5) - 1) / 2``."""
    return (qsqrt(5) - 1) / 2


def rotation(alpha) -> ContinuousIET:
    """``x -> x + alpha mod 1`` as an exchange of ``[0, 1-alpha)`` and ``[1-alpha, 1)``."""
    alpha = as_exact(alpha)
    return ContinuousIET((1 - alpha, alpha), Permutation((2, 1)))


def golden_rotation() -> ContinuousIET:
    return rotation(golden_ratio_conjugate())


def sturmian_word(alpha, length: int) -> Word:
    """Characteristic Sturmian word of slope ``alpha`` (see the module docstring).

    Letter 1 codes ``[1-alpha, 1)`` and letter 2 codes ``[0, 1-alpha)``;
    for ``alpha > 1/2`` letter 1 is the frequent one.
    """
    T = rotation(alpha)
    return T.trajectory(T.apply(0), length, labels={1: 2, 2: 1})


def fibonacci_word(length: int) -> Word:
    """Prefix of the fixed point of ``1 -> 12, 2 -> 1``."""
    w: Tuple[int, ...] = (1,)
    while len(w) < length:
        w = tuple(x for a in w for x in ((1, 2) if a == 1 else (1,)))
    return w[:length]


SLOPES = {"golden": golden_ratio_conjugate}


def parse_slope(text: str) -> ExactReal:
    """``golden`` or an exact number strictly between 0 and 1."""
    if text in SLOPES:
        return SLOPES[text]()
    alpha = as_exact(text)
    if not 0 < alpha < 1:
        raise ValueError(f"slope {text!r} must lie strictly between 0 and 1")
    return alpha
