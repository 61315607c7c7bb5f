"""Brute-force checks over every small instance.

Each ``verify_*`` function enumerates a finite family, checks one statement
relating the transform to interval exchanges on every member, and returns a
:class:`VerificationReport`.  Failures are collected (and logged as they are
found), never raised.
"""

from __future__ import annotations

import json
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .bwt import AntecedentStatus, bwt, clustering_image, clustering_report, inverse_bwt
from .iet_continuous import from_discrete
from .iet_discrete import DiscreteIET, all_length_vectors
from .words import (
    Permutation,
    Word,
    all_permutations,
    canonical_conjugate,
    format_word,
    has_full_support,
    is_primitive,
    parikh,
)

log = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    suite: str
    params: Dict[str, int]
    counts: Counter = field(default_factory=Counter)
    failures: List[Dict[str, object]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        log.warning("%s failure: %s", self.suite, info)
        self.failures.append(info)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.counts.update(other.counts)
        self.failures.extend(other.failures)
        self.elapsed = max(self.elapsed, other.elapsed)
        return self

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "counts": dict(sorted(self.counts.items())),
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        lines += [f"{k}: {v}" for k, v in self.params.items()]
        lines += [f"count.{k}: {v}" for k, v in sorted(self.counts.items())]
        lines.append(f"failures: {len(self.failures)}")
        lines += [f"failure: {json.dumps(f)}" for f in self.failures]
        lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


def enumerate_primitive_words(r: int, n: int, prefix: Sequence[int] = ()) -> Iterator[Word]:
    """Primitive words of length ``n`` using every letter of ``1..r``, in lexicographic order."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    prefix = tuple(prefix)
    for tail in product(range(1, r + 1), repeat=n - len(prefix)):
        w = prefix + tail
        if has_full_support(w, r) and is_primitive(w):
            yield w


class _MinimalCycles:
    """Per (lengths, permutation): the rotations of the minimal cycle word, or None."""

    def __init__(self):
        self._cache: Dict[Tuple[Tuple[int, ...], Permutation], Optional[frozenset]] = {}

    def rotations(self, lengths, pi) -> Optional[frozenset]:
        key = (lengths, pi)
        if key not in self._cache:
            T = DiscreteIET(lengths, pi)
            self._cache[key] = None
            if T.is_minimal():
                c = T.trajectory(1, T.n)
                self._cache[key] = frozenset(_windows(c + c + c, T.n))
        return self._cache[key]


def _windows(periodic: Word, n: int) -> List[Word]:
    # ww sits in the periodic coding iff w is one of its length-n windows
    return [periodic[i:i + n] for i in range(len(periodic) - 2 * n + 1)
            if periodic[i:i + n] == periodic[i + n:i + 2 * n]]


def _theorem1_chunk(r: int, n: int, first: int) -> VerificationReport:
    report = VerificationReport("theorem1", {"r": r, "n": n})
    cycles = _MinimalCycles()
    perms = all_permutations(r, include_identity=False)
    continuous_seen = set()
    for w in enumerate_primitive_words(r, n, prefix=(first,)):
        verdict = clustering_report(w)
        lengths = parikh(w, r)
        realized = [pi for pi in perms if (rot := cycles.rotations(lengths, pi)) is not None and w in rot]
        expected = [verdict.permutation] if verdict.is_clustering else []
        report.counts["words"] += 1
        report.counts["clustering" if verdict.is_clustering else "non-clustering"] += 1
        if realized != expected:
            report.fail(word=format_word(w), clustering=[str(p) for p in expected],
                        minimal_iet=[str(p) for p in realized])
            continue
        if realized and (lengths, realized[0]) not in continuous_seen:
            # the rational continuous exchange codes the same periodic trajectory
            continuous_seen.add((lengths, realized[0]))
            T = DiscreteIET(lengths, realized[0])
            code = from_discrete(T).trajectory(0, 3 * n)
            if code != T.trajectory(1, 3 * n) or not any(
                code[i:i + 2 * n] == w + w for i in range(n + 1)
            ):
                report.fail(word=format_word(w), continuous=str(realized[0]))
            report.counts["continuous-checked"] += 1
    return report


def _run_chunks(fn, jobs, workers: int) -> List[VerificationReport]:
    if workers <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def verify_theorem1(r: int, n_max: int, workers: int = 1) -> VerificationReport:
    """Clustering verdicts against the minimal discrete exchange built on the Parikh vector.

    For every primitive word ``w`` using all ``r`` letters and ``r <= |w| <= n_max``,
    the set of permutations ``pi != id`` for which ``ww`` appears in the coding of the
    minimal exchange with lengths ``parikh(w)`` and permutation ``pi`` must be exactly
    ``{pi}`` when ``w`` is ``pi``-clustering and empty otherwise.
    """
    start = time.perf_counter()
    report = VerificationReport("theorem1", {"r": r, "n_max": n_max})
    jobs = [(r, n, first) for n in range(r, n_max + 1) for first in range(1, r + 1)]
    for part in _run_chunks(_theorem1_chunk, jobs, workers):
        report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report


def verify_injectivity(r: int, n_max: int) -> VerificationReport:
    """Inverting the transform recovers the conjugacy class, and distinct classes have distinct images."""
    start = time.perf_counter()
    report = VerificationReport("injectivity", {"r": r, "n_max": n_max})
    for n in range(r, n_max + 1):
        images: Dict[Word, Word] = {}
        for w in enumerate_primitive_words(r, n):
            report.counts["words"] += 1
            canon = canonical_conjugate(w)
            image = bwt(w)
            result = inverse_bwt(image)
            if result.status is not AntecedentStatus.PRIMITIVE or result.antecedent != canon:
                report.fail(word=format_word(w), image=format_word(image), status=result.status.value)
            previous = images.setdefault(image, canon)
            if previous != canon:
                report.fail(word=format_word(w), image=format_word(image), clash=format_word(previous))
        report.counts["classes"] += len(images)
    report.elapsed = time.perf_counter() - start
    return report


def verify_nonsurjectivity(r: int, length_bound: int) -> VerificationReport:
    """A clustering-shaped word has a primitive antecedent exactly when its exchange is minimal."""
    start = time.perf_counter()
    report = VerificationReport("nonsurjectivity", {"r": r, "length_bound": length_bound})
    for lengths in all_length_vectors(r, length_bound):
        for pi in all_permutations(r, include_identity=False):
            T = DiscreteIET(lengths, pi)
            image = clustering_image(pi, lengths)
            result = inverse_bwt(image)
            if T.is_minimal():
                report.counts["minimal"] += 1
                expected = canonical_conjugate(T.clustering_word())
                if result.status is not AntecedentStatus.PRIMITIVE or result.antecedent != expected:
                    report.fail(lengths=list(lengths), permutation=str(pi), status=result.status.value)
            else:
                report.counts["non-minimal"] += 1
                report.counts[f"non-minimal.{result.status.value}"] += 1
                if result.status is AntecedentStatus.PRIMITIVE:
                    report.fail(lengths=list(lengths), permutation=str(pi), status=result.status.value)
    report.elapsed = time.perf_counter() - start
    return report


def clustering_census(r: int, n: int) -> List[Tuple[Word, Permutation]]:
    """One canonical representative per conjugacy class of primitive clustering words."""
    found = {}
    for w in enumerate_primitive_words(r, n):
        canon = canonical_conjugate(w)
        if canon in found:
            continue
        verdict = clustering_report(w)
        if verdict.is_clustering:
            found[canon] = verdict.permutation
    return sorted(found.items())


def minimal_cycle_census(r: int, n: int) -> List[Tuple[Word, Permutation]]:
    """The same classes, produced by running every minimal exchange on ``n`` points."""
    found = set()
    for lengths in all_length_vectors(r, n, n):
        for pi in all_permutations(r, include_identity=False):
            w = DiscreteIET(lengths, pi).clustering_word()
            if w is not None:
                found.add((canonical_conjugate(w), pi))
    return sorted(found)


def binary_balance_report(n_max: int) -> VerificationReport:
    """Binary words: clustering iff ``ww`` is balanced."""
    from .words import is_balanced

    start = time.perf_counter()
    report = VerificationReport("binary-balance", {"n_max": n_max})
    for n in range(2, n_max + 1):
        for w in enumerate_primitive_words(2, n):
            report.counts["words"] += 1
            if clustering_report(w).is_clustering != is_balanced(w + w):
                report.fail(word=format_word(w))
    report.elapsed = time.perf_counter() - start
    return report
