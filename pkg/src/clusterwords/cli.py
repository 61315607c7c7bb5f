"""Command-line front end: ``clusterwords <subcommand> ...``.

Every subcommand accepts ``--json``; the JSON documents follow
``clusterwords/cli_schema.json``.  Exact numbers are written ``p/q`` or
``a+b*sqrt(d)`` (also ``a-b*sqrt(d)``, ``b*sqrt(d)``, ``sqrt(d)``), with
rational ``a``, ``b`` and a positive integer ``d``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .bwt import AntecedentStatus, bwt, clustering_report, inverse_bwt
from .exact import format_exact, parse_exact
from .iet_continuous import ContinuousIET, keane_check, parse_slope, sturmian_word
from .iet_discrete import DiscreteIET
from .oracle import (
    clustering_census,
    verify_injectivity,
    verify_nonsurjectivity,
    verify_theorem1,
)
from .words import OrderedAlphabet, Permutation, format_word, parse_word


class UsageError(Exception):
    pass


def _word(text: str, alphabet: Optional[OrderedAlphabet]):
    if not text.strip():
        raise UsageError("empty word")
    try:
        return parse_word(text, alphabet)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _exacts(text: str):
    try:
        return [parse_exact(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_bwt(args) -> dict:
    w = _word(args.word, args.alphabet)
    image = bwt(w)
    out = format_word(image, args.alphabet)
    return {"command": "bwt", "word": format_word(w, args.alphabet), "bwt": out, "_text": out}


def cmd_unbwt(args) -> dict:
    b = _word(args.word, args.alphabet)
    res = inverse_bwt(b)
    fmt = lambda w: format_word(w, args.alphabet)  # noqa: E731
    if res.status is AntecedentStatus.PRIMITIVE:
        text = f"primitive: {fmt(res.antecedent)}"
    elif res.status is AntecedentStatus.NON_PRIMITIVE:
        text = f"non-primitive: ({fmt(res.antecedent)})^{res.power}"
    else:
        text = "no antecedent"
    return {
        "command": "unbwt",
        "input": fmt(b),
        "status": res.status.value,
        "antecedent": fmt(res.antecedent) if res.antecedent is not None else None,
        "power": res.power,
        "cycle_words": [fmt(c) for c in res.cycle_words],
        "_text": text,
    }


def cmd_cluster(args) -> dict:
    w = _word(args.word, args.alphabet)
    rep = clustering_report(w)
    if rep.is_clustering:
        text = f"clustering pi={rep.permutation} {'perfect' if rep.perfect else 'not-perfect'}"
        if rep.occurring_letters != tuple(range(1, len(rep.occurring_letters) + 1)):
            text += f" letters={format_word(rep.occurring_letters, args.alphabet)}"
    else:
        text = "not clustering"
    return {
        "command": "cluster",
        "word": format_word(w, args.alphabet),
        "is_clustering": rep.is_clustering,
        "permutation": str(rep.permutation) if rep.permutation else None,
        "perfect": rep.perfect,
        "bwt": format_word(rep.bwt_image, args.alphabet),
        "occurring_letters": list(rep.occurring_letters),
        "_text": text,
    }


def cmd_iet(args) -> dict:
    try:
        T = DiscreteIET(_ints(args.lengths), _perm(args.permutation))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    selected = [f for f in ("minimal", "word", "orbits", "witness") if getattr(args, f)]
    if not selected:
        selected = ["minimal", "word", "orbits", "witness"]
    decomposition = T.orbit_decomposition()
    word = T.clustering_word()
    witness = T.nonminimality_witness()
    lines = []
    if "minimal" in selected:
        lines.append("minimal" if T.is_minimal() else "non-minimal")
    if "word" in selected:
        lines.append(format_word(word) if word else "no clustering word (non-minimal)")
    if "orbits" in selected:
        lines += [f"{' '.join(map(str, c))}: {format_word(w)}"
                  for c, w in zip(decomposition.cycles, decomposition.words)]
    if "witness" in selected:
        lines.append(f"witness: {format_word(witness)}" if witness else "witness: none (minimal)")
    return {
        "command": "iet",
        **T.describe(),
        "minimal": T.is_minimal(),
        "word": format_word(word) if word else None,
        "orbits": [{"cycle": list(c), "word": format_word(w)}
                   for c, w in zip(decomposition.cycles, decomposition.words)],
        "witness": format_word(witness) if witness else None,
        "_text": "\n".join(lines),
    }


def _continuous(alphas: str, permutation: str) -> ContinuousIET:
    try:
        return ContinuousIET(tuple(_exacts(alphas)), _perm(permutation))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_cont(args) -> dict:
    T = _continuous(args.alphas, args.permutation)
    try:
        x = parse_exact(args.start)
        code = T.trajectory(x, args.length)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = format_word(code)
    return {"command": "cont", **T.describe(), "start": format_exact(x), "length": args.length,
            "trajectory": out, "_text": out}


def cmd_sturmian(args) -> dict:
    try:
        alpha = parse_slope(args.slope)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = format_word(sturmian_word(alpha, args.length))
    return {"command": "sturmian", "slope": format_exact(alpha), "length": args.length,
            "word": out, "_text": out}


def cmd_keane(args) -> dict:
    T = _continuous(args.alphas, args.permutation)
    if args.depth < 1:
        raise UsageError("depth must be at least 1")
    verdict = keane_check(T, args.depth)
    if verdict.found:
        i, j, m = verdict.collision
        text = f"collision: T^{m}(cut {i}) = cut {j}"
    else:
        text = f"no collision up to depth {args.depth}"
    return {"command": "keane", **T.describe(), **verdict.to_dict(), "_text": text}


_SUITES = {
    "theorem1": lambda a: verify_theorem1(a.r, a.nmax, workers=a.workers),
    "injectivity": lambda a: verify_injectivity(a.r, a.nmax),
    "nonsurjectivity": lambda a: verify_nonsurjectivity(a.r, a.nmax),
}


def cmd_verify(args) -> dict:
    if not 1 <= args.r <= args.nmax:
        raise UsageError("need 1 <= r <= nmax")
    report = _SUITES[args.suite](args)
    return {"command": "verify", **report.to_dict(), "_text": report.to_text(),
            "_status": 0 if report.ok else 1}


def cmd_census(args) -> dict:
    if not 1 <= args.r <= args.n:
        raise UsageError("need 1 <= r <= n")
    classes = clustering_census(args.r, args.n)
    lines = [f"{format_word(w)} {pi}" for w, pi in classes]
    return {
        "command": "census",
        "r": args.r,
        "n": args.n,
        "classes": [{"word": format_word(w), "permutation": str(pi)} for w, pi in classes],
        "_text": "\n".join(lines) if lines else "(none)",
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON document")
    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("--alphabet", type=OrderedAlphabet.parse,
                       help="ordered tokens, e.g. 'a,b,c' or 'abc' (default: digits 1..9)")

    parser = argparse.ArgumentParser(prog="clusterwords", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bwt", parents=[common, words], help="Burrows-Wheeler transform of a cyclic word")
    p.add_argument("word")
    p.set_defaults(func=cmd_bwt)

    p = sub.add_parser("unbwt", parents=[common, words], help="antecedents of a word under the transform")
    p.add_argument("word")
    p.set_defaults(func=cmd_unbwt)

    p = sub.add_parser("cluster", parents=[common, words], help="clustering verdict and permutation")
    p.add_argument("word")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("iet", parents=[common], help="discrete interval exchange analysis")
    p.add_argument("lengths", help="comma separated block lengths, e.g. 4,2,3")
    p.add_argument("permutation", help="images pi(1),...,pi(r), e.g. 3,2,1")
    for flag in ("minimal", "word", "orbits", "witness"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(func=cmd_iet)

    p = sub.add_parser("cont", parents=[common], help="trajectory of a continuous exchange")
    p.add_argument("alphas", help="comma separated exact lengths summing to 1")
    p.add_argument("permutation")
    p.add_argument("start", help="exact starting point in [0, 1)")
    p.add_argument("length", type=int)
    p.set_defaults(func=cmd_cont)

    p = sub.add_parser("sturmian", parents=[common], help="characteristic Sturmian word")
    p.add_argument("slope", help="'golden' or an exact number in (0, 1)")
    p.add_argument("length", type=int)
    p.set_defaults(func=cmd_sturmian)

    p = sub.add_parser("keane", parents=[common], help="search for coincidences of cut orbits")
    p.add_argument("alphas")
    p.add_argument("permutation")
    p.add_argument("depth", type=int)
    p.set_defaults(func=cmd_keane)

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True,
                   help="largest word length (total length for nonsurjectivity)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="clustering conjugacy classes")
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.error(f"{args.command}: {exc}")
    text = result.pop("_text")
    status = result.pop("_status", 0)
    print(json.dumps(result, indent=2) if args.json else text)
    return status


if __name__ == "__main__":
    sys.exit(main())
