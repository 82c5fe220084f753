"""Batch command line interface.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1 on
a domain error (well-formed input outside an operation's domain), 2 on a
usage error (argparse failures and malformed permutation/word syntax, which
report the position of the offending character).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import complexes, perms, pipedreams, poly, selftest as selftest_mod, shapes, shuffles
from .perms import ParseError


def _parse_shape(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad shape {text!r}", 0) from exc


def _require(args, name: str, flag: str | None = None):
    value = getattr(args, name, None)
    if value is None:
        raise ParseError(f"missing required argument {flag or name}", 0)
    return value


def _emit(args, payload_text: str, payload_json) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, sort_keys=True))
    else:
        print(payload_text)


def _poly_payload(p: poly.Polynomial):
    return str(p), p.to_json()


# -- perm ----------------------------------------------------------------


def _cmd_perm(args) -> int:
    if args.action == "reduced-words":
        target = perms.parse_permutation(_require(args, "perm"))
        words = perms.reduced_words(target)
        _emit(args, "\n".join(perms.format_word(w) for w in words),
              [list(w) for w in words])
    elif args.action == "lehmer":
        target = perms.parse_permutation(_require(args, "perm"))
        code = perms.lehmer_code(target)
        _emit(args, ",".join(map(str, code)), list(code))
    elif args.action == "demazure":
        word = perms.parse_word(_require(args, "word", "--word"))
        result = perms.demazure(word)
        _emit(args, perms.format_permutation(result),
              {"permutation": perms.format_permutation(result)})
    elif args.action == "tau":
        target = perms.parse_permutation(_require(args, "perm"))
        result = perms.tau(target, args.power)
        _emit(args, perms.format_permutation(result),
              {"permutation": perms.format_permutation(result)})
    return 0


# -- poly ----------------------------------------------------------------


def _cmd_poly(args) -> int:
    if args.family == "schubert":
        result = poly.schubert(perms.parse_permutation(args.arg))
    elif args.family == "grothendieck":
        result = poly.grothendieck(perms.parse_permutation(args.arg))
    elif args.family == "schur":
        result = poly.schur(_parse_shape(args.arg), args.vars)
    elif args.family == "fqs":
        result = poly.fundamental_quasisymmetric(_parse_shape(args.arg), args.vars)
    elif args.family == "slide":
        result = poly.slide(_parse_shape(args.arg))
    elif args.family == "glide":
        result = poly.glide(_parse_shape(args.arg))
    elif args.family == "backstable":
        result = poly.backstable_truncation(perms.parse_permutation(args.arg),
                                            args.lower_bound)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError
    _emit(args, *_poly_payload(result))
    return 0


# -- expand --------------------------------------------------------------


def _cmd_expand(args) -> int:
    if args.rule == "schubert-slides":
        target = perms.parse_permutation(args.arg)
        expansion = poly.expand_schubert_into_slides(target)
        text = "\n".join(f"{perms.format_word(w)}: {p}" for w, p in sorted(expansion.items()))
        data = [{"word": list(w), "polynomial": p.to_json()}
                for w, p in sorted(expansion.items())]
    elif args.rule == "schur-fqs":
        expansion = poly.expand_schur_into_fundamentals(_parse_shape(args.arg), args.vars)
        text = "\n".join(f"{shapes.tableau_to_json(t)}: {p}" for t, p in sorted(expansion.items()))
        data = [{"tableau": shapes.tableau_to_json(t), "polynomial": p.to_json()}
                for t, p in sorted(expansion.items())]
    elif args.rule == "groth-glides":
        target = perms.parse_permutation(args.arg)
        expansion = poly.expand_grothendieck_into_glides(target)
        items = sorted(expansion.items(), key=lambda kv: kv[0].sorted_crosses())
        text = "\n".join(f"{list(d.sorted_crosses())}: {p}" for d, p in items)
        data = [{"pipe_dream": pipedreams.to_json(d), "polynomial": p.to_json()}
                for d, p in items]
    else:  # pragma: no cover
        raise AssertionError
    _emit(args, text, data)
    return 0


# -- pipedreams ----------------------------------------------------------


def _cmd_pipedreams(args) -> int:
    target = perms.parse_permutation(args.perm)
    if args.action == "list":
        pool = (pipedreams.all_pipe_dreams(target, max_excess=args.max_excess)
                if args.all else pipedreams.reduced_pipe_dreams(target))
    elif args.action == "qy":
        pool = pipedreams.quasi_yamanouchi_pipe_dreams(target, reduced_only=not args.all)
    else:  # render
        pool = pipedreams.reduced_pipe_dreams(target)
    dreams = sorted(pool, key=lambda d: d.sorted_crosses())
    if args.action == "render":
        if args.format == "svg":
            print("\n".join(pipedreams.render_svg(d) for d in dreams))
        else:
            print("\n\n".join(pipedreams.render_ascii(d) for d in dreams))
        return 0
    _emit(args, "\n".join(repr(d) for d in dreams),
          [pipedreams.to_json(d) for d in dreams])
    return 0


# -- complex -------------------------------------------------------------


def _complex_from_args(args) -> complexes.SimplicialComplex:
    if args.kind == "classify":
        # infer the complex family from the flags that were supplied
        if args.shape is not None:
            kind = "tableau"
        elif args.target is not None:
            kind = "slide"
        elif args.words is not None:
            kind = "delta-w"
        else:
            kind = "subword"
    else:
        kind = args.kind
    if kind == "subword":
        return complexes.subword_complex(perms.parse_word(_require(args, "word", "--word")),
                                         perms.parse_permutation(_require(args, "perm", "--perm")))
    if kind == "slide":
        return complexes.slide_complex(perms.parse_word(_require(args, "word", "--word")),
                                       perms.parse_word(_require(args, "target", "--target")))
    if kind == "delta-w":
        words = [perms.parse_word(w) for w in _require(args, "words", "--words").split(";")]
        return complexes.word_set_complex(perms.parse_word(_require(args, "word", "--word")), words)
    if kind == "tableau":
        return complexes.tableau_complex(args.family,
                                         _parse_shape(_require(args, "shape", "--shape")),
                                         args.vars)
    raise AssertionError  # pragma: no cover


def _cmd_complex(args) -> int:
    if args.kind == "decompose-ssyt":
        decomposition = complexes.ssyt_standardization_decomposition(
            _parse_shape(_require(args, "shape", "--shape")), args.vars)
        lines = []
        data = []
        for t, sub in decomposition.items():
            result = complexes.classify_ball_or_sphere(sub)
            lines.append(f"{shapes.tableau_to_json(t)}: {len(sub.facets)} facets, {result.kind}")
            data.append({"tableau": shapes.tableau_to_json(t),
                         "complex": sub.to_json(), "kind": result.kind})
        _emit(args, "\n".join(lines), data)
        return 0
    if args.kind == "sr-generators":
        complex_ = complexes.subword_complex(
            perms.parse_word(_require(args, "word", "--word")),
            perms.parse_permutation(_require(args, "perm", "--perm")))
        gens = sorted(sorted(g) for g in complexes.stanley_reisner_generators(complex_))
        _emit(args, "\n".join(str(g) for g in gens), gens)
        return 0

    complex_ = _complex_from_args(args)
    if args.classify or args.kind == "classify":
        result = complexes.classify_ball_or_sphere(complex_)
        payload = {"kind": result.kind,
                   "boundary_ridges": sorted(sorted(r) for r in result.boundary_ridges),
                   "reason": result.reason}
        _emit(args, f"{result.kind}" + (f" ({result.reason})" if result.reason else ""),
              payload)
        return 0
    labels = None
    if args.kind in ("subword", "slide", "delta-w") and args.word:
        ambient = perms.parse_word(args.word)
        labels = {p: f"{p}:{ambient[p - 1]}" for p in range(1, len(ambient) + 1)}
    if args.format == "dot":
        print(complexes.to_dot(complex_, labels))
    elif args.format == "svg":
        print(complexes.to_svg(complex_, labels))
    else:
        _emit(args, repr(complex_), complex_.to_json())
    return 0


# -- shuffle -------------------------------------------------------------


def _parse_positions(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad positions {text!r}", 0) from exc


def _cmd_shuffle(args) -> int:
    if args.action == "monk":
        positions = _parse_positions(_require(args, "pos", "--pos"))
        if len(positions) != 1:
            raise ParseError("monk insertion takes one position", 0)
        trace: list[str] | None = [] if args.trace else None
        result = shuffles.monk_shuffle(args.i, perms.parse_word(_require(args, "word", "--word")),
                                       positions[0], trace=trace)
        if trace:
            print("\n".join(trace), file=sys.stderr)
        _emit(args, perms.format_word(result), list(result))
    elif args.action == "monk-inv":
        word, position = shuffles.monk_unshuffle(
            args.i, perms.parse_word(_require(args, "word", "--word")),
            perms.parse_permutation(_require(args, "perm", "--perm")))
        _emit(args, f"{perms.format_word(word)} @ {position}",
              {"word": list(word), "position": position})
    elif args.action == "pieri":
        positions = _parse_positions(_require(args, "pos", "--pos"))
        trace = [] if args.trace else None
        result = shuffles.pieri_shuffle(args.i, perms.parse_word(_require(args, "word", "--word")),
                                        positions, variant=args.variant, trace=trace)
        if trace:
            print("\n".join(trace), file=sys.stderr)
        _emit(args, perms.format_word(result), list(result))
    elif args.action == "pieri-inv":
        marked = shuffles.pieri_unshuffle(
            args.i, perms.parse_word(_require(args, "word", "--word")),
            perms.parse_permutation(_require(args, "perm", "--perm")),
            variant=args.variant)
        word, positions = marked.word_and_positions()
        _emit(args, f"{perms.format_word(word)} @ {','.join(map(str, positions))}",
              {"word": list(word), "positions": list(positions)})
    elif args.action == "verify":
        return _cmd_shuffle_verify(args)
    return 0


def _cmd_shuffle_verify(args) -> int:
    target = perms.parse_permutation(_require(args, "perm", "--perm"))
    if args.rule == "monk":
        outputs = {}
        for w in perms.reduced_words(target):
            for j in range(1, len(w) + 2):
                outputs[(w, j)] = shuffles.monk_shuffle(args.i, w, j, validate=True)
        expected = sorted(w for s in shuffles.monk_rhs(target, args.i)
                          for w in perms.reduced_words(s))
        ok = sorted(outputs.values()) == expected
        for (w, j), out in sorted(outputs.items()):
            inv = shuffles.monk_unshuffle(
                args.i, out, target)
            ok = ok and inv == (w, j)
        print(f"monk bijection on {args.perm}, i={args.i}: "
              f"{'ok' if ok else 'FAILED'} ({len(outputs)} shuffles)")
        return 0 if ok else 1
    variant = "c" if args.rule == "pieri-c" else "r"
    import itertools
    outputs = {}
    for w in perms.reduced_words(target):
        for positions in itertools.combinations(range(1, len(w) + args.k + 1), args.k):
            out = shuffles.pieri_shuffle(args.i, w, positions, variant=variant,
                                         validate=True)
            outputs[(w, positions)] = out
    expected = sorted(w for s in shuffles.pieri_targets(target, args.i, args.k, variant)
                      for w in perms.reduced_words(s))
    ok = sorted(outputs.values()) == expected
    for (w, positions), out in sorted(outputs.items()):
        marked = shuffles.pieri_unshuffle(args.i, out, target, variant=variant)
        ok = ok and marked.word_and_positions() == (w, positions)
    print(f"pieri-{variant} bijection on {args.perm}, i={args.i}, k={args.k}: "
          f"{'ok' if ok else 'FAILED'} ({len(outputs)} shuffles)")
    return 0 if ok else 1


# -- wiring --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # --format may come before or after the subcommand; the subparser copy
    # must not clobber an already-parsed value with its default
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "json", "svg", "dot"),
                        default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="schubcalc", parents=[shared])
    parser.set_defaults(format="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[shared], **kwargs)

    p = add_parser("perm", help="permutation and word operations")
    p.add_argument("action", choices=("reduced-words", "lehmer", "demazure", "tau"))
    p.add_argument("perm", nargs="?", help="bracketed one-line notation")
    p.add_argument("--word", help="word argument for demazure")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=_cmd_perm)

    p = add_parser("poly", help="polynomial families")
    p.add_argument("family", choices=("schubert", "grothendieck", "schur", "fqs",
                                      "slide", "glide", "backstable"))
    p.add_argument("arg", help="permutation or comma-separated shape")
    p.add_argument("--vars", type=int, default=3, help="number of variables")
    p.add_argument("--lower-bound", type=int, default=1, dest="lower_bound")
    p.set_defaults(func=_cmd_poly)

    p = add_parser("expand", help="expansion identities")
    p.add_argument("rule", choices=("schubert-slides", "schur-fqs", "groth-glides"))
    p.add_argument("arg")
    p.add_argument("--vars", type=int, default=3)
    p.set_defaults(func=_cmd_expand)

    p = add_parser("pipedreams", help="pipe dream enumeration and rendering")
    p.add_argument("action", choices=("list", "qy", "render"))
    p.add_argument("perm")
    p.add_argument("--all", action="store_true", help="include non-reduced pipe dreams")
    p.add_argument("--max-excess", type=int, default=None, dest="max_excess")
    p.set_defaults(func=_cmd_pipedreams)

    p = add_parser("complex", help="simplicial complexes")
    p.add_argument("kind", choices=("subword", "slide", "delta-w", "tableau",
                                    "classify", "decompose-ssyt", "sr-generators"))
    p.add_argument("--word", help="ambient word")
    p.add_argument("--perm", help="target permutation")
    p.add_argument("--target", help="target word for slide complexes")
    p.add_argument("--words", help="semicolon-separated word set for delta-w")
    p.add_argument("--family", choices=shapes.FAMILIES, default="ssyt")
    p.add_argument("--shape", help="comma-separated shape")
    p.add_argument("--vars", type=int, default=3)
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=_cmd_complex)

    p = add_parser("shuffle", help="Monk/Pieri insertion bijections")
    p.add_argument("action", choices=("monk", "monk-inv", "pieri", "pieri-inv", "verify"))
    p.add_argument("--i", type=int, required=False, default=1)
    p.add_argument("--word", required=False)
    p.add_argument("--pos", help="position (monk) or comma-separated positions (pieri)")
    p.add_argument("--perm", help="source permutation for the inverses / verify")
    p.add_argument("--variant", choices=("c", "r"), default="c")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--rule", choices=("monk", "pieri-c", "pieri-r"), default="monk")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_shuffle)

    p = add_parser("selftest", help="run the built-in verification corpus")
    p.set_defaults(func=lambda args: selftest_mod.run(verbose=True))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
