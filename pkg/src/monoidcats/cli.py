"""Command-line interface.

Exit codes: 0 success, 1 a checked property or axiom fails, 2 bad input,
3 an enumeration or size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from monoidcats import jsonio
from monoidcats.cat_c import check_morphism, enumerate_hom, hom_cardinality
from monoidcats.errors import CapExceeded, DomainError, NotAMorphism
from monoidcats.perm import canonical_perm, occ, pos
from monoidcats.quotient_q import export_truncation
from monoidcats.riguet import check_riguet_axioms, quotient, to_dot
from monoidcats.verify import SUITES, run_suites
from monoidcats.words import Alphabet, equiv, parikh, parse_word

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(DomainError):
    code = "input_error"


# argument decoding


def parse_alphabet(text: str) -> Alphabet:
    """``"abc"``, ``"a,b,c"`` or a path to an alphabet JSON file."""
    path = Path(text)
    if text.endswith(".json") or path.is_file():
        return jsonio.alphabet_from_json(_load_json(text))
    if "," in text:
        return Alphabet(x.strip() for x in text.split(",") if x.strip())
    return Alphabet(text)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}") from None


def resolve_words(args, *texts: str):
    """Parse word arguments; ``@file.json`` loads a word file.

    Without ``--alphabet`` the alphabet is the sorted set of characters used by
    the bare word arguments.
    """
    alphabet = parse_alphabet(args.alphabet) if args.alphabet else None
    files = {t: _load_json(t[1:]) for t in texts if t.startswith("@")}
    if alphabet is None:
        for data in files.values():
            if isinstance(data, dict) and "alphabet" in data:
                alphabet = jsonio.alphabet_from_json(data["alphabet"])
                break
    if alphabet is None:
        chars = sorted({c for t in texts if not t.startswith("@") for c in t if c != "λ"})
        alphabet = Alphabet(chars)
    words = []
    for t in texts:
        if t.startswith("@"):
            data = dict(files[t])
            data.pop("alphabet", None)
            words.append(jsonio.word_from_json(data, alphabet))
        else:
            words.append(parse_word(alphabet, t))
    return words


def parse_index_map(text: str) -> list[int]:
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        else:
            values = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot read index map {text!r}") from None
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise InputError(f"index map {text!r} must contain integers")
    return values


# output


def emit(args, text: str, data) -> None:
    if args.format == "json":
        print(jsonio.dumps(data))
    else:
        print(text)


# subcommands


def cmd_parikh(args) -> int:
    (w,) = resolve_words(args, args.word)
    p = parikh(w)
    emit(args, " ".join(f"{x}:{n}" for x, n in p.as_dict().items()), jsonio.parikh_to_json(p))
    return EXIT_OK


def cmd_equiv(args) -> int:
    u, v = resolve_words(args, args.word1, args.word2)
    result = equiv(u, v)
    emit(args, "true" if result else "false", {"equiv": result})
    return EXIT_OK


def cmd_sigma(args) -> int:
    u, v = resolve_words(args, args.word1, args.word2)
    s = canonical_perm(u, v)
    emit(args, f"{s.cycle_string()}\n{list(s.map)}", jsonio.perm_to_json(s))
    return EXIT_OK


def cmd_occ(args) -> int:
    (w,) = resolve_words(args, args.word)
    k = occ(w, args.index)
    emit(args, str(k), {"occ": k})
    return EXIT_OK


def cmd_pos(args) -> int:
    (w,) = resolve_words(args, args.word)
    k = pos(w, args.letter, args.occurrence)
    emit(args, str(k), {"pos": k})
    return EXIT_OK


def cmd_hom(args) -> int:
    a, b = resolve_words(args, args.dom, args.cod)
    if args.list:
        for phi in enumerate_hom(a, b, args.cap):
            emit(args, " ".join(map(str, phi.map)) if phi.map else "[]", jsonio.cmorphism_to_json(phi))
        return EXIT_OK
    n = hom_cardinality(a, b)
    emit(args, str(n), {"dom": str(a), "cod": str(b), "count": n})
    return EXIT_OK


def cmd_check_morphism(args) -> int:
    a, b = resolve_words(args, args.dom, args.cod)
    phi = parse_index_map(args.map)
    try:
        check_morphism(a, b, phi)
    except NotAMorphism as exc:
        emit(
            args,
            f"not a morphism: position {exc.index} carries {exc.expected}, its image carries {exc.found}",
            {"morphism": False, "index": exc.index, "expected": exc.expected, "found": exc.found},
        )
        return EXIT_FAIL
    emit(args, "morphism", {"morphism": True})
    return EXIT_OK


def _load_pair(args):
    C = jsonio.category_from_json(_load_json(args.category))
    phi = jsonio.congruence_from_json(_load_json(args.congruence))
    return C, phi


def cmd_riguet_check(args) -> int:
    C, phi = _load_pair(args)
    report = check_riguet_axioms(C, phi)
    emit(args, report.render(), report.to_json())
    return EXIT_OK if report.all_passed else EXIT_FAIL


def cmd_truncate(args) -> int:
    alphabet = parse_alphabet(args.letters)
    C, phi = export_truncation(alphabet, args.max_len, cap=args.cap)
    cat_json = jsonio.category_to_json(C)
    cong_json = jsonio.congruence_to_json(phi, C)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "category.json").write_text(json.dumps(cat_json, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
        (out / "congruence.json").write_text(json.dumps(cong_json, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
        emit(
            args,
            f"{len(C.objects)} objects, {len(C.order)} morphisms, {len(phi.blocks)} classes -> {out}",
            {"objects": len(C.objects), "morphisms": len(C.order), "classes": len(phi.blocks), "out": str(out)},
        )
    else:
        print(jsonio.dumps({"category": cat_json, "congruence": cong_json}))
    return EXIT_OK


def _quotient_json(Q) -> dict:
    return {
        "category": jsonio.category_to_json(Q.category),
        "projection": {"objects": Q.obj_map, "morphisms": Q.mor_map},
    }


def cmd_quotient(args) -> int:
    C, phi = _load_pair(args)
    report = check_riguet_axioms(C, phi)
    if not report.all_passed:
        emit(args, report.render(), report.to_json())
        return EXIT_FAIL
    Q = quotient(C, phi, report)
    data = _quotient_json(Q)
    if args.format == "json":
        print(jsonio.dumps(data))
    else:
        print(json.dumps(data, ensure_ascii=False, indent=1))
    return EXIT_OK


def cmd_verify(args) -> int:
    outcomes = run_suites(args.suite, args.seed, args.trials)
    failed = [o for o in outcomes if not o.passed]
    if args.format == "json":
        for o in outcomes:
            print(jsonio.dumps(o.to_json()))
        print(jsonio.dumps({"summary": "FAIL" if failed else "PASS", "checks": len(outcomes), "failed": len(failed)}))
    else:
        print(f"suite={args.suite} seed={args.seed} trials={args.trials}")
        for o in outcomes:
            print(o.render())
        print(f"{'FAIL' if failed else 'PASS'}: {len(outcomes) - len(failed)}/{len(outcomes)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_dot(args) -> int:
    if args.truncate:
        letters, max_len = args.truncate
        C, phi = export_truncation(parse_alphabet(letters), _int_arg(max_len), cap=args.cap)
    elif args.category:
        C = jsonio.category_from_json(_load_json(args.category))
        phi = jsonio.congruence_from_json(_load_json(args.congruence)) if args.congruence else None
    else:
        raise InputError("dot needs a category file or --truncate LETTERS MAX_LEN")
    if args.quotient:
        if phi is None:
            raise InputError("--quotient needs a congruence")
        report = check_riguet_axioms(C, phi)
        if not report.all_passed:
            emit(args, report.render(), report.to_json())
            return EXIT_FAIL
        C = quotient(C, phi, report).category
    sys.stdout.write(to_dot(C))
    return EXIT_OK


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--alphabet", help="letters in order: 'abc', 'a,b,c' or an alphabet JSON file")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (default: MONOIDCATS_CAP or 10^6)")

    parser = argparse.ArgumentParser(prog="monoidcats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parikh", parents=[common], help="letter counts of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_parikh)

    p = sub.add_parser("equiv", parents=[common], help="whether two words have the same letter counts")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("sigma", parents=[common], help="canonical permutation between equivalent words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("occ", parents=[common], help="occurrence rank of a position")
    p.add_argument("word")
    p.add_argument("index", type=int)
    p.set_defaults(func=cmd_occ)

    p = sub.add_parser("pos", parents=[common], help="position of the j-th occurrence of a letter")
    p.add_argument("word")
    p.add_argument("letter")
    p.add_argument("occurrence", type=int)
    p.set_defaults(func=cmd_pos)

    p = sub.add_parser("hom", parents=[common], help="count or list the morphisms between two words")
    p.add_argument("dom")
    p.add_argument("cod")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number of morphisms (default)")
    mode.add_argument("--list", action="store_true", help="list every morphism in lexicographic order")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("check-morphism", parents=[common], help="check an index map between two words")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("map", help="'1,2' or '[1,2]'")
    p.set_defaults(func=cmd_check_morphism)

    p = sub.add_parser("riguet-check", parents=[common], help="check the five congruence conditions")
    p.add_argument("category")
    p.add_argument("congruence")
    p.set_defaults(func=cmd_riguet_check)

    p = sub.add_parser("truncate", parents=[common], help="export a length-bounded word category and its congruence")
    p.add_argument("letters")
    p.add_argument("max_len", type=int)
    p.add_argument("--out", help="directory for category.json and congruence.json")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("quotient", parents=[common], help="quotient a category by a verified congruence")
    p.add_argument("category")
    p.add_argument("congruence")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", parents=[common], help="DOT rendering of a category or its quotient")
    p.add_argument("category", nargs="?")
    p.add_argument("congruence", nargs="?")
    p.add_argument("--truncate", nargs=2, metavar=("LETTERS", "MAX_LEN"))
    p.add_argument("--quotient", action="store_true")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "trials", 0) < 0 or getattr(args, "seed", 0) < 0:
        print(jsonio.dumps({"error": "input_error", "message": "seed and trials must be nonnegative"}), file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(jsonio.dumps(exc.to_json()), file=sys.stderr)
        return EXIT_CAP
    except DomainError as exc:
        print(jsonio.dumps(exc.to_json()), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
