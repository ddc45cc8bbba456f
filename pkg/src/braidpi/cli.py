"""Command-line surface and text formats.

Grammar (shared by words, braids and presentations)::

    presentation := '<' SYM* '|' relations? '>'
    relations    := relation (',' relation)*
    relation     := product ('=' product)?          # u = v means u v^-1
    product      := factor+
    factor       := atom ("'" | '^' INT)*           # ' inverse, ^n power
    atom         := SYM | '(' product ')'
    SYM          := letter (letter | digit | '_')*  # trailing digits = index
    INT          := '-'? digit+

Examples: ``d2' d1' d2 d1 d2``, ``(d1 d2)^6 (d2 d1)^-6``,
``< a b | a^4, b^4, a b a' b' >``; braid words use ``s1 s2' s4^12``.

Exit codes: 0 all checks pass; 1 a check failed; 2 usage or parse error;
3 coset enumeration overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import pipeline
from .analysis import (CosetLimitExceeded, abelian_invariants, todd_coxeter)
from .braid import Braid
from .curves import verify_persson_configuration
from .presentation import Presentation, tietze_simplify
from .word_core import Alphabet, GenSym, Word


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # sym | int | punct | end
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("sym", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isdigit() or (c == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c in "<>|,=()'^":
            tokens.append(_Token("punct", c, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r} ", tok.line, tok.column)
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.column)

    def product(self, stop: tuple[str, ...]) -> Word:
        w = Word.identity()
        saw = False
        while True:
            tok = self.peek()
            if tok.kind == "end" or (tok.kind == "punct" and tok.text in stop):
                break
            w = w * self.factor(stop)
            saw = True
        if not saw:
            self.fail("expected a word")
        return w

    def factor(self, stop: tuple[str, ...]) -> Word:
        tok = self.next()
        if tok.kind == "sym":
            base = Word.gen(GenSym.parse(tok.text))
        elif tok.text == "(":
            base = self.product((")",))
            self.expect(")")
        else:
            raise ParseError(f"expected a symbol, found {tok.text!r}", tok.line, tok.column)
        while True:
            tok = self.peek()
            if tok.text == "'":
                self.next()
                base = base.inverse()
            elif tok.text == "^":
                self.next()
                exp = self.next()
                if exp.kind != "int":
                    raise ParseError("expected an integer exponent", exp.line, exp.column)
                base = base ** int(exp.text)
            else:
                return base

    def relation(self, stop: tuple[str, ...]) -> Word:
        lhs = self.product(stop + ("=",))
        if self.peek().text == "=":
            self.next()
            rhs = self.product(stop)
            return lhs * rhs.inverse()
        return lhs

    def presentation(self) -> Presentation:
        self.expect("<")
        syms: list[GenSym] = []
        while self.peek().kind == "sym":
            syms.append(GenSym.parse(self.next().text))
        self.expect("|")
        alph = Alphabet(syms)
        relators: list[Word] = []
        if self.peek().text != ">":
            while True:
                w = self.relation((",", ">"))
                alph.check_word(w)
                relators.append(w)
                if self.peek().text == ",":
                    self.next()
                else:
                    break
        self.expect(">")
        if self.peek().kind != "end":
            self.fail("trailing input after presentation")
        return Presentation(alph, relators)


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    p = _Parser(text)
    w = p.relation(())
    if p.peek().kind != "end":
        p.fail("trailing input after word")
    if alphabet is not None:
        alphabet.check_word(w)
    return w


def parse_braid(text: str, n: int) -> Braid:
    strand_alphabet = Alphabet(GenSym("s", i) for i in range(1, n))
    w = parse_word(text, strand_alphabet)
    return Braid(n, tuple((sym.index, sign) for sym, sign in w))


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def format_presentation(p: Presentation) -> str:
    return str(p)


# ---------------------------------------------------------------------------
# commands

def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(data: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_act(args) -> int:
    braid = parse_braid(args.braid, args.n)
    fiber = Alphabet(GenSym("d", i) for i in range(1, args.n + 1))
    word = parse_word(args.word, fiber)
    image = braid.act(word, fiber)
    _emit({"schema": "braidpi/1", "stage": "act", "image": str(image)},
          args.json, str(image))
    return 0


def _cmd_present(args) -> int:
    p = parse_presentation(_read_source(args.file))
    if args.simplify:
        p, _ = tietze_simplify(p, budget=args.budget)
    data = {"schema": "braidpi/1", "stage": "present",
            "generators": [str(g) for g in p.alphabet],
            "relatorCount": len(p.relators)}
    _emit(data, args.json, format_presentation(p))
    return 0


def _cmd_schreier(args) -> int:
    from .schreier import CyclicMap, Transversal, subgroup_presentation
    p = parse_presentation(_read_source(args.file))
    images = {}
    for item in args.images.split(","):
        name, _, value = item.partition("=")
        if not value:
            raise ParseError(f"image spec {item!r} is not NAME=RESIDUE", 1, 1)
        images[GenSym.parse(name.strip())] = int(value)
    q = CyclicMap.onto(p, args.mod, images)
    t = None
    if args.transversal:
        reps = [parse_word(part, p.alphabet) if part.strip() != "1" else Word.identity()
                for part in args.transversal.split(";")]
        t = Transversal.of(reps)
    sub, gens = subgroup_presentation(p, q, t)
    if args.simplify:
        sub, _ = tietze_simplify(sub)
    lines = [format_presentation(sub), ""]
    for sym, w in gens.backmap.items():
        lines.append(f"{sym} = {w}")
    data = {"schema": "braidpi/1", "stage": "schreier",
            "generators": [str(g) for g in sub.alphabet],
            "relatorCount": len(sub.relators),
            "backmap": {str(s): str(w) for s, w in gens.backmap.items()}}
    _emit(data, args.json, "\n".join(lines))
    return 0


def _cmd_tc(args) -> int:
    p = parse_presentation(_read_source(args.file))
    table = todd_coxeter(p, args.max)
    data = {"schema": "braidpi/1", "stage": "tc",
            "generators": [str(g) for g in p.alphabet],
            "relatorCount": len(p.relators), "order": table.order}
    _emit(data, args.json, f"order {table.order}")
    return 0


def _cmd_abelianize(args) -> int:
    p = parse_presentation(_read_source(args.file))
    inv = abelian_invariants(p)
    data = {"schema": "braidpi/1", "stage": "abelianize",
            "generators": [str(g) for g in p.alphabet],
            "relatorCount": len(p.relators),
            "invariants": list(inv.torsion), "freeRank": inv.free_rank}
    _emit(data, args.json, str(inv))
    return 0


def _report_text(report) -> str:
    lines = [f"k = {report.k} (m = {report.m})"]
    for s in report.stages:
        lines.append(f"  stage {s.name}: {len(s.generators)} generators, "
                     f"{s.relator_count} relators (length {s.total_length})")
    lines.append(f"order = {report.order}")
    lines.append(f"invariants = {report.invariants}")
    lines.append(f"abelian = {report.abelian}")
    failed = [i for i, ok in report.regressions.items() if not ok]
    lines.append(f"regressions: {len(report.regressions) - len(failed)}/"
                 f"{len(report.regressions)} hold")
    for ident in failed:
        lines.append(f"  FAILED: {ident}")
    for s in report.suspects:
        lines.append(f"suspect {s.ident}: {s.summary()}")
    return "\n".join(lines)


def _cmd_pipeline(args) -> int:
    ks = list(range(1, args.max_k + 1)) if args.all else [args.k]
    if not all(k >= 1 for k in ks):
        raise ValueError("k must be >= 1")
    code = 0
    reports = []
    for k in ks:
        report = pipeline.run(k, max_cosets=args.max)
        reports.append(report)
        if not (report.abelian and report.all_regressions_hold):
            code = 1
    if args.json:
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload[0] if not args.all else payload,
                         indent=2, sort_keys=True))
    else:
        print("\n\n".join(_report_text(r) for r in reports))
    return code


def _cmd_regression(args) -> int:
    report = pipeline.run(args.k, max_cosets=args.max)
    data = {"schema": "braidpi/1", "stage": "regression", "k": args.k,
            "regressions": dict(sorted(report.regressions.items())),
            "suspects": [{"id": s.ident, "printedHolds": s.printed_holds,
                          "exponent6Holds": s.corrected_holds,
                          "printedRefutedInAbelianization":
                              s.printed_refuted_in_abelianization}
                         for s in report.suspects]}
    lines = []
    for ident, ok in sorted(report.regressions.items()):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {ident}")
    for s in report.suspects:
        lines.append(f"[VERDICT] {s.ident}: {s.summary()}")
    _emit(data, args.json, "\n".join(lines))
    return 0 if report.all_regressions_hold else 1


def _cmd_verify_config(args) -> int:
    report = verify_persson_configuration()
    data = {"schema": "braidpi/1", "stage": "verify-config",
            "items": [{"item": c.item, "title": c.title, "passed": c.passed,
                       "detail": c.detail} for c in report.checks],
            "allPassed": report.all_passed}
    _emit(data, args.json, str(report))
    return 0 if report.all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="braidpi",
        description="Braid-monodromy group computations and exact curve checks")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    p = with_json(sub.add_parser("act", help="apply a braid to a word"))
    p.add_argument("--braid", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, default=5, help="strand count (default 5)")
    p.set_defaults(func=_cmd_act)

    p = with_json(sub.add_parser("present", help="parse and normalize a presentation"))
    p.add_argument("file", help="file path or - for stdin")
    p.add_argument("--simplify", action="store_true")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=_cmd_present)

    p = with_json(sub.add_parser("schreier", help="subgroup presentation of a cyclic kernel"))
    p.add_argument("file")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--images", required=True, help="e.g. d1=1,d2=1,G=0")
    p.add_argument("--transversal", help="semicolon-separated words, 1 for identity")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=_cmd_schreier)

    p = with_json(sub.add_parser("tc", help="Todd-Coxeter order of a presented group"))
    p.add_argument("file")
    p.add_argument("--max", type=int, default=10**6, help="coset budget")
    p.set_defaults(func=_cmd_tc)

    p = with_json(sub.add_parser("abelianize", help="abelian invariants"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_abelianize)

    p = with_json(sub.add_parser("pipeline", help="run the cover computation"))
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--all", action="store_true", help="run k = 1..max-k")
    p.add_argument("--max-k", type=int, default=6, dest="max_k")
    p.add_argument("--max", type=int, default=10**6, help="coset budget")
    p.set_defaults(func=_cmd_pipeline)

    p = with_json(sub.add_parser("regression", help="trace the printed-relation corpus"))
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max", type=int, default=10**6)
    p.set_defaults(func=_cmd_regression)

    p = with_json(sub.add_parser("verify-config", help="exact checks of the curve configuration"))
    p.set_defaults(func=_cmd_verify_config)

    return ap


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CosetLimitExceeded as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
