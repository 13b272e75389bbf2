"""Command-line entry point: ``kopos SUBCOMMAND ...``.

Exit status is 0 on success, 1 on unreadable or malformed input and 2 on
usage errors. Output files are written to a temporary name and renamed into
place, so a failing run leaves no partial output behind.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
import types

from . import corpus_io, miner, nn_dict, rules, stat_tagger
from .core import DEFAULT_INVENTORY, ParseError, parse_tag_class_map
from .evaluation import AlignmentError, evaluate
from .pipeline import TaggerConfig, provenance_rows, segment, tag_sentence

log = logging.getLogger("kopos")


class InputError(Exception):
    pass


def atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".kopos-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _open(path):
    try:
        return open(path, encoding="utf-8", newline=None)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path, reader, *args, **kwargs):
    with _open(path) as fh:
        try:
            result = reader(fh, *args, **kwargs)
            return list(result) if isinstance(result, types.GeneratorType) else result
        except (ParseError, ValueError) as exc:
            raise InputError(f"{path}: {exc}") from None


def _read_text(path):
    with _open(path) as fh:
        return fh.read()


def _inventory(args):
    if not getattr(args, "inventory", None):
        return DEFAULT_INVENTORY
    return frozenset(t for t in args.inventory.split(",") if t)


def _lexicon(args):
    return _load(args.lexicon, corpus_io.read_lexicon, _inventory(args))


def _tagmap(path):
    try:
        return parse_tag_class_map(_read_text(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_extract_nn(args):
    tag_map = _tagmap(args.tagmap)
    with _open(args.korean) as fh:
        try:
            pairs = nn_dict.extract_korean_pairs(
                corpus_io.read_korean_corpus(fh, lenient=args.lenient),
                tag_map, cross_eojeol=args.cross_eojeol)
        except ParseError as exc:
            raise InputError(f"{args.korean}: {exc}") from None
    log.info("extracted %d distinct Korean noun pairs (%d occurrences)", len(pairs), pairs.total())
    if args.lexicon:
        compiled = nn_dict.compile_pair_dict(pairs, _lexicon(args), args.min_count)
        log.info("compiled %d Chinese noun pairs", len(compiled))
        atomic_write(args.out, nn_dict.write_pairs(compiled))
        if args.out_korean:
            atomic_write(args.out_korean, nn_dict.write_pairs(pairs))
    else:
        atomic_write(args.out, nn_dict.write_pairs(pairs))
        if args.out_korean:
            atomic_write(args.out_korean, nn_dict.write_pairs(pairs))


def cmd_mine_rules(args):
    tag_map = _tagmap(args.tagmap)
    lex = _lexicon(args)
    corpus = _load(args.bilingual, corpus_io.read_bilingual_corpus, lenient=args.lenient)
    ruleset, report = miner.mine(corpus, lex, tag_map, args.min_support, args.min_cf,
                                 add_da=args.stem_da, kind_match=args.kind_match)
    atomic_write(args.out, rules.serialize_ruleset(ruleset))
    if args.report:
        atomic_write(args.report, report.render())
    sys.stderr.write(report.render())


def cmd_train(args):
    corpus = _load(args.tagged, corpus_io.read_tagged_chinese)
    try:
        model = stat_tagger.train(corpus)
    except ValueError as exc:
        raise InputError(f"{args.tagged}: {exc}") from None
    atomic_write(args.out, stat_tagger.write_model(model))
    log.info("trained on %d tokens, %d tags", model.total_tokens, len(model.tag_count))


def cmd_tag(args):
    lex = _lexicon(args)
    pair_dict = _load(args.nn, nn_dict.read_pairs)
    try:
        rulesets = rules.parse_rulesets(_read_text(args.rules), _inventory(args))
    except ParseError as exc:
        raise InputError(f"{args.rules}: {exc}") from None
    params = {"epsilon": args.epsilon, "lambda1": args.lambda1, "lambda2": args.lambda2}
    model = _load(args.model, stat_tagger.read_model, **params)
    cfg = TaggerConfig(lex, pair_dict, rulesets, model, kind_match=args.kind_match,
                       open_classes=tuple(args.open_classes.split(",")))
    out, side = [], []
    with _open(args.input) as fh:
        for line_no, line in enumerate(corpus_io.iter_lines(fh), 1):
            try:
                sent = segment(lex, line) if args.segment else line.split()
                tagged = tag_sentence(cfg, sent)
            except ValueError as exc:
                raise InputError(f"{args.input}: line {line_no}: {exc}") from None
            out.append(corpus_io.format_tagged_sentence(tagged) + "\n")
            side.extend(provenance_rows(line_no, tagged))
    atomic_write(args.output, "".join(out))
    if args.provenance:
        atomic_write(args.provenance, "".join(side))
    log.info("tagged %d sentences", len(out))


def cmd_eval(args):
    lex = _lexicon(args)
    gold = _load(args.gold, corpus_io.read_tagged_chinese)
    pred = _load(args.pred, corpus_io.read_tagged_chinese)
    if len(gold) != len(pred):
        raise InputError(f"{args.pred}: {len(pred)} sentences, gold has {len(gold)}")
    try:
        report = evaluate(zip(pred, gold), lex)
    except AlignmentError as exc:
        raise InputError(str(exc)) from None
    if args.tsv:
        atomic_write(args.tsv, report.to_tsv())
    sys.stdout.write(report.render())


def build_parser():
    p = argparse.ArgumentParser(
        prog="kopos",
        description="Chinese POS decision using Korean translation information.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    lexopt = argparse.ArgumentParser(add_help=False)
    lexopt.add_argument("--inventory", metavar="TAGS",
                        help="comma-separated Chinese POS inventory (default: "
                             + ",".join(sorted(DEFAULT_INVENTORY)) + ")")

    s = sub.add_parser(
        "extract-nn", parents=[lexopt],
        help="build the noun-pair dictionary from a Korean tagged corpus",
        description="Korean corpus: one sentence per line, eojeols separated by spaces, "
                    "morphemes 'surface/TAG' joined by '++'. Tag map: PREFIX<TAB>noun|verb|other. "
                    "Output: LEFT<TAB>RIGHT<TAB>COUNT, sorted.")
    s.add_argument("--korean", required=True, metavar="F", help="Korean POS-tagged corpus")
    s.add_argument("--tagmap", required=True, metavar="F", help="tag-class map")
    s.add_argument("--lexicon", metavar="F",
                   help="lexicon TSV; when given, --out holds Chinese pairs, else Korean pairs")
    s.add_argument("--cross-eojeol", action="store_true",
                   help="also pair nouns across eojeol boundaries")
    s.add_argument("--min-count", type=int, default=1, metavar="N",
                   help="drop Chinese pairs seen fewer than N times (default 1)")
    s.add_argument("--lenient", action="store_true",
                   help="repair stray spaces before '/' and dangling '++' instead of failing")
    s.add_argument("--out", required=True, metavar="F")
    s.add_argument("--out-korean", metavar="F", help="also write the Korean pair counts")
    s.set_defaults(func=cmd_extract_nn)

    s = sub.add_parser(
        "mine-rules", parents=[lexopt],
        help="mine POS decision rules from a bilingual corpus",
        description="Bilingual corpus: records of a space-divided Chinese line and a Korean "
                    "tagged line, separated by blank lines. Output: ruleset file.")
    s.add_argument("--bilingual", required=True, metavar="F")
    s.add_argument("--lexicon", required=True, metavar="F")
    s.add_argument("--tagmap", required=True, metavar="F")
    s.add_argument("--min-support", type=int, default=miner.DEFAULT_MIN_SUPPORT, metavar="N")
    s.add_argument("--min-cf", type=float, default=miner.DEFAULT_MIN_CF, metavar="X")
    s.add_argument("--stem-da", action="store_true",
                   help="also match verb stems with '다' appended against lemmas")
    s.add_argument("--kind-match", choices=(rules.EXACT, rules.SUPERSET), default=rules.EXACT)
    s.add_argument("--lenient", action="store_true")
    s.add_argument("--report", metavar="F", help="write the mining report here as well")
    s.add_argument("--out", required=True, metavar="F")
    s.set_defaults(func=cmd_mine_rules)

    s = sub.add_parser("train", help="train the statistical model from tagged Chinese",
                       description="Input: one sentence per line of word/pos tokens. "
                                   "Output: model file with #TAGS, #BIGRAMS, #LEXICAL sections.")
    s.add_argument("--tagged", required=True, metavar="F")
    s.add_argument("--out", required=True, metavar="F")
    s.set_defaults(func=cmd_train)

    s = sub.add_parser("tag", parents=[lexopt], help="tag Chinese sentences",
                       description="Input: one sentence per line, words separated by spaces "
                                   "(or raw text with --segment). Output: word/pos tokens.")
    s.add_argument("--lexicon", required=True, metavar="F")
    s.add_argument("--nn", required=True, metavar="F", help="Chinese noun-pair dictionary")
    s.add_argument("--rules", required=True, metavar="F", help="ruleset file")
    s.add_argument("--model", required=True, metavar="F", help="statistical model")
    s.add_argument("--segment", action="store_true",
                   help="input is raw text; divide it by forward maximum matching")
    s.add_argument("--provenance", metavar="F",
                   help="write LINE<TAB>INDEX<TAB>WORD<TAB>TAG<TAB>STAGE rows here")
    s.add_argument("--kind-match", choices=(rules.EXACT, rules.SUPERSET), default=rules.EXACT)
    s.add_argument("--open-classes", default=",".join(stat_tagger.DEFAULT_OPEN_CLASSES),
                   metavar="TAGS", help="candidate tags for unknown words")
    s.add_argument("--epsilon", type=float, default=stat_tagger.EPSILON)
    s.add_argument("--lambda1", type=float, default=stat_tagger.LAMBDA1,
                   help="weight of the left-context term (default 0.772)")
    s.add_argument("--lambda2", type=float, default=stat_tagger.LAMBDA2,
                   help="weight of the right-context term (default 0.22)")
    s.add_argument("input", metavar="IN")
    s.add_argument("output", metavar="OUT")
    s.set_defaults(func=cmd_tag)

    s = sub.add_parser("eval", parents=[lexopt], help="compare predicted tags with gold",
                       description="Both files: one sentence per line of word/pos tokens, "
                                   "same underlying text. Report goes to stdout.")
    s.add_argument("--gold", required=True, metavar="F")
    s.add_argument("--pred", required=True, metavar="F")
    s.add_argument("--lexicon", required=True, metavar="F")
    s.add_argument("--tsv", metavar="F", help="also write all counts as TSV")
    s.set_defaults(func=cmd_eval)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        args.func(args)
    except InputError as exc:
        sys.stderr.write(f"kopos: error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"kopos: error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
