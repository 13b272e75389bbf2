"""Readers and writers for the plain-text artifacts.

Every reader takes either a string or an iterable of lines (an open text file
works) and yields records lazily. Line, column and record numbers in errors are
1-based.
"""

from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import (DEFAULT_INVENTORY, ChiSentence, KorMorpheme, KorSentence,
                   ParseError, Provenance, TaggedChiSentence, TaggedWord, UNRESOLVED)
from .lexicon import Lexicon, LexiconEntry

log = logging.getLogger(__name__)

BOM = "﻿"
_TOKEN = re.compile(r"\S+")


def iter_lines(source) -> Iterator[str]:
    """Yield lines without line terminators, stripping (and warning on) a BOM."""
    if isinstance(source, str):
        source = io.StringIO(source)
    first = True
    for line in source:
        line = line.rstrip("\r\n")
        if first:
            first = False
            if line.startswith(BOM):
                log.warning("stripping byte-order mark from input")
                line = line[1:]
        yield line


@dataclass(frozen=True)
class BilingualPair:
    zh: ChiSentence
    ko: KorSentence

    def __post_init__(self):
        if not len(self.zh) or not self.ko.eojeols:
            raise ValueError("bilingual pair with an empty side")


# -- Korean tagged corpus ----------------------------------------------------

def _parse_morpheme(text, lineno, column):
    surface, slash, tag = text.rpartition("/")
    if not slash:
        raise ParseError(f"morpheme {text!r} has no '/'", line=lineno, column=column)
    if not surface:
        raise ParseError(f"morpheme {text!r} has an empty surface", line=lineno, column=column)
    if not tag:
        raise ParseError(f"morpheme {text!r} has an empty tag", line=lineno, column=column)
    try:
        return KorMorpheme(surface, tag)
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno, column=column) from None


def parse_korean_line(line: str, lineno: int = 1, lenient: bool = False) -> KorSentence:
    """Parse one ``surface/TAG++surface/TAG ...`` line.

    With ``lenient`` two common extraction defects are repaired instead of
    rejected: a token starting with ``/`` is glued to the previous token (a
    stray space inside a morpheme, as in ``ㄴ /TDP``), and empty morphemes left
    by a dangling ``++`` are dropped.
    """
    tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
    if lenient:
        merged = []
        for col, tok in tokens:
            if tok.startswith("/") and merged:
                pcol, prev = merged[-1]
                merged[-1] = (pcol, prev + tok)
            else:
                merged.append((col, tok))
        tokens = merged
    eojeols = []
    for col, tok in tokens:
        morphemes = []
        offset = 0
        for piece in tok.split("++"):
            if piece or not lenient:
                if not piece:
                    raise ParseError("empty morpheme", line=lineno, column=col + offset)
                morphemes.append(_parse_morpheme(piece, lineno, col + offset))
            offset += len(piece) + 2
        if morphemes:
            eojeols.append(tuple(morphemes))
    return KorSentence(tuple(eojeols))


def read_korean_corpus(source, lenient: bool = False) -> Iterator[KorSentence]:
    for lineno, line in enumerate(iter_lines(source), 1):
        if not line.strip():
            continue
        sent = parse_korean_line(line, lineno, lenient)
        if sent.eojeols:
            yield sent


def write_korean_corpus(sentences: Iterable[KorSentence]) -> str:
    return "".join(f"{s}\n" for s in sentences)


# -- bilingual corpus --------------------------------------------------------

def read_bilingual_corpus(source, lenient: bool = False) -> Iterator[BilingualPair]:
    """Records are a Chinese line (space-divided) and a Korean tagged line,
    separated from the next record by blank line(s)."""
    pending = []  # [(lineno, text)]
    record = 0

    def flush():
        zh_no, zh = pending[0]
        ko_no, ko = pending[1]
        try:
            ko_sent = parse_korean_line(ko, ko_no, lenient)
        except ParseError as exc:
            raise ParseError(exc.message, line=exc.line, column=exc.column, record=record) from None
        try:
            return BilingualPair(ChiSentence(zh.split()), ko_sent)
        except ValueError as exc:
            raise ParseError(str(exc), line=zh_no, record=record) from None

    for lineno, line in enumerate(iter_lines(source), 1):
        if not line.strip():
            if pending:
                if len(pending) == 1:
                    raise ParseError("record has a Chinese line but no Korean line",
                                     line=pending[0][0], record=record + 1)
                record += 1
                yield flush()
                pending = []
            continue
        if len(pending) == 2:
            raise ParseError("record has more than two lines", line=lineno, record=record + 1)
        pending.append((lineno, line))
    if pending:
        if len(pending) == 1:
            raise ParseError("truncated record at end of input",
                             line=pending[0][0], record=record + 1)
        record += 1
        yield flush()


def write_bilingual_corpus(pairs: Iterable[BilingualPair]) -> str:
    return "\n".join(f"{' '.join(p.zh)}\n{p.ko}\n" for p in pairs)


# -- lexicon -----------------------------------------------------------------

def read_lexicon(source, inventory=DEFAULT_INVENTORY) -> Lexicon:
    """Read ``WORD<TAB>POS<TAB>TRANS|TRANS`` lines into a :class:`Lexicon`.

    Repeated (word, pos) lines extend the translation list; repeated
    translations are dropped.
    """
    senses = {}  # word -> {pos: [translations]}
    for lineno, line in enumerate(iter_lines(source), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (2, 3):
            raise ParseError("expected WORD<TAB>POS<TAB>TRANSLATIONS", line=lineno)
        word, pos = fields[0].strip(), fields[1].strip()
        if not word or any(ch.isspace() for ch in word):
            raise ParseError(f"invalid word {word!r}", line=lineno)
        if pos not in inventory:
            raise ParseError(f"unknown POS {pos!r} for {word!r}", line=lineno)
        trans = [t.strip() for t in fields[2].split("|")] if len(fields) == 3 else []
        bucket = senses.setdefault(word, {}).setdefault(pos, [])
        for t in trans:
            if t and t not in bucket:
                bucket.append(t)
    return Lexicon(LexiconEntry(w, tuple(s.items())) for w, s in senses.items())


def write_lexicon(lex: Lexicon) -> str:
    out = []
    for word in sorted(lex):
        for pos, trans in lex[word].senses:
            for t in trans:
                if not t or "|" in t or "\t" in t or "\n" in t:
                    raise ValueError(f"translation {t!r} of {word!r} cannot be serialized")
            out.append(f"{word}\t{pos}\t{'|'.join(trans)}\n")
    return "".join(out)


# -- tagged Chinese ----------------------------------------------------------

def read_tagged_chinese(source) -> Iterator[TaggedChiSentence]:
    """One sentence per line of ``word/pos`` tokens. Blank lines are empty
    sentences, so line numbers stay aligned with untagged input."""
    for lineno, line in enumerate(iter_lines(source), 1):
        items = []
        for m in _TOKEN.finditer(line):
            tok = m.group()
            word, slash, tag = tok.rpartition("/")
            if not slash or not word or not tag:
                raise ParseError(f"token {tok!r} is not word/pos", line=lineno, column=m.start() + 1)
            try:
                items.append(TaggedWord(word, tag, Provenance.GIVEN))
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno, column=m.start() + 1) from None
        yield TaggedChiSentence(tuple(items))


def format_tagged_sentence(sent: TaggedChiSentence) -> str:
    if any(it.tag is UNRESOLVED for it in sent):
        raise ValueError("cannot serialize a sentence with unresolved words")
    return " ".join(f"{it.word}/{it.tag}" for it in sent)


def write_tagged_chinese(sentences: Iterable[TaggedChiSentence]) -> str:
    return "".join(format_tagged_sentence(s) + "\n" for s in sentences)
