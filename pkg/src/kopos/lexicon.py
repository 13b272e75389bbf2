"""Chinese lexicon: POS sets per word plus Korean lemma translations per sense."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import NOUN, VERB, check_tag


@dataclass(frozen=True)
class LexiconEntry:
    """One Chinese word. ``senses`` is a tuple of ``(pos, translations)``."""

    word: str
    senses: tuple

    def __post_init__(self):
        senses = tuple((check_tag(pos), tuple(tr)) for pos, tr in self.senses)
        if not senses:
            raise ValueError(f"lexicon entry {self.word!r} has no senses")
        tags = [pos for pos, _ in senses]
        if len(set(tags)) != len(tags):
            raise ValueError(f"lexicon entry {self.word!r} repeats a POS")
        object.__setattr__(self, "senses", senses)

    @property
    def pos_set(self) -> frozenset:
        return frozenset(pos for pos, _ in self.senses)

    def translations(self, pos: str) -> tuple:
        for p, tr in self.senses:
            if p == pos:
                return tr
        return ()


class Lexicon(Mapping):
    """Read-only word -> :class:`LexiconEntry` mapping.

    Absent words are reported as ``None`` by :meth:`pos_set`, never as an empty
    set, so callers can tell unknown words from known ones.
    """

    def __init__(self, entries=()):
        self._entries = {}
        for e in entries:
            if e.word in self._entries:
                raise ValueError(f"duplicate lexicon entry {e.word!r}")
            self._entries[e.word] = e

    @classmethod
    def from_dict(cls, data) -> "Lexicon":
        """Build from ``{word: {pos: [translations]}}``; handy for tests and scripts."""
        return cls(LexiconEntry(w, tuple(senses.items())) for w, senses in data.items())

    def __getitem__(self, word):
        return self._entries[word]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"Lexicon({len(self)} entries)"

    def pos_set(self, word: str) -> frozenset | None:
        entry = self._entries.get(word)
        return entry.pos_set if entry is not None else None

    def is_known(self, word: str) -> bool:
        return word in self._entries

    def has_verb(self, word: str) -> bool:
        tags = self.pos_set(word)
        return tags is not None and VERB in tags

    def has_noun(self, word: str) -> bool:
        tags = self.pos_set(word)
        return tags is not None and NOUN in tags

    def translations(self, word: str, pos: str) -> list:
        entry = self._entries.get(word)
        return list(entry.translations(pos)) if entry is not None else []

    def verb_translations(self, word: str) -> list:
        return self.translations(word, VERB)

    def noun_translations(self, word: str) -> list:
        return self.translations(word, NOUN)

    def is_single_pos(self, word: str, tag: str) -> bool:
        return self.pos_set(word) == frozenset((tag,))

    def single_tag(self, word: str) -> str | None:
        """The only tag of a single-POS word, else ``None``."""
        tags = self.pos_set(word)
        if tags is not None and len(tags) == 1:
            return next(iter(tags))
        return None

    def max_word_length(self) -> int:
        return max((len(w) for w in self._entries), default=0)


# module-level spellings of the query API
def pos_set(lex: Lexicon, word: str):
    return lex.pos_set(word)


def has_verb(lex: Lexicon, word: str) -> bool:
    return lex.has_verb(word)


def has_noun(lex: Lexicon, word: str) -> bool:
    return lex.has_noun(word)


def verb_translations(lex: Lexicon, word: str) -> list:
    return lex.verb_translations(word)


def noun_translations(lex: Lexicon, word: str) -> list:
    return lex.noun_translations(word)


def is_single_pos(lex: Lexicon, word: str, tag: str) -> bool:
    return lex.is_single_pos(word, tag)
