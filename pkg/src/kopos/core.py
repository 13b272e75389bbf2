"""Shared vocabulary: tags, tag classes, Chinese and Korean sentence types."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

#: Default Chinese POS inventory. Only ``n`` and ``v`` carry meaning for the
#: noun/verb machinery; the rest exist so the lexicon can describe ordinary text.
DEFAULT_INVENTORY = frozenset("n v a d r m q p c u t w".split())

NOUN = "n"
VERB = "v"

_FORBIDDEN_TAG_CHARS = frozenset("/+")


class ParseError(ValueError):
    """Malformed input. ``line``/``column``/``record`` are 1-based when set."""

    def __init__(self, message, line=None, column=None, record=None):
        self.message = message
        self.line = line
        self.column = column
        self.record = record
        where = []
        if record is not None:
            where.append(f"record {record}")
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class DuplicateEntryError(ParseError):
    pass


def check_tag(tag: str) -> str:
    """Validate a POS tag code and return it unchanged."""
    if not isinstance(tag, str) or not tag:
        raise ValueError(f"invalid tag {tag!r}: empty")
    if any(ch.isspace() or ch in _FORBIDDEN_TAG_CHARS for ch in tag):
        raise ValueError(f"invalid tag {tag!r}: contains whitespace, '/' or '+'")
    return tag


class TagClass(str, enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    OTHER = "other"


@dataclass(frozen=True)
class TagClassMap:
    """Prefix table mapping fine or coarse Korean tags to noun/verb/other."""

    entries: tuple = ()

    def __post_init__(self):
        entries = tuple((check_tag(p), TagClass(c)) for p, c in self.entries)
        seen = set()
        for prefix, _ in entries:
            if prefix in seen:
                raise DuplicateEntryError(f"duplicate prefix {prefix!r}")
            seen.add(prefix)
        object.__setattr__(self, "entries", entries)

    def classify(self, tag: str) -> TagClass:
        best = None
        for prefix, cls in self.entries:
            # strict '>' keeps the earlier entry on equal length
            if tag.startswith(prefix) and (best is None or len(prefix) > len(best[0])):
                best = (prefix, cls)
        return best[1] if best else TagClass.OTHER

    def __len__(self):
        return len(self.entries)


def classify_tag(tag: str, tag_map: TagClassMap) -> TagClass:
    return tag_map.classify(tag)


def parse_tag_class_map(text: str) -> TagClassMap:
    """Parse ``PREFIX<TAB>CLASS`` lines; ``#`` lines and blank lines are skipped."""
    entries = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("expected PREFIX<TAB>CLASS", line=lineno)
        prefix, cls = parts[0].strip(), parts[1].strip()
        try:
            check_tag(prefix)
            cls = TagClass(cls)
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
        if prefix in seen:
            raise DuplicateEntryError(
                f"duplicate prefix {prefix!r} (first on line {seen[prefix]})", line=lineno)
        seen[prefix] = lineno
        entries.append((prefix, cls))
    return TagClassMap(tuple(entries))


@dataclass(frozen=True)
class ChiSentence(Sequence):
    """A word-divided Chinese sentence."""

    words: tuple = ()

    def __post_init__(self):
        words = tuple(self.words)
        for w in words:
            if not isinstance(w, str) or not w or any(ch.isspace() for ch in w):
                raise ValueError(f"invalid Chinese word {w!r}")
        object.__setattr__(self, "words", words)

    def __getitem__(self, i):
        return self.words[i]

    def __len__(self):
        return len(self.words)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)


@dataclass(frozen=True)
class KorMorpheme:
    surface: str
    tag: str

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty morpheme surface")
        check_tag(self.tag)

    def __str__(self):
        return f"{self.surface}/{self.tag}"


@dataclass(frozen=True)
class KorSentence:
    """Korean sentence as eojeols (space units) of tagged morphemes."""

    eojeols: tuple = ()

    def __post_init__(self):
        eojeols = tuple(tuple(e) for e in self.eojeols)
        for e in eojeols:
            if not e:
                raise ValueError("eojeol without morphemes")
        object.__setattr__(self, "eojeols", eojeols)

    @property
    def morphemes(self) -> tuple:
        return tuple(m for e in self.eojeols for m in e)

    def __str__(self):
        return " ".join("++".join(str(m) for m in e) for e in self.eojeols)


class Provenance(str, enum.Enum):
    """Which stage assigned a tag. ``GIVEN`` marks tags read from a file."""

    SINGLE_POS = "single-pos"
    NN_DICT = "nn-dict"
    RULE = "rule"
    STATISTICAL = "statistical"
    UNKNOWN_FALLBACK = "unknown-fallback"
    GIVEN = "given"


class _Unresolved(enum.Enum):
    UNRESOLVED = "UNRESOLVED"

    def __repr__(self):
        return "UNRESOLVED"


UNRESOLVED = _Unresolved.UNRESOLVED


@dataclass(frozen=True)
class TaggedWord:
    word: str
    tag: object = UNRESOLVED
    provenance: Provenance | None = None

    def __post_init__(self):
        if self.tag is UNRESOLVED:
            if self.provenance is not None:
                raise ValueError(f"unresolved word {self.word!r} carries provenance")
        else:
            check_tag(self.tag)
            if self.provenance is None:
                raise ValueError(f"tagged word {self.word!r} lacks provenance")
            object.__setattr__(self, "provenance", Provenance(self.provenance))

    @property
    def resolved(self) -> bool:
        return self.tag is not UNRESOLVED


@dataclass(frozen=True)
class TaggedChiSentence(Sequence):
    items: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @classmethod
    def unresolved(cls, sent: Iterable[str]) -> "TaggedChiSentence":
        return cls(tuple(TaggedWord(w) for w in sent))

    @classmethod
    def from_pairs(cls, pairs, provenance=Provenance.GIVEN) -> "TaggedChiSentence":
        return cls(tuple(TaggedWord(w, t, provenance) for w, t in pairs))

    def __getitem__(self, i):
        return self.items[i]

    def __len__(self):
        return len(self.items)

    def __iter__(self) -> Iterator[TaggedWord]:
        return iter(self.items)

    @property
    def words(self) -> tuple:
        return tuple(it.word for it in self.items)

    @property
    def tags(self) -> tuple:
        return tuple(it.tag for it in self.items)

    def sentence(self) -> ChiSentence:
        return ChiSentence(self.words)

    def is_complete(self) -> bool:
        return all(it.resolved for it in self.items)

    def with_tag(self, i: int, tag: str, provenance: Provenance) -> "TaggedChiSentence":
        items = list(self.items)
        items[i] = TaggedWord(items[i].word, tag, provenance)
        return TaggedChiSentence(tuple(items))
