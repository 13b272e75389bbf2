"""Noun-conjunction pairs mined from Korean tagged text and mapped to Chinese."""

from __future__ import annotations

from collections import Counter, defaultdict

from .core import ParseError, TagClass, TagClassMap
from .corpus_io import iter_lines
from .lexicon import Lexicon


class PairCounts:
    """Ordered pair -> count. Used for both Korean pairs and the compiled
    Chinese dictionary; ``(a, b)`` and ``(b, a)`` are different keys."""

    def __init__(self, counts=None):
        self.counts = Counter()
        for key, n in (counts or {}).items():
            if n < 1:
                raise ValueError(f"pair {key} has count {n} < 1")
            self.counts[tuple(key)] = n

    def hit(self, left: str, right: str) -> int:
        return self.counts.get((left, right), 0)

    def __contains__(self, key):
        return tuple(key) in self.counts

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def items(self):
        return self.counts.items()

    def total(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other):
        if not isinstance(other, PairCounts):
            return NotImplemented
        return self.counts == other.counts

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.counts)!r})"


class KorNounPairs(PairCounts):
    pass


class NounPairDict(PairCounts):
    pass


def is_wordlike(surface: str) -> bool:
    # punctuation mis-tagged as a noun (e.g. "./NNGC") must not form pairs
    return any(ch.isalnum() for ch in surface)


def _is_noun(morpheme, tag_map):
    return tag_map.classify(morpheme.tag) is TagClass.NOUN and is_wordlike(morpheme.surface)


def noun_adjacencies(sentence, tag_map: TagClassMap, cross_eojeol: bool = False):
    """Yield every adjacent (noun, noun) surface pair in one Korean sentence."""
    units = [sentence.morphemes] if cross_eojeol else sentence.eojeols
    for unit in units:
        for a, b in zip(unit, unit[1:]):
            if _is_noun(a, tag_map) and _is_noun(b, tag_map):
                yield a.surface, b.surface


def extract_korean_pairs(corpus, tag_map: TagClassMap, cross_eojeol: bool = False) -> KorNounPairs:
    pairs = KorNounPairs()
    for sentence in corpus:
        pairs.counts.update(noun_adjacencies(sentence, tag_map, cross_eojeol))
    return pairs


def noun_reverse_index(lex: Lexicon) -> dict:
    """Korean noun lemma -> sorted Chinese words whose noun sense translates to it."""
    index = defaultdict(set)
    for word in lex:
        for k in lex.noun_translations(word):
            index[k].add(word)
    return {k: sorted(v) for k, v in index.items()}


def compile_pair_dict(pairs: PairCounts, lex: Lexicon, min_count: int = 1) -> NounPairDict:
    """Translate Korean noun pairs into Chinese word pairs.

    Each Korean pair contributes its count to every Chinese pair whose members'
    noun senses translate to the two Korean nouns. Pairs whose aggregated count
    stays below ``min_count`` are dropped.
    """
    index = noun_reverse_index(lex)
    agg = Counter()
    for (k1, k2), n in pairs.items():
        for z1 in index.get(k1, ()):
            for z2 in index.get(k2, ()):
                agg[z1, z2] += n
    return NounPairDict({key: n for key, n in agg.items() if n >= min_count})


def pair_hit(pair_dict: PairCounts, left: str, right: str) -> int:
    return pair_dict.hit(left, right)


def write_pairs(pairs: PairCounts) -> str:
    return "".join(f"{a}\t{b}\t{n}\n" for (a, b), n in sorted(pairs.items()))


def read_pairs(source, cls=NounPairDict) -> PairCounts:
    counts = {}
    for lineno, line in enumerate(iter_lines(source), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3 or not fields[0] or not fields[1]:
            raise ParseError("expected LEFT<TAB>RIGHT<TAB>COUNT", line=lineno)
        try:
            n = int(fields[2])
        except ValueError:
            raise ParseError(f"bad count {fields[2]!r}", line=lineno) from None
        if n < 1:
            raise ParseError(f"count must be >= 1, got {n}", line=lineno)
        key = (fields[0], fields[1])
        if key in counts:
            raise ParseError(f"duplicate pair {key}", line=lineno)
        counts[key] = n
    return cls(counts)
