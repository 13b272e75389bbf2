"""End-to-end tagging: single-POS words, noun-pair dictionary, rules, statistics."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import NOUN, ChiSentence, Provenance, TaggedChiSentence
from .lexicon import Lexicon
from .nn_dict import NounPairDict
from .rules import EXACT, apply_ruleset
from .stat_tagger import DEFAULT_OPEN_CLASSES, ProbModel, decode

STAGES = ("single-pos", "nn-dict", "rules", "statistical")


def segment(lex: Lexicon, text: str) -> ChiSentence:
    """Forward maximum matching. Characters no lexicon word starts with become
    one-character words; whitespace only separates."""
    longest = max(lex.max_word_length(), 1)
    words = []
    for chunk in text.split():
        i = 0
        while i < len(chunk):
            for size in range(min(longest, len(chunk) - i), 0, -1):
                piece = chunk[i:i + size]
                if size == 1 or piece in lex:
                    words.append(piece)
                    i += size
                    break
    return ChiSentence(words)


@dataclass(frozen=True)
class TaggerConfig:
    lexicon: Lexicon
    pair_dict: NounPairDict
    rulesets: tuple = ()
    model: ProbModel | None = None
    kind_match: str = EXACT
    open_classes: tuple = DEFAULT_OPEN_CLASSES
    disabled: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "rulesets", tuple(self.rulesets))
        object.__setattr__(self, "disabled", frozenset(self.disabled))
        unknown = self.disabled - set(STAGES)
        if unknown:
            raise ValueError(f"unknown stage(s) {sorted(unknown)}")
        if self.model is None and "statistical" not in self.disabled:
            raise ValueError("statistical stage enabled without a model")


def tag_single_pos(sent, partial, lex):
    out = partial
    for i, word in enumerate(sent):
        t = lex.single_tag(word)
        if t is not None and not out[i].resolved:
            out = out.with_tag(i, t, Provenance.SINGLE_POS)
    return out


def tag_noun_pairs(sent, partial, lex, pair_dict):
    out = partial
    n = len(sent)
    for i, word in enumerate(sent):
        if out[i].resolved or not lex.has_noun(word):
            continue
        left = i > 0 and pair_dict.hit(sent[i - 1], word) > 0
        if left or (i + 1 < n and pair_dict.hit(word, sent[i + 1]) > 0):
            out = out.with_tag(i, NOUN, Provenance.NN_DICT)
    return out


def tag_sentence(cfg: TaggerConfig, sent) -> TaggedChiSentence:
    sent = sent if isinstance(sent, ChiSentence) else ChiSentence(sent)
    lex = cfg.lexicon
    out = TaggedChiSentence.unresolved(sent)
    if "single-pos" not in cfg.disabled:
        out = tag_single_pos(sent, out, lex)
    if "nn-dict" not in cfg.disabled:
        out = tag_noun_pairs(sent, out, lex, cfg.pair_dict)
    if "rules" not in cfg.disabled:
        for rs in cfg.rulesets:
            out = apply_ruleset(rs, sent, out, lex, cfg.kind_match)
    if "statistical" not in cfg.disabled and not out.is_complete():
        out = decode(cfg.model, sent, out, lex, cfg.open_classes)
    return out


def tag_text(cfg: TaggerConfig, text: str, presegmented: bool = True) -> TaggedChiSentence:
    sent = ChiSentence(text.split()) if presegmented else segment(cfg.lexicon, text)
    return tag_sentence(cfg, sent)


def provenance_rows(line_no: int, tagged: TaggedChiSentence):
    for i, it in enumerate(tagged):
        yield f"{line_no}\t{i}\t{it.word}\t{it.tag}\t{it.provenance.value}\n"
