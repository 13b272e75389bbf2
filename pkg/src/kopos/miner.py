"""Mine noun/verb decision rules from a Chinese-Korean bilingual corpus.

Each ambiguous Chinese word is decided by looking for its Korean translation
anywhere in the tagged Korean sentence: a verb lemma among the Korean verb
morphemes makes it a verb, otherwise a noun lemma among the Korean noun
morphemes makes it a noun. The neighbours of every decided word are recorded,
and neighbour patterns that agree often enough become rules.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .core import NOUN, VERB, TagClass
from .rules import EXACT, Rule, RuleSet, any_atom, kind_matches, spos_atom, word_atom

DEFAULT_MIN_SUPPORT = 3
DEFAULT_MIN_CF = 0.9
NV = frozenset((NOUN, VERB))


class Template(str, enum.Enum):
    PREV_WORD = "PREV_WORD"
    NEXT_WORD = "NEXT_WORD"
    PREV_SPOS = "PREV_SPOS"
    NEXT_SPOS = "NEXT_SPOS"


@dataclass(frozen=True)
class Decision:
    pair_index: int
    word_index: int
    word: str
    tag: str
    evidence: str


@dataclass(frozen=True)
class ContextRecord:
    template: Template
    key: str
    tag: str


def korean_lemmas(ko, tag_map, add_da=False):
    """Verb and noun surfaces of a Korean sentence, as two sets."""
    verbs, nouns = set(), set()
    for m in ko.morphemes:
        cls = tag_map.classify(m.tag)
        if cls is TagClass.VERB:
            verbs.add(m.surface)
            if add_da:
                verbs.add(m.surface + "다")
        elif cls is TagClass.NOUN:
            nouns.add(m.surface)
    return verbs, nouns


def decide_by_translation(pair, lex, tag_map, pair_index=0, add_da=False,
                          kind_match=EXACT) -> list:
    verbs, nouns = korean_lemmas(pair.ko, tag_map, add_da)
    decisions = []
    for i, word in enumerate(pair.zh):
        if not kind_matches(lex.pos_set(word), NV, kind_match):
            continue
        hit = next((k for k in lex.verb_translations(word) if k in verbs), None)
        if hit is not None:
            decisions.append(Decision(pair_index, i, word, VERB, hit))
            continue
        hit = next((k for k in lex.noun_translations(word) if k in nouns), None)
        if hit is not None:
            decisions.append(Decision(pair_index, i, word, NOUN, hit))
    return decisions


def record_contexts(pair, decision, lex) -> list:
    zh = pair.zh
    i = decision.word_index
    records = []
    if i > 0:
        prev = zh[i - 1]
        records.append(ContextRecord(Template.PREV_WORD, prev, decision.tag))
        t = lex.single_tag(prev)
        if t is not None:
            records.append(ContextRecord(Template.PREV_SPOS, t, decision.tag))
    if i + 1 < len(zh):
        nxt = zh[i + 1]
        records.append(ContextRecord(Template.NEXT_WORD, nxt, decision.tag))
        t = lex.single_tag(nxt)
        if t is not None:
            records.append(ContextRecord(Template.NEXT_SPOS, t, decision.tag))
    return records


def rule_for(template, key, tag, cf, support) -> Rule:
    if template is Template.PREV_WORD:
        return Rule((word_atom(key), any_atom()), tag, main=1, cf=cf, support=support)
    if template is Template.NEXT_WORD:
        return Rule((any_atom(), word_atom(key)), tag, main=0, cf=cf, support=support)
    if template is Template.PREV_SPOS:
        return Rule((spos_atom(key), any_atom()), tag, main=1, cf=cf, support=support)
    return Rule((any_atom(), spos_atom(key)), tag, main=0, cf=cf, support=support)


def group_counts(records) -> dict:
    """(template, key) -> Counter of decided tags."""
    groups = {}
    for r in records:
        groups.setdefault((r.template, r.key), Counter())[r.tag] += 1
    return groups


def aggregate(records, min_support=DEFAULT_MIN_SUPPORT, min_cf=DEFAULT_MIN_CF,
              name="posdecpos", stats=None) -> RuleSet:
    if min_support < 1:
        raise ValueError("min_support must be >= 1")
    if not 0 < min_cf <= 1:
        raise ValueError("min_cf must be in (0, 1]")
    template_order = list(Template)
    candidates = []
    suppressed = 0
    for (template, key), tags in group_counts(records).items():
        total = sum(tags.values())
        # majority tag; ties go to the alphabetically first tag
        tag, support = min(tags.items(), key=lambda kv: (-kv[1], kv[0]))
        cf = support / total
        if support >= min_support and cf >= min_cf:
            candidates.append(((-cf, -support, key, template_order.index(template)),
                               rule_for(template, key, tag, cf, support)))
        else:
            suppressed += 1
    candidates.sort(key=lambda c: c[0])
    if stats is not None:
        stats["rules_emitted"] = len(candidates)
        stats["rules_suppressed"] = suppressed
    return RuleSet(name, VERB + NOUN, tuple(r for _, r in candidates))


@dataclass
class MiningReport:
    pairs: int = 0
    decisions: Counter = field(default_factory=Counter)
    contexts: int = 0
    distinct_contexts: int = 0
    distinct_words: Counter = field(default_factory=Counter)
    rules_emitted: int = 0
    rules_suppressed: int = 0

    def render(self) -> str:
        lines = [
            f"pairs processed\t{self.pairs}",
            *(f"decisions {tag}\t{self.decisions[tag]}" for tag in (VERB, NOUN)),
            *(f"distinct decided words {tag}\t{self.distinct_words[tag]}" for tag in (VERB, NOUN)),
            f"contexts recorded\t{self.contexts}",
            f"distinct contexts\t{self.distinct_contexts}",
            f"rules emitted\t{self.rules_emitted}",
            f"rules suppressed\t{self.rules_suppressed}",
        ]
        return "\n".join(lines) + "\n"


def mine(corpus, lex, tag_map, min_support=DEFAULT_MIN_SUPPORT, min_cf=DEFAULT_MIN_CF,
         add_da=False, kind_match=EXACT):
    """Run decision, context recording and aggregation over a whole corpus.

    Returns ``(ruleset, report)``.
    """
    report = MiningReport()
    records = []
    decided = {VERB: set(), NOUN: set()}
    for index, pair in enumerate(corpus, 1):
        report.pairs += 1
        for d in decide_by_translation(pair, lex, tag_map, index, add_da, kind_match):
            report.decisions[d.tag] += 1
            decided[d.tag].add(d.word)
            records.extend(record_contexts(pair, d, lex))
    report.contexts = len(records)
    report.distinct_contexts = len(group_counts(records))
    report.distinct_words = Counter({t: len(ws) for t, ws in decided.items()})
    stats = {}
    ruleset = aggregate(records, min_support, min_cf, stats=stats)
    report.rules_emitted = stats["rules_emitted"]
    report.rules_suppressed = stats["rules_suppressed"]
    return ruleset, report
