"""Interpolated bidirectional bigram tagger for words left unresolved by the
dictionary and rule stages.

Each position is scored as::

    score(t) = λ2 · p(t | t_next) · p(t | w) / p(t)  +  λ1 · p(t | t_prev) · p(t | w) / p(t)

with λ1 = 0.772 and λ2 = 0.22. A sentence is decoded by maximising the sum of
position scores. Because each term looks at both neighbours, the exact decoder
runs dynamic programming over adjacent tag pairs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field, replace

from .core import ParseError, Provenance, TaggedChiSentence
from .corpus_io import iter_lines

LAMBDA1 = 0.772
LAMBDA2 = 0.22
EPSILON = 1e-6
DEFAULT_OPEN_CLASSES = ("a", "d", "n", "v")
BRUTE_FORCE_CAP = 10 ** 6


class SearchSpaceTooLarge(ValueError):
    pass


@dataclass
class ProbModel:
    tag_count: Counter = field(default_factory=Counter)
    bigram_count: Counter = field(default_factory=Counter)
    word_tag_count: Counter = field(default_factory=Counter)
    lambda1: float = LAMBDA1
    lambda2: float = LAMBDA2
    epsilon: float = EPSILON

    _left: Counter = field(init=False, repr=False, compare=False)
    _right: Counter = field(init=False, repr=False, compare=False)
    _word_total: Counter = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.tag_count = Counter(self.tag_count)
        self.bigram_count = Counter(self.bigram_count)
        self.word_tag_count = Counter(self.word_tag_count)
        for counts in (self.tag_count, self.bigram_count, self.word_tag_count):
            if any(n < 0 for n in counts.values()):
                raise ValueError("negative count in model")
        self._left = Counter()
        self._right = Counter()
        for (a, b), n in self.bigram_count.items():
            self._left[a] += n
            self._right[b] += n
        self._word_total = Counter()
        for (w, _), n in self.word_tag_count.items():
            self._word_total[w] += n

    @property
    def total_tokens(self) -> int:
        return sum(self.tag_count.values())

    @property
    def tags(self) -> list:
        return sorted(self.tag_count)

    def with_params(self, **kwargs) -> "ProbModel":
        """Copy with other ``lambda1``/``lambda2``/``epsilon``."""
        return replace(self, **kwargs)

    def _floor(self, num, den):
        if num <= 0 or den <= 0:
            return self.epsilon
        return num / den

    def p_tag(self, t):
        return self._floor(self.tag_count[t], self.total_tokens)

    def p_after(self, t, t_prev):
        """p(t | t_prev): how often t follows t_prev."""
        return self._floor(self.bigram_count[t_prev, t], self._left[t_prev])

    def p_before(self, t, t_next):
        """p(t | t_next): how often t precedes t_next."""
        return self._floor(self.bigram_count[t, t_next], self._right[t_next])

    def p_tag_given_word(self, t, w):
        return self._floor(self.word_tag_count[w, t], self._word_total[w])

    def raw_after(self, t, t_prev):
        den = self._left[t_prev]
        return self.bigram_count[t_prev, t] / den if den else 0.0


def train(corpus) -> ProbModel:
    """Maximum-likelihood counts from fully tagged sentences."""
    tags, bigrams, lexical = Counter(), Counter(), Counter()
    for sent in corpus:
        if not sent.is_complete():
            raise ValueError("training sentence has unresolved words")
        seq = sent.tags
        tags.update(seq)
        bigrams.update(zip(seq, seq[1:]))
        lexical.update(zip(sent.words, seq))
    if not tags:
        raise ValueError("cannot train on an empty corpus")
    return ProbModel(tags, bigrams, lexical)


def position_score(m: ProbModel, w, t, t_prev=None, t_next=None, emission=None):
    """Score of tag ``t`` for word ``w`` between ``t_prev`` and ``t_next``.

    A missing neighbour (sentence edge) drops its term. With no neighbour at
    all both context conditionals are replaced by p(t), which reduces the score
    to (λ1 + λ2) · p(t | w). ``emission`` overrides p(t | w).
    """
    e = m.p_tag_given_word(t, w) if emission is None else emission
    pt = m.p_tag(t)
    if t_prev is None and t_next is None:
        return (m.lambda1 + m.lambda2) * e
    score = 0.0
    if t_next is not None:
        score += m.lambda2 * m.p_before(t, t_next) * e / pt
    if t_prev is not None:
        score += m.lambda1 * m.p_after(t, t_prev) * e / pt
    return score


class _Problem:
    """Candidates and emission model for one sentence."""

    def __init__(self, m, sent, partial, lex, open_classes):
        if len(partial) != len(sent):
            raise ValueError("partial tagging not aligned with sentence")
        self.m = m
        self.words = list(sent)
        self.open = tuple(sorted(set(open_classes)))
        self.unknown = [not lex.is_known(w) for w in self.words]
        self.candidates = []
        for w, item, unk in zip(self.words, partial, self.unknown):
            if item.resolved:
                self.candidates.append((item.tag,))
            elif unk:
                self.candidates.append(self.open)
            else:
                self.candidates.append(tuple(sorted(lex.pos_set(w))))

    def emission(self, i, t):
        if not self.unknown[i]:
            return None
        return (1.0 / len(self.open)) if t in self.open else self.m.epsilon

    def f(self, i, t_prev, t, t_next):
        return position_score(self.m, self.words[i], t, t_prev, t_next, self.emission(i, t))

    def objective(self, tags):
        total = 0.0
        n = len(tags)
        for i in range(n):
            total += self.f(i, tags[i - 1] if i else None, tags[i], tags[i + 1] if i + 1 < n else None)
        return total


def _better(score, seq, best):
    return best is None or score > best[0] or (score == best[0] and seq < best[1])


def _dp(p: _Problem):
    n = len(p.words)
    C = p.candidates
    if n == 0:
        return (), 0.0
    if n == 1:
        best = None
        for t in C[0]:
            s = 0.0 + p.f(0, None, t, None)
            if _better(s, (t,), best):
                best = (s, (t,))
        return best[1], best[0]
    # state (t_{i-1}, t_i) -> (sum of scores of positions < i, tag sequence up to i)
    states = {}
    for a in C[0]:
        for b in C[1]:
            states[a, b] = (0.0 + p.f(0, None, a, b), (a, b))
    for i in range(1, n - 1):
        nxt = {}
        for (a, b), (s, seq) in states.items():
            for c in C[i + 1]:
                cand = (s + p.f(i, a, b, c), seq + (c,))
                if _better(cand[0], cand[1], nxt.get((b, c))):
                    nxt[b, c] = cand
        states = nxt
    best = None
    for (a, b), (s, seq) in states.items():
        total = s + p.f(n - 1, a, b, None)
        if _better(total, seq, best):
            best = (total, seq)
    return best[1], best[0]


def _brute(p: _Problem, cap=BRUTE_FORCE_CAP):
    size = 1
    for c in p.candidates:
        size *= len(c)
    if size > cap:
        raise SearchSpaceTooLarge(f"{size} assignments exceed the cap of {cap}")
    best = None
    # product over sorted candidate lists runs in lexicographic order
    for seq in itertools.product(*p.candidates):
        s = p.objective(seq)
        if best is None or s > best[0]:
            best = (s, seq)
    return best[1], best[0]


def _finish(p, partial, tags):
    out = partial
    for i, (item, t) in enumerate(zip(partial, tags)):
        if not item.resolved:
            prov = Provenance.UNKNOWN_FALLBACK if p.unknown[i] else Provenance.STATISTICAL
            out = out.with_tag(i, t, prov)
    return out


def best_assignment(m, sent, partial, lex, open_classes=DEFAULT_OPEN_CLASSES):
    """Exact decoder; returns ``(tags, objective)``."""
    return _dp(_Problem(m, sent, partial, lex, open_classes))


def brute_force_assignment(m, sent, partial, lex, open_classes=DEFAULT_OPEN_CLASSES,
                           cap=BRUTE_FORCE_CAP):
    return _brute(_Problem(m, sent, partial, lex, open_classes), cap)


def sentence_objective(m, sent, tags, lex, open_classes=DEFAULT_OPEN_CLASSES):
    p = _Problem(m, sent, TaggedChiSentence.unresolved(sent), lex, open_classes)
    return p.objective(tuple(tags))


def decode(m, sent, partial, lex, open_classes=DEFAULT_OPEN_CLASSES) -> TaggedChiSentence:
    if partial.is_complete():
        return partial
    p = _Problem(m, sent, partial, lex, open_classes)
    tags, _ = _dp(p)
    return _finish(p, partial, tags)


def brute_force_decode(m, sent, partial, lex, open_classes=DEFAULT_OPEN_CLASSES,
                       cap=BRUTE_FORCE_CAP) -> TaggedChiSentence:
    p = _Problem(m, sent, partial, lex, open_classes)
    tags, _ = _brute(p, cap)
    return _finish(p, partial, tags)


# -- model file --------------------------------------------------------------

_SECTIONS = ("#TAGS", "#BIGRAMS", "#LEXICAL")


def write_model(m: ProbModel) -> str:
    out = ["#TAGS\n"]
    out += [f"{t}\t{n}\n" for t, n in sorted(m.tag_count.items())]
    out.append("#BIGRAMS\n")
    out += [f"{a}\t{b}\t{n}\n" for (a, b), n in sorted(m.bigram_count.items())]
    out.append("#LEXICAL\n")
    out += [f"{w}\t{t}\t{n}\n" for (w, t), n in sorted(m.word_tag_count.items())]
    return "".join(out)


def read_model(source, **params) -> ProbModel:
    widths = {"#TAGS": 2, "#BIGRAMS": 3, "#LEXICAL": 3}
    counts = {s: Counter() for s in _SECTIONS}
    section = None
    for lineno, line in enumerate(iter_lines(source), 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if line.strip() not in counts:
                raise ParseError(f"unknown section {line.strip()!r}", line=lineno)
            section = line.strip()
            continue
        if section is None:
            raise ParseError("data before the first section header", line=lineno)
        fields = line.split("\t")
        if len(fields) != widths[section] or not all(fields):
            raise ParseError(f"expected {widths[section]} tab-separated fields", line=lineno)
        try:
            n = int(fields[-1])
        except ValueError:
            raise ParseError(f"bad count {fields[-1]!r}", line=lineno) from None
        key = fields[0] if section == "#TAGS" else tuple(fields[:-1])
        if key in counts[section]:
            raise ParseError(f"duplicate key {key}", line=lineno)
        counts[section][key] = n
    try:
        return ProbModel(counts["#TAGS"], counts["#BIGRAMS"], counts["#LEXICAL"], **params)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
