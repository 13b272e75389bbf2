"""Tagging evaluation: segmentation errors, tag errors, unknown words, confusion.

Words are compared only where predicted and gold segmentations agree on the
character span; gold words without a matching predicted span count as
word-dividing errors. Tag errors on known words go to ``confusion``; tag
errors on words missing from the lexicon go to ``unknown_confusion``, so the
two error columns stay separate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class AlignmentError(ValueError):
    pass


def _spans(words):
    out = []
    pos = 0
    for w in words:
        out.append((pos, pos + len(w)))
        pos += len(w)
    return out


def align_spans(pred, gold) -> list:
    """Pairs ``(pred_index, gold_index)`` of words with identical character spans."""
    if "".join(pred.words) != "".join(gold.words):
        raise AlignmentError("predicted and gold sentences cover different text")
    pred_index = {span: i for i, span in enumerate(_spans(pred.words))}
    return [(pred_index[span], j) for j, span in enumerate(_spans(gold.words))
            if span in pred_index]


@dataclass
class EvalReport:
    total_words: int = 0
    sentence_count: int = 0
    seg_errors: int = 0
    tag_errors: int = 0
    unknown_words: int = 0
    unknown_errors: int = 0
    confusion: Counter = field(default_factory=Counter)
    unknown_confusion: Counter = field(default_factory=Counter)

    @property
    def aligned_words(self) -> int:
        return self.total_words - self.seg_errors

    @property
    def errors(self) -> int:
        return self.tag_errors + self.unknown_errors

    @property
    def accuracy(self) -> float:
        """Correct tags over span-matched words."""
        if not self.aligned_words:
            return 1.0
        return (self.aligned_words - self.errors) / self.aligned_words

    @property
    def accuracy_all(self) -> float:
        """Correct tags over all gold words; word-dividing errors count as wrong."""
        if not self.total_words:
            return 1.0
        return (self.aligned_words - self.errors) / self.total_words

    def render(self) -> str:
        t2 = [("Total number of words", self.total_words),
              ("Number of sentences", self.sentence_count),
              ("Word dividing errors", self.seg_errors),
              ("Pos tagging errors", self.tag_errors),
              ("Unknown words", self.unknown_words)]
        lines = ["Errors", _table([h for h, _ in t2], [[str(v) for _, v in t2]]), ""]
        lines.append("Result")
        lines.append(_table(["Accuracy (span-matched words)", "Accuracy (all words)"],
                            [[f"{100 * self.accuracy:.2f}%", f"{100 * self.accuracy_all:.2f}%"]]))
        shares = confusion_shares(self)
        if shares:
            lines += ["", "Tagging error breakdown (known words)"]
            rows = [[g, p, str(self.confusion[g, p]), f"{shares[g, p]:.1f}%"]
                    for g, p in sorted(self.confusion)]
            lines.append(_table(["gold", "pred", "count", "share"], rows))
        if self.unknown_confusion:
            lines += ["", "Unknown-word tag errors"]
            rows = [[g, p, str(n)] for (g, p), n in sorted(self.unknown_confusion.items())]
            lines.append(_table(["gold", "pred", "count"], rows))
        return "\n".join(lines) + "\n"

    def to_tsv(self) -> str:
        rows = [("total_words", self.total_words),
                ("sentences", self.sentence_count),
                ("aligned_words", self.aligned_words),
                ("seg_errors", self.seg_errors),
                ("tag_errors", self.tag_errors),
                ("unknown_words", self.unknown_words),
                ("unknown_errors", self.unknown_errors),
                ("accuracy", f"{self.accuracy:.6f}"),
                ("accuracy_all", f"{self.accuracy_all:.6f}")]
        out = [f"{k}\t{v}\n" for k, v in rows]
        out += [f"confusion\t{g}\t{p}\t{n}\n" for (g, p), n in sorted(self.confusion.items())]
        out += [f"unknown_confusion\t{g}\t{p}\t{n}\n"
                for (g, p), n in sorted(self.unknown_confusion.items())]
        return "".join(out)


def _table(header, rows):
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join([fmt.format(*header), fmt.format(*("-" * w for w in widths))]
                     + [fmt.format(*r) for r in rows])


def evaluate(pairs, lex) -> EvalReport:
    """Aggregate a report over ``(pred, gold)`` sentence pairs."""
    report = EvalReport()
    for index, (pred, gold) in enumerate(pairs, 1):
        try:
            alignment = align_spans(pred, gold)
        except AlignmentError as exc:
            raise AlignmentError(f"sentence {index}: {exc}") from None
        report.sentence_count += 1
        report.total_words += len(gold)
        report.seg_errors += len(gold) - len(alignment)
        for i, j in alignment:
            word, g, p = gold[j].word, gold[j].tag, pred[i].tag
            known = lex.is_known(word)
            if not known:
                report.unknown_words += 1
            if g != p:
                if known:
                    report.tag_errors += 1
                    report.confusion[g, p] += 1
                else:
                    report.unknown_errors += 1
                    report.unknown_confusion[g, p] += 1
    return report


def confusion_shares(report: EvalReport) -> dict:
    """Each confusion cell as a percentage of all known-word tag errors."""
    if report.tag_errors <= 0:
        return {}
    return {cell: 100 * n / report.tag_errors for cell, n in report.confusion.items()}
