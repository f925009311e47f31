"""Recognition, normalization and linking scores.

Inputs are ``{language: [LinkedMention, ...]}`` mappings (a bare list is
treated as a single unnamed language). Mentions are identified by
(language, document, surface, category); recognition compares surfaces
case-insensitively, normalization and linking match them exactly.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .corpus import LinkedMention

LEVELS = ("document", "language", "cross-language")


@dataclass
class EvalReport:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    precision: float = 0.0
    recall: float = 0.0
    f1: float = 0.0
    per_language: dict[str, "EvalReport"] = field(default_factory=dict)

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int) -> "EvalReport":
        if tp + fp + fn == 0:
            # nothing to find and nothing predicted
            return cls(0, 0, 0, 1.0, 1.0, 1.0)
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        f = 2 * p * r / (p + r) if p + r else 0.0
        return cls(tp, fp, fn, p, r, f)

    def as_dict(self) -> dict:
        d = {"tp": self.tp, "fp": self.fp, "fn": self.fn, "precision": self.precision, "recall": self.recall, "f1": self.f1}
        for lang, rep in sorted(self.per_language.items()):
            for k, v in rep.as_dict().items():
                d[f"{lang}.{k}"] = v
        return d


Corpus = Mapping[str, Sequence[LinkedMention]]


def _by_language(data: Corpus | Sequence[LinkedMention]) -> dict[str, Sequence[LinkedMention]]:
    if isinstance(data, Mapping):
        return dict(data)
    return {"": data}


def _recognition_keys(mentions: Iterable[LinkedMention]) -> set:
    return {(m.doc_id, m.surface.casefold(), m.category.value) for m in mentions}


def strict_recognition_f1(gold: Corpus | Sequence[LinkedMention], pred: Corpus | Sequence[LinkedMention]) -> EvalReport:
    g, p = _by_language(gold), _by_language(pred)
    per = {}
    tp = fp = fn = 0
    for lang in sorted(set(g) | set(p)):
        gk, pk = _recognition_keys(g.get(lang, ())), _recognition_keys(p.get(lang, ()))
        rep = EvalReport.from_counts(len(gk & pk), len(pk - gk), len(gk - pk))
        per[lang] = rep
        tp, fp, fn = tp + rep.tp, fp + rep.fp, fn + rep.fn
    out = EvalReport.from_counts(tp, fp, fn)
    out.per_language = per if len(per) > 1 or "" not in per else {}
    return out


def _exact(data: Corpus | Sequence[LinkedMention]) -> dict[tuple, LinkedMention]:
    """First mention per (language, doc, surface, category)."""
    out = {}
    for lang, mentions in _by_language(data).items():
        for m in mentions:
            out.setdefault((lang, m.doc_id, m.surface, m.category.value), m)
    return out


def normalization_accuracy(gold: Corpus | Sequence[LinkedMention], pred: Corpus | Sequence[LinkedMention]) -> float | None:
    """Share of matched mentions with the exact gold lemma; None when nothing matches."""
    g, p = _exact(gold), _exact(pred)
    matched = g.keys() & p.keys()
    if not matched:
        return None
    return sum(g[k].lemma == p[k].lemma for k in matched) / len(matched)


def _pairs(counts: Iterable[int]) -> int:
    return sum(n * (n - 1) // 2 for n in counts)


def pairwise_counts(gold_labels: Sequence, pred_labels: Sequence) -> tuple[int, int, int]:
    """(tp, fp, fn) over unordered item pairs, given aligned cluster labels."""
    gold_pairs = _pairs(Counter(gold_labels).values())
    pred_pairs = _pairs(Counter(pred_labels).values())
    tp = _pairs(Counter(zip(gold_labels, pred_labels)).values())
    return tp, pred_pairs - tp, gold_pairs - tp


def _scope(key: tuple, entity_id: str, level: str):
    lang, doc = key[0], key[1]
    if level == "document":
        return (lang, doc, entity_id)
    if level == "language":
        return (lang, entity_id)
    return entity_id


def linking_f1(gold: Corpus | Sequence[LinkedMention], pred: Corpus | Sequence[LinkedMention], level: str = "cross-language") -> EvalReport:
    """Pairwise-link P/R/F1 over mentions present in both gold and prediction."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    g, p = _exact(gold), _exact(pred)
    matched = sorted(g.keys() & p.keys())
    gl = [_scope(k, g[k].entity_id, level) for k in matched]
    pl = [_scope(k, p[k].entity_id, level) for k in matched]
    out = EvalReport.from_counts(*pairwise_counts(gl, pl))
    if level != "cross-language":
        by_lang = defaultdict(list)
        for i, k in enumerate(matched):
            by_lang[k[0]].append(i)
        if len(by_lang) > 1:
            out.per_language = {
                lang: EvalReport.from_counts(*pairwise_counts([gl[i] for i in idx], [pl[i] for i in idx]))
                for lang, idx in sorted(by_lang.items())
            }
    return out


def format_report(name: str, report: EvalReport) -> str:
    w = max(14, len(name) + 2)
    lines = [f"{name:<{w}}{'P':>8}{'R':>8}{'F1':>8}{'tp':>7}{'fp':>7}{'fn':>7}"]
    rows = [("all", report)] + sorted(report.per_language.items())
    for lang, r in rows:
        lines.append(f"{lang or '-':<{w}}{r.precision:>8.4f}{r.recall:>8.4f}{r.f1:>8.4f}{r.tp:>7}{r.fp:>7}{r.fn:>7}")
    return "\n".join(lines) + "\n"
