"""Single-word lemmatization rules and word/lemma statistics.

A rule ``(w2, v2)`` lemmatizes a word ``w = w1 + w2`` into ``w1 + v2``.
Rules are induced from (form, lemma) pairs read from CoNLL-U treebanks or
from plain form/lemma dictionaries.
"""

from __future__ import annotations

import io
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Mapping

from .corpus import AnnotationError, nfc

log = logging.getLogger(__name__)

DEFAULT_MIN_SUPPORT = 2
DEFAULT_MAX_SUFFIX_LEN = 6


@dataclass(frozen=True, order=True)
class MorphEntry:
    form: str
    lemma: str
    upos: str = "_"
    feats: str = "_"
    count: int = 1

    def __post_init__(self):
        if not self.form or not self.lemma:
            raise ValueError("form and lemma must be non-empty")
        if self.count < 1:
            raise ValueError("count must be >= 1")

    @property
    def key(self) -> tuple[str, str, str, str]:
        return (self.form, self.lemma, self.upos, self.feats)


@dataclass(frozen=True, order=True)
class LemmaRule:
    from_suffix: str
    to_suffix: str
    support: int = 1

    def apply(self, word: str) -> str | None:
        if not word.endswith(self.from_suffix):
            return None
        return word[: len(word) - len(self.from_suffix)] + self.to_suffix


def _lines(stream: bytes | str | IO) -> Iterator[str]:
    if isinstance(stream, bytes):
        stream = stream.decode("utf-8")
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    for line in stream:
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        yield nfc(line.rstrip("\n").rstrip("\r"))


def merge_entries(*groups: Iterable[MorphEntry]) -> list[MorphEntry]:
    """Multiset union; identical (form, lemma, upos, feats) tuples add counts."""
    counts: Counter = Counter()
    for group in groups:
        for e in group:
            counts[e.key] += e.count
    return [MorphEntry(*key, count=n) for key, n in sorted(counts.items())]


def ingest_conllu(stream: bytes | str | IO) -> list[MorphEntry]:
    counts: Counter = Counter()
    for lineno, line in enumerate(_lines(stream), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise AnnotationError(f"CoNLL-U line has {len(cols)} columns, expected 10", lineno)
        tok_id, form, lemma, upos, _xpos, feats = cols[:6]
        if "-" in tok_id or "." in tok_id:
            continue
        if not form or not lemma or lemma == "_" and form != "_":
            continue
        counts[(form, lemma, upos, feats)] += 1
    return [MorphEntry(*key, count=n) for key, n in sorted(counts.items())]


def ingest_dictionary(stream: bytes | str | IO) -> list[MorphEntry]:
    """Read a ``form<TAB>lemma`` dictionary; optional 3rd/4th columns give UPOS and FEATS."""
    counts: Counter = Counter()
    for lineno, line in enumerate(_lines(stream), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (2, 4):
            raise AnnotationError(f"dictionary line has {len(cols)} columns, expected 2 or 4", lineno)
        if not cols[0] or not cols[1]:
            raise AnnotationError("empty form or lemma", lineno)
        upos, feats = (cols[2], cols[3]) if len(cols) == 4 else ("_", "_")
        counts[(cols[0], cols[1], upos, feats)] += 1
    return [MorphEntry(*key, count=n) for key, n in sorted(counts.items())]


def common_prefix_len(a: str, b: str) -> int:
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


def harmonize_case(form: str, lemma: str) -> str:
    """Give ``lemma`` the case of ``form``'s first letter when they differ only in case.

    Treebanks lowercase common-noun lemmas ("Uniwersytetu" -> "uniwersytet");
    without this the common prefix would be empty.
    """
    if form and lemma and form[0] != lemma[0] and form[0].lower() == lemma[0].lower():
        return form[0] + lemma[1:]
    return lemma


def rule_candidates(form: str, lemma: str, max_suffix_len: int = DEFAULT_MAX_SUFFIX_LEN) -> set[tuple[str, str]]:
    lemma = harmonize_case(form, lemma)
    p = common_prefix_len(form, lemma)
    w2, v2 = form[p:], lemma[p:]
    out = {(w2, v2)}
    if not w2 and not v2:
        # Extending the identity rule only yields more identity rules.
        return out
    for k in range(1, max_suffix_len - len(w2) + 1):
        if k > p:
            break
        ctx = form[p - k : p]
        out.add((ctx + w2, ctx + v2))
    return out


def induce_word_rules(
    entries: Iterable[MorphEntry],
    min_support: int = DEFAULT_MIN_SUPPORT,
    max_suffix_len: int = DEFAULT_MAX_SUFFIX_LEN,
) -> frozenset[LemmaRule]:
    if min_support < 1 or max_suffix_len < 1:
        raise ValueError("min_support and max_suffix_len must be >= 1")
    pairs = {(e.form, e.lemma) for e in entries}
    support: Counter = Counter()
    for form, lemma in pairs:
        support.update(rule_candidates(form, lemma, max_suffix_len))
    return frozenset(LemmaRule(w2, v2, n) for (w2, v2), n in support.items() if n >= min_support)


class RuleIndex:
    """Suffix-keyed lookup over a rule set."""

    def __init__(self, rules: Iterable[LemmaRule]):
        self.pairs = {(r.from_suffix, r.to_suffix) for r in rules}
        self.by_suffix: dict[str, set[str]] = defaultdict(set)
        for w2, v2 in self.pairs:
            self.by_suffix[w2].add(v2)
        self.max_len = max((len(w2) for w2 in self.by_suffix), default=0)

    def possible_lemma(self, form: str, candidate: str) -> bool:
        candidate = harmonize_case(form, candidate)
        if form == candidate:
            return True
        for k in range(max(0, len(form) - self.max_len), len(form) + 1):
            w1 = form[:k]
            if not candidate.startswith(w1):
                # w1 only grows as k increases
                break
            if (form[k:], candidate[k:]) in self.pairs:
                return True
        return False

    def lemmas(self, form: str) -> set[str]:
        out = {form}
        for k in range(max(0, len(form) - self.max_len), len(form) + 1):
            for v2 in self.by_suffix.get(form[k:], ()):
                out.add(form[:k] + v2)
        return out


def possible_lemma(form: str, candidate: str, rules: Iterable[LemmaRule] | RuleIndex) -> bool:
    if not isinstance(rules, RuleIndex):
        rules = RuleIndex(rules)
    return rules.possible_lemma(form, candidate)


class MorphLexicon:
    """Morphological entries, induced rules and lemma/word frequencies.

    ``lemma_freq`` counts lemma occurrences in the entries plus any extra
    counts (titles, training lemmas); ``word_freq`` does the same for forms.
    """

    def __init__(
        self,
        entries: Iterable[MorphEntry] = (),
        rules: Iterable[LemmaRule] = (),
        lemma_freq: Mapping[str, int] | None = None,
        word_freq: Mapping[str, int] | None = None,
    ):
        self.entries = merge_entries(entries)
        self.rules = frozenset(rules)
        self.rule_index = RuleIndex(self.rules)
        self._extra_lemma = Counter(lemma_freq or {})
        self._extra_word = Counter(word_freq or {})
        self.lemma_freq: Counter = Counter(self._extra_lemma)
        self.word_freq: Counter = Counter(self._extra_word)
        self._by_form: dict[str, Counter] = defaultdict(Counter)
        self._by_lower: dict[str, Counter] = defaultdict(Counter)
        self._readings: dict[str, list[MorphEntry]] = defaultdict(list)
        self._readings_lower: dict[str, list[MorphEntry]] = defaultdict(list)
        self._by_lemma: dict[str, list[MorphEntry]] = defaultdict(list)
        for e in self.entries:
            self.lemma_freq[e.lemma] += e.count
            self.word_freq[e.form] += e.count
            self._by_form[e.form][e.lemma] += e.count
            self._by_lower[e.form.lower()][e.lemma] += e.count
            self._readings[e.form].append(e)
            self._readings_lower[e.form.lower()].append(e)
            self._by_lemma[e.lemma].append(e)
        order = lambda e: (-e.count, e.lemma, e.upos, e.feats, e.form)
        for index in (self._readings, self._readings_lower, self._by_lemma):
            for lst in index.values():
                lst.sort(key=order)

    def with_extra(
        self,
        entries: Iterable[MorphEntry] = (),
        lemma_freq: Mapping[str, int] | None = None,
        word_freq: Mapping[str, int] | None = None,
    ) -> "MorphLexicon":
        """New lexicon with added entries and frequencies (additive merge)."""
        return MorphLexicon(
            list(self.entries) + list(entries),
            self.rules,
            self._extra_lemma + Counter(lemma_freq or {}),
            self._extra_word + Counter(word_freq or {}),
        )

    def with_rules(self, rules: Iterable[LemmaRule]) -> "MorphLexicon":
        return MorphLexicon(self.entries, rules, self._extra_lemma, self._extra_word)

    def __contains__(self, word: str) -> bool:
        return word in self._by_form

    def lemma_counts(self, word: str) -> Counter:
        """Lemma counts for ``word``; case-insensitive retry when there is no exact hit."""
        hits = self._by_form.get(word)
        if not hits:
            hits = self._by_lower.get(word.lower())
        return hits or Counter()

    def readings(self, word: str) -> list[MorphEntry]:
        return self._readings.get(word) or self._readings_lower.get(word.lower()) or []

    def forms_of(self, lemma: str) -> list[MorphEntry]:
        return self._by_lemma.get(lemma, [])

    def possible_lemma(self, form: str, candidate: str) -> bool:
        return self.rule_index.possible_lemma(form, candidate)


def most_popular_lemma(word: str, lexicon: MorphLexicon) -> str:
    counts = lexicon.lemma_counts(word)
    if not counts:
        return word
    return min(counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def write_rules(rules: Iterable[LemmaRule]) -> str:
    rows = sorted(rules, key=lambda r: (-r.support, r.from_suffix, r.to_suffix))
    return "".join(f"{r.from_suffix}\t{r.to_suffix}\t{r.support}\n" for r in rows)


def read_rules(stream: bytes | str | IO) -> frozenset[LemmaRule]:
    rules = set()
    for lineno, line in enumerate(_lines(stream), start=1):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise AnnotationError(f"rule line has {len(cols)} columns, expected 3", lineno)
        try:
            rules.add(LemmaRule(cols[0], cols[1], int(cols[2])))
        except ValueError:
            raise AnnotationError(f"bad support {cols[2]!r}", lineno) from None
    return frozenset(rules)


def write_entries(entries: Iterable[MorphEntry]) -> str:
    return "".join(f"{e.form}\t{e.lemma}\t{e.upos}\t{e.feats}\t{e.count}\n" for e in entries)


def read_entries(stream: bytes | str | IO) -> list[MorphEntry]:
    out = []
    for lineno, line in enumerate(_lines(stream), start=1):
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 5:
            raise AnnotationError(f"lexicon line has {len(cols)} columns, expected 5", lineno)
        try:
            out.append(MorphEntry(cols[0], cols[1], cols[2], cols[3], int(cols[4])))
        except ValueError as exc:
            raise AnnotationError(str(exc), lineno) from None
    return out
