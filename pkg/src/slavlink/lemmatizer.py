"""Phrase lemmatization: suffix schemas and the heuristic cascade.

A schema maps the tuple of per-word suffixes of an inflected phrase to the
tuple of replacement suffixes of its lemma, e.g. ``("vem", "vlem") ->
("v", "vel")`` turns "Václavem Havlem" into "Václav Havel". Suffixes are
always the longest member of a frequency-ranked suffix inventory.

The cascade tries, in order: stopper split, agreement rules, the most
natural applicable schema, and word-by-word most popular lemma.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .agreement import AgreementRuleTable, apply_agreement_rules
from .corpus import AnnotationError, tokenize_phrase
from .morpho import DEFAULT_MAX_SUFFIX_LEN, MorphLexicon, harmonize_case, most_popular_lemma
from .wiki import StopperSet

DEFAULT_INVENTORY_SIZE = 2000


def _as_words(phrase: str | Sequence[str]) -> list[str]:
    return tokenize_phrase(phrase) if isinstance(phrase, str) else list(phrase)


def word_suffixes(word: str, max_len: int = DEFAULT_MAX_SUFFIX_LEN) -> list[str]:
    """Proper suffixes of ``word`` (at least one stem character kept), longest last."""
    return [word[len(word) - k :] for k in range(1, min(max_len, len(word) - 1) + 1)]


class SuffixInventory:
    """The most frequent word suffixes; always contains the empty suffix."""

    def __init__(self, suffixes: Iterable[str] = (), max_len: int = DEFAULT_MAX_SUFFIX_LEN):
        ordered = [s for s in dict.fromkeys(suffixes) if s]
        self.suffixes = [""] + ordered
        self.max_len = max_len
        self._set = frozenset(self.suffixes)

    def __contains__(self, suffix: str) -> bool:
        return suffix in self._set

    def __len__(self) -> int:
        return len(self.suffixes)

    def longest_suffix(self, word: str) -> str:
        for k in range(min(self.max_len, len(word) - 1), 0, -1):
            s = word[len(word) - k :]
            if s in self._set:
                return s
        return ""

    def dumps(self) -> str:
        return "".join(f"{s}\n" for s in self.suffixes[1:])

    @classmethod
    def loads(cls, text: str, max_len: int = DEFAULT_MAX_SUFFIX_LEN) -> "SuffixInventory":
        return cls((line for line in text.split("\n") if line), max_len)


def build_suffix_inventory(
    pairs: Iterable,
    size: int = DEFAULT_INVENTORY_SIZE,
    max_len: int = DEFAULT_MAX_SUFFIX_LEN,
) -> SuffixInventory:
    """Keep the ``size`` most frequent suffixes over both sides of all pairs.

    ``pairs`` holds LinkPair objects or (inflected, lemma) tuples. Ties go
    to the shorter suffix, then lexicographic order.
    """
    counts: Counter = Counter()
    for pair in pairs:
        a, b = (pair.anchor, pair.title) if hasattr(pair, "anchor") else pair
        for word in tokenize_phrase(a) + tokenize_phrase(b):
            counts.update(word_suffixes(word, max_len))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], len(kv[0]), kv[0]))
    return SuffixInventory((s for s, _n in ranked[:size]), max_len)


@dataclass(frozen=True, order=True)
class PhraseSchema:
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    support: int = 1

    def __post_init__(self):
        if len(self.lhs) != len(self.rhs):
            raise ValueError("schema sides differ in length")
        if self.support < 1:
            raise ValueError("schema support must be >= 1")


def phrase_key(phrase: str | Sequence[str], inv: SuffixInventory) -> tuple[str, ...]:
    return tuple(inv.longest_suffix(w) for w in _as_words(phrase))


def induce_schema(inflected: str | Sequence[str], lemma: str | Sequence[str], inv: SuffixInventory) -> PhraseSchema | None:
    src, dst = _as_words(inflected), _as_words(lemma)
    if len(src) != len(dst):
        raise ValueError(f"word count mismatch: {len(src)} vs {len(dst)}")
    lhs, rhs = [], []
    for w, l in zip(src, dst):
        s = inv.longest_suffix(w)
        stem = w[: len(w) - len(s)]
        if not l.startswith(stem):
            return None
        lhs.append(s)
        rhs.append(l[len(stem) :])
    return PhraseSchema(tuple(lhs), tuple(rhs))


def _rewrite(words: list[str], lhs: Sequence[str], rhs: Sequence[str]) -> list[str] | None:
    out = []
    for w, s, r in zip(words, lhs, rhs):
        new = w[: len(w) - len(s)] + r
        if not new or new != new.strip() or len(new.split()) != 1:
            return None
        out.append(new)
    return out


def apply_schema(schema: PhraseSchema, phrase: str | Sequence[str], inv: SuffixInventory) -> str | None:
    words = _as_words(phrase)
    if len(words) != len(schema.lhs):
        return None
    if phrase_key(words, inv) != schema.lhs:
        return None
    out = _rewrite(words, schema.lhs, schema.rhs)
    return None if out is None else " ".join(out)


class SchemaSet:
    """Schemas keyed by left-hand side; support counts the inducing pairs."""

    def __init__(self, inventory: SuffixInventory):
        self.inventory = inventory
        self._by_lhs: dict[tuple[str, ...], Counter] = defaultdict(Counter)

    def add(self, schema: PhraseSchema) -> None:
        self._by_lhs[schema.lhs][schema.rhs] += schema.support

    def add_pair(self, inflected: str, lemma: str) -> PhraseSchema | None:
        try:
            schema = induce_schema(inflected, lemma, self.inventory)
        except ValueError:
            return None
        if schema is not None:
            self.add(schema)
        return schema

    def __len__(self) -> int:
        return sum(len(c) for c in self._by_lhs.values())

    def __iter__(self):
        for lhs in sorted(self._by_lhs):
            for rhs, n in sorted(self._by_lhs[lhs].items()):
                yield PhraseSchema(lhs, rhs, n)

    def candidates(self, phrase: str | Sequence[str]) -> list[tuple[str, PhraseSchema]]:
        """(output, schema) for every applicable schema."""
        words = _as_words(phrase)
        lhs = phrase_key(words, self.inventory)
        out = []
        for rhs, n in self._by_lhs.get(lhs, {}).items():
            new = _rewrite(words, lhs, rhs)
            if new is not None:
                out.append((" ".join(new), PhraseSchema(lhs, rhs, n)))
        return out

    def dumps(self) -> str:
        # Suffixes are written "-em"; a bare "-" is the empty suffix.
        return "".join(
            f"{' '.join(map(_mark, s.lhs))}\t{' '.join(map(_mark, s.rhs))}\t{s.support}\n" for s in self
        )

    @classmethod
    def loads(cls, text: str, inventory: SuffixInventory) -> "SchemaSet":
        out = cls(inventory)
        for lineno, line in enumerate(text.split("\n"), start=1):
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise AnnotationError(f"schema line has {len(cols)} columns, expected 3", lineno)
            lhs, rhs = cols[0].split(" "), cols[1].split(" ")
            try:
                out.add(PhraseSchema(tuple(_unmark(s) for s in lhs), tuple(_unmark(s) for s in rhs), int(cols[2])))
            except ValueError as exc:
                raise AnnotationError(str(exc), lineno) from None
        return out


def _mark(s: str) -> str:
    return "-" + s


def _unmark(s: str) -> str:
    if not s.startswith("-"):
        raise ValueError(f"schema suffix {s!r} lacks the '-' marker")
    return s[1:]


def build_schemas(pairs: Iterable[tuple[str, str]], inventory: SuffixInventory) -> SchemaSet:
    out = SchemaSet(inventory)
    for inflected, lemma in pairs:
        out.add_pair(inflected, lemma)
    return out


def _freq(counts: Mapping[str, int], word: str) -> int:
    return counts.get(word, 0) or counts.get(word.lower(), 0)


def naturalness_score(candidate: str | Sequence[str], lexicon: MorphLexicon) -> float:
    words = _as_words(candidate)
    return sum(math.log1p(_freq(lexicon.lemma_freq, w)) for w in words) + sum(
        math.log1p(_freq(lexicon.word_freq, w)) for w in words
    )


def find_stopper_split(phrase: str | Sequence[str], stoppers: StopperSet | Iterable[str]) -> tuple[list[str], list[str]] | None:
    words = _as_words(phrase)
    for i in range(len(words) - 1, -1, -1):
        if words[i] in stoppers:
            if i == 0:
                return None
            return words[:i], words[i:]
    return None


@dataclass(frozen=True)
class CascadeToggles:
    """Ablation switches: phrase schemas, word lemmas, Wikipedia data, agreement, stoppers."""

    p: bool = True
    w: bool = True
    W: bool = True
    a: bool = True
    s: bool = True

    @classmethod
    def parse(cls, flags: str) -> "CascadeToggles":
        """``"pasW"`` enables exactly those switches; ``""`` is the identity baseline."""
        unknown = set(flags) - set("pwWas")
        if unknown:
            raise ValueError(f"unknown cascade toggles: {''.join(sorted(unknown))}")
        return cls(**{k: k in flags for k in "pwWas"})

    def __str__(self) -> str:
        return "".join(k for k in "pwWas" if getattr(self, k))


BASELINE = CascadeToggles(False, False, False, False, False)


@dataclass
class LemmatizerResources:
    lexicon: MorphLexicon = field(default_factory=MorphLexicon)
    inventory: SuffixInventory = field(default_factory=SuffixInventory)
    schemas: SchemaSet | None = None
    stoppers: StopperSet = field(default_factory=StopperSet)
    agreement: AgreementRuleTable | None = None
    language: str | None = None

    def __post_init__(self):
        if self.schemas is None:
            self.schemas = SchemaSet(self.inventory)


def _word_lemma(word: str, lexicon: MorphLexicon) -> str:
    lemma = most_popular_lemma(word, lexicon)
    if not lemma or len(lemma.split()) != 1:
        return word
    return harmonize_case(word, lemma)


def _best_schema_output(words: list[str], res: LemmatizerResources) -> str | None:
    cands = res.schemas.candidates(words)
    if not cands:
        return None
    ranked = sorted(
        cands,
        key=lambda c: (-naturalness_score(c[0], res.lexicon), -c[1].support, c[0]),
    )
    return ranked[0][0]


def _cascade(words: list[str], res: LemmatizerResources, toggles: CascadeToggles, use_stoppers: bool) -> list[str]:
    if use_stoppers and toggles.s:
        split = find_stopper_split(words, res.stoppers)
        if split is not None:
            prefix, tail = split
            return _cascade(prefix, res, toggles, use_stoppers=False) + tail
    if toggles.a:
        out = apply_agreement_rules(words, res.agreement, res.lexicon, res.language)
        if out is not None:
            return out.split(" ")
    if toggles.p:
        out = _best_schema_output(words, res)
        if out is not None:
            return out.split(" ")
    if toggles.w:
        return [_word_lemma(w, res.lexicon) for w in words]
    return list(words)


def lemmatize(
    phrase: str | Sequence[str],
    resources: LemmatizerResources,
    toggles: CascadeToggles = CascadeToggles(),
) -> str:
    words = _as_words(phrase)
    if not words:
        raise ValueError("cannot lemmatize an empty phrase")
    out = _cascade(words, resources, toggles, use_stoppers=True)
    assert len(out) == len(words)
    return " ".join(out)


class Lemmatizer:
    """Cascade bound to one language's resources, with a small memo."""

    def __init__(self, resources: LemmatizerResources, toggles: CascadeToggles = CascadeToggles()):
        self.resources = resources
        self.toggles = toggles
        self._memo: dict[str, str] = {}

    def __call__(self, phrase: str) -> str:
        hit = self._memo.get(phrase)
        if hit is None:
            hit = self._memo[phrase] = lemmatize(phrase, self.resources, self.toggles)
        return hit
