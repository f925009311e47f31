"""Mine (anchor, title) link pairs from wikitext.

Links ``[[Title|anchor]]`` pair an often inflected anchor with the
lemmatized article title. Pairs that pass :func:`validate_pair` feed the
suffix inventory, phrase schemas, stopper words and lemma frequencies.
"""

from __future__ import annotations

import io
import re
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .corpus import normalize_phrase, tokenize_phrase
from .morpho import MorphEntry, MorphLexicon, RuleIndex

PAGE_MARKER = "%%PAGE "
DEFAULT_STOPPER_SUPPORT = 5

_SUPPRESS = re.compile(r"<!--.*?(?:-->|\Z)|<nowiki\s*>.*?(?:</nowiki\s*>|\Z)|<nowiki\s*/>", re.S | re.I)


@dataclass(frozen=True, order=True)
class LinkPair:
    anchor: str
    title: str
    source_page: str = ""

    def __post_init__(self):
        anchor, title = normalize_phrase(self.anchor), normalize_phrase(self.title)
        if not anchor or not title:
            raise ValueError("anchor and title must be non-empty")
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "title", title)


@dataclass
class StopperSet:
    words: frozenset[str] = frozenset()
    min_support: int = DEFAULT_STOPPER_SUPPORT
    support: dict[str, int] = field(default_factory=dict, compare=False)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass
class ScanStats:
    links: int = 0
    pairs: int = 0
    malformed: int = 0
    namespace: int = 0
    duplicates: int = 0


def _decode(data: bytes | str | IO) -> str:
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data


def split_pages(text: str) -> Iterator[tuple[str, str]]:
    """Split the fixture format on ``%%PAGE <title>`` lines; text before any marker is page ''."""
    title, buf = "", []
    for line in text.split("\n"):
        if line.startswith(PAGE_MARKER):
            if buf or title:
                yield title, "\n".join(buf)
            title, buf = line[len(PAGE_MARKER):].strip(), []
        else:
            buf.append(line)
    if buf or title:
        yield title, "\n".join(buf)


def iter_xml_pages(stream: bytes | str | IO) -> Iterator[tuple[str, str]]:
    """Yield (title, wikitext) from a MediaWiki XML export."""
    if isinstance(stream, (bytes, str)):
        stream = io.BytesIO(stream.encode("utf-8") if isinstance(stream, str) else stream)
    title, text = "", ""
    for _event, elem in ET.iterparse(stream, events=("end",)):
        tag = elem.tag.rsplit("}", 1)[-1]
        if tag == "title":
            title = elem.text or ""
        elif tag == "text":
            text = elem.text or ""
        elif tag == "page":
            yield title, text
            title, text = "", ""
            elem.clear()


def _capitalize_title(title: str) -> str:
    return title[:1].upper() + title[1:]


def _link_bodies(text: str, stats: ScanStats) -> Iterator[tuple[str, str]]:
    """Yield (link body, link trail) for every balanced innermost-first ``[[...]]``."""
    stack: list[int] = []
    i, n = 0, len(text)
    while i < n:
        if text.startswith("[[", i):
            stack.append(i + 2)
            i += 2
        elif text.startswith("]]", i) and stack:
            start = stack.pop()
            body = text[start:i]
            i += 2
            j = i
            while j < n and text[j].isalpha():
                j += 1
            trail = text[i:j]
            if "\n" in body:
                stats.malformed += 1
                continue
            yield body, trail
        else:
            i += 1
    stats.malformed += len(stack)


def extract_link_pairs(
    wikitext: bytes | str | IO,
    stats: ScanStats | None = None,
    page: str | None = None,
) -> Iterator[LinkPair]:
    """Yield link pairs from wikitext in the ``%%PAGE`` fixture format.

    Only the first occurrence of a (anchor, title, page) triple is yielded.
    Links inside comments and nowiki blocks, links to other namespaces and
    malformed links are skipped; ``stats`` counts them.
    """
    stats = stats if stats is not None else ScanStats()
    text = _decode(wikitext)
    pages = [(page, text)] if page is not None else split_pages(text)
    for page_title, body in pages:
        seen: set[tuple[str, str]] = set()
        for pair in _page_pairs(page_title, body, stats):
            key = (pair.anchor, pair.title)
            if key in seen:
                stats.duplicates += 1
                continue
            seen.add(key)
            stats.pairs += 1
            yield pair


def _page_pairs(page_title: str, body: str, stats: ScanStats) -> Iterator[LinkPair]:
    body = _SUPPRESS.sub(" ", body)
    for link, trail in _link_bodies(body, stats):
        stats.links += 1
        target, sep, anchor = link.partition("|")
        target = target.split("#", 1)[0].replace("_", " ")
        if ":" in target:
            stats.namespace += 1
            continue
        target = normalize_phrase(target)
        if not target:
            stats.malformed += 1
            continue
        if not sep or not anchor.strip():
            anchor = target
        if "|" in anchor:
            stats.malformed += 1
            continue
        try:
            yield LinkPair(anchor + trail, _capitalize_title(target), page_title)
        except ValueError:
            stats.malformed += 1


def validate_pair(pair: LinkPair, rules: RuleIndex | MorphLexicon | Iterable) -> bool:
    if isinstance(rules, MorphLexicon):
        rules = rules.rule_index
    elif not isinstance(rules, RuleIndex):
        rules = RuleIndex(rules)
    anchor, title = tokenize_phrase(pair.anchor), tokenize_phrase(pair.title)
    if len(anchor) != len(title):
        return False
    return all(t == a or rules.possible_lemma(a, t) for a, t in zip(anchor, title))


def stopper_candidates(pair: LinkPair) -> list[tuple[int, str]]:
    """Positions i where anchor[i] == title[i] and everything after i is identical."""
    anchor, title = tokenize_phrase(pair.anchor), tokenize_phrase(pair.title)
    if len(anchor) != len(title):
        return []
    out = []
    for i in range(len(anchor) - 1, -1, -1):
        if anchor[i] != title[i]:
            break
        out.append((i, anchor[i]))
    return out[::-1]


def mine_stopper_words(valid_pairs: Iterable[LinkPair], min_support: int = DEFAULT_STOPPER_SUPPORT) -> StopperSet:
    """Words witnessed as stoppers by at least ``min_support`` distinct multi-word pairs."""
    witnesses: dict[str, set[tuple[str, str]]] = {}
    for pair in valid_pairs:
        if len(tokenize_phrase(pair.title)) < 2:
            continue
        for _i, word in stopper_candidates(pair):
            witnesses.setdefault(word, set()).add((pair.anchor, pair.title))
    support = {w: len(s) for w, s in witnesses.items() if len(s) >= min_support}
    return StopperSet(frozenset(support), min_support, dict(sorted(support.items())))


def count_lemma_frequencies(titles: Iterable[str], training_lemmas: Iterable[str] = ()) -> Counter:
    counts: Counter = Counter()
    for phrase in titles:
        counts.update(tokenize_phrase(phrase))
    for phrase in training_lemmas:
        counts.update(tokenize_phrase(phrase))
    return counts


def pair_entries(pairs: Iterable[tuple[str, str]]) -> list[MorphEntry]:
    """Word-aligned (form, lemma) evidence from equal-length phrase pairs."""
    counts: Counter = Counter()
    for inflected, lemma in pairs:
        a, t = tokenize_phrase(inflected), tokenize_phrase(lemma)
        if len(a) != len(t):
            continue
        counts.update(zip(a, t))
    return [MorphEntry(form, lemma, count=n) for (form, lemma), n in sorted(counts.items())]


def write_pairs(pairs: Iterable[LinkPair]) -> str:
    return "".join(f"{p.anchor}\t{p.title}\n" for p in pairs)


def read_pairs(stream: bytes | str | IO) -> list[LinkPair]:
    out = []
    for line in _decode(stream).split("\n"):
        if not line.strip():
            continue
        anchor, _, title = line.partition("\t")
        out.append(LinkPair(anchor, title or anchor))
    return out


def write_stoppers(stoppers: StopperSet) -> str:
    return "".join(f"{w}\n" for w in sorted(stoppers.words))


def read_stoppers(stream: bytes | str | IO) -> StopperSet:
    words = frozenset(w.strip() for w in _decode(stream).split("\n") if w.strip())
    return StopperSet(words, min_support=0)
