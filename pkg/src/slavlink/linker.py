"""Entity identifier assignment and refinement.

Per document, mentions are processed longest first. Each takes the id of a
matching mention already seen in the document if there is one, else the
most popular catalog entity for its phrase or lemma, else a synthetic
``lemma|category`` id. A later pass merges identifier groups whose phrase
embeddings are similar enough.
"""

from __future__ import annotations

import re
from collections import OrderedDict, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .catalog import EntityCatalog, catalog_aliases
from .corpus import Category, LinkedMention, Mention, normalize_phrase, parse_category, tokenize_phrase
from .embeddings import VectorTable, embed_phrase

DEFAULT_THRESHOLD = 0.5

DOC, CATALOG, SYNTHETIC = "doc", "catalog", "synthetic"

_QID = re.compile(r"Q[1-9][0-9]*\Z")


@dataclass(frozen=True)
class Candidate:
    entity_id: str
    language: str
    source: str = CATALOG
    tf: int = -1


@dataclass
class LinkConfig:
    similarity_threshold: float = DEFAULT_THRESHOLD
    override_rules: list[tuple[str, Category]] = field(default_factory=list)
    language: str = ""

    def __post_init__(self):
        if not np.isfinite(self.similarity_threshold):
            raise ValueError("similarity threshold must be finite")
        self.override_rules = [(p, parse_category(c) if isinstance(c, str) else c) for p, c in self.override_rules]


def synthetic_id(lemma: str, category: Category | str) -> str:
    cat = category.value if isinstance(category, Category) else category
    return f"{normalize_phrase(lemma)}|{cat}"


def is_wikidata_id(entity_id: str) -> bool:
    return bool(_QID.match(entity_id))


class DocEntities:
    """Insertion-ordered phrase -> [(entity_id, language, category)] for one document."""

    def __init__(self):
        self._items: OrderedDict[str, list[tuple[str, str, str]]] = OrderedDict()

    def add(self, phrase: str, entity_id: str, language: str, category: str) -> None:
        key = normalize_phrase(phrase)
        if not key:
            return
        entries = self._items.setdefault(key, [])
        if (entity_id, language, category) not in entries:
            entries.append((entity_id, language, category))

    def items(self):
        for phrase, entries in self._items.items():
            for entry in entries:
                yield phrase, entry

    def __len__(self) -> int:
        return len(self._items)


def same_entity(doc_phrase: str, phrase: str) -> bool:
    """Case-folded words of the shorter phrase occur, in order, among the longer's."""
    a = [w.casefold() for w in tokenize_phrase(doc_phrase)]
    b = [w.casefold() for w in tokenize_phrase(phrase)]
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return False
    it = iter(a)
    return all(any(w == x for x in it) for w in b)


def get_identifiers(
    phrase: str,
    doc_entities: DocEntities,
    catalog: EntityCatalog | None,
    category: Category | str | None = None,
) -> list[Candidate]:
    cat = category.value if isinstance(category, Category) else category
    out = []
    for doc_phrase, (eid, lang, ecat) in doc_entities.items():
        if cat is not None and ecat != cat:
            continue
        if same_entity(doc_phrase, phrase):
            out.append(Candidate(eid, lang, DOC, catalog.tf(eid) if catalog else -1))
    if catalog is not None:
        entries = catalog.lookup(phrase, cat)
        if not entries and cat is not None:
            # the recognizer's category may not match the KB's closures
            entries = catalog.lookup(phrase)
        out.extend(Candidate(e.id, e.language, CATALOG, e.tf) for e in entries)
    return out


def best_id(lemma: str, candidates: Sequence[Candidate], language: str = "") -> str:
    if not candidates:
        raise ValueError(f"no candidates for {lemma!r}")
    for c in candidates:
        if c.source == DOC:
            return c.entity_id
    best = None
    for c in candidates:
        if c.source != CATALOG:
            continue
        key = (c.tf, c.language == language)
        if best is None or key > best[0]:
            best = (key, c.entity_id)
    if best is not None:
        return best[1]
    return candidates[-1].entity_id


def sort_key(triple: tuple[str, str, Category]):
    phrase, lemma, cat = triple
    return (-len(tokenize_phrase(phrase)), -len(phrase), phrase, lemma, cat.value)


def add_and_link(
    ners: Iterable[tuple[str, str, Category]],
    catalog: EntityCatalog | None,
    config: LinkConfig | None = None,
    trace: list | None = None,
) -> dict[tuple[str, str, Category], str]:
    """Assign an entity id to every distinct (phrase, lemma, category) of one document."""
    config = config or LinkConfig()
    lang = config.language
    doc_entities = DocEntities()
    linked: dict[tuple[str, str, Category], str] = {}
    triples = {(normalize_phrase(p), normalize_phrase(l), Category(c)) for p, l, c in ners}
    for phrase, lemma, cat in sorted(triples, key=sort_key):
        p1 = get_identifiers(phrase, doc_entities, catalog, cat)
        p2 = get_identifiers(lemma, doc_entities, catalog, cat)
        fallback = Candidate(synthetic_id(lemma, cat), lang, SYNTHETIC)
        eid = best_id(lemma, p1 + p2 + [fallback], lang)
        linked[(phrase, lemma, cat)] = eid
        if trace is not None:
            trace.append((phrase, lemma, cat, eid))
        doc_entities.add(lemma, eid, lang, cat.value)
        if catalog is not None:
            for alias in catalog_aliases(lemma, eid, catalog, lang or None):
                doc_entities.add(alias, eid, lang, cat.value)
    return linked


def link_document(
    items: Sequence[tuple[Mention, str]],
    catalog: EntityCatalog | None,
    config: LinkConfig | None = None,
) -> list[LinkedMention]:
    """Link (mention, lemma) items of one document, preserving input order."""
    triples = [(m.surface, lemma, m.category) for m, lemma in items]
    ids = add_and_link(triples, catalog, config)
    return [
        LinkedMention(m, lemma, ids[(normalize_phrase(m.surface), normalize_phrase(lemma), m.category)])
        for m, lemma in items
    ]


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [find(i) for i in range(n)]


def _tf(entity_id: str, tf_index: Mapping[str, int]) -> int:
    if not is_wikidata_id(entity_id):
        return -1
    return tf_index.get(entity_id, 0)


def refine(
    linked: Sequence[LinkedMention],
    table: VectorTable,
    tf_index: Mapping[str, int],
    threshold: float = DEFAULT_THRESHOLD,
) -> list[LinkedMention]:
    """Merge id groups connected by a lemma pair with dot product >= threshold.

    Mentions must come from a single language. A merged group takes the
    constituent id with the highest term frequency (synthetic ids count -1;
    ties go to the smallest id).
    """
    groups: dict[str, list[int]] = defaultdict(list)
    for i, m in enumerate(linked):
        groups[m.entity_id].append(i)
    ids = sorted(groups)
    if len(ids) < 2:
        return list(linked)

    # one row per distinct (group, lemma)
    rows: list[tuple[int, str]] = []
    for g, eid in enumerate(ids):
        for lemma in sorted({linked[i].lemma for i in groups[eid]}):
            rows.append((g, lemma))
    vecs = np.array([embed_phrase(lemma, table) for _g, lemma in rows])
    gram = vecs @ vecs.T
    owner = np.array([g for g, _l in rows])
    hit = gram >= threshold
    hit &= owner[:, None] != owner[None, :]
    edges = {(int(owner[a]), int(owner[b])) for a, b in zip(*np.nonzero(hit))}
    comp = _components(len(ids), edges)

    members: dict[int, list[str]] = defaultdict(list)
    for g, root in enumerate(comp):
        members[root].append(ids[g])
    new_id = {}
    for root, eids in members.items():
        winner = min(eids, key=lambda e: (-_tf(e, tf_index), e))
        for e in eids:
            new_id[e] = winner
    return [m if new_id[m.entity_id] == m.entity_id else m.relabel(new_id[m.entity_id]) for m in linked]


def apply_overrides(mentions: Sequence, rules: Sequence[tuple[str, Category | str]]):
    """Relabel mentions whose surface equals a rule pattern, case-insensitively; first rule wins."""
    if not rules:
        return list(mentions)
    compiled = [(p.casefold(), parse_category(c) if isinstance(c, str) else c) for p, c in rules]
    out = []
    for m in mentions:
        base = m.mention if isinstance(m, LinkedMention) else m
        key = base.surface.casefold()
        new_cat = next((c for p, c in compiled if p == key), None)
        if new_cat is None or new_cat == base.category:
            out.append(m)
            continue
        relabeled = Mention(base.surface, new_cat, base.doc_id)
        out.append(LinkedMention(relabeled, m.lemma, m.entity_id) if isinstance(m, LinkedMention) else relabeled)
    return out


def parse_override_rules(text: str) -> list[tuple[str, Category]]:
    rules = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        pattern, sep, cat = line.partition("\t")
        if not sep or not pattern.strip():
            raise ValueError(f"line {lineno}: expected pattern<TAB>category")
        rules.append((pattern.strip(), parse_category(cat.strip())))
    return rules
