"""Entity catalog built from slim Wikidata records.

Each input line is a JSON object::

    {"id": "Q5", "labels": {"en": ["human"]}, "aliases": {}, "p31": [], "p279": ["Q215627"]}

Categories are assigned by collecting everything below a few root classes
(subclass-of edges, plus direct instances); names are weighted by a term
frequency so that collisions resolve to the more popular entity.
"""

from __future__ import annotations

import io
import json
import logging
import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping

from .corpus import CATEGORIES, normalize_phrase, tokenize_phrase

log = logging.getLogger(__name__)

QID = re.compile(r"Q[1-9][0-9]*\Z")

# Top-level Wikidata classes per category.
DEFAULT_ROOTS: dict[str, tuple[str, ...]] = {
    "PER": ("Q5", "Q231002", "Q41710"),
    "LOC": ("Q3257686", "Q2221906", "Q58416391", "Q214045"),
    "EVT": ("Q1656682", "Q602884", "Q1190554"),
    "PRO": ("Q22811462", "Q1485500", "Q11578774", "Q15621286", "Q1616075"),
    "ORG": ("Q43229", "Q252550", "Q783794"),
}

ALIAS_CATEGORIES = frozenset({"PRO", "ORG"})
LANGUAGE_INDEPENDENT = "mul"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class KbEntity:
    id: str
    labels: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    aliases: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    instance_of: tuple[str, ...] = ()
    subclass_of: tuple[str, ...] = ()

    def __post_init__(self):
        if not QID.match(self.id):
            raise ValueError(f"malformed entity id {self.id!r}")

    def names(self) -> Iterator[tuple[str, str]]:
        for source in (self.labels, self.aliases):
            for lang, names in source.items():
                for name in names:
                    yield lang, name


def validate_roots(roots: Mapping[str, Iterable[str]]) -> dict[str, tuple[str, ...]]:
    out = {}
    for cat in CATEGORIES:
        ids = tuple(roots.get(cat, ()))
        if not ids:
            raise CatalogError(f"category {cat} has no root entities")
        for q in ids:
            if not QID.match(q):
                raise CatalogError(f"malformed root id {q!r} for {cat}")
        out[cat] = ids
    unknown = set(roots) - set(CATEGORIES)
    if unknown:
        raise CatalogError(f"unknown categories in roots: {sorted(unknown)}")
    return out


def _names(value) -> dict[str, tuple[str, ...]]:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ValueError("labels/aliases must map language to names")
    out = {}
    for lang, names in value.items():
        if isinstance(names, str):
            names = [names]
        cleaned = tuple(dict.fromkeys(normalize_phrase(n) for n in names if isinstance(n, str)))
        cleaned = tuple(n for n in cleaned if n)
        if cleaned:
            out[lang] = cleaned
    return out


def _ids(value) -> tuple[str, ...]:
    if value is None:
        return ()
    if not isinstance(value, list) or not all(isinstance(q, str) and QID.match(q) for q in value):
        raise ValueError("claims must be lists of Q-ids")
    return tuple(value)


def entity_from_record(record: dict) -> KbEntity:
    if not isinstance(record, dict) or "id" not in record:
        raise ValueError("record without id")
    return KbEntity(
        record["id"],
        _names(record.get("labels")),
        _names(record.get("aliases")),
        _ids(record.get("p31")),
        _ids(record.get("p279")),
    )


def entity_to_record(e: KbEntity) -> dict:
    return {
        "id": e.id,
        "labels": {k: list(v) for k, v in e.labels.items()},
        "aliases": {k: list(v) for k, v in e.aliases.items()},
        "p31": list(e.instance_of),
        "p279": list(e.subclass_of),
    }


class EntityStore(dict):
    """id -> KbEntity, with ingestion counters."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.malformed = 0
        self.duplicates = 0


def ingest_entities(stream: bytes | str | IO) -> EntityStore:
    if isinstance(stream, bytes):
        stream = stream.decode("utf-8")
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    store = EntityStore()
    for lineno, line in enumerate(stream, start=1):
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        if not line.strip():
            continue
        try:
            entity = entity_from_record(json.loads(line))
        except (ValueError, TypeError) as exc:
            store.malformed += 1
            log.debug("skipping record on line %d: %s", lineno, exc)
            continue
        if entity.id in store:
            store.duplicates += 1
        store[entity.id] = entity
    if store.malformed or store.duplicates:
        log.warning("entity ingestion: %d malformed, %d duplicate records", store.malformed, store.duplicates)
    return store


def slim_wikidata_entity(doc: dict, languages: Iterable[str] | None = None) -> dict:
    """Reduce a full Wikidata JSON entity to the slim record format."""
    langs = set(languages) if languages else None

    def keep(lang):
        return langs is None or lang in langs or lang == LANGUAGE_INDEPENDENT

    def claim_ids(prop):
        out = []
        for claim in doc.get("claims", {}).get(prop, []):
            value = claim.get("mainsnak", {}).get("datavalue", {}).get("value", {})
            if isinstance(value, dict) and "id" in value:
                out.append(value["id"])
        return out

    labels = {k: [v["value"]] for k, v in doc.get("labels", {}).items() if keep(k)}
    aliases = {k: [a["value"] for a in v] for k, v in doc.get("aliases", {}).items() if keep(k)}
    return {"id": doc["id"], "labels": labels, "aliases": aliases, "p31": claim_ids("P31"), "p279": claim_ids("P279")}


def descendant_closure(store: Mapping[str, KbEntity], roots: Mapping[str, Iterable[str]]) -> dict[str, set[str]]:
    """Per category: roots, their transitive subclasses, and direct instances of any of them."""
    subclasses: dict[str, list[str]] = defaultdict(list)
    instances: dict[str, list[str]] = defaultdict(list)
    for e in store.values():
        for parent in e.subclass_of:
            subclasses[parent].append(e.id)
        for cls in e.instance_of:
            instances[cls].append(e.id)

    out = {}
    for cat, root_ids in roots.items():
        classes = set(root_ids)
        queue = deque(root_ids)
        while queue:
            node = queue.popleft()
            for child in subclasses.get(node, ()):
                if child not in classes:
                    classes.add(child)
                    queue.append(child)
        members = set(classes)
        for cls in classes:
            members.update(instances.get(cls, ()))
        out[cat] = members
    return out


def term_frequency(store: Mapping[str, KbEntity]) -> Counter:
    """Claim references to an id plus the number of names the entity carries."""
    tf: Counter = Counter()
    for e in store.values():
        tf.update(e.instance_of)
        tf.update(e.subclass_of)
        n = sum(1 for _ in e.names())
        if n:
            tf[e.id] += n
    return tf


@dataclass(frozen=True, order=True)
class CatalogEntry:
    id: str
    language: str
    category: str
    tf: int


def _entry_order(e: CatalogEntry):
    return (-e.tf, e.id, e.language, e.category)


def acronym(name: str) -> str | None:
    words = tokenize_phrase(name)
    if len(words) < 2:
        return None
    letters = [w[0] for w in words if w[0].isalnum()]
    if len(letters) < 2:
        return None
    return "".join(letters).upper()


class EntityCatalog:
    def __init__(self):
        self.name_index: dict[str, list[CatalogEntry]] = {}
        self.tf_index: dict[str, int] = {}
        self.categories: dict[str, frozenset[str]] = {}
        self.labels: dict[str, dict[str, tuple[str, ...]]] = {}
        self.aliases: dict[str, dict[str, tuple[str, ...]]] = {}

    def __contains__(self, name: str) -> bool:
        return normalize_phrase(name) in self.name_index

    def lookup(self, name: str, category: str | None = None) -> list[CatalogEntry]:
        """Entries for ``name`` by descending tf, optionally restricted to a category."""
        entries = self.name_index.get(normalize_phrase(name), [])
        if category is not None:
            entries = [e for e in entries if e.category == category]
        return entries

    def tf(self, entity_id: str) -> int:
        return self.tf_index.get(entity_id, -1)

    def to_json(self) -> str:
        snapshot = {
            "names": {k: [[e.id, e.language, e.category, e.tf] for e in v] for k, v in sorted(self.name_index.items())},
            "tf": dict(sorted(self.tf_index.items())),
            "categories": {k: sorted(v) for k, v in sorted(self.categories.items())},
            "labels": {k: v for k, v in sorted(self.labels.items())},
            "aliases": {k: v for k, v in sorted(self.aliases.items())},
        }
        return json.dumps(snapshot, ensure_ascii=False, sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "EntityCatalog":
        data = json.loads(text)
        cat = cls()
        cat.name_index = {k: [CatalogEntry(*row) for row in v] for k, v in data["names"].items()}
        cat.tf_index = dict(data["tf"])
        cat.categories = {k: frozenset(v) for k, v in data["categories"].items()}
        cat.labels = {k: {lang: tuple(n) for lang, n in v.items()} for k, v in data["labels"].items()}
        cat.aliases = {k: {lang: tuple(n) for lang, n in v.items()} for k, v in data["aliases"].items()}
        return cat


def build_catalog(
    store: Mapping[str, KbEntity],
    closure: Mapping[str, set[str]],
    tf: Mapping[str, int],
    languages: Iterable[str] | None = None,
) -> EntityCatalog:
    langs = set(languages) | {LANGUAGE_INDEPENDENT} if languages else None
    member_of: dict[str, set[str]] = defaultdict(set)
    for cat, ids in closure.items():
        for q in ids:
            member_of[q].add(cat)

    catalog = EntityCatalog()
    index: dict[str, set[CatalogEntry]] = defaultdict(set)
    for q in sorted(member_of):
        e = store.get(q)
        if e is None:
            continue
        names = [(lang, n) for lang, n in e.names() if langs is None or lang in langs]
        if not names:
            continue
        weight = int(tf.get(q, 0))
        for lang, name in names:
            for cat in member_of[q]:
                index[name].add(CatalogEntry(q, lang, cat, weight))
        catalog.tf_index[q] = weight
        catalog.categories[q] = frozenset(member_of[q])
        catalog.labels[q] = {l: v for l, v in sorted(e.labels.items()) if langs is None or l in langs}
        catalog.aliases[q] = {l: v for l, v in sorted(e.aliases.items()) if langs is None or l in langs}
    catalog.name_index = {name: sorted(entries, key=_entry_order) for name, entries in sorted(index.items())}
    return catalog


def catalog_aliases(lemma: str, entity_id: str, catalog: EntityCatalog, language: str | None = None) -> list[str]:
    """Short forms and acronyms for PRO/ORG entities; empty for anything else."""
    cats = catalog.categories.get(entity_id)
    if not cats or not (cats & ALIAS_CATEGORIES):
        return []

    def in_scope(lang):
        return language is None or lang in (language, LANGUAGE_INDEPENDENT)

    out: list[str] = []
    for lang, names in catalog.aliases.get(entity_id, {}).items():
        if in_scope(lang):
            out.extend(names)
    for lang, names in catalog.labels.get(entity_id, {}).items():
        if in_scope(lang):
            out.extend(a for a in map(acronym, names) if a)
    key = normalize_phrase(lemma)
    return [a for a in dict.fromkeys(out) if a != key]
