"""Resource loading and the lemmatize -> link -> refine corpus run."""

from __future__ import annotations

import logging
import multiprocessing
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .agreement import AgreementRuleTable, default_polish_table, parse_agreement_rules
from .catalog import EntityCatalog
from .config import RunConfig
from .corpus import LinkedMention, Mention, normalize_phrase, write_annotation_file
from .embeddings import VectorTable, load_vectors
from .lemmatizer import (
    CascadeToggles,
    Lemmatizer,
    LemmatizerResources,
    SuffixInventory,
    build_schemas,
    build_suffix_inventory,
)
from .linker import LinkConfig, apply_overrides, link_document, parse_override_rules, refine
from .morpho import MorphLexicon, read_entries, read_rules
from .wiki import StopperSet, count_lemma_frequencies, pair_entries, read_pairs, read_stoppers

log = logging.getLogger(__name__)

WIKI_FILES = ("pairs.tsv", "stoppers.txt", "lemma_freq.tsv", "schemas.tsv", "suffixes.txt")


def read_training_pairs(path: Path) -> list[tuple[str, str]]:
    out = []
    for line in path.read_text(encoding="utf-8").split("\n"):
        if not line.strip():
            continue
        inflected, _, lemma = line.partition("\t")
        out.append((normalize_phrase(inflected), normalize_phrase(lemma or inflected)))
    return out


def read_counts(text: str) -> dict[str, int]:
    out = {}
    for line in text.split("\n"):
        if line:
            word, _, n = line.rpartition("\t")
            out[word] = int(n)
    return out


def write_counts(counts) -> str:
    return "".join(f"{w}\t{n}\n" for w, n in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def assemble_resources(
    lexicon: MorphLexicon,
    pairs: Sequence[tuple[str, str]],
    stoppers: StopperSet | None = None,
    agreement: AgreementRuleTable | None = None,
    language: str | None = None,
    inventory_size: int = 2000,
    lemma_freq: Mapping[str, int] | None = None,
) -> LemmatizerResources:
    """Suffix inventory and schemas from ``pairs``; their word alignments extend
    the lexicon. Lemma frequencies default to word counts of the pair lemmas."""
    inventory = build_suffix_inventory(pairs, inventory_size) if pairs else SuffixInventory()
    schemas = build_schemas(pairs, inventory)
    if lemma_freq is None:
        lemma_freq = count_lemma_frequencies(lemma for _i, lemma in pairs)
    lexicon = lexicon.with_extra(pair_entries(pairs), lemma_freq=lemma_freq)
    return LemmatizerResources(lexicon, inventory, schemas, stoppers or StopperSet(), agreement, language)


def load_language_resources(cfg: RunConfig, lang: str, toggles: CascadeToggles | None = None) -> LemmatizerResources:
    toggles = toggles or cfg.cascade
    res = cfg.resources.get(lang)
    if res is None:
        return LemmatizerResources(language=lang)
    entries = read_entries(res.lexicon.read_text(encoding="utf-8")) if res.lexicon else []
    rules = read_rules(res.rules.read_text(encoding="utf-8")) if res.rules else frozenset()
    lexicon = MorphLexicon(entries, rules)

    pairs: list[tuple[str, str]] = []
    stoppers = StopperSet()
    freq: Counter = Counter()
    if toggles.W and res.wiki is not None:
        pairs += [(p.anchor, p.title) for p in read_pairs((res.wiki / "pairs.tsv").read_text(encoding="utf-8"))]
        stoppers = read_stoppers((res.wiki / "stoppers.txt").read_text(encoding="utf-8"))
        freq.update(read_counts((res.wiki / "lemma_freq.tsv").read_text(encoding="utf-8")))
    if res.training is not None:
        training = read_training_pairs(res.training)
        pairs += training
        freq.update(count_lemma_frequencies(lemma for _i, lemma in training))

    agreement = None
    if res.agreement == "default":
        agreement = default_polish_table() if lang == "pl" else None
    elif isinstance(res.agreement, Path):
        agreement = parse_agreement_rules(res.agreement.read_text(encoding="utf-8"), lang)
    return assemble_resources(lexicon, pairs, stoppers, agreement, lang, cfg.inventory_size, freq)


def load_catalog(cfg: RunConfig) -> EntityCatalog | None:
    if cfg.catalog is None:
        return None
    return EntityCatalog.from_json(cfg.catalog.read_text(encoding="utf-8"))


def load_table(cfg: RunConfig) -> VectorTable:
    if cfg.vectors is not None:
        with open(cfg.vectors, encoding="utf-8") as fh:
            table = load_vectors(fh, seed=cfg.embedding_seed)
        return table
    return VectorTable(cfg.embedding_dim, seed=cfg.embedding_seed)


@dataclass
class DocInput:
    doc_id: str
    language: str
    items: list[tuple[Mention, str | None]]  # (mention, gold lemma if any)


# Read-only state shared with worker processes; set before the pool starts.
_STATE: dict = {}


def _process_doc(doc: DocInput) -> list[LinkedMention]:
    lemmatizers, catalog, overrides, threshold, oracle = (
        _STATE["lemmatizers"],
        _STATE["catalog"],
        _STATE["overrides"],
        _STATE["threshold"],
        _STATE["oracle"],
    )
    mentions = apply_overrides([m for m, _l in doc.items], overrides)
    lem = lemmatizers[doc.language]
    items = []
    for m, (_orig, gold) in zip(mentions, doc.items):
        lemma = gold if oracle and gold is not None else lem(m.surface)
        items.append((m, lemma))
    config = LinkConfig(threshold, overrides, doc.language)
    return link_document(items, catalog, config)


def run_corpus(
    docs: Sequence[DocInput],
    cfg: RunConfig,
    toggles: CascadeToggles | None = None,
    lemma_oracle: bool = False,
    workers: int | None = None,
) -> dict[str, list[tuple[str, list[LinkedMention]]]]:
    """Lemmatize, link and refine; returns language -> [(doc_id, mentions)] in input order."""
    toggles = toggles or cfg.cascade
    workers = workers or cfg.workers
    languages = sorted({d.language for d in docs})
    overrides = parse_override_rules(cfg.overrides.read_text(encoding="utf-8")) if cfg.overrides else []
    _STATE.clear()
    _STATE.update(
        lemmatizers={lang: Lemmatizer(load_language_resources(cfg, lang, toggles), toggles) for lang in languages},
        catalog=load_catalog(cfg),
        overrides=overrides,
        threshold=cfg.threshold,
        oracle=lemma_oracle,
    )
    if workers > 1 and len(docs) > 1:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            linked = pool.map(_process_doc, docs)
    else:
        linked = [_process_doc(d) for d in docs]

    table = load_table(cfg) if cfg.refine else None
    catalog = _STATE["catalog"]
    tf_index = catalog.tf_index if catalog is not None else {}
    out: dict[str, list[tuple[str, list[LinkedMention]]]] = defaultdict(list)
    for lang in languages:
        idx = [i for i, d in enumerate(docs) if d.language == lang]
        flat = [m for i in idx for m in linked[i]]
        if table is not None:
            flat = refine(flat, table, tf_index, cfg.threshold)
        pos = 0
        for i in idx:
            n = len(linked[i])
            out[lang].append((docs[i].doc_id, flat[pos : pos + n]))
            pos += n
    _STATE.clear()
    return dict(out)


def write_outputs(result: dict[str, list[tuple[str, list[LinkedMention]]]], out_dir: Path) -> list[Path]:
    written = []
    rows = []
    for lang in sorted(result):
        lang_dir = out_dir / lang
        lang_dir.mkdir(parents=True, exist_ok=True)
        for doc_id, mentions in result[lang]:
            path = lang_dir / f"{doc_id}.out"
            path.write_bytes(write_annotation_file(doc_id, mentions))
            written.append(path)
            rows.extend((m.entity_id, lang, doc_id, m.surface) for m in mentions)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = out_dir / "clusters.tsv"
    report.write_text("".join("\t".join(r) + "\n" for r in sorted(set(rows))), encoding="utf-8")
    written.append(report)
    return written


def iter_annotation_files(root: Path, nested_only: bool = True) -> Iterable[Path]:
    """Files under ``root/<lang>/``; top-level files such as clusters.tsv are
    skipped unless ``nested_only`` is false."""
    return sorted(
        p
        for p in root.rglob("*")
        if p.is_file() and not p.name.startswith(".") and (not nested_only or len(p.relative_to(root).parts) >= 2)
    )
