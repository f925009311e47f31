"""Command-line driver: build-morph, mine-wiki, build-catalog, run, eval.

Exit codes: 0 success, 1 usage or configuration error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .catalog import (
    DEFAULT_ROOTS,
    CatalogError,
    build_catalog,
    descendant_closure,
    ingest_entities,
    slim_wikidata_entity,
    term_frequency,
    validate_roots,
)
from .config import ConfigError, RunConfig, load_config
from .corpus import AnnotationError, parse_annotation_file, parse_mention_file, read_document
from .evalkit import LEVELS, format_report, linking_f1, normalization_accuracy, strict_recognition_f1
from .lemmatizer import CascadeToggles, build_schemas, build_suffix_inventory
from .morpho import (
    DEFAULT_MAX_SUFFIX_LEN,
    DEFAULT_MIN_SUPPORT,
    RuleIndex,
    induce_word_rules,
    ingest_conllu,
    ingest_dictionary,
    merge_entries,
    read_rules,
    write_entries,
    write_rules,
)
from .pipeline import DocInput, iter_annotation_files, run_corpus, write_counts, write_outputs
from .wiki import (
    DEFAULT_STOPPER_SUPPORT,
    ScanStats,
    count_lemma_frequencies,
    extract_link_pairs,
    iter_xml_pages,
    mine_stopper_words,
    validate_pair,
    write_pairs,
    write_stoppers,
)

log = logging.getLogger("slavlink")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None


def _write(path: Path, text: str | bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(text, str):
        text = text.encode("utf-8")
    path.write_bytes(text)


# build-morph


def cmd_build_morph(args) -> int:
    entries = []
    for p in args.conllu:
        entries.append(ingest_conllu(_read(Path(p))))
    for p in args.dict:
        entries.append(ingest_dictionary(_read(Path(p))))
    merged = merge_entries(*entries)
    if not merged:
        log.warning("no morphological entries read; writing empty outputs")
    rules = induce_word_rules(merged, args.min_support, args.max_suffix_len)
    out = Path(args.out)
    _write(out / "rules.tsv", write_rules(rules))
    _write(out / "lexicon.tsv", write_entries(merged))
    lemmas = {e.lemma for e in merged}
    print(f"entries\t{len(merged)}\nlemmas\t{len(lemmas)}\nrules\t{len(rules)}")
    return EXIT_OK


# mine-wiki


def cmd_mine_wiki(args) -> int:
    rules = RuleIndex(read_rules(_read(Path(args.rules)))) if args.rules else RuleIndex(())
    stats = ScanStats()
    pairs = []
    for p in args.wikitext:
        data = _read(Path(p))
        if args.xml:
            for title, text in iter_xml_pages(data):
                pairs.extend(extract_link_pairs(text, stats, page=title))
        else:
            pairs.extend(extract_link_pairs(data, stats))
    valid = sorted({pr for pr in pairs if validate_pair(pr, rules)}, key=lambda pr: (pr.anchor, pr.title))
    # the same link on several pages is counted once
    stoppers = mine_stopper_words(valid, args.min_support)
    freq = count_lemma_frequencies(pr.title for pr in valid)
    tuples = [(pr.anchor, pr.title) for pr in valid]
    inventory = build_suffix_inventory(tuples, args.inventory_size)
    schemas = build_schemas(tuples, inventory)

    out = Path(args.out)
    _write(out / "pairs.tsv", write_pairs(valid))
    _write(out / "stoppers.txt", write_stoppers(stoppers))
    _write(out / "lemma_freq.tsv", write_counts(freq))
    _write(out / "suffixes.txt", inventory.dumps())
    _write(out / "schemas.tsv", schemas.dumps())
    print(
        f"links\t{stats.links}\npairs\t{stats.pairs}\nvalid\t{len(valid)}\n"
        f"malformed\t{stats.malformed}\nnamespace\t{stats.namespace}\n"
        f"stoppers\t{len(stoppers)}\nschemas\t{len(schemas)}"
    )
    return EXIT_OK


# build-catalog


def _slim(data: bytes, languages) -> str:
    """Full dump (a JSON array, one entity per line) -> slim records."""
    out = []
    for line in data.decode("utf-8").split("\n"):
        line = line.strip().rstrip(",")
        if line in ("", "[", "]"):
            continue
        try:
            out.append(json.dumps(slim_wikidata_entity(json.loads(line), languages), ensure_ascii=False, sort_keys=True))
        except (ValueError, KeyError) as exc:
            log.debug("skipping dump line: %s", exc)
    return "".join(s + "\n" for s in out)


def cmd_build_catalog(args) -> int:
    roots = _config(args).roots if args.config else DEFAULT_ROOTS
    if args.roots:
        roots = json.loads(_read(Path(args.roots)))
    try:
        roots = validate_roots(roots)
    except CatalogError as exc:
        raise UsageError(str(exc)) from None
    languages = args.languages.split(",") if args.languages else None
    data = b"".join(_read(Path(p)) for p in args.entities)
    if args.full_dump:
        text = _slim(data, languages)
        if args.write_slim:
            _write(Path(args.write_slim), text)
        data = text.encode("utf-8")
    store = ingest_entities(data)
    closure = descendant_closure(store, roots)
    catalog = build_catalog(store, closure, term_frequency(store), languages)
    _write(Path(args.out), catalog.to_json())
    print(f"entities\t{len(store)}\nmalformed\t{store.malformed}")
    for cat in sorted(closure):
        print(f"closure.{cat}\t{len(closure[cat])}")
    print(f"names\t{len(catalog.name_index)}")
    return EXIT_OK


# run


def _config(args) -> RunConfig:
    try:
        return load_config(args.config)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def _load_docs(mentions_dir: Path, documents_dir: Path | None) -> list[DocInput]:
    languages = {}
    if documents_dir is not None:
        for path in iter_annotation_files(documents_dir, nested_only=False):
            doc = read_document(path)
            languages[doc.doc_id] = doc.language
    docs = []
    for path in iter_annotation_files(mentions_dir, nested_only=False):
        rel = path.relative_to(mentions_dir)
        doc_id, items = parse_mention_file(path.read_bytes())
        if documents_dir is not None:
            if doc_id not in languages:
                raise DataError(f"{rel}: no document with id {doc_id!r}")
            lang = languages[doc_id]
        elif len(rel.parts) > 1:
            lang = rel.parts[0]
        else:
            raise DataError(f"{rel}: put mention files under a language directory or pass --documents")
        docs.append(DocInput(doc_id, lang, items))
    seen = set()
    for d in docs:
        if (d.language, d.doc_id) in seen:
            raise DataError(f"duplicate document {d.language}/{d.doc_id}")
        seen.add((d.language, d.doc_id))
    return docs


def cmd_run(args) -> int:
    cfg = _config(args)
    if args.cascade is not None:
        try:
            cfg.cascade = CascadeToggles.parse(args.cascade)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.threshold is not None:
        cfg.threshold = args.threshold
    if args.no_refine:
        cfg.refine = False
    if args.workers is not None:
        cfg.workers = args.workers
    try:
        cfg.check_paths()
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    mentions_dir = Path(args.mentions)
    if not mentions_dir.is_dir():
        raise UsageError(f"no such directory: {mentions_dir}")
    documents_dir = Path(args.documents) if args.documents else None
    if documents_dir is not None and not documents_dir.is_dir():
        raise UsageError(f"no such directory: {documents_dir}")
    docs = _load_docs(mentions_dir, documents_dir)
    if cfg.languages:
        extra = sorted({d.language for d in docs} - set(cfg.languages))
        if extra:
            raise DataError(f"documents in unconfigured languages: {', '.join(extra)}")
    result = run_corpus(docs, cfg, lemma_oracle=args.lemma_oracle)
    written = write_outputs(result, Path(args.out))
    n = sum(len(ms) for per in result.values() for _d, ms in per)
    ids = {m.entity_id for per in result.values() for _d, ms in per for m in ms}
    print(f"documents\t{len(docs)}\nmentions\t{n}\nentities\t{len(ids)}\nfiles\t{len(written)}\ncascade\t{cfg.cascade}")
    return EXIT_OK


# eval


def _read_tree(root: Path) -> dict[str, list]:
    out: dict[str, list] = {}
    for path in iter_annotation_files(root):
        rel = path.relative_to(root)
        lang = rel.parts[0] if len(rel.parts) > 1 else ""
        try:
            _doc_id, mentions = parse_annotation_file(path.read_bytes())
        except AnnotationError as exc:
            raise DataError(f"{rel}: {exc}") from None
        out.setdefault(lang, []).extend(mentions)
    return out


def cmd_eval(args) -> int:
    gold_dir, pred_dir = Path(args.gold), Path(args.pred)
    for d in (gold_dir, pred_dir):
        if not d.is_dir():
            raise UsageError(f"no such directory: {d}")
    gold, pred = _read_tree(gold_dir), _read_tree(pred_dir)
    rec = strict_recognition_f1(gold, pred)
    link = linking_f1(gold, pred, args.level)
    acc = normalization_accuracy(gold, pred)
    sys.stdout.write(format_report("recognition", rec))
    sys.stdout.write(format_report(f"linking/{args.level}", link))
    print(f"normalization accuracy\t{'n/a' if acc is None else f'{acc:.4f}'}")
    if args.report:
        lines = [f"recognition.{k}={v}" for k, v in rec.as_dict().items()]
        lines += [f"linking.{k}={v}" for k, v in link.as_dict().items()]
        lines.append(f"normalization.accuracy={'' if acc is None else acc}")
        _write(Path(args.report), "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slavlink", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-morph", help="induce word lemmatization rules")
    p.add_argument("--conllu", nargs="*", default=[], help="CoNLL-U treebank files")
    p.add_argument("--dict", nargs="*", default=[], help="form<TAB>lemma[<TAB>upos<TAB>feats] files")
    p.add_argument("--min-support", type=int, default=DEFAULT_MIN_SUPPORT)
    p.add_argument("--max-suffix-len", type=int, default=DEFAULT_MAX_SUFFIX_LEN)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_build_morph)

    p = sub.add_parser("mine-wiki", help="mine link pairs, stopper words and schemas")
    p.add_argument("wikitext", nargs="+")
    p.add_argument("--xml", action="store_true", help="inputs are MediaWiki XML exports")
    p.add_argument("--rules", help="rules.tsv from build-morph")
    p.add_argument("--min-support", type=int, default=DEFAULT_STOPPER_SUPPORT)
    p.add_argument("--inventory-size", type=int, default=2000)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_mine_wiki)

    p = sub.add_parser("build-catalog", help="build the entity name catalog")
    p.add_argument("entities", nargs="+", help="slim JSONL entity records")
    p.add_argument("--config", help="take category roots from a run config")
    p.add_argument("--roots", help="JSON object category -> [ids]")
    p.add_argument("--languages", help="comma-separated languages to keep")
    p.add_argument("--full-dump", action="store_true", help="inputs are full Wikidata JSON dumps")
    p.add_argument("--write-slim", help="also save the slimmed records here")
    p.add_argument("--out", required=True, help="catalog JSON path")
    p.set_defaults(func=cmd_build_catalog)

    p = sub.add_parser("run", help="lemmatize and link recognized mentions")
    p.add_argument("--config", required=True)
    p.add_argument("--mentions", required=True, help="directory of <lang>/<doc> mention files")
    p.add_argument("--documents", help="directory of raw documents (language from their headers)")
    p.add_argument("--out", required=True)
    p.add_argument("--cascade", help="cascade toggles, e.g. pasW; empty string for the identity baseline")
    p.add_argument("--threshold", type=float)
    p.add_argument("--no-refine", action="store_true")
    p.add_argument("--workers", type=int)
    p.add_argument("--lemma-oracle", action="store_true", help="use gold lemmas from 4-column input")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("eval", help="score predictions against gold annotations")
    p.add_argument("gold")
    p.add_argument("pred")
    p.add_argument("--level", choices=LEVELS, default="cross-language")
    p.add_argument("--report", help="also write key=value scores here")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, AnnotationError, CatalogError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
