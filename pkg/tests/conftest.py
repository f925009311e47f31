from __future__ import annotations

import contextlib
import io
import shutil
from pathlib import Path

import pytest

from slavlink import cli
from slavlink.corpus import Category, LinkedMention, Mention

FIXTURES = Path(__file__).parent / "fixtures"
LANGUAGES = ("pl", "ru")


def run_cli(*argv: str) -> tuple[int, str]:
    """Run a subcommand in-process; returns (exit code, stdout)."""
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli.main([str(a) for a in argv])
    return code, out.getvalue()


def lm(surface: str, lemma: str, category: str, entity_id: str, doc_id: str = "d1") -> LinkedMention:
    return LinkedMention(Mention(surface, Category(category), doc_id), lemma, entity_id)


@pytest.fixture(scope="session")
def workspace(tmp_path_factory) -> Path:
    """A private copy of tests/fixtures with every resource built by the CLI.

    Layout mirrors tests/fixtures; built resources land in run/build/ where
    run/config.yaml expects them.
    """
    root = tmp_path_factory.mktemp("ws") / "fixtures"
    shutil.copytree(FIXTURES, root, ignore=shutil.ignore_patterns("golden", "build"))
    run = root / "run"
    for lang in LANGUAGES:
        src = root / lang
        code, _ = run_cli(
            "build-morph",
            "--conllu", src / "treebank.conllu",
            "--dict", src / "dictionary.tsv",
            "--out", run / "build" / lang / "morph",
        )
        assert code == 0
        code, _ = run_cli(
            "mine-wiki", src / "wiki.txt",
            "--rules", run / "build" / lang / "morph" / "rules.tsv",
            "--out", run / "build" / lang / "wiki",
        )
        assert code == 0
    code, _ = run_cli(
        "build-catalog", root / "catalog" / "entities.jsonl",
        "--config", run / "config.yaml",
        "--languages", "pl,ru,cs,en",
        "--out", run / "build" / "catalog.json",
    )
    assert code == 0
    return root


@pytest.fixture(scope="session")
def run_config(workspace):
    from slavlink.config import load_config

    return load_config(workspace / "run" / "config.yaml")


@pytest.fixture(scope="session")
def language_resources(run_config):
    """Full-cascade lemmatizer resources per fixture language."""
    from slavlink.lemmatizer import CascadeToggles
    from slavlink.pipeline import load_language_resources

    return {lang: load_language_resources(run_config, lang, CascadeToggles()) for lang in LANGUAGES}


@pytest.fixture(scope="session")
def fixture_catalog():
    """Catalog built in-process from the slim entity fixture."""
    from slavlink.catalog import DEFAULT_ROOTS, build_catalog, descendant_closure, ingest_entities, term_frequency

    store = ingest_entities((FIXTURES / "catalog" / "entities.jsonl").read_bytes())
    return build_catalog(store, descendant_closure(store, DEFAULT_ROOTS), term_frequency(store), ["pl", "ru", "cs", "en"])


VERDICTS = pytest.StashKey[list]()


@pytest.fixture
def verdict(request):
    """Record and print one pass/fail line for an acceptance criterion."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else "")
        print(line)
        request.config.stash.setdefault(VERDICTS, []).append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
