from __future__ import annotations

import pytest

from slavlink.catalog import DEFAULT_ROOTS
from slavlink.config import ConfigError, load_config, parse_config
from slavlink.lemmatizer import BASELINE, CascadeToggles

from conftest import FIXTURES


def test_fixture_config():
    path = FIXTURES / "run" / "config.yaml"
    cfg = load_config(path)
    assert cfg.languages == ["pl", "ru"]
    assert cfg.resources["pl"].lexicon == path.parent / "build/pl/morph/lexicon.tsv"
    assert cfg.resources["pl"].agreement == "default"
    assert cfg.resources["ru"].agreement is None
    assert cfg.catalog == path.parent / "build/catalog.json"
    assert cfg.cascade == CascadeToggles()
    assert (cfg.threshold, cfg.refine, cfg.embedding_dim, cfg.embedding_seed) == (0.5, True, 100, 13)
    assert cfg.roots == dict(DEFAULT_ROOTS)


def test_absolute_paths_kept(tmp_path):
    cfg = parse_config({"catalog": "/data/catalog.json", "vectors": "v.txt"}, tmp_path)
    assert str(cfg.catalog) == "/data/catalog.json"
    assert cfg.vectors == tmp_path / "v.txt"


def test_cascade_forms(tmp_path):
    assert parse_config({"cascade": "pasW"}, tmp_path).cascade == CascadeToggles.parse("pasW")
    mapped = parse_config({"cascade": {"p": True, "W": True}}, tmp_path).cascade
    assert mapped == CascadeToggles(p=True, w=False, W=True, a=False, s=False)
    assert parse_config({"cascade": ""}, tmp_path).cascade == BASELINE
    assert parse_config({}, tmp_path).cascade == CascadeToggles()


@pytest.mark.parametrize(
    "data",
    [
        {"cascade": "pxW"},
        {"cascade": {"q": True}},
        {"cascade": 3},
        {"languages": "pl"},
        {"languages": ["pl"], "resources": {"cs": {}}},
        {"roots": {**DEFAULT_ROOTS, "PER": []}},
        {"threshold": "high"},
        [1, 2],
    ],
)
def test_invalid_configs(tmp_path, data):
    with pytest.raises(ConfigError):
        parse_config(data, tmp_path)


def test_bad_yaml_and_missing_file(tmp_path):
    bad = tmp_path / "c.yaml"
    bad.write_text("languages: [pl\n")
    with pytest.raises(ConfigError):
        load_config(bad)
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yaml")


def test_empty_file_gives_defaults(tmp_path):
    p = tmp_path / "c.yaml"
    p.write_text("")
    cfg = load_config(p)
    assert cfg.languages == [] and cfg.catalog is None


def test_check_paths_lists_missing(tmp_path):
    (tmp_path / "lex.tsv").write_text("")
    cfg = parse_config({"languages": ["pl"], "resources": {"pl": {"lexicon": "lex.tsv", "rules": "rules.tsv"}}}, tmp_path)
    with pytest.raises(ConfigError, match="rules.tsv"):
        cfg.check_paths()
    (tmp_path / "rules.tsv").write_text("")
    cfg.check_paths()


def test_workspace_config_paths_exist(run_config):
    run_config.check_paths()
