"""Run configuration (YAML). Paths are relative to the config file."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from .catalog import DEFAULT_ROOTS, validate_roots
from .embeddings import DEFAULT_DIM, DEFAULT_SEED
from .lemmatizer import DEFAULT_INVENTORY_SIZE, CascadeToggles
from .linker import DEFAULT_THRESHOLD


class ConfigError(ValueError):
    pass


@dataclass
class LanguageResources:
    lexicon: Path | None = None
    rules: Path | None = None
    wiki: Path | None = None  # mine-wiki output directory
    training: Path | None = None  # inflected<TAB>lemma pairs
    agreement: str | Path | None = None  # "default", a rules file, or None


@dataclass
class RunConfig:
    languages: list[str] = field(default_factory=list)
    resources: dict[str, LanguageResources] = field(default_factory=dict)
    catalog: Path | None = None
    vectors: Path | None = None
    embedding_dim: int = DEFAULT_DIM
    embedding_seed: int = DEFAULT_SEED
    cascade: CascadeToggles = field(default_factory=CascadeToggles)
    threshold: float = DEFAULT_THRESHOLD
    refine: bool = True
    overrides: Path | None = None
    roots: dict[str, tuple[str, ...]] = field(default_factory=lambda: dict(DEFAULT_ROOTS))
    inventory_size: int = DEFAULT_INVENTORY_SIZE
    workers: int = 1
    base_dir: Path = Path(".")

    def check_paths(self) -> None:
        missing = []
        for p in [self.catalog, self.vectors, self.overrides]:
            if p is not None and not p.exists():
                missing.append(p)
        for res in self.resources.values():
            for p in [res.lexicon, res.rules, res.wiki, res.training]:
                if p is not None and not p.exists():
                    missing.append(p)
            if isinstance(res.agreement, Path) and not res.agreement.exists():
                missing.append(res.agreement)
        if missing:
            raise ConfigError("missing paths: " + ", ".join(str(p) for p in missing))


def _path(base: Path, value: Any) -> Path | None:
    if value in (None, ""):
        return None
    p = Path(value)
    return p if p.is_absolute() else base / p


def _toggles(value: Any) -> CascadeToggles:
    if value is None:
        return CascadeToggles()
    if isinstance(value, str):
        return CascadeToggles.parse(value)
    if isinstance(value, dict):
        unknown = set(value) - set("pwWas")
        if unknown:
            raise ConfigError(f"unknown cascade toggles {sorted(unknown)}")
        return CascadeToggles(**{k: bool(value.get(k, False)) for k in "pwWas"})
    raise ConfigError("cascade must be a flag string like 'pasW' or a mapping")


def parse_config(data: dict, base_dir: Path) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping")
    langs = data.get("languages") or []
    if not isinstance(langs, list) or not all(isinstance(l, str) for l in langs):
        raise ConfigError("languages must be a list of codes")
    resources = {}
    for lang, spec in (data.get("resources") or {}).items():
        if lang not in langs:
            raise ConfigError(f"resources given for unconfigured language {lang!r}")
        spec = spec or {}
        agreement = spec.get("agreement")
        if agreement not in (None, "default"):
            agreement = _path(base_dir, agreement)
        resources[lang] = LanguageResources(
            _path(base_dir, spec.get("lexicon")),
            _path(base_dir, spec.get("rules")),
            _path(base_dir, spec.get("wiki")),
            _path(base_dir, spec.get("training")),
            agreement,
        )
    emb = data.get("embedding") or {}
    try:
        roots = validate_roots(data["roots"]) if "roots" in data else dict(DEFAULT_ROOTS)
        cascade = _toggles(data.get("cascade"))
        cfg = RunConfig(
            languages=langs,
            resources=resources,
            catalog=_path(base_dir, data.get("catalog")),
            vectors=_path(base_dir, data.get("vectors")),
            embedding_dim=int(emb.get("dimension", DEFAULT_DIM)),
            embedding_seed=int(emb.get("seed", DEFAULT_SEED)),
            cascade=cascade,
            threshold=float(data.get("threshold", DEFAULT_THRESHOLD)),
            refine=bool(data.get("refine", True)),
            overrides=_path(base_dir, data.get("overrides")),
            roots=roots,
            inventory_size=int(data.get("inventory_size", DEFAULT_INVENTORY_SIZE)),
            workers=int(data.get("workers", 1)),
            base_dir=base_dir,
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from None
    return cfg


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"bad YAML in {path}: {exc}") from None
    return parse_config(data, path.parent)
