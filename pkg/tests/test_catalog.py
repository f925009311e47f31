from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, strategies as st

from slavlink.catalog import (
    DEFAULT_ROOTS,
    CatalogError,
    EntityCatalog,
    KbEntity,
    acronym,
    build_catalog,
    catalog_aliases,
    descendant_closure,
    entity_from_record,
    ingest_entities,
    slim_wikidata_entity,
    term_frequency,
    validate_roots,
)

from conftest import FIXTURES


@pytest.fixture(scope="module")
def store():
    return ingest_entities((FIXTURES / "catalog" / "entities.jsonl").read_bytes())


@pytest.fixture(scope="module")
def catalog(fixture_catalog):
    return fixture_catalog


def ent(q, labels=None, p31=(), p279=(), aliases=None):
    return KbEntity(q, labels or {}, aliases or {}, tuple(p31), tuple(p279))


def test_ingest_examples():
    s = ingest_entities('{"id": "Q5", "labels": {"en": ["human"]}}\n')
    assert s["Q5"].labels == {"en": ("human",)}
    assert len(ingest_entities(b"")) == 0
    bad = ingest_entities('{"labels": {"en": ["x"]}}\n{"id": "Q1"}\n')
    assert bad.malformed == 1 and list(bad) == ["Q1"]


def test_fixture_store(store):
    assert store.malformed == 1
    assert len(store) == 21


def test_default_roots_are_the_published_table():
    assert DEFAULT_ROOTS == {
        "PER": ("Q5", "Q231002", "Q41710"),
        "LOC": ("Q3257686", "Q2221906", "Q58416391", "Q214045"),
        "EVT": ("Q1656682", "Q602884", "Q1190554"),
        "PRO": ("Q22811462", "Q1485500", "Q11578774", "Q15621286", "Q1616075"),
        "ORG": ("Q43229", "Q252550", "Q783794"),
    }


def test_roots_validation():
    roots = dict(DEFAULT_ROOTS)
    roots["EVT"] = ()
    with pytest.raises(CatalogError):
        validate_roots(roots)
    with pytest.raises(CatalogError):
        validate_roots({**DEFAULT_ROOTS, "XYZ": ("Q1",)})
    with pytest.raises(CatalogError):
        validate_roots({**DEFAULT_ROOTS, "PER": ("human",)})


def test_closure_examples():
    s = {"Q5": ent("Q5"), "Q100": ent("Q100", p31=["Q5"])}
    assert descendant_closure(s, {"PER": ["Q5"]})["PER"] >= {"Q5", "Q100"}
    chain = {"Q5": ent("Q5"), "Q10": ent("Q10", p279=["Q5"]), "Q11": ent("Q11", p31=["Q10"])}
    assert descendant_closure(chain, {"PER": ["Q5"]})["PER"] == {"Q5", "Q10", "Q11"}


def test_closure_does_not_follow_instances_of_instances():
    s = {"Q5": ent("Q5"), "Q10": ent("Q10", p31=["Q5"]), "Q11": ent("Q11", p31=["Q10"])}
    assert descendant_closure(s, {"PER": ["Q5"]})["PER"] == {"Q5", "Q10"}


def test_fixture_closure_sizes(store):
    sizes = {k: len(v) for k, v in descendant_closure(store, DEFAULT_ROOTS).items()}
    # roots count even when absent from the store
    assert sizes == {"PER": 6, "LOC": 9, "ORG": 9, "EVT": 4, "PRO": 5}


ids = st.integers(1, 12).map(lambda i: f"Q{i}")
edges = st.lists(st.tuples(ids, st.sampled_from(["p31", "p279"]), ids), max_size=25)


def store_of(edge_list):
    parents: dict[str, dict[str, list]] = {}
    for child, prop, parent in edge_list:
        parents.setdefault(child, {"p31": [], "p279": []})[prop].append(parent)
        parents.setdefault(parent, {"p31": [], "p279": []})
    return {q: ent(q, {"en": [q]}, v["p31"], v["p279"]) for q, v in parents.items()}


@given(edges, ids)
def test_closure_monotone(edge_list, extra):
    roots = {"PER": ["Q1"]}
    s = store_of(edge_list)
    before = descendant_closure(s, roots)["PER"]
    grown = dict(s)
    grown[f"Q{100 + len(s)}"] = ent(f"Q{100 + len(s)}", p31=[extra])
    assert before <= descendant_closure(grown, roots)["PER"]


def test_term_frequency_counts_references_and_names():
    s = {
        "Q5": ent("Q5", {"en": ["human"], "pl": ["człowiek"]}),
        "Q1": ent("Q1", p31=["Q5"]),
        "Q2": ent("Q2", p31=["Q5"]),
        "Q3": ent("Q3", p31=["Q5"]),
        "Q9": ent("Q9", {"en": ["lonely"]}),
    }
    tf = term_frequency(s)
    assert tf["Q5"] == 5
    assert tf["Q9"] == 1
    shuffled = list(s.items())
    random.Random(3).shuffle(shuffled)
    assert term_frequency(dict(shuffled)) == tf


def test_donald_trump_entries(catalog):
    got = [(e.id, e.language) for e in catalog.lookup("Donald Trump")]
    assert got == [("Q22686", "cs"), ("Q22686", "en"), ("Q22686", "pl"), ("Q3713655", "cs")]
    assert catalog.lookup("Donald Trump", "LOC") == []


def test_name_collision_ordered_by_tf():
    s = {
        "Q5": ent("Q5"),
        "Q1": ent("Q1", {"pl": ["Jan Nowak"]}, p31=["Q5"]),
        "Q2": ent("Q2", {"pl": ["Jan Nowak"], "en": ["Jan Nowak"], "cs": ["Jan Nowák"]}, p31=["Q5"]),
    }
    cat = build_catalog(s, descendant_closure(s, {"PER": ["Q5"]}), term_frequency(s))
    # one entry per (id, language); three names versus one, no incoming references
    assert [(e.id, e.language, e.tf) for e in cat.lookup("Jan Nowak")] == [("Q2", "en", 3), ("Q2", "pl", 3), ("Q1", "pl", 1)]


def test_unlabeled_in_configured_languages_not_indexed():
    s = {"Q5": ent("Q5"), "Q1": ent("Q1", {"de": ["Hans"]}, p31=["Q5"])}
    cat = build_catalog(s, descendant_closure(s, {"PER": ["Q5"]}), term_frequency(s), ["pl"])
    assert "Hans" not in cat and cat.tf("Q1") == -1


def test_aliases_for_org_and_pro_only(catalog):
    assert "SE" in catalog_aliases("Sony Ericsson", "Q65918", catalog)
    assert catalog_aliases("Donald Trump", "Q22686", catalog) == []
    assert catalog_aliases("Gazprom", "Q102673", catalog) == []
    assert "UW" in catalog_aliases("Uniwersytet Warszawski", "Q221645", catalog, "pl")


def test_acronym():
    assert acronym("Sony Ericsson") == "SE"
    assert acronym("Gazprom") is None
    assert acronym("Московский государственный университет") == "МГУ"


def test_json_round_trip(catalog):
    again = EntityCatalog.from_json(catalog.to_json())
    assert again.to_json() == catalog.to_json()
    assert again.lookup("Donald Trump") == catalog.lookup("Donald Trump")


def test_slim_full_dump_record():
    doc = {
        "id": "Q22686",
        "labels": {"en": {"value": "Donald Trump"}, "de": {"value": "Donald Trump"}},
        "aliases": {"en": [{"value": "Donald John Trump"}]},
        "claims": {"P31": [{"mainsnak": {"datavalue": {"value": {"id": "Q5"}}}}]},
    }
    slim = slim_wikidata_entity(doc, ["en", "pl"])
    assert slim == {
        "id": "Q22686",
        "labels": {"en": ["Donald Trump"]},
        "aliases": {"en": ["Donald John Trump"]},
        "p31": ["Q5"],
        "p279": [],
    }
    assert entity_from_record(json.loads(json.dumps(slim))).instance_of == ("Q5",)
