from __future__ import annotations

import hashlib

import numpy as np
import pytest
from hypothesis import given, strategies as st

from slavlink.corpus import AnnotationError
from slavlink.embeddings import (
    VectorTable,
    char_ngrams,
    embed_phrase,
    embed_word,
    fallback_vector,
    load_vectors,
    similarity,
)
from slavlink.linker import DEFAULT_THRESHOLD

TABLE = VectorTable(100, seed=13)


def test_load_small_table():
    t = load_vectors("2 3\na 1 0 0\nb 0 1 0\n")
    assert (t.dimension, len(t)) == (3, 2)
    assert embed_word("a", t).tolist() == [1.0, 0.0, 0.0]


def test_load_reports_bad_line():
    with pytest.raises(AnnotationError) as err:
        load_vectors("2 3\na 1 0 0\nb 0 1\n")
    assert err.value.line == 3
    with pytest.raises(AnnotationError):
        load_vectors("three\n")


def test_reload_is_identical():
    text = "2 3\na 0.25 -1.5 3\nb 0 1e-3 0\n"
    a, b = load_vectors(text), load_vectors(text.encode())
    assert all(np.array_equal(a.vectors[w], b.vectors[w]) for w in ("a", "b"))


def test_char_ngrams_use_boundaries():
    assert char_ngrams("kot") == ["<ko", "kot", "ot>", "<kot", "kot>", "<kot>"]


def oracle_fallback(word, dim=100, seed=13):
    marked = f"<{word}>"
    acc = np.zeros(dim)
    for n in (3, 4, 5):
        for i in range(len(marked) - n + 1):
            key = hashlib.blake2b(marked[i : i + n].encode(), digest_size=8, key=seed.to_bytes(8, "little")).digest()
            acc += np.random.Generator(np.random.PCG64(int.from_bytes(key, "little"))).standard_normal(dim)
    return acc / np.linalg.norm(acc)


@pytest.mark.parametrize("word", ["Trumpa", "Москва", "a"])
def test_fallback_matches_recipe(word):
    assert np.allclose(fallback_vector(word), oracle_fallback(word))
    assert np.linalg.norm(fallback_vector(word)) == pytest.approx(1.0)


def test_fallback_depends_on_seed():
    assert not np.allclose(fallback_vector("Trumpa", seed=13), fallback_vector("Trumpa", seed=14))


def test_known_word_is_verbatim():
    v = np.arange(100, dtype=float)
    t = VectorTable(100, {"Trump": v})
    assert embed_word("Trump", t) is v


def test_shared_ngrams_score_higher():
    a, b, c = (embed_word(w, TABLE) for w in ("Trumpa", "Trumpem", "Kowalski"))
    assert similarity(a, b) > similarity(a, c)


def test_inflected_name_passes_default_threshold():
    u, v = embed_phrase("Donald Trump", TABLE), embed_phrase("Donalda Trumpa", TABLE)
    assert similarity(u, v) >= DEFAULT_THRESHOLD


words = st.lists(st.sampled_from(["Donald", "Trump", "Václav", "Havel", "Москва"]), min_size=1, max_size=4)


@given(words)
def test_phrase_is_sum_of_words(ws):
    assert np.array_equal(embed_phrase(ws, TABLE), np.sum([embed_word(w, TABLE) for w in ws], axis=0))
    assert np.allclose(embed_phrase(ws, TABLE), embed_phrase(ws[::-1], TABLE))


def test_single_word_phrase_and_empty():
    assert np.array_equal(embed_phrase("Trump", TABLE), embed_word("Trump", TABLE))
    with pytest.raises(ValueError):
        embed_phrase("", TABLE)


def test_similarity_basics():
    e1, e2 = np.eye(3)[0], np.eye(3)[1]
    assert similarity(e1, e1) == 1.0
    assert similarity(e1, e2) == 0.0
    u, v = fallback_vector("x"), fallback_vector("y")
    assert similarity(2 * u, v) == pytest.approx(2 * similarity(u, v))
    assert similarity(u, v) == pytest.approx(similarity(v, u))
    with pytest.raises(ValueError):
        similarity(e1, np.ones(2))
