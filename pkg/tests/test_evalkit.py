from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from slavlink.evalkit import (
    EvalReport,
    format_report,
    linking_f1,
    normalization_accuracy,
    pairwise_counts,
    strict_recognition_f1,
)

from conftest import lm


def ms(*rows, doc="d1"):
    return [lm(s, l, c, e, doc) for s, l, c, e in rows]


GOLD = ms(
    ("Donald Trump", "Donald Trump", "PER", "Q22686"),
    ("Trumpa", "Trump", "PER", "Q22686"),
    ("Warszawie", "Warszawa", "LOC", "Q270"),
    ("Gazpromu", "Gazprom", "ORG", "Q102673"),
)


def test_recognition_identity_and_empty():
    r = strict_recognition_f1(GOLD, GOLD)
    assert (r.precision, r.recall, r.f1) == (1.0, 1.0, 1.0)
    r = strict_recognition_f1(GOLD, [])
    assert (r.recall, r.f1) == (0.0, 0.0)


def test_recognition_four_three_two():
    pred = ms(
        ("donald trump", "donald trump", "PER", "a"),  # surfaces compare case-insensitively
        ("Trumpa", "Trumpa", "PER", "a"),
        ("Warszawie", "Warszawie", "ORG", "a"),  # wrong category
    )
    r = strict_recognition_f1(GOLD, pred)
    assert (r.tp, r.fp, r.fn) == (2, 1, 2)
    assert r.precision == pytest.approx(2 / 3)
    assert r.recall == pytest.approx(1 / 2)
    assert r.f1 == pytest.approx(4 / 7)


def test_recognition_per_language():
    r = strict_recognition_f1({"pl": GOLD, "ru": GOLD[:1]}, {"pl": GOLD, "ru": []})
    assert r.per_language["pl"].f1 == 1.0
    assert r.per_language["ru"].recall == 0.0
    assert (r.tp, r.fn) == (4, 1)


def test_normalization_accuracy():
    assert normalization_accuracy(GOLD, GOLD) == 1.0
    # "Trumpa" left unlemmatized, the other three right
    pred = [GOLD[0], lm("Trumpa", "Trumpa", "PER", "Q22686")] + GOLD[2:]
    assert normalization_accuracy(GOLD, pred) == 0.75
    assert normalization_accuracy(GOLD, []) is None


def test_identity_baseline_share():
    gold = [lm(f"w{i}", f"w{i}" if i < 63 else f"v{i}", "PER", "x") for i in range(100)]
    baseline = [lm(m.surface, m.surface, "PER", "x") for m in gold]
    assert normalization_accuracy(gold, baseline) == 0.63


def abc(ids):
    return ms(*[(s, s, "PER", e) for s, e in zip("abc", ids)])


def test_three_pair_example():
    r = linking_f1(abc(["X", "X", "Y"]), abc(["Z", "Z", "Z"]))
    assert (r.tp, r.fp, r.fn) == (1, 2, 0)
    assert Fraction(r.precision).limit_denominator(100) == Fraction(1, 3)
    assert (r.recall, r.f1) == (1.0, 0.5)


def test_degenerate_partitions():
    gold = ms(*[(s, s, "PER", s) for s in "abcd"])
    pred = ms(*[(s, s, "PER", "one") for s in "abcd"])
    r = linking_f1(gold, pred)
    assert (r.tp, r.fp, r.fn) == (0, 6, 0)
    assert (r.precision, r.recall, r.f1) == (0.0, 0.0, 0.0)
    # all singletons on both sides: nothing to link, nothing linked
    assert linking_f1(gold, gold).f1 == 1.0


def test_levels_scope_links():
    gold = ms(("Trump", "Trump", "PER", "Q1"), doc="d1") + ms(("Trumpa", "Trump", "PER", "Q1"), doc="d2")
    pred = ms(("Trump", "Trump", "PER", "A"), doc="d1") + ms(("Trumpa", "Trump", "PER", "B"), doc="d2")
    assert linking_f1(gold, pred, "document").f1 == 1.0
    assert linking_f1(gold, pred, "cross-language").recall == 0.0
    cross = linking_f1({"pl": gold[:1], "ru": gold[1:]}, {"pl": pred[:1], "ru": pred[1:]}, "language")
    assert cross.f1 == 1.0
    with pytest.raises(ValueError):
        linking_f1(gold, pred, "corpus")


def oracle_counts(gold, pred):
    tp = fp = fn = 0
    for i, j in itertools.combinations(range(len(gold)), 2):
        g, p = gold[i] == gold[j], pred[i] == pred[j]
        tp += g and p
        fp += p and not g
        fn += g and not p
    return tp, fp, fn


labels = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=30)


@given(labels)
def test_pairwise_counts_match_enumeration(rows):
    gold = [g for g, _ in rows]
    pred = [p for _, p in rows]
    assert pairwise_counts(gold, pred) == oracle_counts(gold, pred)


def test_report_formatting():
    r = EvalReport.from_counts(1, 2, 0)
    d = r.as_dict()
    assert d["tp"] == 1 and d["f1"] == 0.5
    text = format_report("linking", r)
    assert text.splitlines()[1].split() == ["all", "0.3333", "1.0000", "0.5000", "1", "2", "0"]
