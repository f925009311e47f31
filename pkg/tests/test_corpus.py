from __future__ import annotations

import unicodedata

import pytest
from hypothesis import given, strategies as st

from slavlink.corpus import (
    AnnotationError,
    Category,
    LinkedMention,
    Mention,
    normalize_phrase,
    parse_annotation_file,
    parse_document,
    parse_mention_file,
    tokenize_phrase,
    write_annotation_file,
)

from conftest import lm


def test_parse_single_line():
    doc_id, mentions = parse_annotation_file(b"42\nTrump\tTrump\tPER\tQ22686\n")
    assert doc_id == "42"
    assert mentions == [lm("Trump", "Trump", "PER", "Q22686", "42")]


def test_parse_empty_body():
    assert parse_annotation_file(b"7\n") == ("7", [])


def test_write_empty_and_single():
    assert write_annotation_file("1", []) == b"1\n"
    m = lm("Sony Ericsson", "Sony Ericsson", "ORG", "Q65918", "1")
    assert write_annotation_file("1", [m]) == "1\nSony Ericsson\tSony Ericsson\tORG\tQ65918\n".encode()


TWENTY = """pl-9
Donald Trump\tDonald Trump\tPER\tQ22686
Trumpa\tTrump\tPER\tQ22686
Warszawie\tWarszawa\tLOC\tQ270
Uniwersytetu Warszawskiego\tUniwersytet Warszawski\tORG\tQ221645
UW\tUW\tORG\tQ221645
COVID-19\tCOVID-19\tEVT\tQ81068910
Sony Ericsson\tSony Ericsson\tORG\tQ65918
SE\tSE\tORG\tQ65918
Gazpromu\tGazprom\tORG\tQ102673
Bazylikę św. Pawła za Murami\tBazylika św. Pawła za Murami\tLOC\tBazylika św. Pawła za Murami|LOC
Václavem Havlem\tVáclav Havel\tPER\tQ36233
Krakowie\tKraków\tLOC\tQ31487
iPhone\tiPhone\tPRO\tQ2766
Joe Biden\tJoe Biden\tPER\tQ6279
Bidena\tBiden\tPER\tQ6279
Москве\tМосква\tLOC\tQ649
Газпрома\tГазпром\tORG\tQ102673
МГУ\tМГУ\tORG\tQ13164
Дональда Трампа\tДональд Трамп\tPER\tQ22686
Трампом\tТрамп\tPER\tQ22686
"""


def test_round_trip_twenty_lines():
    data = TWENTY.encode("utf-8")
    assert len(TWENTY.splitlines()) == 21
    doc_id, mentions = parse_annotation_file(data)
    assert len(mentions) == 20
    assert write_annotation_file(doc_id, mentions) == data


word = st.text(
    alphabet=st.characters(whitelist_categories=("Lu", "Ll", "Nd"), max_codepoint=0x4FF),
    min_size=1,
    max_size=8,
).map(lambda s: unicodedata.normalize("NFC", s))
phrase = st.lists(word, min_size=1, max_size=4).map(" ".join)


@st.composite
def mentions(draw):
    out = []
    for _ in range(draw(st.integers(0, 6))):
        surface = draw(phrase)
        n = len(surface.split())
        lemma = " ".join(draw(st.lists(word, min_size=n, max_size=n)))
        cat = draw(st.sampled_from(list(Category)))
        out.append(LinkedMention(Mention(surface, cat, "doc"), lemma, draw(word)))
    return out


@given(mentions())
def test_parse_inverts_write(ms):
    assert parse_annotation_file(write_annotation_file("doc", ms)) == ("doc", ms)


def test_tokenize():
    assert tokenize_phrase("Bazylikę św. Pawła za Murami") == ["Bazylikę", "św.", "Pawła", "za", "Murami"]
    assert tokenize_phrase("") == []
    assert tokenize_phrase("Václavem Havlem") == ["Václavem", "Havlem"]


def test_normalize_phrase_is_nfc_and_collapses_space():
    decomposed = unicodedata.normalize("NFD", "Václavem  Havlem ")
    assert normalize_phrase(decomposed) == "Václavem Havlem"


@pytest.mark.parametrize(
    "data,line",
    [
        (b"1\nTrump\tTrump\tPER\n", 2),
        (b"1\nTrump\tTrump\tXYZ\tQ1\n", 2),
        (b"1\nDonald Trump\tTrump\tPER\tQ1\n", 2),
        (b"\nTrump\tTrump\tPER\tQ1\n", 1),
    ],
)
def test_parse_errors_carry_line(data, line):
    with pytest.raises(AnnotationError) as err:
        parse_annotation_file(data)
    assert err.value.line == line


def test_invalid_utf8():
    with pytest.raises(AnnotationError):
        parse_annotation_file(b"1\n\xff\tx\tPER\tQ1\n")


def test_write_rejects_tab_in_field():
    m = lm("Trump", "Trump", "PER", "Q1\tQ2")
    with pytest.raises(AnnotationError):
        write_annotation_file("1", [m])


def test_mention_file_two_and_four_columns():
    doc_id, items = parse_mention_file("d\nCOVID-19\tPRO\nTrumpa\tTrump\tPER\tQ22686\n")
    assert doc_id == "d"
    assert items == [
        (Mention("COVID-19", Category.PRO, "d"), None),
        (Mention("Trumpa", Category.PER, "d"), "Trump"),
    ]
    with pytest.raises(AnnotationError):
        parse_mention_file("d\nTrump\n")


def test_parse_document_header():
    doc = parse_document("pl-1\npl\n2020-03-12\nhttps://example.org\nTytuł\nTreść pierwsza.\nDruga.\n")
    assert (doc.doc_id, doc.language) == ("pl-1", "pl")
    assert doc.header[4] == "Tytuł"
    assert doc.body == "Treść pierwsza.\nDruga.\n"
    with pytest.raises(AnnotationError):
        parse_document("only-id\n")
