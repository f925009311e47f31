"""Documents, mentions and the tab-separated annotation format.

An annotation file holds one document::

    <doc_id>
    <surface>\t<lemma>\t<category>\t<entity_id>
    ...

Raw documents carry a five line header (id, language, date, url, title)
followed by the body.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable


class Category(str, enum.Enum):
    PER = "PER"
    LOC = "LOC"
    ORG = "ORG"
    PRO = "PRO"
    EVT = "EVT"


CATEGORIES = tuple(c.value for c in Category)


class AnnotationError(ValueError):
    """Malformed annotation or document file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def tokenize_phrase(text: str) -> list[str]:
    """Split on Unicode whitespace. Punctuation stays attached ("św.")."""
    return text.split()


def normalize_phrase(text: str) -> str:
    """NFC plus whitespace collapsing; used for every stored name."""
    return " ".join(tokenize_phrase(nfc(text)))


def parse_category(value: str) -> Category:
    try:
        return Category(value)
    except ValueError:
        raise ValueError(f"invalid category {value!r}; expected one of {', '.join(CATEGORIES)}") from None


@dataclass(frozen=True)
class Document:
    doc_id: str
    language: str
    body: str
    header: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.doc_id:
            raise ValueError("empty document id")
        object.__setattr__(self, "body", nfc(self.body))


@dataclass(frozen=True)
class Mention:
    surface: str
    category: Category
    doc_id: str = ""

    def __post_init__(self):
        surface = nfc(self.surface)
        if not surface or surface != surface.strip():
            raise ValueError(f"mention surface must be non-empty and trimmed: {self.surface!r}")
        object.__setattr__(self, "surface", surface)
        if not isinstance(self.category, Category):
            object.__setattr__(self, "category", parse_category(self.category))


@dataclass(frozen=True)
class LinkedMention:
    mention: Mention
    lemma: str
    entity_id: str

    def __post_init__(self):
        lemma = nfc(self.lemma)
        object.__setattr__(self, "lemma", lemma)
        if not self.entity_id:
            raise ValueError(f"empty entity id for {self.mention.surface!r}")
        if len(tokenize_phrase(lemma)) != len(tokenize_phrase(self.mention.surface)):
            raise ValueError(
                f"lemma {lemma!r} and surface {self.mention.surface!r} differ in word count"
            )

    @property
    def surface(self) -> str:
        return self.mention.surface

    @property
    def category(self) -> Category:
        return self.mention.category

    @property
    def doc_id(self) -> str:
        return self.mention.doc_id

    def relabel(self, entity_id: str) -> "LinkedMention":
        return replace(self, entity_id=entity_id)


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise AnnotationError(f"not UTF-8: {exc}") from None
    return nfc(data)


def _split_header(text: str) -> tuple[str, list[tuple[int, str]]]:
    lines = text.split("\n")
    doc_id = lines[0].strip() if lines else ""
    if not doc_id:
        raise AnnotationError("missing document id", 1)
    body = [(n, line.rstrip("\r")) for n, line in enumerate(lines[1:], start=2)]
    return doc_id, [(n, line) for n, line in body if line.strip()]


def parse_annotation_file(data: bytes | str) -> tuple[str, list[LinkedMention]]:
    text = _decode(data)
    doc_id, lines = _split_header(text)
    mentions = []
    for lineno, line in lines:
        fields = line.split("\t")
        if len(fields) != 4:
            raise AnnotationError(f"expected 4 tab-separated fields, got {len(fields)}", lineno)
        surface, lemma, category, entity_id = fields
        try:
            mention = Mention(surface, parse_category(category), doc_id)
            mentions.append(LinkedMention(mention, lemma, entity_id))
        except ValueError as exc:
            raise AnnotationError(str(exc), lineno) from None
    return doc_id, mentions


def parse_mention_file(data: bytes | str) -> tuple[str, list[tuple[Mention, str | None]]]:
    """Read recognizer output: ``surface<TAB>category`` lines or full annotation lines.

    Returns the document id and (mention, lemma) tuples; the lemma is None
    for two-column lines and the gold lemma for four-column lines.
    """
    text = _decode(data)
    doc_id, lines = _split_header(text)
    out: list[tuple[Mention, str | None]] = []
    for lineno, line in lines:
        fields = line.split("\t")
        try:
            if len(fields) == 2:
                out.append((Mention(fields[0], parse_category(fields[1]), doc_id), None))
            elif len(fields) == 4:
                out.append((Mention(fields[0], parse_category(fields[2]), doc_id), nfc(fields[1])))
            else:
                raise AnnotationError(f"expected 2 or 4 tab-separated fields, got {len(fields)}", lineno)
        except ValueError as exc:
            if isinstance(exc, AnnotationError):
                raise
            raise AnnotationError(str(exc), lineno) from None
    return doc_id, out


def _check_field(value: str, what: str) -> str:
    if "\t" in value or "\n" in value or "\r" in value:
        raise AnnotationError(f"{what} contains a tab or newline: {value!r}")
    return value


def write_annotation_file(doc_id: str, mentions: Iterable[LinkedMention]) -> bytes:
    lines = [_check_field(doc_id, "document id")]
    for m in mentions:
        lines.append(
            "\t".join(
                [
                    _check_field(m.surface, "surface"),
                    _check_field(m.lemma, "lemma"),
                    m.category.value,
                    _check_field(m.entity_id, "entity id"),
                ]
            )
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


HEADER_LINES = 5


def parse_document(data: bytes | str) -> Document:
    text = _decode(data)
    lines = text.split("\n")
    if len(lines) < 2 or not lines[0].strip() or not lines[1].strip():
        raise AnnotationError("document header needs at least an id and a language line")
    header = tuple(line.rstrip("\r") for line in lines[:HEADER_LINES])
    body = "\n".join(lines[HEADER_LINES:])
    return Document(header[0].strip(), header[1].strip(), body, header)


def read_document(path: str | Path) -> Document:
    return parse_document(Path(path).read_bytes())
