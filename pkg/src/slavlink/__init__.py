"""Lemmatization and Wikidata linking of named entities in Slavic languages."""

__version__ = "0.1.0"
