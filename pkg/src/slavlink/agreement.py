"""Handwritten agreement rules for phrase lemmatization.

One rule per line, ``trigger<TAB>directives``. The trigger is a sequence of
per-word patterns::

    UPOS[|UPOS...][:Key=V1/V2,Key=@j,...]    word with a matching reading
    *                                         any word
    ...                                       (last only) any remaining words

``Key=V1/V2`` requires FEATS to contain Key=V1 or Key=V2; ``Key=@j`` requires
the same value as the reading matched for word j. Directives are one per
pattern: ``keep``, ``lemma``, ``nom`` (nominative, same number and gender)
or ``agree(j)`` (nominative agreeing in gender and number with word j).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import IO

from .corpus import AnnotationError, tokenize_phrase
from .morpho import MorphEntry, MorphLexicon, harmonize_case

_AGREE = re.compile(r"agree\((\d+)\)$")
MAX_READINGS = 8


def parse_feats(feats: str) -> dict[str, str]:
    if not feats or feats == "_":
        return {}
    out = {}
    for item in feats.split("|"):
        key, _, value = item.partition("=")
        if value:
            out[key] = value
    return out


@dataclass(frozen=True)
class WordPattern:
    upos: frozenset[str] = frozenset()  # empty: wildcard
    values: tuple[tuple[str, frozenset[str]], ...] = ()
    refs: tuple[tuple[str, int], ...] = ()

    @property
    def wildcard(self) -> bool:
        return not self.upos

    @classmethod
    def parse(cls, token: str) -> "WordPattern":
        if token == "*":
            return cls()
        upos, _, constraints = token.partition(":")
        values, refs = [], []
        for c in filter(None, constraints.split(",")):
            key, eq, val = c.partition("=")
            if not eq or not key or not val:
                raise ValueError(f"bad constraint {c!r}")
            if val.startswith("@"):
                refs.append((key, int(val[1:])))
            else:
                values.append((key, frozenset(val.split("/"))))
        return cls(frozenset(upos.split("|")), tuple(values), tuple(refs))

    def accepts(self, reading: MorphEntry, feats: dict[str, str]) -> bool:
        if reading.upos not in self.upos:
            return False
        return all(feats.get(k) in vals for k, vals in self.values)


@dataclass(frozen=True)
class AgreementRule:
    patterns: tuple[WordPattern, ...]
    directives: tuple[str, ...]
    open_tail: bool = False  # trigger ended with "..."

    @classmethod
    def parse(cls, trigger: str, directives: str) -> "AgreementRule":
        tokens = trigger.split()
        actions = directives.split()
        open_tail = bool(tokens) and tokens[-1] == "..."
        if open_tail:
            tokens = tokens[:-1]
        if not tokens:
            raise ValueError("empty trigger")
        if len(actions) != len(tokens) + open_tail:
            raise ValueError(f"{len(tokens)} patterns but {len(actions)} directives")
        for a in actions:
            m = _AGREE.match(a)
            if a not in ("keep", "lemma", "nom") and not (m and int(m.group(1)) < len(tokens)):
                raise ValueError(f"bad directive {a!r}")
        if open_tail and actions[-1] != "keep":
            raise ValueError("the open tail only supports 'keep'")
        patterns = tuple(WordPattern.parse(t) for t in tokens)
        for p in patterns:
            if any(j >= len(patterns) for _k, j in p.refs):
                raise ValueError("reference past the end of the trigger")
        return cls(patterns, tuple(actions), open_tail)

    def arity_matches(self, n: int) -> bool:
        return n >= len(self.patterns) if self.open_tail else n == len(self.patterns)


@dataclass(frozen=True)
class AgreementRuleTable:
    rules: tuple[AgreementRule, ...] = ()
    language: str = "pl"

    def __len__(self) -> int:
        return len(self.rules)


def parse_agreement_rules(stream: str | bytes | IO, language: str = "pl") -> AgreementRuleTable:
    if hasattr(stream, "read"):
        stream = stream.read()
    if isinstance(stream, bytes):
        stream = stream.decode("utf-8")
    rules = []
    for lineno, line in enumerate(stream.split("\n"), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        trigger, sep, directives = line.partition("\t")
        if not sep:
            raise AnnotationError("expected trigger<TAB>directives", lineno)
        try:
            rules.append(AgreementRule.parse(trigger, directives))
        except ValueError as exc:
            raise AnnotationError(str(exc), lineno) from None
    return AgreementRuleTable(tuple(rules), language)


_OBLIQUE = "Gen/Dat/Acc/Ins/Loc"

DEFAULT_POLISH_RULES = f"""\
# genitive (or other oblique) head noun with a genitive complement
NOUN:Case={_OBLIQUE} NOUN|PROPN:Case=Gen\tnom keep
# adjective + noun agreement, both orders
ADJ:Case=@1,Number=@1,Gender=@1 NOUN\tagree(1) nom
NOUN ADJ:Case=@0,Number=@0,Gender=@0\tnom agree(0)
# head noun followed by a chain of genitives: only the head changes
NOUN:Case={_OBLIQUE} NOUN|PROPN|ADJ:Case=Gen NOUN|PROPN|ADJ:Case=Gen ...\tnom keep keep keep
"""


def default_polish_table() -> AgreementRuleTable:
    return parse_agreement_rules(DEFAULT_POLISH_RULES, "pl")


def _inflect(
    reading: MorphEntry,
    lexicon: MorphLexicon,
    gender: str | None,
    number: str | None,
) -> str | None:
    """Nominative form of ``reading``'s lemma with the given gender and number."""
    best = None
    for e in lexicon.forms_of(reading.lemma):
        if e.upos != reading.upos:
            continue
        f = parse_feats(e.feats)
        if f.get("Case") != "Nom":
            continue
        if number and f.get("Number", number) != number:
            continue
        if gender and f.get("Gender", gender) != gender:
            continue
        best = e.form
        break
    # adjective lemmas are masculine singular nominatives
    if best is None and number in (None, "Sing") and (reading.upos != "ADJ" or gender in (None, "Masc")):
        return reading.lemma
    return best


def _match(rule: AgreementRule, words: list[str], lexicon: MorphLexicon):
    """First assignment of readings satisfying the rule, or None."""
    n = len(rule.patterns)
    options = []
    for word, pat in zip(words[:n], rule.patterns):
        if pat.wildcard:
            options.append([None])
            continue
        cands = []
        for r in lexicon.readings(word)[:MAX_READINGS]:
            feats = parse_feats(r.feats)
            if pat.accepts(r, feats):
                cands.append((r, feats))
        if not cands:
            return None
        options.append(cands)
    for combo in itertools.product(*options):
        ok = True
        for pat, chosen in zip(rule.patterns, combo):
            for key, j in pat.refs:
                other = combo[j]
                if chosen is None or other is None or chosen[1].get(key) != other[1].get(key):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return combo
    return None


def apply_agreement_rules(
    phrase: str | list[str],
    table: AgreementRuleTable | None,
    lexicon: MorphLexicon,
    language: str | None = None,
) -> str | None:
    """Lemmatize ``phrase`` with the first firing rule; None if no rule fires or a form is missing."""
    if not table or not table.rules:
        return None
    if language is not None and language != table.language:
        return None
    words = tokenize_phrase(phrase) if isinstance(phrase, str) else list(phrase)
    for rule in table.rules:
        if not rule.arity_matches(len(words)):
            continue
        combo = _match(rule, words, lexicon)
        if combo is None:
            continue
        out = _rewrite(rule, words, combo, lexicon)
        if out is not None:
            return " ".join(out)
    return None


def _rewrite(rule: AgreementRule, words: list[str], combo, lexicon: MorphLexicon) -> list[str] | None:
    out = []
    for i, word in enumerate(words):
        action = rule.directives[min(i, len(rule.directives) - 1)]
        chosen = combo[i] if i < len(combo) else None
        if action == "keep":
            out.append(word)
            continue
        if chosen is None:
            return None
        reading, feats = chosen
        if action == "lemma":
            new = reading.lemma
        else:
            m = _AGREE.match(action)
            ref = feats if m is None else (combo[int(m.group(1))] or (None, {}))[1]
            new = _inflect(reading, lexicon, ref.get("Gender"), ref.get("Number"))
        if not new or len(new.split()) != 1:
            return None
        out.append(harmonize_case(word, new))
    return out
