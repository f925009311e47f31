"""Generate the Polish and Russian lemmatization fixtures under tests/fixtures.

Development-only: needs ``morfeusz2`` (Polish) and ``pymorphy3`` with its
Russian dictionaries. The outputs are committed, so the test suite does not
depend on either analyzer.

Entity phrases are written with one marker per word:

    word*   inflects as a noun (the first one sets the phrase gender)
    word+   adjective agreeing with the phrase head
    word    stays as is (genitive complements, prepositions, abbreviations)

Per language the script writes

    treebank.conllu   training entity phrases in random cases, fully tagged
    dictionary.tsv    form, lemma, upos, feats for common vocabulary and
                      training names (test names are left out on purpose)
    wiki.txt          %%PAGE wikitext linking training entities, plus noise
    train.tsv         inflected<TAB>lemma pairs from the treebank phrases
    test.tsv          held-out inflected<TAB>lemma pairs, about a third nominative
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

PL_TRAIN = """
Uniwersytet* Warszawski+
Uniwersytet* Jagielloński+
Politechnika* Warszawska+
Politechnika* Wrocławska+
Polska+ Akademia* Nauk
Sejm* Rzeczypospolitej Polskiej
Senat* Rzeczypospolitej Polskiej
Prezydent* Rzeczypospolitej Polskiej
Bazylika* św. Pawła za Murami
Bazylika* św. Piotra
Kościół* św. Anny
Katedra* św. Jana
Kościół* św. Krzyża
Donald* Tusk*
Lech* Wałęsa*
Mikołaj* Kopernik*
Henryk* Sienkiewicz*
Adam* Mickiewicz*
Fryderyk* Chopin*
Józef* Piłsudski*
Jan* Kochanowski*
Bank* Polski+
Narodowy+ Bank* Polski+
Teatr* Narodowy+
Stadion* Narodowy+
Filharmonia* Narodowa+
Biblioteka* Narodowa+
Zamek* Królewski+
Pałac* Kultury i Nauki
Wyżyna* Lubelska+
Morze* Bałtyckie+
Puszcza* Białowieska+
Kraków*
Warszawa*
Gdańsk*
Wrocław*
Poznań*
Lublin*
Wisła*
Odra*
Prawo* i Sprawiedliwość*
Platforma* Obywatelska+
Ministerstwo* Spraw Zagranicznych
Ministerstwo* Finansów
Ministerstwo* Zdrowia
Urząd* Miasta Krakowa
Sąd* Najwyższy+
Trybunał* Konstytucyjny+
Instytut* Pamięci Narodowej
Polskie+ Radio*
Telewizja* Polska+
Wojsko* Polskie+
Jan* Paweł* II
Kazimierz* Wielki+
Władysław* Jagiełło*
Unia* Europejska+
Parlament* Europejski+
Komisja* Europejska+
Rada* Europy
Organizacja* Narodów Zjednoczonych
"""

PL_TEST = """
Uniwersytet* Wrocławski+
Uniwersytet* Gdański+
Uniwersytet* Łódzki+
Politechnika* Łódzka+
Politechnika* Śląska+
Bazylika* św. Floriana
Kościół* św. Mikołaja
Katedra* św. Stanisława
Kaplica* św. Kingi
Kancelaria* Prezydenta Rzeczypospolitej Polskiej
Rzecznik* Praw Obywatelskich
Ministerstwo* Kultury
Ministerstwo* Sprawiedliwości
Bronisław* Komorowski*
Andrzej* Duda*
Aleksander* Kwaśniewski*
Juliusz* Słowacki*
Stanisław* Lem*
Tadeusz* Kościuszko*
Jan* Matejko*
Teatr* Wielki+
Teatr* Polski+
Park* Łazienkowski+
Zamek* Królewski+ na Wawelu
Wyżyna* Krakowska+
Morze* Północne+
Puszcza* Kampinoska+
Szczecin*
Toruń*
Olsztyn*
Rzeszów*
Białystok*
Warta*
Bug*
Sąd* Okręgowy+
Bank* Światowy+
Rada* Ministrów
Rada* Miasta Gdańska
Narodowy+ Fundusz* Zdrowia
Uniwersytet* Kardynała Stefana Wyszyńskiego
Muzeum* Śląskie+
"""

RU_TRAIN = """
Московский+ университет*
Санкт-Петербургский+ университет*
Московский+ Кремль*
Большой+ театр*
Красная+ площадь*
Государственная+ дума*
Министерство* иностранных дел
Министерство* обороны
Министерство* финансов
Банк* России
Центральный+ банк*
Владимир* Путин*
Дмитрий* Медведев*
Борис* Ельцин*
Михаил* Горбачёв*
Лев* Толстой*
Фёдор* Достоевский*
Александр* Пушкин*
Антон* Чехов*
Иван* Тургенев*
Москва*
Санкт-Петербург*
Новосибирск*
Екатеринбург*
Казань*
Волга*
Байкал*
Русский+ музей*
Эрмитаж*
Исаакиевский+ собор*
Храм* Христа Спасителя
Собор* Василия Блаженного
Российская+ академия* наук
Верховный+ суд*
Конституционный+ суд*
Совет* Федерации
Правительство* России
Мариинский+ театр*
Третьяковская+ галерея*
Газпром*
Сбербанк*
Аэрофлот*
Красная+ армия*
Чёрное+ море*
Балтийское+ море*
Тихий+ океан*
Северный+ Ледовитый+ океан*
"""

RU_TEST = """
Казанский+ университет*
Новосибирский+ университет*
Уральский+ университет*
Малый+ театр*
Дворцовая+ площадь*
Министерство* юстиции
Министерство* здравоохранения
Министерство* культуры
Сергей* Лавров*
Николай* Гоголь*
Михаил* Лермонтов*
Иван* Бунин*
Максим* Горький*
Омск*
Томск*
Самара*
Нижний+ Новгород*
Енисей*
Обь*
Казанский+ собор*
Церковь* Спаса на Крови
Счётная+ палата*
Генеральная+ прокуратура*
Совет* безопасности
Роснефть*
Лукойл*
Азовское+ море*
Каспийское+ море*
Северный+ флот*
Пушкинский+ музей*
Большой+ Кремлёвский+ дворец*
Иркутск*
Смоленск*
Ярославль*
Сергей* Королёв*
Андрей* Сахаров*
Белое+ море*
Российский+ банк*
Банк* Москвы
Музей* Москвы
"""

PL_COMMON = """
miasto stolica rzeka jezioro góra kraj ulica plac dom szkoła urząd ministerstwo premier prezydent
rząd sejm partia kościół bazylika katedra kaplica zamek pałac park muzeum teatr opera stadion bank
uniwersytet politechnika akademia instytut biblioteka filharmonia telewizja radio wojsko sąd trybunał
rada komisja unia parlament organizacja fundusz rzecznik kancelaria morze puszcza wyżyna
warszawski krakowski polski narodowy wielki królewski europejski wrocławski gdański łódzki śląski
lubelski bałtycki północny białowieski kampinoski łazienkowski okręgowy światowy najwyższy
konstytucyjny obywatelski jagielloński nowy stary
"""

RU_COMMON = """
город столица река озеро гора страна улица площадь дом школа министерство премьер президент
правительство дума партия церковь собор храм кремль дворец парк музей театр стадион банк
университет академия институт библиотека галерея армия флот суд совет палата прокуратура море
океан служба компания
московский российский русский большой малый красный центральный государственный верховный
конституционный казанский новосибирский уральский дворцовый счётный генеральный азовский
каспийский северный белый пушкинский кремлёвский чёрный балтийский тихий ледовитый новый старый
"""

PL_CASES = ["nom", "gen", "dat", "acc", "inst", "loc"]
RU_CASES = ["nomn", "gent", "datv", "accs", "ablt", "loct"]

PL_CASE_UD = {"nom": "Nom", "gen": "Gen", "dat": "Dat", "acc": "Acc", "inst": "Ins", "loc": "Loc", "voc": "Voc"}
PL_GENDER_UD = {"m1": "Masc", "m2": "Masc", "m3": "Masc", "f": "Fem", "n": "Neut", "n1": "Neut", "n2": "Neut"}
# tie-break between homonymous paradigms: persons first, m2 ("banka") last
GENDER_PRIORITY = {"m1": 5, "m3": 4, "f": 3, "n": 2, "n1": 2, "n2": 2, "m2": 1}
PL_ANIMACY_UD = {"m1": "Hum", "m2": "Anim", "m3": "Inan"}
RU_CASE_UD = {"nomn": "Nom", "gent": "Gen", "datv": "Dat", "accs": "Acc", "ablt": "Ins", "loct": "Loc"}
RU_GENDER_UD = {"masc": "Masc", "femn": "Fem", "neut": "Neut"}


def parse_spec(line: str) -> list[tuple[str, str]]:
    out = []
    for tok in line.split():
        if tok.endswith(("*", "+")):
            out.append((tok[:-1], tok[-1]))
        else:
            out.append((tok, ""))
    return out


def specs(block: str) -> list[list[tuple[str, str]]]:
    return [parse_spec(line) for line in block.strip().split("\n") if line.strip()]


def recase(model: str, word: str) -> str:
    if model[:1].isupper() and word[:1].islower():
        return word[:1].upper() + word[1:]
    return word


def feats(**kv) -> str:
    items = [(k, v) for k, v in kv.items() if v]
    return "|".join(f"{k}={v}" for k, v in sorted(items)) or "_"


class Polish:
    code = "pl"
    cases = PL_CASES
    nom = "nom"
    case_ud = PL_CASE_UD

    def __init__(self):
        import morfeusz2

        self.m = morfeusz2.Morfeusz(expand_tags=True)

    @staticmethod
    def _lemma(raw: str) -> str:
        return raw.split(":", 1)[0] if ":" in raw[1:] else raw

    def _rows(self, lemma_id: str):
        rows = []
        for form, lid, tag, _names, quals in self.m.generate(self._lemma(lemma_id)):
            if lid != lemma_id or quals:
                continue
            rows.append((form, tag.split(":")))
        return rows

    def noun_paradigm(self, word: str):
        """Lemma id of the singular paradigm whose nominative is ``word``."""
        best = None
        for _s, _e, (form, lid, tag, _n, quals) in self.m.analyse(word):
            parts = tag.split(":")
            if parts[0] != "subst" or parts[1] != "sg" or parts[2] != "nom" or quals:
                continue
            cases = {r[2] for _f, r in self._rows(lid) if r[0] == "subst" and r[1] == "sg"}
            common = self._lemma(lid)[:1].islower()
            key = (len(cases), common, GENDER_PRIORITY.get(parts[3], 0))
            if best is None or key > best[0]:
                best = (key, lid, parts[3])
        if best is None:
            raise LookupError(f"no noun paradigm for {word!r}")
        return best[1], best[2]

    def adj_lemma(self, word: str) -> tuple[str, str]:
        """(lemma id, degree) of an adjective given in its masculine nominative."""
        for _s, _e, (_f, lid, tag, _n, _q) in self.m.analyse(word.lower()):
            parts = tag.split(":")
            if parts[0] == "adj" and parts[2] == "nom":
                return lid, parts[4]
        raise LookupError(f"no adjective for {word!r}")

    def noun_form(self, lid: str, case: str) -> str:
        for form, parts in self._rows(lid):
            if parts[0] == "subst" and parts[1] == "sg" and parts[2] == case:
                return form
        raise LookupError(f"no {case} form of {lid}")

    def adj_form(self, adj: tuple[str, str], case: str, gender: str) -> str:
        lid, degree = adj
        for form, parts in self._rows(lid):
            if parts[0] == "adj" and parts[1] == "sg" and parts[2] == case and parts[3] == gender and parts[4] == degree:
                return form
        raise LookupError(f"no {case}/{gender} form of {lid}")

    def inflect(self, spec, case: str) -> list[str]:
        head = next((w for w, r in spec if r == "*"), None)
        gender = self.noun_paradigm(head)[1] if head else "m3"
        words = []
        for word, role in spec:
            if role == "*":
                words.append(recase(word, self.noun_form(self.noun_paradigm(word)[0], case)))
            elif role == "+":
                words.append(recase(word, self.adj_form(self.adj_lemma(word), case, gender)))
            else:
                words.append(word)
        return words

    def tag_rows(self, lid: str, upos_hint: str | None = None, degree: str = "pos"):
        """Dictionary rows (form, lemma, upos, feats) for a full singular paradigm.

        Adjective lemmas are the masculine nominative of the requested degree,
        so that word lemmas line up with phrase lemmas.
        """
        out = set()
        lemma = self._lemma(lid)
        rows = self._rows(lid)
        if degree != "pos":
            lemma = next(f for f, p in rows if p[0] == "adj" and p[1] == "sg" and p[2] == "nom" and "m1" in p[3] and p[4] == degree)
        for form, parts in rows:
            if parts[0] == "subst" and parts[1] == "sg" and parts[2] in PL_CASE_UD:
                g = parts[3]
                upos = upos_hint or "NOUN"
                out.add((form, lemma, upos, feats(Case=PL_CASE_UD[parts[2]], Gender=PL_GENDER_UD.get(g), Animacy=PL_ANIMACY_UD.get(g), Number="Sing")))
            elif parts[0] == "adj" and parts[1] in ("sg", "pl") and parts[4] == degree and parts[2] in PL_CASE_UD:
                number = "Sing" if parts[1] == "sg" else "Plur"
                out.add((form, lemma, "ADJ", feats(Case=PL_CASE_UD[parts[2]], Gender=PL_GENDER_UD.get(parts[3]), Number=number)))
        return sorted(out)

    def word_rows(self, word: str, role: str):
        if role == "*":
            lid, _g = self.noun_paradigm(word)
            rows = self.tag_rows(lid, "PROPN" if word[:1].isupper() and self._is_name(lid) else "NOUN")
            return [(recase(word, f), recase(word, l), u, x) for f, l, u, x in rows]
        if role == "+":
            lid, degree = self.adj_lemma(word)
            rows = self.tag_rows(lid, degree=degree)
            return [(recase(word, f), recase(word, l), u, x) for f, l, u, x in rows]
        return []

    def _is_name(self, lid: str) -> bool:
        for _f, l, _t, names, _q in self.m.generate(self._lemma(lid)):
            if l == lid:
                return any(n != "nazwa_pospolita" for n in names)
        return False

    def common_rows(self, lemma: str):
        rows = []
        for _s, _e, (_f, lid, tag, _n, quals) in self.m.analyse(lemma):
            if quals:
                continue
            if tag.startswith("subst:sg:nom") or (tag.startswith("adj:sg:nom") and tag.endswith(":pos")):
                rows.extend(self.tag_rows(lid))
                break
        return rows

    def context_tag(self, word: str) -> tuple[str, str, str]:
        """(lemma, upos, feats) of an uninflected word, for the treebank."""
        if word == "za":
            return "za", "ADP", "_"
        if word in ("i",):
            return word, "CCONJ", "_"
        if word == "na":
            return "na", "ADP", "_"
        if word.endswith("."):
            return word, "ADJ", "Abbr=Yes"
        if word.isupper() and len(word) <= 4:
            return word, "ADJ", "NumType=Ord"
        for _s, _e, (_f, lid, tag, _n, quals) in self.m.analyse(word):
            parts = tag.split(":")
            if parts[0] == "subst" and not quals:
                upos = "PROPN" if word[:1].isupper() else "NOUN"
                return recase(word, self._lemma(lid)), upos, feats(Case=PL_CASE_UD.get(parts[2]), Gender=PL_GENDER_UD.get(parts[3]), Number="Sing" if parts[1] == "sg" else "Plur")
            if parts[0] == "adj" and not quals:
                return recase(word, self._lemma(lid)), "ADJ", feats(Case=PL_CASE_UD.get(parts[2]), Gender=PL_GENDER_UD.get(parts[3]), Number="Sing" if parts[1] == "sg" else "Plur")
        return word, "X", "_"


class Russian:
    code = "ru"
    cases = RU_CASES
    nom = "nomn"
    case_ud = RU_CASE_UD

    def __init__(self):
        import pymorphy3

        self.m = pymorphy3.MorphAnalyzer()

    def noun(self, word: str):
        for p in self.m.parse(word):
            if p.tag.POS == "NOUN" and p.tag.case == "nomn" and p.tag.number in ("sing", None):
                return p
        raise LookupError(f"no noun parse for {word!r}")

    def adj(self, word: str):
        for p in self.m.parse(word):
            if p.tag.POS == "ADJF" and p.tag.case == "nomn":
                return p
        raise LookupError(f"no adjective parse for {word!r}")

    def _noun_form(self, p, case: str) -> str:
        f = p.inflect({case, "sing"}) or p.inflect({case})
        return f.word if f else p.word

    def _adj_form(self, p, case: str, head) -> str:
        gram = {case, "sing"}
        if head.tag.gender in ("masc", "femn", "neut"):
            gram.add(head.tag.gender)
        if case == "accs" and head.tag.gender == "masc":
            gram.add("anim" if head.tag.animacy == "anim" else "inan")
        f = p.inflect(gram)
        if f is None and case == "accs":
            f = p.inflect({"gent" if head.tag.animacy == "anim" else "nomn", "sing", head.tag.gender})
        return f.word if f else p.word

    def inflect(self, spec, case: str) -> list[str]:
        head_word = next((w for w, r in spec if r == "*"), None)
        head = self.noun(head_word) if head_word else None
        words = []
        for word, role in spec:
            if role == "*":
                words.append(recase(word, self._noun_form(self.noun(word), case)))
            elif role == "+":
                words.append(recase(word, self._adj_form(self.adj(word), case, head)))
            else:
                words.append(word)
        return words

    def _rows(self, p, upos: str):
        out = set()
        for f in p.lexeme:
            t = f.tag
            if t.case not in RU_CASE_UD or t.POS not in ("NOUN", "ADJF"):
                continue
            number = {"sing": "Sing", "plur": "Plur"}.get(t.number)
            if upos != "ADJ" and number != "Sing":
                continue
            out.add((f.word, p.normal_form, upos, feats(Case=RU_CASE_UD[t.case], Gender=RU_GENDER_UD.get(t.gender), Number=number)))
        return sorted(out)

    def word_rows(self, word: str, role: str):
        if role == "*":
            p = self.noun(word)
            upos = "PROPN" if word[:1].isupper() and ({"Name", "Surn", "Geox", "Orgn"} & set(p.tag.grammemes)) else "NOUN"
            return [(recase(word, f), recase(word, l), u, x) for f, l, u, x in self._rows(p, upos)]
        if role == "+":
            return [(recase(word, f), recase(word, l), u, x) for f, l, u, x in self._rows(self.adj(word), "ADJ")]
        return []

    def common_rows(self, lemma: str):
        for p in self.m.parse(lemma):
            if p.tag.POS == "NOUN" and p.tag.case == "nomn":
                return self._rows(p, "NOUN")
            if p.tag.POS == "ADJF" and p.tag.case == "nomn":
                return self._rows(p, "ADJ")
        return []

    def context_tag(self, word: str) -> tuple[str, str, str]:
        if word in ("на",):
            return word, "ADP", "_"
        p = self.m.parse(word)[0]
        t = p.tag
        upos = {"NOUN": "NOUN", "ADJF": "ADJ", "PREP": "ADP"}.get(t.POS, "X")
        if upos == "NOUN" and word[:1].isupper():
            upos = "PROPN"
        return recase(word, p.normal_form), upos, feats(Case=RU_CASE_UD.get(t.case), Gender=RU_GENDER_UD.get(t.gender), Number={"sing": "Sing", "plur": "Plur"}.get(t.number))


def phrase(spec) -> str:
    return " ".join(w for w, _r in spec)


def conllu_sentence(sid: str, lang, spec, case: str, words: list[str], lemma_words: list[str]) -> str:
    lines = [f"# sent_id = {sid}", f"# text = {' '.join(words)}"]
    want = f"Case={lang.case_ud[case]}"
    head_gender = None
    for i, ((word, role), form, lemma) in enumerate(zip(spec, words, lemma_words), start=1):
        if role:
            rows = [r for r in lang.word_rows(word, role) if r[0] == form and want in r[3].split("|") and "Number=Sing" in r[3]]
            if head_gender:
                rows.sort(key=lambda r: head_gender not in r[3].split("|"))
            if rows:
                _f, lem, upos, fts = rows[0]
                if role == "*" and head_gender is None:
                    head_gender = next((x for x in fts.split("|") if x.startswith("Gender=")), None)
            else:
                lem, upos, fts = lemma, "NOUN", "_"
        else:
            lem, upos, fts = lang.context_tag(form)
        head = 0 if i == 1 else 1
        rel = "root" if i == 1 else "nmod"
        lines.append("\t".join([str(i), form, lem, upos, "_", fts, str(head), rel, "_", "_"]))
    return "\n".join(lines) + "\n"


def noise_pages(code: str) -> str:
    if code == "pl":
        return (
            "%%PAGE Szum\n"
            "[[Plik:Herb.svg|thumb|[[Warszawa|Herb Warszawy]]]] tekst o [[Kategoria:Miasta]] i\n"
            "<!-- [[Poznań|Poznania]] --> oraz <nowiki>[[Lublin|Lublina]]</nowiki> a także [[Gdańsk|stolicy\nPomorza]]\n"
            "premier [[Donald Tusk|premier]] oraz [[Warszawa|stolicy]] i [[Wisła#Bieg|Wisły]] i [[zepsuty link\n"
            "w miastach [[Kraków]] oraz [[kraków|Krakowie]]\n"
        )
    return (
        "%%PAGE Шум\n"
        "[[Файл:Герб.svg|thumb|[[Москва|Герб Москвы]]]] текст [[Категория:Города]] и\n"
        "<!-- [[Казань|Казани]] --> и <nowiki>[[Волга|Волги]]</nowiki> и [[Байкал|озера\nБайкал]]\n"
        "президент [[Владимир Путин|президент]] и [[Москва|столицы]] и [[Волга#Бассейн|Волги]] и [[сломанная ссылка\n"
        "в городе [[Москва]] и [[москва|Москве]]\n"
    )


def build(lang, train_specs, test_specs, common: str, out: Path, rng: random.Random) -> None:
    out.mkdir(parents=True, exist_ok=True)

    # dictionary: common vocabulary plus training-entity words
    rows = set()
    for lemma in common.split():
        rows.update(lang.common_rows(lemma))
    for spec in train_specs:
        for word, role in spec:
            rows.update(lang.word_rows(word, role))
    (out / "dictionary.tsv").write_text("".join("\t".join(r) + "\n" for r in sorted(rows)), encoding="utf-8")

    # treebank and training pairs
    sentences, train_pairs = [], []
    n = 0
    for spec in train_specs:
        lemma_words = lang.inflect(spec, lang.nom)
        for case in rng.sample(lang.cases, 3):
            words = lang.inflect(spec, case)
            n += 1
            sentences.append(conllu_sentence(f"{lang.code}-{n:04d}", lang, spec, case, words, lemma_words))
            train_pairs.append((" ".join(words), " ".join(lemma_words)))
    (out / "treebank.conllu").write_text("\n".join(sentences) + "\n", encoding="utf-8")
    (out / "train.tsv").write_text("".join(f"{a}\t{b}\n" for a, b in sorted(set(train_pairs))), encoding="utf-8")

    # wikitext: each training entity linked several times on a few pages
    links = []
    for spec in train_specs:
        title = " ".join(lang.inflect(spec, lang.nom))
        for case in lang.cases:
            anchor = " ".join(lang.inflect(spec, case))
            if anchor == title:
                links.append(f"[[{title}]]")
            elif " " not in title and anchor.startswith(title) and anchor[len(title):].isalpha():
                links.append(f"[[{title}]]{anchor[len(title):]}")
            else:
                links.append(f"[[{title}|{anchor}]]")
    rng.shuffle(links)
    pages = []
    filler = "tekst" if lang.code == "pl" else "текст"
    for i in range(0, len(links), 12):
        chunk = links[i : i + 12]
        pages.append(f"%%PAGE {lang.code.upper()} {i // 12 + 1}\n" + f" {filler} ".join(chunk) + "\n")
    pages.append(noise_pages(lang.code))
    (out / "wiki.txt").write_text("".join(pages), encoding="utf-8")

    # held-out test pairs: nominative plus two oblique cases per entity
    test = []
    for spec in test_specs:
        lemma = " ".join(lang.inflect(spec, lang.nom))
        cases = [lang.nom] + rng.sample(lang.cases[1:], 2)
        for case in cases:
            test.append((" ".join(lang.inflect(spec, case)), lemma))
    (out / "test.tsv").write_text("".join(f"{a}\t{b}\n" for a, b in test), encoding="utf-8")
    nominative = sum(a == b for a, b in test)
    print(f"{lang.code}: {len(rows)} dictionary rows, {len(sentences)} sentences, {len(links)} links, {len(test)} test pairs ({nominative} identical)")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    parser.add_argument("--seed", type=int, default=2021)
    args = parser.parse_args()
    out = Path(args.out)
    build(Polish(), specs(PL_TRAIN), specs(PL_TEST), PL_COMMON, out / "pl", random.Random(args.seed))
    build(Russian(), specs(RU_TRAIN), specs(RU_TEST), RU_COMMON, out / "ru", random.Random(args.seed + 1))


if __name__ == "__main__":
    main()
