"""Word categories, likelihood orders, concepts, and learner vocabularies.

The category hierarchy splits words into content words and grammatical forms;
forms split into meaningful and nonmeaningful, and meaningful forms into
redundant and nonredundant. Three base likelihood facts over this tree,
extended downward to subclasses and closed transitively, induce a strict
total order on the four leaf categories:

    content_words > nr_m_forms > r_m_forms > nm_forms

A parallel order ranks sentence positions: initial > final > medial.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DuplicateEntry, ParseError, UnknownCategory
from .text import FINAL, INITIAL, MEDIAL

# Hierarchy nodes.
WORDS = "words"
CONTENT_WORDS = "content_words"
FORMS = "forms"
M_FORMS = "m_forms"
NM_FORMS = "nm_forms"
R_M_FORMS = "r_m_forms"
NR_M_FORMS = "nr_m_forms"

CATEGORIES = (WORDS, CONTENT_WORDS, FORMS, M_FORMS, NM_FORMS, R_M_FORMS, NR_M_FORMS)
LEAF_CATEGORIES = (CONTENT_WORDS, NR_M_FORMS, R_M_FORMS, NM_FORMS)

_CHILDREN = {
    WORDS: (CONTENT_WORDS, FORMS),
    FORMS: (M_FORMS, NM_FORMS),
    M_FORMS: (R_M_FORMS, NR_M_FORMS),
}

# Concept kinds.
ENTITY = "entity"
ACTION = "action"
SEMANTIC = "sem"
DISCOURSE = "disc"
CONCEPT_KINDS = (ENTITY, ACTION, SEMANTIC, DISCOURSE)

# Kinds allowed per leaf category: content words carry entity, action or
# discourse concepts; grammatical forms carry semantic concepts.
_CONTENT_KINDS = frozenset({ENTITY, ACTION, DISCOURSE})


@dataclass(frozen=True)
class Concept:
    """A language-independent cognitive concept."""

    kind: str
    name: str


@dataclass(frozen=True)
class LexEntry:
    """One internalized reading of a word: membership in a leaf category
    together with the concept that reading denotes."""

    word: str
    category: str
    concept: Concept


@dataclass(frozen=True)
class LearnerProfile:
    """A learner's second-language knowledge plus processing parameters."""

    name: str
    lexicon: frozenset[LexEntry]
    capacity: int
    n: int = 2


def _descendants_or_self(category: str) -> frozenset[str]:
    out = {category}
    for child in _CHILDREN.get(category, ()):
        out |= _descendants_or_self(child)
    return frozenset(out)


def _close_category_order() -> frozenset[tuple[str, str]]:
    base = ((CONTENT_WORDS, FORMS), (M_FORMS, NM_FORMS), (NR_M_FORMS, R_M_FORMS))
    pairs = {
        (a, b)
        for hi, lo in base
        for a in _descendants_or_self(hi)
        for b in _descendants_or_self(lo)
    }
    changed = True
    while changed:
        changed = False
        for a, b in list(pairs):
            for c, d in list(pairs):
                if b == c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return frozenset(pairs)


def _close_position_order() -> frozenset[tuple[str, str]]:
    pairs = {(INITIAL, FINAL), (FINAL, MEDIAL)}
    for a, b in list(pairs):
        for c, d in list(pairs):
            if b == c:
                pairs.add((a, d))
    return frozenset(pairs)


_ML_CTG = _close_category_order()
_ML_POS = _close_position_order()


def is_ml_ctg_closed(c1: str, c2: str) -> bool:
    """True iff words of category c1 are strictly more likely to get
    processed than words of category c2."""
    return (c1, c2) in _ML_CTG


def is_ml_pos_closed(p1: str, p2: str) -> bool:
    """True iff position p1 strictly precedes p2 under initial > final > medial."""
    return (p1, p2) in _ML_POS


# --- lexicon files ------------------------------------------------------------

_FILE_CATEGORIES = {
    "content": CONTENT_WORDS,
    "nr_m_form": NR_M_FORMS,
    "r_m_form": R_M_FORMS,
    "nm_form": NM_FORMS,
}


def parse_lexicon(text: str) -> frozenset[LexEntry]:
    """Parse lexicon rows `word<TAB>category<TAB>kind:name`; '#' starts a comment."""
    entries: set[LexEntry] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ParseError(f"expected 3 tab-separated fields, got {len(fields)}", lineno)
        word, raw_category, raw_concept = (f.strip() for f in fields)
        if not word or any(ch.isspace() for ch in word):
            raise ParseError(f"bad word {word!r}", lineno)
        if raw_category not in _FILE_CATEGORIES:
            raise UnknownCategory(f"unknown category {raw_category!r}", lineno)
        category = _FILE_CATEGORIES[raw_category]
        kind, sep, name = raw_concept.partition(":")
        if not sep or kind not in CONCEPT_KINDS or not name:
            raise ParseError(f"concept must be kind:name with a known kind, got {raw_concept!r}", lineno)
        if category == CONTENT_WORDS and kind not in _CONTENT_KINDS:
            raise ParseError(f"content word {word!r} cannot carry a {kind} concept", lineno)
        if category != CONTENT_WORDS and kind != SEMANTIC:
            raise ParseError(f"form {word!r} must carry a sem concept, not {kind}", lineno)
        entry = LexEntry(word.lower(), category, Concept(kind, name))
        if entry in entries:
            raise DuplicateEntry(f"duplicate entry for {word!r}", lineno)
        entries.add(entry)
    return frozenset(entries)


def load_lexicon(path: str | Path) -> frozenset[LexEntry]:
    """Load a lexicon TSV file."""
    return parse_lexicon(Path(path).read_text(encoding="utf-8"))


def default_lexicon() -> frozenset[LexEntry]:
    """The vocabulary shipped with the package."""
    source = resources.files("inputproc.data").joinpath("lexicon.tsv")
    return parse_lexicon(source.read_text(encoding="utf-8"))


# --- learner profiles -----------------------------------------------------------

def entries_for(word: str, profile: LearnerProfile) -> frozenset[LexEntry]:
    """All of the learner's readings of a word; empty for unknown words."""
    return frozenset(e for e in profile.lexicon if e.word == word)


def beginner_profile(lexicon: frozenset[LexEntry], capacity: int = 11, n: int = 2) -> LearnerProfile:
    """A learner who has internalized content words only."""
    content = frozenset(e for e in lexicon if e.category == CONTENT_WORDS)
    return LearnerProfile("beginner", content, capacity, n)


def advanced_profile(lexicon: frozenset[LexEntry], capacity: int = 11, n: int = 2) -> LearnerProfile:
    """A learner who has internalized every word and form in the vocabulary."""
    return LearnerProfile("advanced", frozenset(lexicon), capacity, n)
