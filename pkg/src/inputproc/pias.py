"""Screening and generating sentences for Processing Instruction.

A sentence is valuable for teaching when a learner falling back on the First
Noun Principle gets it wrong while grammatical cues get it right: the two
routes disagree. Both routes are computed with a fully-equipped learner
(capacity 11, position window 2) so that each is well defined.

Generation enumerates the single passive schema "The N1 was V by the N2."
over every ordered pair of distinct nouns and every past-participle verb in
the vocabulary, keeping the sentences the checker marks valuable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NoInterpretation
from .lexicon import (
    ACTION,
    CONTENT_WORDS,
    ENTITY,
    LexEntry,
    advanced_profile,
)
from .principle2 import (
    GRM_CUES,
    PAST_PARTICIPLE_CONCEPT,
    correct_meaning,
    dir_rev_m,
    extract_fnp,
    voice_of,
)
from .principle1 import enumerate_p1_models
from .text import ParagraphEncoding, SentenceEncoding, encode_text
from .world import EventTerm, KnowledgeBase, WorldState, apply_effects, fresh_state

CHECK_CAPACITY = 11
CHECK_POSITION_WINDOW = 2

NO_INTERPRETATION = "no_interpretation"


@dataclass(frozen=True)
class ValuableVerdict:
    """Outcome of checking one sentence: the event each route extracts and
    whether they disagree."""

    target: str
    valuable: bool
    fnp_event: EventTerm | None
    cue_event: EventTerm | None
    explanation: tuple[str, str]


@dataclass(frozen=True)
class Schema:
    """One instantiation of the passive sentence schema: noun words n1 and n2
    around a past-participle verb word v."""

    n1: str
    v: str
    n2: str

    def render(self) -> str:
        return f"The {self.n1} was {self.v} by the {self.n2}."


def check_sentence(s: SentenceEncoding, kb: KnowledgeBase, state: WorldState,
                   lexicon: frozenset[LexEntry]) -> ValuableVerdict:
    """Compare the First-Noun-Principle reading against the grammatical-cue
    reading of one sentence in the given story state."""
    voice = voice_of(s, lexicon)
    profile = advanced_profile(lexicon, CHECK_CAPACITY, CHECK_POSITION_WINDOW)
    model = enumerate_p1_models(s, profile)[0]
    try:
        dr = dir_rev_m(model, s)
    except NoInterpretation:
        return ValuableVerdict(s.id, False, None, None, (NO_INTERPRETATION, NO_INTERPRETATION))
    cue_event = correct_meaning(dr, voice)
    fnp_event, fnp_label = extract_fnp(dr, state, kb)
    return ValuableVerdict(
        s.id, fnp_event != cue_event, fnp_event, cue_event, (fnp_label, GRM_CUES)
    )


def check_paragraph(p: ParagraphEncoding, kb: KnowledgeBase,
                    lexicon: frozenset[LexEntry]) -> tuple[ValuableVerdict, ...]:
    """Check each sentence in story context.

    The state is threaded along the grammatical-cue (correct) events, the
    story as the instructor intends it. The paragraph as a whole is valuable
    iff any sentence verdict is.
    """
    state = fresh_state(kb)
    verdicts = []
    for s in p.sentences:
        verdict = check_sentence(s, kb, state, lexicon)
        verdicts.append(verdict)
        if verdict.cue_event is None:
            state = WorldState(state.step + 1, state.alive)
        else:
            state = apply_effects(state, verdict.cue_event, kb)
    return tuple(verdicts)


def paragraph_valuable(verdicts: tuple[ValuableVerdict, ...]) -> bool:
    return any(v.valuable for v in verdicts)


def _noun_words(lexicon: frozenset[LexEntry]) -> dict[str, str]:
    """Noun word -> entity concept name."""
    return {
        e.word: e.concept.name
        for e in lexicon
        if e.category == CONTENT_WORDS and e.concept.kind == ENTITY
    }


def _verb_words(lexicon: frozenset[LexEntry]) -> list[str]:
    """Words carrying both an action content reading and a past-participle
    form reading."""
    actions = {e.word for e in lexicon if e.category == CONTENT_WORDS and e.concept.kind == ACTION}
    participles = {e.word for e in lexicon if e.concept == PAST_PARTICIPLE_CONCEPT}
    return sorted(actions & participles)


def schemas(lexicon: frozenset[LexEntry]) -> tuple[Schema, ...]:
    """Every schema instantiation over the vocabulary, noun pairs with
    distinct referents only, in lexicographic order."""
    nouns = _noun_words(lexicon)
    verbs = _verb_words(lexicon)
    return tuple(
        Schema(n1, v, n2)
        for n1, v, n2 in product(sorted(nouns), verbs, sorted(nouns))
        if nouns[n1] != nouns[n2]
    )


def generate_valuable(kb: KnowledgeBase,
                      lexicon: frozenset[LexEntry]) -> tuple[tuple[str, ValuableVerdict], ...]:
    """Render and check every schema sentence, keeping the valuable ones."""
    out = []
    for schema in schemas(lexicon):
        text = schema.render()
        sentence = encode_text(text).sentences[0]
        verdict = check_sentence(sentence, kb, fresh_state(kb), lexicon)
        if verdict.valuable:
            out.append((text, verdict))
    return tuple(out)
