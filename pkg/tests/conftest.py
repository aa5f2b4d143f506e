import pytest

from inputproc import (
    advanced_profile,
    beginner_profile,
    default_lexicon,
    default_world,
    encode_text,
    schemas,
)

# Single-sentence inputs exercised throughout the suite.
SINGLE_SENTENCES = {
    "cat_bitten": "The cat was bitten by the dog.",
    "shoe_bitten": "The shoe was bitten by the dog.",
    "man_bitten": "The man was bitten by the dog.",
    "boxers": "Holyfield was bitten by Tyson.",
    "rabbit_ball": "The ball was pushed by the rabbit.",
}

# Two-sentence stories where the first event conditions the second sentence.
STORIES = {
    "push_then_bite": "The cat pushed the dog. Then, the dog was bitten by the cat.",
    "kill_then_push": "The cat killed the dog. Then, the dog was pushed by the cat.",
}


def sentence(text):
    return encode_text(text).sentences[0]


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def kb():
    return default_world()


@pytest.fixture(scope="session")
def advanced(lexicon):
    return advanced_profile(lexicon)


@pytest.fixture(scope="session")
def beginner(lexicon):
    return beginner_profile(lexicon)


@pytest.fixture(scope="session")
def cat_bitten():
    return sentence(SINGLE_SENTENCES["cat_bitten"])


@pytest.fixture(scope="session")
def grammar(lexicon):
    """Every sentence the schema grammar generates over the shipped vocabulary."""
    return [sentence(s.render()) for s in schemas(lexicon)]
